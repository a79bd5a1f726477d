#include "tenstruct/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tenstruct/error.hpp"

namespace tenstruct {

namespace {

constexpr double kTrimRelative = 1e-14;
// A critical point c counts as a root when |p(c)| is within this fraction of
// the Horner magnitude sum |c_k| |c|^k.
constexpr double kRootSlack = 1e-11;
// Minimum below -kNegativeSlack * (magnitude sum) is reported negative.
constexpr double kNegativeSlack = 1e-14;

double magnitude(const UnivariatePoly& p, double mu) {
    double acc = 0.0;
    const double a = std::abs(mu);
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + std::abs(*it);
    return acc;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const UnivariatePoly& p, double lo, double hi, double tol) {
    int s_lo = sign_of(p(lo));
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (hi - lo <= tol * 1e-3 * std::max(1.0, std::abs(mid))) break;
        const int s_mid = sign_of(p(mid));
        if (s_mid == 0) return mid;
        if (s_mid == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::abs(p(lo)) <= std::abs(p(hi)) ? lo : hi;
}

std::vector<RealRoot> roots_impl(const UnivariatePoly& p, double tol) {
    const int deg = p.degree();
    if (deg <= 0) return {};
    if (deg == 1) return {{-p.coeffs()[0] / p.coeffs()[1], 1}};

    const double bound = p.root_bound();
    const std::vector<RealRoot> critical = roots_impl(p.derivative(), tol);

    struct Breakpoint {
        double at;
        double value;
        bool is_root;
    };
    std::vector<Breakpoint> points;
    std::vector<RealRoot> result;
    points.push_back({-bound, p(-bound), false});
    for (const RealRoot& c : critical) {
        if (c.value <= -bound || c.value >= bound) continue;
        const double value = p(c.value);
        const bool is_root = std::abs(value) <= kRootSlack * magnitude(p, c.value);
        if (is_root) result.push_back({c.value, c.multiplicity + 1});
        points.push_back({c.value, value, is_root});
    }
    points.push_back({bound, p(bound), false});

    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        const Breakpoint& a = points[k];
        const Breakpoint& b = points[k + 1];
        if (a.is_root || b.is_root) continue;
        if (a.value == 0.0) {
            result.push_back({a.at, 1});
            continue;
        }
        if (sign_of(a.value) * sign_of(b.value) < 0) {
            result.push_back({bisect(p, a.at, b.at, tol), 1});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
    return result;
}

}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    const double scale = max_abs_coeff();
    for (double& c : coeffs_) {
        if (std::abs(c) <= kTrimRelative * scale) c = 0.0;
    }
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double UnivariatePoly::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double UnivariatePoly::operator()(double mu) const noexcept {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * mu + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return UnivariatePoly(std::move(d));
}

double UnivariatePoly::root_bound() const {
    if (coeffs_.empty()) throw input_error("root bound of the zero polynomial is undefined");
    const double lead = std::abs(coeffs_.back());
    double worst = 0.0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) worst = std::max(worst, std::abs(coeffs_[k]) / lead);
    return 1.0 + worst;
}

std::vector<RealRoot> real_roots(const UnivariatePoly& p, double tol) {
    if (p.is_zero()) throw input_error("real_roots: the zero polynomial has every real number as a root");
    return roots_impl(p, tol);
}

NonnegVerdict nonneg_on_reals(const UnivariatePoly& p) {
    const int deg = p.degree();
    if (deg < 0) return {true, 0.0, 0.0};
    if (deg == 0) return {p.leading() >= 0.0, 0.0, p.leading()};

    const double bound = p.root_bound();
    if (deg % 2 == 1) {
        // Beyond the root bound p has the sign of its leading term.
        const double mu = p.leading() > 0.0 ? -bound : bound;
        return {false, mu, p(mu)};
    }
    if (p.leading() < 0.0) {
        const double lo = p(-bound);
        const double hi = p(bound);
        return lo <= hi ? NonnegVerdict{false, -bound, lo} : NonnegVerdict{false, bound, hi};
    }

    NonnegVerdict best{true, 0.0, std::numeric_limits<double>::infinity()};
    for (const RealRoot& c : real_roots(p.derivative())) {
        const double value = p(c.value);
        if (value < best.value) {
            best.mu = c.value;
            best.value = value;
        }
    }
    best.nonnegative = !(best.value < -kNegativeSlack * magnitude(p, best.mu));
    return best;
}

}  // namespace tenstruct
