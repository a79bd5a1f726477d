#include "tenstruct/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "tenstruct/error.hpp"
#include "tenstruct/sampling.hpp"
#include "tenstruct/unipoly.hpp"

namespace tenstruct {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}


constexpr double kDim2ResidualTol = 1e-8;
constexpr double kDedupLambda = 1e-6;
constexpr double kDedupVector = 1e-4;
constexpr double kPsdViolation = 1e-10;
constexpr int kSignVectorMaxDim = 12;
constexpr int kProbeSeededStarts = 8;
constexpr int kProbeRandomStarts = 8;
constexpr int kProbeIters = 1000;

double int_pow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

double dot(std::span<const double> a, std::span<const double> b) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<long double>(a[i]) * b[i];
    return static_cast<double>(acc);
}

void normalize2(std::vector<double>& x) {
    const double n = std::sqrt(dot(x, x));
    for (double& v : x) v /= n;
}

double vector_gap(const std::vector<double>& a, const std::vector<double>& b, double sign) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - sign * b[i]));
    return worst;
}

bool pair_less(const EigenPair& a, const EigenPair& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.x < b.x;
}

struct PowerRun {
    std::vector<double> x;
    double lambda = 0.0;
    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
};

// Shifted symmetric power iteration from a unit start. When `stop_below` is
// set, returns as soon as the Rayleigh value drops below it.
PowerRun shifted_power(const SymmetricTensor& t, std::vector<double> x, double shift, bool minimize,
                       double tol, int max_iters, std::optional<double> stop_below = std::nullopt) {
    PowerRun run;
    for (int iter = 0; iter <= max_iters; ++iter) {
        const std::vector<double> y = contract(t, x);
        run.lambda = dot(y, x);
        run.x = x;
        if (stop_below && run.lambda < *stop_below) return run;
        double res = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) res = std::max(res, std::abs(y[i] - run.lambda * x[i]));
        run.residual = res;
        if (res <= tol) {
            run.converged = true;
            return run;
        }
        if (iter == max_iters) break;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = minimize ? shift * x[i] - y[i] : y[i] + shift * x[i];
        normalize2(x);
    }
    return run;
}

}  // namespace

double h_residual(const SymmetricTensor& t, double lambda, std::span<const double> x) {
    const std::vector<double> y = contract(t, x);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(y[i] - lambda * int_pow(x[i], t.order() - 1)));
    }
    return worst;
}

double z_residual(const SymmetricTensor& t, double lambda, std::span<const double> x) {
    const std::vector<double> y = contract(t, x);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(y[i] - lambda * x[i]));
    return worst;
}

EigenPair h_eigen_nqz(const SymmetricTensor& t, double tol, int max_iters) {
    double shift = 0.0;
    for (double v : t.values()) {
        if (v < 0.0) throw unsupported_query_error("h_eigen_nqz needs a nonnegative tensor");
        shift = std::max(shift, v);
    }
    if (shift == 0.0) throw unsupported_query_error("h_eigen_nqz: the zero tensor has no positive eigenvector");

    const int n = t.dim();
    const int m = t.order();
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < max_iters; ++iter) {
        const std::vector<double> y = contract(t, x);
        lo = std::numeric_limits<double>::infinity();
        hi = -std::numeric_limits<double>::infinity();
        std::vector<double> next(x.size());
        double top = 0.0;
        for (int i = 0; i < n; ++i) {
            const double xm = int_pow(x[i], m - 1);
            if (xm > 0.0) {
                const double ratio = y[i] / xm;
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
            next[i] = std::pow(y[i] + shift * xm, 1.0 / (m - 1));
            top = std::max(top, next[i]);
        }
        lo = std::max(lo, 0.0);
        if (hi - lo <= tol * std::max(1.0, hi)) {
            EigenPair pair;
            pair.kind = EigenKind::H;
            pair.lambda = 0.5 * (lo + hi);
            pair.x = x;
            pair.residual = h_residual(t, pair.lambda, pair.x);
            return pair;
        }
        for (double& v : next) v /= top;
        x = std::move(next);
    }
    throw convergence_error("h_eigen_nqz did not converge in " + std::to_string(max_iters) +
                                " iterations; bracket [" + num(lo) + ", " + num(hi) + "]",
                            lo, hi);
}

std::vector<EigenPair> h_eigen_all_dim2(const SymmetricTensor& t) {
    if (t.dim() != 2) {
        throw unsupported_query_error("h_eigen_all_dim2 needs dimension 2, got " + std::to_string(t.dim()));
    }
    const int m = t.order();
    // a[k]: entry with k twos.
    std::vector<double> a(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        MultiIndex idx(static_cast<std::size_t>(m), 1);
        for (int j = 0; j < k; ++j) idx[m - 1 - j] = 2;
        a[k] = t.entry(idx);
    }
    std::vector<double> f1(static_cast<std::size_t>(m));
    std::vector<double> f2(static_cast<std::size_t>(m));
    double binom = 1.0;
    for (int j = 0; j < m; ++j) {
        f1[j] = binom * a[j];
        f2[j] = binom * a[j + 1];
        binom = binom * (m - 1 - j) / (j + 1);
    }
    std::vector<double> p(static_cast<std::size_t>(2 * m - 1), 0.0);
    for (int j = 0; j < m; ++j) {
        p[j] += f2[j];
        p[j + m - 1] -= f1[j];
    }
    const UnivariatePoly poly(p);
    if (poly.is_zero()) {
        throw unsupported_query_error("h_eigen_all_dim2: every direction is an eigenvector (continuum)");
    }

    std::vector<EigenPair> pairs;
    const UnivariatePoly f1_poly(f1);
    for (const RealRoot& root : real_roots(poly)) {
        EigenPair pair;
        pair.kind = EigenKind::H;
        pair.lambda = f1_poly(root.value);
        const double s = std::max(1.0, std::abs(root.value));
        pair.x = {1.0 / s, root.value / s};
        pair.residual = h_residual(t, pair.lambda, pair.x);
        if (pair.residual <= kDim2ResidualTol) pairs.push_back(std::move(pair));
    }
    EigenPair tail;
    tail.kind = EigenKind::H;
    tail.lambda = a[m];
    tail.x = {0.0, 1.0};
    tail.residual = h_residual(t, tail.lambda, tail.x);
    if (tail.residual <= kDim2ResidualTol) pairs.push_back(std::move(tail));
    std::sort(pairs.begin(), pairs.end(), pair_less);
    return pairs;
}

double default_sshopm_shift(const SymmetricTensor& t) {
    long double total = 0.0L;
    for (std::size_t r = 0; r < t.size(); ++r) {
        total += static_cast<long double>(t.layout().multiplicity(r)) * std::abs(t.value_at(r));
    }
    return 1.0 + static_cast<double>(total);
}

std::vector<EigenPair> z_eigen_sshopm(const SymmetricTensor& t, const SshopmOptions& options) {
    if (options.starts < 1) throw input_error("z_eigen_sshopm: starts must be >= 1");
    const double shift = options.shift.value_or(default_sshopm_shift(t));
    const bool even = t.order() % 2 == 0;

    std::vector<EigenPair> found;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int s = 0; s < options.starts; ++s) {
        SplitMix64 rng = trial_engine(options.seed, streams::kSshopmStart, static_cast<std::uint64_t>(s));
        PowerRun run = shifted_power(t, unit_sphere_sample(rng, t.dim()), shift, options.minimize, options.tol,
                                     options.max_iters);
        lo = std::min(lo, run.lambda);
        hi = std::max(hi, run.lambda);
        if (!run.converged) continue;
        if (even) {
            const auto lead = std::find_if(run.x.begin(), run.x.end(), [](double v) { return std::abs(v) > 1e-12; });
            if (lead != run.x.end() && *lead < 0.0) {
                for (double& v : run.x) v = -v;
            }
        }
        EigenPair pair{run.lambda, std::move(run.x), EigenKind::Z, run.residual};
        const bool duplicate = std::any_of(found.begin(), found.end(), [&](const EigenPair& q) {
            return std::abs(q.lambda - pair.lambda) <= kDedupLambda &&
                   std::min(vector_gap(q.x, pair.x, 1.0), vector_gap(q.x, pair.x, -1.0)) <= kDedupVector;
        });
        if (!duplicate) found.push_back(std::move(pair));
    }
    if (found.empty()) {
        throw convergence_error("z_eigen_sshopm: no start reached residual " + num(options.tol) +
                                    " in " + std::to_string(options.max_iters) + " iterations",
                                lo, hi);
    }
    std::sort(found.begin(), found.end(), pair_less);
    return found;
}

PsdProbeVerdict psd_probe(const SymmetricTensor& t, int trials, std::uint64_t seed) {
    if (t.order() % 2 != 0) {
        throw unsupported_query_error("psd_probe needs even order, got m = " + std::to_string(t.order()));
    }
    if (trials < 0) throw input_error("psd_probe: trials must be >= 0");
    const int n = t.dim();
    PsdProbeVerdict verdict;
    auto test = [&](const std::vector<double>& x) {
        ++verdict.probes_evaluated;
        const double value = tenstruct::apply(t, x);
        if (value < -kPsdViolation) {
            verdict.violated = true;
            verdict.witness = x;
            verdict.value = value;
            return true;
        }
        return false;
    };

    for (int i = 0; i < n; ++i) {
        std::vector<double> e(static_cast<std::size_t>(n), 0.0);
        e[i] = 1.0;
        if (test(e)) return verdict;
    }
    if (n <= kSignVectorMaxDim) {
        const std::uint64_t count = std::uint64_t{1} << (n - 1);
        for (std::uint64_t code = 0; code < count; ++code) {
            std::vector<double> x(static_cast<std::size_t>(n), 1.0);
            for (int j = 1; j < n; ++j) {
                if ((code >> (n - 1 - j)) & 1U) x[j] = -1.0;
            }
            if (test(x)) return verdict;
        }
    }

    // Keep the lowest samples as starts for the descent phase.
    std::vector<std::pair<double, std::vector<double>>> lowest;
    for (int k = 0; k < trials; ++k) {
        SplitMix64 rng = trial_engine(seed, streams::kPsdSphere, static_cast<std::uint64_t>(k));
        std::vector<double> x = unit_sphere_sample(rng, n);
        if (test(x)) return verdict;
        const double value = tenstruct::apply(t, x);
        if (static_cast<int>(lowest.size()) < kProbeSeededStarts || value < lowest.back().first) {
            lowest.emplace_back(value, std::move(x));
            std::sort(lowest.begin(), lowest.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (static_cast<int>(lowest.size()) > kProbeSeededStarts) lowest.pop_back();
        }
    }

    std::vector<std::vector<double>> starts;
    for (auto& entry : lowest) starts.push_back(std::move(entry.second));
    for (int s = 0; s < kProbeRandomStarts; ++s) {
        SplitMix64 rng = trial_engine(seed, streams::kSshopmStart, static_cast<std::uint64_t>(s));
        starts.push_back(unit_sphere_sample(rng, n));
    }
    const double shift = default_sshopm_shift(t);
    for (auto& start : starts) {
        const PowerRun run = shifted_power(t, std::move(start), shift, true, 0.0, kProbeIters, -kPsdViolation);
        if (test(run.x)) return verdict;
    }
    return verdict;
}

}  // namespace tenstruct
