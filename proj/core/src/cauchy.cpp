#include "tenstruct/cauchy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tenstruct/error.hpp"

namespace tenstruct {

namespace {

constexpr double kZeroSum = 1e-14;

std::string format_index(const MultiIndex& idx) {
    std::string s = "(";
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(idx[j]);
    }
    return s + ")";
}

void require_even(const GeneralizedCauchySpec& spec, const char* what) {
    if (spec.order() % 2 != 0) {
        throw unsupported_query_error(std::string(what) + " is only defined for even order, got m = " +
                                      std::to_string(spec.order()));
    }
}

}  // namespace

double GeneralizedCauchySpec::entry(std::span<const int> idx) const {
    if (idx.size() != static_cast<std::size_t>(order_)) {
        throw input_error("index tuple length " + std::to_string(idx.size()) + " does not match order " +
                          std::to_string(order_));
    }
    double num = 1.0;
    double den = 0.0;
    for (int i : idx) {
        if (i < 1 || i > dim()) throw input_error("index " + std::to_string(i) + " out of range");
        num *= d_[i - 1];
        den += c_[i - 1];
    }
    return num / den;
}

GeneralizedCauchySpec build_generalized_cauchy(std::vector<double> c, std::vector<double> d, int order) {
    if (c.empty()) throw input_error("cauchy: generating vector c is empty");
    if (c.size() != d.size()) {
        throw input_error("cauchy: c has length " + std::to_string(c.size()) + " but d has length " +
                          std::to_string(d.size()));
    }
    if (order < 2) throw input_error("cauchy: order must be >= 2, got " + std::to_string(order));

    const auto layout = IndexLayout::get(order, static_cast<int>(c.size()));
    for (std::size_t r = 0; r < layout->size(); ++r) {
        const MultiIndex& idx = layout->index(r);
        double sum = 0.0;
        double scale = 0.0;
        for (int i : idx) {
            sum += c[i - 1];
            scale = std::max(scale, std::abs(c[i - 1]));
        }
        if (std::abs(sum) <= kZeroSum * std::max(1.0, scale)) {
            throw degenerate_generator_error("cauchy: c-sum vanishes at multi-index " + format_index(idx));
        }
    }
    return GeneralizedCauchySpec(std::move(c), std::move(d), order);
}

namespace cauchy {

GeneralizedCauchySpec build(std::vector<double> c, int order) {
    std::vector<double> d(c.size(), 1.0);
    return build_generalized_cauchy(std::move(c), std::move(d), order);
}

SymmetricTensor dense(const GeneralizedCauchySpec& spec) {
    return SymmetricTensor::generate(spec.order(), spec.dim(),
                                     [&](const MultiIndex& idx) { return spec.entry(idx); });
}

std::optional<int> psd_violation_index(const GeneralizedCauchySpec& spec) {
    require_even(spec, "positive semi-definiteness");
    for (int i = 0; i < spec.dim(); ++i) {
        // c_i = 0 never survives build (the diagonal sum m c_i would vanish).
        if (spec.d()[i] != 0.0 && !(spec.c()[i] > 0.0)) return i + 1;
    }
    return std::nullopt;
}

bool is_psd(const GeneralizedCauchySpec& spec) { return !psd_violation_index(spec).has_value(); }

bool is_pd(const GeneralizedCauchySpec& spec) {
    require_even(spec, "positive definiteness");
    for (int i = 0; i < spec.dim(); ++i) {
        if (!(spec.c()[i] > 0.0) || spec.d()[i] == 0.0) return false;
    }
    std::vector<double> sorted = spec.c();
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_completely_positive(const GeneralizedCauchySpec& spec) {
    const auto& c = spec.c();
    const auto& d = spec.d();
    if (std::any_of(d.begin(), d.end(), [](double v) { return v == 0.0; })) {
        throw unsupported_query_error(
            "complete positivity is only characterized when every d_i is nonzero");
    }
    if (!std::all_of(c.begin(), c.end(), [](double v) { return v > 0.0; })) return false;
    if (std::all_of(d.begin(), d.end(), [](double v) { return v > 0.0; })) return true;
    return spec.order() % 2 == 0 && std::all_of(d.begin(), d.end(), [](double v) { return v < 0.0; });
}

std::optional<MultiIndex> negative_entry_witness(const GeneralizedCauchySpec& spec) {
    const int n = spec.dim();
    const int m = spec.order();
    const auto& d = spec.d();
    const auto& c = spec.c();
    int negative = -1;
    int positive = -1;
    for (int i = 0; i < n; ++i) {
        if (d[i] < 0.0 && negative < 0) negative = i;
        if (d[i] > 0.0 && positive < 0) positive = i;
    }
    auto check = [&](MultiIndex idx) -> std::optional<MultiIndex> {
        std::sort(idx.begin(), idx.end());
        if (spec.entry(idx) < 0.0) return idx;
        return std::nullopt;
    };
    if (std::all_of(c.begin(), c.end(), [](double v) { return v > 0.0; })) {
        if (negative >= 0 && positive >= 0) {
            MultiIndex idx(static_cast<std::size_t>(m), negative + 1);
            idx[0] = positive + 1;
            if (auto w = check(idx)) return w;
        }
        if (negative >= 0 && m % 2 == 1) {
            if (auto w = check(MultiIndex(static_cast<std::size_t>(m), negative + 1))) return w;
        }
    }
    // General case: scan canonical indices for the most negative entry.
    const auto layout = IndexLayout::get(m, n);
    std::optional<MultiIndex> best;
    double best_value = 0.0;
    for (std::size_t r = 0; r < layout->size(); ++r) {
        const double v = spec.entry(layout->index(r));
        if (v < best_value) {
            best_value = v;
            best = layout->index(r);
        }
    }
    return best;
}

RankOneSum riemann_rank_one_approx(const GeneralizedCauchySpec& spec, int k) {
    if (k < 1) throw input_error("riemann_rank_one_approx: k must be >= 1");
    for (int i = 0; i < spec.dim(); ++i) {
        if (!(spec.c()[i] > 0.0)) {
            throw unsupported_query_error("riemann_rank_one_approx needs c > 0 componentwise; c_" +
                                          std::to_string(i + 1) + " = " + std::to_string(spec.c()[i]));
        }
    }
    const int m = spec.order();
    const double inv_m = 1.0 / m;
    const double scale = std::pow(static_cast<double>(k), -inv_m);
    RankOneSum sum;
    sum.order = m;
    sum.terms.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        const double t = static_cast<double>(j) / k;
        RankOneTerm term;
        term.weight = 1.0;
        term.vector.resize(static_cast<std::size_t>(spec.dim()));
        for (int i = 0; i < spec.dim(); ++i) {
            term.vector[i] = std::pow(t, spec.c()[i] - inv_m) * spec.d()[i] * scale;
        }
        sum.terms.push_back(std::move(term));
    }
    return sum;
}

}  // namespace cauchy
}  // namespace tenstruct
