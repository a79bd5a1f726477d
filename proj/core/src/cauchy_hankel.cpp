#include "tenstruct/cauchy_hankel.hpp"

#include <string>

#include "tenstruct/error.hpp"
#include "tenstruct/sampling.hpp"

namespace tenstruct {

namespace {

constexpr double kStrictGap = 1e-12;

}  // namespace

double CauchyHankelSpec::entry(std::span<const int> idx) const {
    if (idx.size() != static_cast<std::size_t>(order_)) {
        throw input_error("index tuple length " + std::to_string(idx.size()) + " does not match order " +
                          std::to_string(order_));
    }
    int sum = 0;
    for (int i : idx) {
        if (i < 1 || i > dim_) throw input_error("index " + std::to_string(i) + " out of range");
        sum += i;
    }
    return 1.0 / (g_ + h_ * sum);
}

CauchyHankelSpec build_cauchy_hankel(double g, double h, int order, int dim) {
    if (order < 2 || dim < 2) {
        throw input_error("cauchy_hankel: order and dimension must be >= 2, got m = " + std::to_string(order) +
                          ", n = " + std::to_string(dim));
    }
    if (h == 0.0) throw degenerate_generator_error("cauchy_hankel: h must be nonzero");
    for (int s = order; s <= dim * order; ++s) {
        if (g + h * s == 0.0) {
            throw degenerate_generator_error("cauchy_hankel: g + h s vanishes at index sum s = " +
                                             std::to_string(s));
        }
    }
    return CauchyHankelSpec(g, h, order, dim);
}

namespace cauchy_hankel {

SymmetricTensor dense(const CauchyHankelSpec& spec) {
    return SymmetricTensor::generate(spec.order(), spec.dim(),
                                     [&](const MultiIndex& idx) { return spec.entry(idx); });
}

GeneralizedCauchySpec as_cauchy(const CauchyHankelSpec& spec) {
    std::vector<double> c(static_cast<std::size_t>(spec.dim()));
    for (int i = 1; i <= spec.dim(); ++i) c[i - 1] = spec.g() / spec.order() + i * spec.h();
    return cauchy::build(std::move(c), spec.order());
}

HankelSpec as_hankel(const CauchyHankelSpec& spec) {
    const int m = spec.order();
    std::vector<double> v(static_cast<std::size_t>((spec.dim() - 1) * m + 1));
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = 1.0 / (spec.g() + spec.h() * (static_cast<double>(k) + m));
    return hankel::build(std::move(v), m, spec.dim());
}

bool is_pd(const CauchyHankelSpec& spec) {
    const int m = spec.order();
    if (m % 2 != 0) {
        throw unsupported_query_error("positive definiteness is only defined for even order, got m = " +
                                      std::to_string(m));
    }
    return spec.g() + m * spec.h() > 0.0 && spec.g() + spec.dim() * m * spec.h() > 0.0;
}

std::pair<std::vector<double>, std::vector<double>> orthant_pair(int dim, std::uint64_t seed,
                                                                 std::uint64_t index) {
    std::vector<double> x(static_cast<std::size_t>(dim), 0.0);
    std::vector<double> y(x.size(), 0.0);
    if (index < 2) {
        x[index == 0 ? 0 : dim - 1] = 1.0;
        return {x, y};
    }
    SplitMix64 rng = trial_engine(seed, streams::kMonotonePair, index);
    for (auto& yi : y) yi = uniform01(rng);
    x = y;
    bool bumped = false;
    for (int i = 0; i < dim; ++i) {
        if (uniform01(rng) < 0.5) {
            x[i] += uniform(rng, 0.05, 1.0);
            bumped = true;
        }
    }
    if (!bumped) {
        const auto i = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
        x[i] += uniform(rng, 0.05, 1.0);
    }
    return {x, y};
}

MonotoneVerdict check_strict_monotone_on_orthant(const CauchyHankelSpec& spec, int pairs, std::uint64_t seed) {
    if (spec.order() % 2 != 0) {
        throw unsupported_query_error("monotonicity check needs even order, got m = " +
                                      std::to_string(spec.order()));
    }
    if (pairs < 1) throw input_error("check_strict_monotone_on_orthant: pairs must be >= 1");
    const SymmetricTensor t = dense(spec);
    MonotoneVerdict verdict;
    const auto total = static_cast<std::uint64_t>(pairs) + 2;
    for (std::uint64_t index = 0; index < total; ++index) {
        auto [x, y] = orthant_pair(spec.dim(), seed, index);
        ++verdict.pairs_evaluated;
        if (tenstruct::apply(t, x) <= tenstruct::apply(t, y) + kStrictGap) {
            verdict.violated = true;
            verdict.x = std::move(x);
            verdict.y = std::move(y);
            return verdict;
        }
    }
    return verdict;
}

}  // namespace cauchy_hankel
}  // namespace tenstruct
