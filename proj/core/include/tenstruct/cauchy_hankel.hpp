#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "tenstruct/cauchy.hpp"
#include "tenstruct/hankel.hpp"
#include "tenstruct/symmetric_tensor.hpp"

namespace tenstruct {

/// Tensor with entries 1/(g + h (i_1 + ... + i_m)); both a Cauchy and a
/// Hankel tensor. Construct through cauchy_hankel::build.
class CauchyHankelSpec {
public:
    [[nodiscard]] double g() const noexcept { return g_; }
    [[nodiscard]] double h() const noexcept { return h_; }
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int dim() const noexcept { return dim_; }

    [[nodiscard]] double entry(std::span<const int> idx) const;

private:
    friend CauchyHankelSpec build_cauchy_hankel(double, double, int, int);
    CauchyHankelSpec(double g, double h, int order, int dim) : g_(g), h_(h), order_(order), dim_(dim) {}

    double g_;
    double h_;
    int order_;
    int dim_;
};

/// Throws input_error for m, n < 2 and degenerate_generator_error for h = 0 or
/// g + h s = 0 with s in [m, nm].
CauchyHankelSpec build_cauchy_hankel(double g, double h, int order, int dim);

struct MonotoneVerdict {
    bool violated = false;
    std::vector<double> x;  ///< x >= y componentwise, x != y, f(x) <= f(y) + 1e-12
    std::vector<double> y;
    std::size_t pairs_evaluated = 0;
};

namespace cauchy_hankel {

inline CauchyHankelSpec build(double g, double h, int order, int dim) {
    return build_cauchy_hankel(g, h, order, dim);
}

[[nodiscard]] SymmetricTensor dense(const CauchyHankelSpec& spec);

/// c_i = g/m + i h, d = ones.
[[nodiscard]] GeneralizedCauchySpec as_cauchy(const CauchyHankelSpec& spec);

/// v_k = 1/(g + h (k + m)), k = 0..(n-1)m.
[[nodiscard]] HankelSpec as_hankel(const CauchyHankelSpec& spec);

/// PD iff g + m h > 0 and g + n m h > 0. Odd order throws unsupported_query_error.
[[nodiscard]] bool is_pd(const CauchyHankelSpec& spec);

/// Pair (x, y) number `index` of the monotonicity harness: index 0 is
/// (e_1, 0), index 1 is (e_n, 0); later pairs draw y uniformly from [0, 1]^n
/// and raise a nonempty random subset of coordinates by amounts in [0.05, 1].
[[nodiscard]] std::pair<std::vector<double>, std::vector<double>> orthant_pair(int dim, std::uint64_t seed,
                                                                                std::uint64_t index);

/// Checks f(x) > f(y) + 1e-12 on the two boundary pairs and then `pairs`
/// random pairs, f(x) = A x^m. Can only falsify strict monotonicity.
[[nodiscard]] MonotoneVerdict check_strict_monotone_on_orthant(const CauchyHankelSpec& spec, int pairs,
                                                               std::uint64_t seed);

}  // namespace cauchy_hankel
}  // namespace tenstruct
