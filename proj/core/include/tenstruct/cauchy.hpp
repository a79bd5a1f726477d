#pragma once

#include <optional>
#include <vector>

#include "tenstruct/symmetric_tensor.hpp"

namespace tenstruct {

/// Generating data of a generalized Cauchy tensor,
/// entry (i_1..i_m) = d_{i_1}...d_{i_m} / (c_{i_1} + ... + c_{i_m}).
/// A plain Cauchy tensor has d = ones. Construct through cauchy::build.
class GeneralizedCauchySpec {
public:
    [[nodiscard]] const std::vector<double>& c() const noexcept { return c_; }
    [[nodiscard]] const std::vector<double>& d() const noexcept { return d_; }
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int dim() const noexcept { return static_cast<int>(c_.size()); }

    [[nodiscard]] double entry(std::span<const int> idx) const;

private:
    friend GeneralizedCauchySpec build_generalized_cauchy(std::vector<double>, std::vector<double>, int);
    GeneralizedCauchySpec(std::vector<double> c, std::vector<double> d, int order)
        : c_(std::move(c)), d_(std::move(d)), order_(order) {}

    std::vector<double> c_;
    std::vector<double> d_;
    int order_;
};

/// Validates (c, d, m). Throws input_error on mismatched lengths or m < 2 and
/// degenerate_generator_error naming the multi-index whose c-sum vanishes.
GeneralizedCauchySpec build_generalized_cauchy(std::vector<double> c, std::vector<double> d, int order);

namespace cauchy {

inline GeneralizedCauchySpec build(std::vector<double> c, std::vector<double> d, int order) {
    return build_generalized_cauchy(std::move(c), std::move(d), order);
}

/// Plain Cauchy tensor (d = ones).
GeneralizedCauchySpec build(std::vector<double> c, int order);

[[nodiscard]] SymmetricTensor dense(const GeneralizedCauchySpec& spec);

/// PSD iff every i has (d_i = 0 and c_i != 0) or (d_i != 0 and c_i > 0).
/// Even order only; odd order throws unsupported_query_error.
[[nodiscard]] bool is_psd(const GeneralizedCauchySpec& spec);

/// First index i (1-based) with d_i != 0 and c_i < 0. At e_i the form equals
/// d_i^m / (m c_i) < 0. Empty when is_psd holds.
[[nodiscard]] std::optional<int> psd_violation_index(const GeneralizedCauchySpec& spec);

/// PD iff all c_i > 0, the c_i pairwise distinct (exact comparison), and all
/// d_i != 0. Nearly equal c values give PD but badly conditioned tensors.
[[nodiscard]] bool is_pd(const GeneralizedCauchySpec& spec);

/// Complete positivity for specs with all d_i != 0: c > 0 and d > 0. For even
/// order d and -d generate the same tensor, so c > 0 with d < 0 also counts.
/// Throws unsupported_query_error if some d_i = 0.
[[nodiscard]] bool is_completely_positive(const GeneralizedCauchySpec& spec);

/// A canonical multi-index with a negative entry, if any. For c > 0 and d of
/// mixed sign this is (j, i, ..., i) with d_i < 0 < d_j, for odd order with
/// d_i < 0 it is (i, ..., i).
[[nodiscard]] std::optional<MultiIndex> negative_entry_witness(const GeneralizedCauchySpec& spec);

/// Rank-one Riemann approximation C_k = sum_{j=1}^k (u^j)^{(x) m} with
/// u^j_i = (j/k)^{c_i - 1/m} d_i / k^{1/m} (right-endpoint nodes). Needs c > 0
/// and k >= 1, else unsupported_query_error / input_error.
[[nodiscard]] RankOneSum riemann_rank_one_approx(const GeneralizedCauchySpec& spec, int k);

}  // namespace cauchy
}  // namespace tenstruct
