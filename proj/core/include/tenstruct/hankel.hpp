#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tenstruct/symmetric_tensor.hpp"
#include "tenstruct/unipoly.hpp"

namespace tenstruct {

/// Generating vector of a Hankel tensor: entry (i_1..i_m) = v[i_1 + ... + i_m - m],
/// with v of length (n-1)m + 1. Construct through hankel::build.
class HankelSpec {
public:
    [[nodiscard]] const std::vector<double>& v() const noexcept { return v_; }
    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int dim() const noexcept { return dim_; }

    [[nodiscard]] double entry(std::span<const int> idx) const;

private:
    friend HankelSpec build_hankel(std::vector<double>, int, int);
    HankelSpec(std::vector<double> v, int order, int dim) : v_(std::move(v)), order_(order), dim_(dim) {}

    std::vector<double> v_;
    int order_;
    int dim_;
};

HankelSpec build_hankel(std::vector<double> v, int order, int dim);

/// Binary form attached to a Hankel tensor. coeffs[k] = s(k,m,n) v_k for
/// k = 0..(n-1)m. The associated plane tensor (order (n-1)m, dimension 2) has
/// entries coeffs[k] / C((n-1)m, k), and sum_k coeffs[k] mu^k = A u^m for the
/// Vandermonde vector u = (1, mu, ..., mu^{n-1}).
struct PlaneForm {
    int degree = 0;
    std::vector<double> coeffs;
    std::vector<std::uint64_t> binomials;

    [[nodiscard]] double plane_entry(int k) const { return coeffs[k] / static_cast<double>(binomials[k]); }
    /// sum_k coeffs[k] y1^{degree-k} y2^k.
    [[nodiscard]] double eval(double y1, double y2) const;
    [[nodiscard]] UnivariatePoly vandermonde_poly() const { return UnivariatePoly(coeffs); }
};

struct VandermondeTerm {
    double alpha = 0.0;
    double mu = 0.0;
};

/// sum_k alpha_k u_k^{(x) m} with u_k = (1, mu_k, ..., mu_k^{n-1}), nodes pairwise
/// distinct and alpha_k != 0. The order m is not part of the decomposition.
class VandermondeDecomposition {
public:
    /// Throws input_error on repeated nodes, zero coefficients or dim < 1.
    VandermondeDecomposition(std::vector<VandermondeTerm> terms, int dim);

    [[nodiscard]] const std::vector<VandermondeTerm>& terms() const noexcept { return terms_; }
    [[nodiscard]] int rank() const noexcept { return static_cast<int>(terms_.size()); }
    [[nodiscard]] int dim() const noexcept { return dim_; }

    /// The rank-one form of the decomposition for order m.
    [[nodiscard]] RankOneSum as_rank_one_sum(int order) const;

private:
    std::vector<VandermondeTerm> terms_;
    int dim_;
};

struct VpsdVerdict {
    bool vpsd = true;
    /// Violation witness when !vpsd (A u^m < 0 at this node); otherwise the
    /// minimizer of the Vandermonde polynomial.
    double mu = 0.0;
    double value = 0.0;
    UnivariatePoly polynomial;
};

struct SignChecks {
    bool sum_ok = true;
    bool positive_count_ok = true;
    /// Empty when r > n (not applicable).
    std::optional<bool> low_rank_all_positive_ok;

    /// Any failed field proves the composed tensor is not PSD.
    [[nodiscard]] bool certifies_not_psd() const {
        return !sum_ok || !positive_count_ok || low_rank_all_positive_ok == false;
    }
};

struct LowRankVerdict {
    bool psd_complete = true;
    std::vector<double> witness;  ///< unit max-norm x with A x^m < 0 when !psd_complete
    double value = 0.0;
    int negative_term = -1;       ///< 0-based index of the isolated negative term
};

namespace hankel {

inline HankelSpec build(std::vector<double> v, int order, int dim) {
    return build_hankel(std::move(v), order, dim);
}

[[nodiscard]] SymmetricTensor dense(const HankelSpec& spec);

/// Number of tuples in [n]^m with i_1 + ... + i_m - m = k (restricted
/// compositions, by dynamic programming). Throws input_error for k outside
/// [0, (n-1)m].
[[nodiscard]] std::uint64_t s_count(int k, int m, int n);

[[nodiscard]] PlaneForm plane_form(const HankelSpec& spec);

/// The associated plane tensor as a dense order-(n-1)m dimension-2 tensor.
[[nodiscard]] SymmetricTensor plane_tensor(const PlaneForm& form);

/// Vandermonde positive semi-definiteness, decided as nonnegativity of the
/// Vandermonde polynomial; equivalently PSD of the associated plane tensor.
/// Odd order throws unsupported_query_error.
[[nodiscard]] VpsdVerdict is_vandermonde_psd(const HankelSpec& spec);

/// v_j = sum_k alpha_k mu_k^j, j = 0..(n-1)m, with 0^0 = 1.
[[nodiscard]] HankelSpec vandermonde_compose(const VandermondeDecomposition& dec, int order);

/// The (n-1)m+1 integers centred at zero: 0, 1, -1, 2, -2, ...
[[nodiscard]] std::vector<double> default_fixed_nodes(int count);

/// Prony: smallest recurrence order r <= N/2 whose (N-r) x r Hankel system is
/// consistent (residual <= 1e-10), nodes = roots of the characteristic
/// polynomial, coefficients by least squares. Throws
/// no_real_minimal_decomposition_error when nodes are complex or repeated or
/// the composition residual exceeds 1e-8.
[[nodiscard]] VandermondeDecomposition vandermonde_decompose_minimal(const HankelSpec& spec);

/// Solves the square Vandermonde system at exactly (n-1)m+1 distinct nodes.
/// Coefficients with |alpha| < 1e-12 are dropped.
[[nodiscard]] VandermondeDecomposition vandermonde_decompose_fixed(const HankelSpec& spec,
                                                                   const std::vector<double>& nodes);

/// max_j |v_j - composed_j|.
[[nodiscard]] double composition_residual(const HankelSpec& spec, const VandermondeDecomposition& dec);

/// All alpha_k > 0.
[[nodiscard]] bool is_complete_decomposition(const VandermondeDecomposition& dec);

/// Sign conditions every PSD Hankel tensor's decomposition satisfies:
/// sum alpha >= 0; #positive >= n when r > n; all positive when r <= n.
[[nodiscard]] SignChecks psd_sign_necessary_checks(const VandermondeDecomposition& dec);

/// For r <= n: PSD iff all alpha_k > 0. Otherwise returns x with u_k^T x = 0 for
/// every term but the first negative one, so A x^m = alpha (u^T x)^m < 0.
/// x comes from Gauss-Jordan elimination with column pivoting on the other
/// terms' Vandermonde rows: the first null-space basis vector (free columns in
/// order) with a non-negligible u^T x, first nonzero entry positive, max-norm 1.
/// Even order only; r > n throws unsupported_query_error.
[[nodiscard]] LowRankVerdict low_rank_psd_classify(const VandermondeDecomposition& dec, int order);

}  // namespace hankel
}  // namespace tenstruct
