#pragma once

#include <span>
#include <vector>

namespace tenstruct {

/// Real univariate polynomial, coeffs()[k] multiplying mu^k. Coefficients
/// below 1e-14 * max|coeff| are zeroed and trailing zeros are trimmed, so the
/// zero polynomial has no coefficients and degree -1.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<double> coeffs);
    UnivariatePoly(std::initializer_list<double> coeffs)
        : UnivariatePoly(std::vector<double>(coeffs)) {}

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] double leading() const { return coeffs_.back(); }
    [[nodiscard]] double max_abs_coeff() const noexcept;

    /// Horner evaluation.
    [[nodiscard]] double operator()(double mu) const noexcept;

    [[nodiscard]] UnivariatePoly derivative() const;

    /// Cauchy bound 1 + max_k |c_k / c_deg|; every real root lies strictly inside.
    [[nodiscard]] double root_bound() const;

    friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

private:
    std::vector<double> coeffs_;
};

inline constexpr double kDefaultRootTol = 1e-12;

struct RealRoot {
    double value = 0.0;
    int multiplicity = 1;
};

/// All real roots in ascending order with multiplicities. The real line is
/// split at the (recursively computed) critical points into pieces on which
/// p is monotone; each piece holds a root iff its endpoint signs differ, and
/// that root is refined by bisection to full double precision. A critical
/// point where p vanishes is a multiple root. Throws input_error for the zero
/// polynomial.
[[nodiscard]] std::vector<RealRoot> real_roots(const UnivariatePoly& p, double tol = kDefaultRootTol);

struct NonnegVerdict {
    bool nonnegative = true;
    /// Witness mu with p(mu) < 0 when negative; otherwise the global minimizer
    /// (0 for constants and the zero polynomial).
    double mu = 0.0;
    double value = 0.0;
};

/// Decides p(mu) >= 0 for all real mu.
[[nodiscard]] NonnegVerdict nonneg_on_reals(const UnivariatePoly& p);

}  // namespace tenstruct
