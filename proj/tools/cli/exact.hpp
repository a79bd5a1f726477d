#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tenstruct::cli {

/// Reduced rational num/den with den > 0.
struct Fraction {
    long long num = 0;
    long long den = 1;

    Fraction() = default;
    Fraction(long long n, long long d = 1);

    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] std::string str() const;

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Exact value of a double whose denominator is a power of two up to 2^30.
[[nodiscard]] std::optional<Fraction> dyadic(double x);

/// Exact A x^m for the Hankel tensor with generating vector v, via the
/// coefficients of (x_1 + x_2 z + ... + x_n z^{n-1})^m.
[[nodiscard]] Fraction hankel_form_exact(std::span<const Fraction> v, int order, std::span<const Fraction> x);

}  // namespace tenstruct::cli
