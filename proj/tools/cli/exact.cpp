#include "cli/exact.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tenstruct::cli {

Fraction::Fraction(long long n, long long d) {
    if (d == 0) throw std::domain_error("fraction with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const long long g = std::gcd(n, d);
    num = g ? n / g : 0;
    den = g ? d / g : 1;
}

std::string Fraction::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    const long long g = std::gcd(a.den, b.den);
    return {a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den};
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    const long long g1 = std::gcd(a.num, b.den);
    const long long g2 = std::gcd(b.num, a.den);
    const long long n1 = g1 ? a.num / g1 : 0;
    const long long d2 = g1 ? b.den / g1 : b.den;
    const long long n2 = g2 ? b.num / g2 : 0;
    const long long d1 = g2 ? a.den / g2 : a.den;
    return {n1 * n2, d1 * d2};
}

std::optional<Fraction> dyadic(double x) {
    if (!std::isfinite(x)) return std::nullopt;
    long long den = 1;
    for (int k = 0; k <= 30; ++k, den *= 2) {
        const double scaled = x * static_cast<double>(den);
        if (std::abs(scaled) > 1e15) return std::nullopt;
        if (scaled == std::floor(scaled)) return Fraction(static_cast<long long>(scaled), den);
    }
    return std::nullopt;
}

Fraction hankel_form_exact(std::span<const Fraction> v, int order, std::span<const Fraction> x) {
    std::vector<Fraction> power{Fraction(1)};
    for (int p = 0; p < order; ++p) {
        std::vector<Fraction> next(power.size() + x.size() - 1);
        for (std::size_t a = 0; a < power.size(); ++a) {
            for (std::size_t b = 0; b < x.size(); ++b) next[a + b] = next[a + b] + power[a] * x[b];
        }
        power = std::move(next);
    }
    if (power.size() != v.size()) throw std::invalid_argument("hankel_form_exact: length mismatch");
    Fraction total;
    for (std::size_t k = 0; k < v.size(); ++k) total = total + v[k] * power[k];
    return total;
}

}  // namespace tenstruct::cli
