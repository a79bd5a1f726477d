#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tenstruct/symmetric_tensor.hpp"

namespace tenstruct {

enum class EigenKind { H, Z };

/// H pairs: A x^{m-1} = lambda x^{[m-1]}, x scaled to max-norm 1.
/// Z pairs: A x^{m-1} = lambda x, ||x||_2 = 1.
/// residual is the max-norm of the defining equation's residual.
struct EigenPair {
    double lambda = 0.0;
    std::vector<double> x;
    EigenKind kind = EigenKind::H;
    double residual = 0.0;
};

[[nodiscard]] double h_residual(const SymmetricTensor& t, double lambda, std::span<const double> x);
[[nodiscard]] double z_residual(const SymmetricTensor& t, double lambda, std::span<const double> x);

/// Largest H-eigenvalue of a nonnegative tensor by power iteration from the
/// uniform vector, x <- (A x^{m-1} + x^{[m-1]} s)^{[1/(m-1)]} with the shift
/// s = max entry so that irreducible inputs converge without oscillation.
/// Stops when the componentwise ratio bracket [lo, hi] has width
/// <= tol * max(1, hi). Throws unsupported_query_error on a negative entry or
/// the zero tensor and convergence_error (carrying the bracket) after max_iters.
[[nodiscard]] EigenPair h_eigen_nqz(const SymmetricTensor& t, double tol = 1e-12, int max_iters = 100000);

/// Every real H-eigenpair of a dimension-2 tensor. With a_k the entry carrying
/// k twos, x = (1, t) is an eigenvector iff
/// sum_j C(m-1,j) a_{j+1} t^j = t^{m-1} sum_j C(m-1,j) a_j t^j, and then lambda
/// is the right-hand sum; x = (0, 1) is checked directly. Pairs are sorted by
/// lambda ascending and kept when residual <= 1e-8. Throws
/// unsupported_query_error for dim != 2 and when the eigenvectors form a
/// continuum (the polynomial above vanishes identically).
[[nodiscard]] std::vector<EigenPair> h_eigen_all_dim2(const SymmetricTensor& t);

struct SshopmOptions {
    /// Defaults to 1 + sum of |entries| over all n^m positions.
    std::optional<double> shift;
    double tol = 1e-10;
    int max_iters = 20000;
    int starts = 16;
    std::uint64_t seed = 0;
    /// Run the negated iteration x <- N(shift x - A x^{m-1}) towards small eigenvalues.
    bool minimize = false;
};

[[nodiscard]] double default_sshopm_shift(const SymmetricTensor& t);

/// Multi-start shifted symmetric power iteration x <- N(A x^{m-1} + shift x).
/// Starts are unit-sphere samples keyed by (seed, start index). Converged pairs
/// (residual <= tol) are deduplicated (|dlambda| <= 1e-6 and min over sign of
/// ||x -+ x'||_inf <= 1e-4) and sorted by lambda, then x. Unconverged starts are
/// dropped; if none converge, throws convergence_error with the range of
/// final Rayleigh values.
[[nodiscard]] std::vector<EigenPair> z_eigen_sshopm(const SymmetricTensor& t, const SshopmOptions& options = {});

struct PsdProbeVerdict {
    bool violated = false;
    std::vector<double> witness;  ///< A x^m < -1e-10 when violated
    double value = 0.0;
    std::size_t probes_evaluated = 0;
};

/// Searches for x with A x^m < -1e-10, returning the first hit in this order:
/// coordinate vectors; for n <= 12 all 2^{n-1} sign vectors with x_1 = +1
/// (binary counting, last coordinate fastest, + before -); `trials` seeded
/// unit-sphere samples; short minimizing shifted power runs started from the
/// lowest samples and from fresh random points. Even order only. Can only
/// falsify positive semi-definiteness.
[[nodiscard]] PsdProbeVerdict psd_probe(const SymmetricTensor& t, int trials, std::uint64_t seed);

}  // namespace tenstruct
