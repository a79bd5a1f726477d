#pragma once

#include <stdexcept>
#include <string>

namespace tenstruct {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: wrong lengths, out-of-range indices, shape mismatches.
class input_error : public error {
public:
    using error::error;
};

/// A generating vector produces a vanishing denominator.
class degenerate_generator_error : public input_error {
public:
    using input_error::input_error;
};

/// The query is outside the hypotheses under which it is defined
/// (odd order for definiteness, zero d entries for complete positivity, ...).
class unsupported_query_error : public error {
public:
    using error::error;
};

/// An iterative solver did not reach its tolerance. Carries the last bracket.
class convergence_error : public error {
public:
    convergence_error(const std::string& what, double lower, double upper)
        : error(what), lower_(lower), upper_(upper) {}

    [[nodiscard]] double lower() const noexcept { return lower_; }
    [[nodiscard]] double upper() const noexcept { return upper_; }

private:
    double lower_;
    double upper_;
};

/// Prony's method produced complex or repeated nodes.
class no_real_minimal_decomposition_error : public error {
public:
    using error::error;
};

}  // namespace tenstruct
