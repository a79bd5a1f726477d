#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "cli/spec_io.hpp"

namespace tenstruct::cli {

inline constexpr int kExitHolds = 0;
inline constexpr int kExitFails = 1;
inline constexpr int kExitInput = 2;

struct Options {
    std::uint64_t seed = 0;
    int trials = 10000;
    std::optional<double> tol;
    int k = 1000;
    std::string mode = "minimal";
    std::string nodes;
};

/// Verdicts and artifacts of one command plus its exit code and a one-line
/// human summary.
struct Outcome {
    int exit_code = kExitHolds;
    nlohmann::json verdicts = nlohmann::json::object();
    nlohmann::json artifacts = nlohmann::json::object();
    std::string summary;
};

[[nodiscard]] Outcome cmd_check(const ParsedSpec& spec, const std::string& property, const Options& opts);
[[nodiscard]] Outcome cmd_decompose(const ParsedSpec& spec, const std::string& kind, const Options& opts);
[[nodiscard]] Outcome cmd_eig(const ParsedSpec& spec, const std::string& kind, const Options& opts);
[[nodiscard]] Outcome cmd_plane(const ParsedSpec& spec);
[[nodiscard]] Outcome cmd_worked_examples();

}  // namespace tenstruct::cli
