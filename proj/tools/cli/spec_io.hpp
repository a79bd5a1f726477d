#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <variant>

#include <tenstruct/cauchy.hpp>
#include <tenstruct/cauchy_hankel.hpp>
#include <tenstruct/hankel.hpp>
#include <tenstruct/symmetric_tensor.hpp>

namespace tenstruct::cli {

struct VdecSpec {
    VandermondeDecomposition dec;
    std::optional<int> order;
};

using AnySpec = std::variant<SymmetricTensor, GeneralizedCauchySpec, HankelSpec, CauchyHankelSpec, VdecSpec>;

struct ParsedSpec {
    std::string kind;
    AnySpec spec;
    nlohmann::json source;
};

/// Parses one of
///   {"kind":"dense","m":..,"n":..,"entries":[{"index":[..],"value":..}, ..]}
///   {"kind":"dense","m":..,"n":..,"values":[..]}        (canonical order)
///   {"kind":"cauchy","c":[..],"d":[..],"m":..}          (d defaults to ones)
///   {"kind":"hankel","v":[..],"m":..,"n":..}
///   {"kind":"cauchy_hankel","g":..,"h":..,"m":..,"n":..}
///   {"kind":"vdec","terms":[{"alpha":..,"mu":..}, ..],"n":..,"m":..}  (m optional)
/// Throws input_error on malformed input and when n exceeds max_dim.
[[nodiscard]] ParsedSpec parse_spec(const nlohmann::json& j, int max_dim);

[[nodiscard]] int spec_dim(const ParsedSpec& spec);

/// Dense expansion. vdec specs need an order.
[[nodiscard]] SymmetricTensor expand(const ParsedSpec& spec);

/// Hankel view for hankel, cauchy_hankel and vdec (composed) specs.
[[nodiscard]] std::optional<HankelSpec> as_hankel(const ParsedSpec& spec);

/// 64-bit FNV-1a of the text, as 16 hex digits.
[[nodiscard]] std::string fnv1a_hex(const std::string& text);

}  // namespace tenstruct::cli
