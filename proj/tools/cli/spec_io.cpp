#include "cli/spec_io.hpp"

#include <cstdio>

#include <tenstruct/error.hpp>

namespace tenstruct::cli {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
    if (!j.contains(name)) throw input_error(std::string("spec: missing field \"") + name + "\"");
    return j.at(name);
}

int int_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_number_integer()) throw input_error(std::string("spec: field \"") + name + "\" must be an integer");
    return f.get<int>();
}

double number(const json& f, const char* name) {
    if (!f.is_number()) throw input_error(std::string("spec: field \"") + name + "\" must be a number");
    return f.get<double>();
}

std::vector<double> vector_field(const json& j, const char* name) {
    const json& f = field(j, name);
    if (!f.is_array()) throw input_error(std::string("spec: field \"") + name + "\" must be an array");
    std::vector<double> out;
    for (const auto& x : f) out.push_back(number(x, name));
    return out;
}

void check_dim(int n, int max_dim) {
    if (n < 1) throw input_error("spec: dimension must be positive");
    if (n > max_dim) {
        throw input_error("spec: dimension " + std::to_string(n) + " exceeds TENSTRUCT_MAX_DIM = " +
                          std::to_string(max_dim));
    }
}

SymmetricTensor parse_dense(const json& j) {
    const int m = int_field(j, "m");
    const int n = int_field(j, "n");
    if (j.contains("values")) return SymmetricTensor(m, n, vector_field(j, "values"));
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw input_error("spec: \"entries\" must be an array");
    const auto layout = IndexLayout::get(m, n);
    std::vector<double> values(layout->size(), 0.0);
    std::vector<bool> seen(layout->size(), false);
    for (const auto& e : entries) {
        const auto idx = field(e, "index").get<std::vector<int>>();
        const std::size_t r = layout->rank_of(idx);
        if (seen[r]) throw input_error("spec: entry listed twice (up to permutation)");
        seen[r] = true;
        values[r] = number(field(e, "value"), "value");
    }
    return SymmetricTensor(m, n, std::move(values));
}

}  // namespace

ParsedSpec parse_spec(const json& j, int max_dim) {
    if (!j.is_object()) throw input_error("spec: expected a JSON object");
    ParsedSpec out{field(j, "kind").get<std::string>(), SymmetricTensor(2, 1), j};
    const std::string& kind = out.kind;
    try {
        if (kind == "dense") {
            check_dim(int_field(j, "n"), max_dim);
            out.spec = parse_dense(j);
        } else if (kind == "cauchy") {
            std::vector<double> c = vector_field(j, "c");
            std::vector<double> d = j.contains("d") ? vector_field(j, "d") : std::vector<double>(c.size(), 1.0);
            check_dim(static_cast<int>(c.size()), max_dim);
            out.spec = cauchy::build(std::move(c), std::move(d), int_field(j, "m"));
        } else if (kind == "hankel") {
            check_dim(int_field(j, "n"), max_dim);
            out.spec = hankel::build(vector_field(j, "v"), int_field(j, "m"), int_field(j, "n"));
        } else if (kind == "cauchy_hankel") {
            check_dim(int_field(j, "n"), max_dim);
            out.spec = cauchy_hankel::build(number(field(j, "g"), "g"), number(field(j, "h"), "h"),
                                            int_field(j, "m"), int_field(j, "n"));
        } else if (kind == "vdec") {
            const int n = int_field(j, "n");
            check_dim(n, max_dim);
            std::vector<VandermondeTerm> terms;
            for (const auto& t : field(j, "terms")) {
                terms.push_back({number(field(t, "alpha"), "alpha"), number(field(t, "mu"), "mu")});
            }
            std::optional<int> m;
            if (j.contains("m")) m = int_field(j, "m");
            out.spec = VdecSpec{VandermondeDecomposition(std::move(terms), n), m};
        } else {
            throw input_error("spec: unknown kind \"" + kind + "\"");
        }
    } catch (const json::exception& e) {
        throw input_error(std::string("spec: ") + e.what());
    }
    return out;
}

int spec_dim(const ParsedSpec& spec) {
    return std::visit(
        [](const auto& s) -> int {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, VdecSpec>) {
                return s.dec.dim();
            } else {
                return s.dim();
            }
        },
        spec.spec);
}

SymmetricTensor expand(const ParsedSpec& spec) {
    return std::visit(
        [](const auto& s) -> SymmetricTensor {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SymmetricTensor>) {
                return s;
            } else if constexpr (std::is_same_v<T, GeneralizedCauchySpec>) {
                return cauchy::dense(s);
            } else if constexpr (std::is_same_v<T, HankelSpec>) {
                return hankel::dense(s);
            } else if constexpr (std::is_same_v<T, CauchyHankelSpec>) {
                return cauchy_hankel::dense(s);
            } else {
                if (!s.order) throw input_error("spec: vdec needs field \"m\" for this command");
                return from_rank_one_sum(s.dec.as_rank_one_sum(*s.order), s.dec.dim());
            }
        },
        spec.spec);
}

std::optional<HankelSpec> as_hankel(const ParsedSpec& spec) {
    if (const auto* h = std::get_if<HankelSpec>(&spec.spec)) return *h;
    if (const auto* ch = std::get_if<CauchyHankelSpec>(&spec.spec)) return cauchy_hankel::as_hankel(*ch);
    if (const auto* vd = std::get_if<VdecSpec>(&spec.spec)) {
        if (!vd->order) throw input_error("spec: vdec needs field \"m\" for this command");
        return hankel::vandermonde_compose(vd->dec, *vd->order);
    }
    return std::nullopt;
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char ch : text) {
        hash ^= ch;
        hash *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace tenstruct::cli
