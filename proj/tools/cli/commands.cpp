#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <tenstruct/error.hpp>
#include <tenstruct/spectra.hpp>

#include "cli/exact.hpp"

namespace tenstruct::cli {

namespace {

using nlohmann::json;

std::string fmt_num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string fmt_vec(const std::vector<double>& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ")";
    return os.str();
}

std::vector<double> unit(int n, int i) {
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    e[i] = 1.0;
    return e;
}

Outcome finish(Outcome out, const std::string& what, bool holds) {
    out.verdicts["holds"] = holds;
    out.exit_code = holds ? kExitHolds : kExitFails;
    if (out.summary.empty()) out.summary = what + (holds ? ": holds" : ": fails");
    return out;
}

Outcome witness_outcome(const std::string& what, std::vector<double> x, double value, Outcome out = {}) {
    out.summary = what + ": fails at x = " + fmt_vec(x) + ", value " + fmt_num(value);
    out.verdicts["witness"] = std::move(x);
    out.verdicts["value"] = value;
    return finish(std::move(out), what, false);
}

const GeneralizedCauchySpec* cauchy_view(const ParsedSpec& spec, std::optional<GeneralizedCauchySpec>& storage) {
    if (const auto* c = std::get_if<GeneralizedCauchySpec>(&spec.spec)) return c;
    if (const auto* ch = std::get_if<CauchyHankelSpec>(&spec.spec)) {
        storage = cauchy_hankel::as_cauchy(*ch);
        return &*storage;
    }
    return nullptr;
}

Outcome probe_psd(const SymmetricTensor& t, const Options& opts, Outcome out = {}) {
    const PsdProbeVerdict v = psd_probe(t, opts.trials, opts.seed);
    out.verdicts["method"] = "probe";
    out.verdicts["certified"] = v.violated;
    out.verdicts["probes_evaluated"] = v.probes_evaluated;
    if (v.violated) return witness_outcome("psd", v.witness, v.value, std::move(out));
    out.summary = "psd: no violation found in " + std::to_string(v.probes_evaluated) + " probes (not certified)";
    return finish(std::move(out), "psd", true);
}

Outcome check_psd(const ParsedSpec& spec, const Options& opts) {
    std::optional<GeneralizedCauchySpec> storage;
    if (const auto* c = cauchy_view(spec, storage)) {
        Outcome out;
        out.verdicts["method"] = "closed_form";
        out.verdicts["certified"] = true;
        if (const auto i = cauchy::psd_violation_index(*c)) {
            const double d = c->d()[*i - 1];
            const double value = std::pow(d, c->order()) / (c->order() * c->c()[*i - 1]);
            return witness_outcome("psd", unit(c->dim(), *i - 1), value, std::move(out));
        }
        return finish(std::move(out), "psd", true);
    }
    if (const auto* vd = std::get_if<VdecSpec>(&spec.spec)) {
        if (!vd->order) throw input_error("spec: vdec needs field \"m\" for psd");
        const int m = *vd->order;
        if (m % 2 != 0) throw unsupported_query_error("psd needs even order, got m = " + std::to_string(m));
        if (vd->dec.rank() <= vd->dec.dim()) {
            const LowRankVerdict lr = hankel::low_rank_psd_classify(vd->dec, m);
            Outcome out;
            out.verdicts["method"] = "low_rank";
            out.verdicts["certified"] = true;
            if (!lr.psd_complete) {
                out.verdicts["negative_term"] = lr.negative_term;
                return witness_outcome("psd", lr.witness, lr.value, std::move(out));
            }
            return finish(std::move(out), "psd", true);
        }
        const SignChecks checks = hankel::psd_sign_necessary_checks(vd->dec);
        Outcome out;
        out.verdicts["sign_checks"] = {{"sum_ok", checks.sum_ok}, {"positive_count_ok", checks.positive_count_ok}};
        const SymmetricTensor t = expand(spec);
        if (!checks.certifies_not_psd()) return probe_psd(t, opts, std::move(out));
        const PsdProbeVerdict v = psd_probe(t, opts.trials, opts.seed);
        out.verdicts["method"] = "sign_checks";
        out.verdicts["certified"] = true;
        if (v.violated) return witness_outcome("psd", v.witness, v.value, std::move(out));
        out.summary = "psd: fails (a necessary sign condition is violated; no explicit witness found)";
        return finish(std::move(out), "psd", false);
    }
    const SymmetricTensor t = expand(spec);
    if (t.order() % 2 != 0) {
        throw unsupported_query_error("psd needs even order, got m = " + std::to_string(t.order()));
    }
    return probe_psd(t, opts);
}

Outcome check_pd(const ParsedSpec& spec) {
    Outcome out;
    out.verdicts["method"] = "closed_form";
    out.verdicts["certified"] = true;
    if (const auto* ch = std::get_if<CauchyHankelSpec>(&spec.spec)) {
        if (cauchy_hankel::is_pd(*ch)) return finish(std::move(out), "pd", true);
        const double low = ch->g() + ch->order() * ch->h();
        if (low <= 0.0) return witness_outcome("pd", unit(ch->dim(), 0), 1.0 / low, std::move(out));
        const double high = ch->g() + ch->dim() * ch->order() * ch->h();
        return witness_outcome("pd", unit(ch->dim(), ch->dim() - 1), 1.0 / high, std::move(out));
    }
    const auto* c = std::get_if<GeneralizedCauchySpec>(&spec.spec);
    if (!c) throw unsupported_query_error("pd is decided only for cauchy and cauchy_hankel specs");
    if (cauchy::is_pd(*c)) return finish(std::move(out), "pd", true);
    const SymmetricTensor t = cauchy::dense(*c);
    const int n = c->dim();
    if (const auto i = cauchy::psd_violation_index(*c)) {
        const std::vector<double> x = unit(n, *i - 1);
        return witness_outcome("pd", x, tenstruct::apply(t, x), std::move(out));
    }
    for (int i = 0; i < n; ++i) {
        if (c->d()[i] == 0.0) return witness_outcome("pd", unit(n, i), 0.0, std::move(out));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (c->c()[i] == c->c()[j]) {
                std::vector<double> x(static_cast<std::size_t>(n), 0.0);
                x[i] = c->d()[j];
                x[j] = -c->d()[i];
                return witness_outcome("pd", x, tenstruct::apply(t, x), std::move(out));
            }
        }
    }
    return finish(std::move(out), "pd", false);
}

Outcome check_cp(const ParsedSpec& spec) {
    std::optional<GeneralizedCauchySpec> storage;
    const auto* c = cauchy_view(spec, storage);
    if (!c) throw unsupported_query_error("cp is decided only for cauchy and cauchy_hankel specs");
    Outcome out;
    out.verdicts["method"] = "closed_form";
    out.verdicts["certified"] = true;
    if (cauchy::is_completely_positive(*c)) return finish(std::move(out), "cp", true);
    if (const auto idx = cauchy::negative_entry_witness(*c)) {
        const double value = c->entry(*idx);
        out.verdicts["negative_entry"] = {{"index", *idx}, {"value", value}};
        out.summary = "cp: fails, negative entry " + fmt_num(value);
    }
    return finish(std::move(out), "cp", false);
}

Outcome check_vpsd(const ParsedSpec& spec) {
    const auto h = as_hankel(spec);
    if (!h) throw unsupported_query_error("vpsd needs a hankel, cauchy_hankel or vdec spec");
    const VpsdVerdict v = hankel::is_vandermonde_psd(*h);
    Outcome out;
    out.verdicts["method"] = "polynomial";
    out.verdicts["certified"] = true;
    out.verdicts["polynomial"] = std::vector<double>(v.polynomial.coeffs().begin(), v.polynomial.coeffs().end());
    out.verdicts["mu"] = v.mu;
    out.verdicts["value"] = v.value;
    std::ostringstream os;
    if (v.vpsd) {
        os << "vpsd: holds, minimum " << v.value << " at mu = " << v.mu;
    } else {
        os << "vpsd: fails, q(" << v.mu << ") = " << v.value;
    }
    out.summary = os.str();
    return finish(std::move(out), "vpsd", v.vpsd);
}

Outcome check_copositive(const ParsedSpec& spec, const Options& opts) {
    const CopositiveVerdict v = copositive_probe(expand(spec), opts.trials, opts.seed);
    Outcome out;
    out.verdicts["method"] = "probe";
    out.verdicts["certified"] = v.violated;
    out.verdicts["probes_evaluated"] = v.probes_evaluated;
    if (v.violated) return witness_outcome("copositive-probe", v.witness, v.value, std::move(out));
    out.summary = "copositive-probe: no violation found (not certified)";
    return finish(std::move(out), "copositive-probe", true);
}

Outcome check_monotone(const ParsedSpec& spec, const Options& opts) {
    const auto* ch = std::get_if<CauchyHankelSpec>(&spec.spec);
    if (!ch) throw unsupported_query_error("monotone needs a cauchy_hankel spec");
    const MonotoneVerdict v = cauchy_hankel::check_strict_monotone_on_orthant(*ch, opts.trials, opts.seed);
    Outcome out;
    out.verdicts["method"] = "probe";
    out.verdicts["certified"] = v.violated;
    out.verdicts["pairs_evaluated"] = v.pairs_evaluated;
    if (v.violated) {
        const SymmetricTensor t = cauchy_hankel::dense(*ch);
        out.verdicts["x"] = v.x;
        out.verdicts["y"] = v.y;
        out.verdicts["f_x"] = tenstruct::apply(t, v.x);
        out.verdicts["f_y"] = tenstruct::apply(t, v.y);
        out.summary = "monotone: fails, f" + fmt_vec(v.x) + " <= f" + fmt_vec(v.y);
        return finish(std::move(out), "monotone", false);
    }
    return finish(std::move(out), "monotone", true);
}

json terms_json(const VandermondeDecomposition& dec) {
    json terms = json::array();
    for (const auto& t : dec.terms()) terms.push_back({{"alpha", t.alpha}, {"mu", t.mu}});
    return terms;
}

std::vector<double> parse_nodes(const std::string& text) {
    std::vector<double> nodes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            nodes.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw input_error("--nodes: cannot parse \"" + item + "\"");
        }
    }
    return nodes;
}

json pairs_json(const std::vector<EigenPair>& pairs) {
    json out = json::array();
    for (const auto& p : pairs) {
        out.push_back({{"lambda", p.lambda},
                       {"x", p.x},
                       {"kind", p.kind == EigenKind::H ? "H" : "Z"},
                       {"residual", p.residual}});
    }
    return out;
}

std::vector<EigenPair> descending(std::vector<EigenPair> pairs) {
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const EigenPair& a, const EigenPair& b) { return a.lambda > b.lambda; });
    return pairs;
}

}  // namespace

Outcome cmd_check(const ParsedSpec& spec, const std::string& property, const Options& opts) {
    Outcome out;
    if (property == "psd") {
        out = check_psd(spec, opts);
    } else if (property == "pd") {
        out = check_pd(spec);
    } else if (property == "cp") {
        out = check_cp(spec);
    } else if (property == "vpsd") {
        out = check_vpsd(spec);
    } else if (property == "copositive-probe") {
        out = check_copositive(spec, opts);
    } else if (property == "monotone") {
        out = check_monotone(spec, opts);
    } else {
        throw input_error("unknown property \"" + property + "\"");
    }
    out.verdicts["property"] = property;
    return out;
}

Outcome cmd_decompose(const ParsedSpec& spec, const std::string& kind, const Options& opts) {
    Outcome out;
    if (kind == "vandermonde") {
        if (!std::holds_alternative<HankelSpec>(spec.spec) && !std::holds_alternative<CauchyHankelSpec>(spec.spec)) {
            throw unsupported_query_error("vandermonde decomposition needs a hankel or cauchy_hankel spec");
        }
        const HankelSpec h = *as_hankel(spec);
        out.verdicts["mode"] = opts.mode;
        std::optional<VandermondeDecomposition> dec;
        if (opts.mode == "minimal") {
            try {
                dec = hankel::vandermonde_decompose_minimal(h);
            } catch (const no_real_minimal_decomposition_error& e) {
                out.verdicts["decomposed"] = false;
                out.verdicts["diagnosis"] = e.what();
                out.verdicts["hint"] = "retry with --mode fixed (optionally --nodes \"a,b,...\")";
                out.exit_code = kExitFails;
                out.summary = std::string("decompose: no real minimal decomposition: ") + e.what();
                return out;
            }
        } else if (opts.mode == "fixed") {
            const std::vector<double> nodes = opts.nodes.empty()
                                                  ? hankel::default_fixed_nodes(static_cast<int>(h.v().size()))
                                                  : parse_nodes(opts.nodes);
            dec = hankel::vandermonde_decompose_fixed(h, nodes);
        } else {
            throw input_error("--mode must be minimal or fixed");
        }
        const double residual = hankel::composition_residual(h, *dec);
        out.verdicts["decomposed"] = true;
        out.verdicts["complete"] = hankel::is_complete_decomposition(*dec);
        out.artifacts["decomposition"] = {{"rank", dec->rank()}, {"terms", terms_json(*dec)}, {"residual", residual}};
        std::ostringstream os;
        os << "decompose: vandermonde rank " << dec->rank() << ", residual " << residual;
        out.summary = os.str();
        return out;
    }
    if (kind == "riemann") {
        const auto* c = std::get_if<GeneralizedCauchySpec>(&spec.spec);
        if (!c) throw unsupported_query_error("riemann decomposition needs a cauchy spec");
        const RankOneSum sum = cauchy::riemann_rank_one_approx(*c, opts.k);
        const double residual = max_abs_diff(from_rank_one_sum(sum, c->dim()), cauchy::dense(*c));
        json vectors = json::array();
        for (const auto& t : sum.terms) vectors.push_back(t.vector);
        out.verdicts["decomposed"] = true;
        out.verdicts["nonnegative_vectors"] = std::all_of(sum.terms.begin(), sum.terms.end(), [](const auto& t) {
            return std::all_of(t.vector.begin(), t.vector.end(), [](double v) { return v >= 0.0; });
        });
        out.artifacts["decomposition"] = {{"k", opts.k}, {"vectors", vectors}, {"residual", residual}};
        std::ostringstream os;
        os << "decompose: riemann k = " << opts.k << ", residual " << residual;
        out.summary = os.str();
        return out;
    }
    throw input_error("unknown decomposition \"" + kind + "\"");
}

Outcome cmd_eig(const ParsedSpec& spec, const std::string& kind, const Options& opts) {
    const SymmetricTensor t = expand(spec);
    Outcome out;
    std::vector<EigenPair> pairs;
    try {
        if (kind == "h") {
            if (t.dim() == 2) {
                pairs = h_eigen_all_dim2(t);
                out.verdicts["method"] = "dim2_exhaustive";
                out.verdicts["exhaustive"] = true;
            } else {
                pairs.push_back(opts.tol ? h_eigen_nqz(t, *opts.tol) : h_eigen_nqz(t));
                out.verdicts["method"] = "nqz_largest";
                out.verdicts["exhaustive"] = false;
            }
        } else if (kind == "z") {
            SshopmOptions so;
            so.seed = opts.seed;
            if (opts.tol) so.tol = *opts.tol;
            std::vector<EigenPair> found;
            std::optional<convergence_error> failure;
            for (bool minimize : {false, true}) {
                so.minimize = minimize;
                try {
                    for (auto& p : z_eigen_sshopm(t, so)) {
                        const bool dup = std::any_of(found.begin(), found.end(), [&](const EigenPair& q) {
                            double gap_p = 0.0;
                            double gap_m = 0.0;
                            for (std::size_t i = 0; i < p.x.size(); ++i) {
                                gap_p = std::max(gap_p, std::abs(p.x[i] - q.x[i]));
                                gap_m = std::max(gap_m, std::abs(p.x[i] + q.x[i]));
                            }
                            return std::abs(p.lambda - q.lambda) <= 1e-6 && std::min(gap_p, gap_m) <= 1e-4;
                        });
                        if (!dup) found.push_back(std::move(p));
                    }
                } catch (const convergence_error& e) {
                    failure = e;
                }
            }
            if (found.empty() && failure) throw *failure;
            pairs = std::move(found);
            out.verdicts["method"] = "sshopm";
            out.verdicts["exhaustive"] = false;
        } else {
            throw input_error("unknown eigen kind \"" + kind + "\" (expected h or z)");
        }
    } catch (const convergence_error& e) {
        out.exit_code = kExitFails;
        out.verdicts["converged"] = false;
        out.verdicts["bracket"] = {e.lower(), e.upper()};
        out.summary = std::string("eig: ") + e.what();
        return out;
    }
    pairs = descending(std::move(pairs));
    out.verdicts["converged"] = true;
    out.verdicts["count"] = pairs.size();
    out.artifacts["eigenpairs"] = pairs_json(pairs);
    std::ostringstream os;
    os << "eig " << kind << ": " << pairs.size() << " pair(s)";
    if (!pairs.empty()) os << ", lambda in [" << pairs.back().lambda << ", " << pairs.front().lambda << "]";
    out.summary = os.str();
    return out;
}

Outcome cmd_plane(const ParsedSpec& spec) {
    const auto h = as_hankel(spec);
    if (!h) throw unsupported_query_error("plane needs a hankel, cauchy_hankel or vdec spec");
    const PlaneForm form = hankel::plane_form(*h);
    Outcome out;
    json entries = json::array();
    json exact = json::array();
    bool all_exact = true;
    for (int k = 0; k <= form.degree; ++k) {
        entries.push_back(form.plane_entry(k));
        const auto b = dyadic(form.coeffs[k]);
        if (b && b->den == 1) {
            exact.push_back((*b * Fraction(1, static_cast<long long>(form.binomials[k]))).str());
        } else {
            all_exact = false;
            exact.push_back(nullptr);
        }
    }
    json plane = {{"degree", form.degree},
                  {"coeffs", form.coeffs},
                  {"binomials", form.binomials},
                  {"entries", entries}};
    if (all_exact) plane["exact_entries"] = exact;
    out.artifacts["plane_form"] = plane;
    out.verdicts["degree"] = form.degree;
    out.summary = "plane: degree " + std::to_string(form.degree);
    return out;
}

Outcome cmd_worked_examples() {
    Outcome out;
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, const json& expected, const json& actual, bool ok) {
        checks.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
        all_ok = all_ok && ok;
    };

    struct Case {
        std::string name;
        std::vector<Fraction> v;
        std::vector<Fraction> x;
        Fraction form;
        std::vector<double> q;
    };
    const std::vector<Case> cases = {
        {"vpsd_not_psd",
         {1, -1, 1, 0, 0, 0, 0, 0, 0},
         {1, 1, -1},
         Fraction(-1),
         {1.0, -4.0, 10.0}},
        {"vpsd_not_copositive",
         {1, -1, Fraction(1, 2), 0, 0, 0, 0, 0, 0},
         {1, Fraction(1, 2), 0},
         Fraction(-1, 4),
         {1.0, -4.0, 5.0}},
    };
    for (const Case& c : cases) {
        std::vector<double> v;
        std::vector<double> x;
        for (const auto& f : c.v) v.push_back(f.value());
        for (const auto& f : c.x) x.push_back(f.value());
        const HankelSpec h = hankel::build(v, 4, 3);
        const SymmetricTensor t = hankel::dense(h);

        const Fraction exact = hankel_form_exact(c.v, 4, c.x);
        record(c.name + ".form_exact", c.form.str(), exact.str(), exact == c.form);
        const double value = tenstruct::apply(t, x);
        record(c.name + ".form", c.form.value(), value, std::abs(value - c.form.value()) <= 1e-12);

        const VpsdVerdict vp = hankel::is_vandermonde_psd(h);
        const std::vector<double> q(vp.polynomial.coeffs().begin(), vp.polynomial.coeffs().end());
        record(c.name + ".q_coeffs", c.q, q, q == c.q);
        record(c.name + ".vpsd", true, vp.vpsd, vp.vpsd);

        if (c.name == "vpsd_not_psd") {
            record(c.name + ".q_min", 0.6, vp.value, std::abs(vp.value - 0.6) <= 1e-10);
            record(c.name + ".q_argmin", 0.2, vp.mu, std::abs(vp.mu - 0.2) <= 1e-8);
            const PsdProbeVerdict p = psd_probe(t, 10000, 0);
            record(c.name + ".psd_witness", x, p.witness, p.violated && p.witness == x);
            record(c.name + ".psd_value", -1.0, p.value, p.violated && p.value == -1.0);
        } else {
            const CopositiveVerdict cv = copositive_probe(t, 10000, 0);
            record(c.name + ".copositive_witness", x, cv.witness, cv.violated && cv.witness == x);
            record(c.name + ".copositive_value", -0.25, cv.value,
                   cv.violated && std::abs(cv.value + 0.25) <= 1e-12);
            const PsdProbeVerdict p = psd_probe(t, 10000, 0);
            record(c.name + ".psd", false, !p.violated, p.violated);
        }
    }
    out.verdicts["all_match"] = all_ok;
    out.artifacts["checks"] = checks;
    out.exit_code = all_ok ? kExitHolds : kExitFails;
    if (all_ok) {
        out.summary = "worked examples: all " + std::to_string(checks.size()) + " checks match";
    } else {
        out.summary = "worked examples: mismatch in";
        for (const auto& ch : checks) {
            if (!ch["ok"].get<bool>()) out.summary += " " + ch["name"].get<std::string>();
        }
    }
    return out;
}

}  // namespace tenstruct::cli
