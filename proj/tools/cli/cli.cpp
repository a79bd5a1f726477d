#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <tenstruct/error.hpp>

#include "cli/commands.hpp"
#include "cli/spec_io.hpp"

namespace tenstruct::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr int kDefaultMaxDim = 16;

int max_dim_from_env() {
    const char* raw = std::getenv("TENSTRUCT_MAX_DIM");
    if (!raw || !*raw) return kDefaultMaxDim;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1) throw input_error(std::string("TENSTRUCT_MAX_DIM must be a positive integer, got ") + raw);
    return static_cast<int>(v);
}

json load_spec_json(const std::string& inline_spec, const std::string& file) {
    if (!inline_spec.empty() && !file.empty()) throw input_error("give either --spec or --file, not both");
    std::string text = inline_spec;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw input_error("cannot open spec file \"" + file + "\"");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw input_error("this command needs a spec (--spec '<json>' or --file path)");
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("spec is not valid JSON: ") + e.what());
    }
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"tenstruct: structured symmetric tensors (Cauchy, Hankel, Cauchy-Hankel)", "tenstruct"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string inline_spec;
    std::string file;
    Options opts;
    double tol = 0.0;
    app.add_option("--spec", inline_spec, "Inline spec JSON");
    app.add_option("--file", file, "Path to a spec JSON file");
    app.add_option("--seed", opts.seed, "Seed for randomized probes")->capture_default_str();
    app.add_option("--trials", opts.trials, "Random trials / pairs")->capture_default_str()->check(CLI::NonNegativeNumber);
    auto* tol_opt = app.add_option("--tol", tol, "Solver tolerance");
    app.add_option("--k", opts.k, "Riemann level")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--mode", opts.mode, "Vandermonde mode")->check(CLI::IsMember({"minimal", "fixed"}))->capture_default_str();
    app.add_option("--nodes", opts.nodes, "Comma-separated fixed nodes");

    std::string property;
    std::string kind;
    auto* check = app.add_subcommand("check", "Decide or probe a property");
    check->add_option("property", property, "psd | pd | cp | vpsd | copositive-probe | monotone")
        ->required()
        ->check(CLI::IsMember({"psd", "pd", "cp", "vpsd", "copositive-probe", "monotone"}));
    auto* decompose = app.add_subcommand("decompose", "Vandermonde or Riemann rank-one decomposition");
    decompose->add_option("kind", kind, "vandermonde | riemann")
        ->required()
        ->check(CLI::IsMember({"vandermonde", "riemann"}));
    auto* eig = app.add_subcommand("eig", "H- or Z-eigenpairs");
    eig->add_option("kind", kind, "h | z")->required()->check(CLI::IsMember({"h", "z"}));
    auto* plane = app.add_subcommand("plane", "Associated plane form of a Hankel tensor");
    auto* examples = app.add_subcommand("paper-examples", "Reproduce the two built-in worked examples");
    for (auto* sub : {check, decompose, eig, plane, examples}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        const json report = {{"command", nullptr},
                             {"error", {{"type", "usage"}, {"message", e.what()}}},
                             {"exit_code", kExitInput}};
        out << report.dump(2) << "\n";
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    if (*tol_opt) opts.tol = tol;

    std::string command;
    for (auto* sub : app.get_subcommands()) command = sub->get_name();
    if (command == "check") command += " " + property;
    if (command == "decompose" || command == "eig") command += " " + kind;

    json report = {{"command", command}};
    const auto start = Clock::now();
    try {
        Outcome outcome;
        double parse_ms = 0.0;
        if (*examples) {
            report["input_digest"] = fnv1a_hex(json({{"command", command}}).dump());
            outcome = cmd_worked_examples();
        } else {
            const ParsedSpec spec = parse_spec(load_spec_json(inline_spec, file), max_dim_from_env());
            parse_ms = ms_since(start);
            json flags = {{"seed", opts.seed}, {"trials", opts.trials}, {"k", opts.k}, {"mode", opts.mode},
                          {"nodes", opts.nodes}};
            if (opts.tol) flags["tol"] = *opts.tol;
            report["input_digest"] =
                fnv1a_hex(json({{"command", command}, {"spec", spec.source}, {"flags", flags}}).dump());
            if (*check) {
                outcome = cmd_check(spec, property, opts);
            } else if (*decompose) {
                outcome = cmd_decompose(spec, kind, opts);
            } else if (*eig) {
                outcome = cmd_eig(spec, kind, opts);
            } else {
                outcome = cmd_plane(spec);
            }
        }
        report["verdicts"] = outcome.verdicts;
        if (!outcome.artifacts.empty()) report["artifacts"] = outcome.artifacts;
        report["exit_code"] = outcome.exit_code;
        report["timings"] = {{"parse_ms", parse_ms}, {"total_ms", ms_since(start)}};
        out << report.dump(2) << "\n";
        err << outcome.summary << "\n";
        return outcome.exit_code;
    } catch (const tenstruct::input_error& e) {
        report["error"] = {{"type", "input_error"}, {"message", e.what()}};
    } catch (const tenstruct::unsupported_query_error& e) {
        report["error"] = {{"type", "unsupported_query"}, {"message", e.what()}};
    } catch (const nlohmann::json::exception& e) {
        report["error"] = {{"type", "input_error"}, {"message", e.what()}};
    }
    report["exit_code"] = kExitInput;
    out << report.dump(2) << "\n";
    err << "error: " << report["error"]["message"].get<std::string>() << "\n";
    return kExitInput;
}

}  // namespace tenstruct::cli
