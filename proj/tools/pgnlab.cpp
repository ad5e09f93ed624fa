// Command-line front end: build and validate systems, plot their components,
// trace lattice trajectories, and run the body-identity checks.
//
// Exit codes: 0 success, 1 mathematical check failure, 2 input error,
// 3 resource abort.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "pgnlab/block.hpp"
#include "pgnlab/enumeration.hpp"
#include "pgnlab/gauge.hpp"
#include "pgnlab/growth_sequence.hpp"
#include "pgnlab/identities.hpp"
#include "pgnlab/minima.hpp"
#include "pgnlab/rational.hpp"
#include "pgnlab/serialization.hpp"
#include "pgnlab/system.hpp"
#include "pgnlab/system_checks.hpp"
#include "pgnlab/trajectory.hpp"

namespace {

using namespace pgnlab;

constexpr int kExitSuccess = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceAbort = 3;

// ---------------------------------------------------------------------------
// argument parsing helpers

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    auto value = parse_rational(text);
    if (!value) {
        throw std::invalid_argument(what + ": malformed rational '" + text +
                                    "'");
    }
    return *value;
}

std::vector<std::string> split_on_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    parts.push_back(current);
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text,
                                          const std::string& what) {
    std::vector<Rational> values;
    for (const auto& part : split_on_commas(text)) {
        values.push_back(parse_rational_arg(part, what));
    }
    return values;
}

// "m0..m1" with optional signs, m0 <= m1.
std::pair<long, long> parse_block_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("--blocks: expected 'm0..m1', got '" +
                                    text + "'");
    }
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    try {
        std::size_t used = 0;
        long lo = std::stol(lo_text, &used);
        if (used != lo_text.size()) throw std::invalid_argument("");
        long hi = std::stol(hi_text, &used);
        if (used != hi_text.size()) throw std::invalid_argument("");
        if (lo > hi) {
            throw std::invalid_argument("--blocks: need m0 <= m1 in '" + text +
                                        "'");
        }
        return {lo, hi};
    } catch (const std::invalid_argument& e) {
        if (e.what() && *e.what()) throw;
        throw std::invalid_argument("--blocks: expected integers in '" + text +
                                    "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("--blocks: value out of range in '" +
                                    text + "'");
    }
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::string gauge_list(const std::vector<GaugeValue>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].to_string();
    }
    return out + ")";
}

// Writes to the path, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw FileFormatError("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw FileFormatError("failed while writing '" + path + "'");
    }
}

void warn_failures(const std::vector<CheckLine>& checks) {
    for (const auto& check : checks) {
        if (!check.pass) {
            std::cerr << "check failed: " << check.name << " (observed "
                      << check.observed << ", bound " << check.bound << ")\n";
        }
    }
}

// ---------------------------------------------------------------------------
// config file: `key = value` lines, '#' comments, flags override

std::string trimmed(const std::string& text) {
    auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::pair<std::string, std::string>> load_config(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trimmed(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " +
                                        std::to_string(lineno) +
                                        ": expected 'key = value'");
        }
        std::string key = trimmed(line.substr(0, eq));
        std::string value = trimmed(line.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " +
                                        std::to_string(lineno) +
                                        ": empty key");
        }
        // last occurrence of a repeated key wins
        auto hit = std::find_if(entries.begin(), entries.end(),
                                [&](const auto& e) { return e.first == key; });
        if (hit != entries.end()) {
            hit->second = value;
        } else {
            entries.emplace_back(std::move(key), std::move(value));
        }
    }
    return entries;
}

// Strips --config from the raw arguments and appends `--key value` for every
// config entry whose flag is not already present, so explicit flags win.
std::vector<std::string> apply_config(std::vector<std::string> args) {
    std::string config_path;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 == args.size()) {
                throw std::invalid_argument("--config needs a file path");
            }
            config_path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (config_path.empty()) return rest;
    for (const auto& [key, value] : load_config(config_path)) {
        const std::string flag = "--" + key;
        const std::string prefix = flag + "=";
        bool present =
            std::any_of(rest.begin(), rest.end(), [&](const std::string& arg) {
                return arg == flag || arg.rfind(prefix, 0) == 0;
            });
        if (!present) {
            rest.push_back(flag);
            rest.push_back(value);
        }
    }
    return rest;
}

// ---------------------------------------------------------------------------
// sequence plumbing shared by build/asymptotics

struct SequenceArgs {
    std::string theta;
    std::string values;
    std::string blocks;
    long start = 0;
};

GrowthSequence make_sequence(const SequenceArgs& args) {
    if (!args.theta.empty() && !args.values.empty()) {
        throw std::invalid_argument("give either --theta or --values, not both");
    }
    if (!args.theta.empty()) {
        if (args.blocks.empty()) {
            throw std::invalid_argument("--theta requires --blocks m0..m1");
        }
        auto [m0, m1] = parse_block_range(args.blocks);
        return GrowthSequence::theta_form(
            parse_rational_arg(args.theta, "--theta"), m0, m1 + 2);
    }
    if (!args.values.empty()) {
        if (!args.blocks.empty()) {
            throw std::invalid_argument(
                "--values derives the block range itself; use --start, not "
                "--blocks");
        }
        return GrowthSequence::explicit_window(
            args.start, parse_rational_list(args.values, "--values"));
    }
    throw std::invalid_argument("provide --theta with --blocks, or --values");
}

GeneralizedSystem build_from_args(long n, long k, const SequenceArgs& args) {
    SystemParams params(static_cast<int>(n), static_cast<int>(k),
                        make_sequence(args));
    params.validate();
    BuildResult result = build_system(params);
    // default slopes, so the expansion is always present
    return std::move(*result.system);
}

// ---------------------------------------------------------------------------
// subcommands

struct BuildOpts {
    long n = 0;
    long k = 0;
    SequenceArgs seq;
    std::string out;
    std::string knots_out;
};

int cmd_build(const BuildOpts& o) {
    GeneralizedSystem system = build_from_args(o.n, o.k, o.seq);
    emit(o.out, system_to_json(system).dump(2) + "\n");
    if (!o.knots_out.empty()) {
        emit(o.knots_out, knots_csv(system));
    }
    return kExitSuccess;
}

struct ValidateOpts {
    std::string system;
    std::string report;
};

int cmd_validate(const ValidateOpts& o) {
    GeneralizedSystem system = read_system_file(o.system);
    AxiomReport report = validate_gsystem(system);
    emit(o.report, axiom_report_json(report).dump(2) + "\n");
    for (const auto& witness : report.witnesses) {
        std::cerr << witness.axiom << " fails at q = "
                  << rational_to_string(witness.q) << ": "
                  << witness.description << "\n";
    }
    return report.all_ok() ? kExitSuccess : kExitCheckFailed;
}

struct FigureOpts {
    std::string spec;
    std::string system;
    std::string out;
    std::string svg;
};

int cmd_figure(const FigureOpts& o) {
    if (o.spec.empty() == o.system.empty()) {
        throw std::invalid_argument(
            "provide exactly one of --spec a,b,c,alpha,beta,gamma or "
            "--system file");
    }
    std::string tsv, svg;
    if (!o.spec.empty()) {
        auto values = parse_rational_list(o.spec, "--spec");
        if (values.size() != 6) {
            throw std::invalid_argument(
                "--spec needs 6 rationals: a,b,c,alpha,beta,gamma");
        }
        BlockSpec spec{values[0], values[1], values[2],
                       values[3], values[4], values[5]};
        Block block = build_block(spec);
        tsv = figure_tsv(block);
        if (!o.svg.empty()) svg = figure_svg(block);
    } else {
        GeneralizedSystem system = read_system_file(o.system);
        tsv = figure_tsv(system);
        if (!o.svg.empty()) svg = figure_svg(system);
    }
    emit(o.out, tsv);
    if (!o.svg.empty()) emit(o.svg, svg);
    return kExitSuccess;
}

struct TraceOpts {
    std::string xi;
    std::string grid;
    std::string out;
    std::string report;
    std::string p3_slack = "1/20";
    std::string tail_fraction = "1/3";
    std::string defect_range_bound;  // optional float bounds
    std::string defect_slope_bound;
};

int cmd_trace(const TraceOpts& o) {
    TargetPoint xi(parse_rational_list(o.xi, "--xi"));
    auto grid = parse_rational_list(o.grid, "--grid");
    Rational slack = parse_rational_arg(o.p3_slack, "--p3-slack");
    Rational tail_fraction =
        parse_rational_arg(o.tail_fraction, "--tail-fraction");

    Trajectory trajectory =
        trace_trajectory(xi, grid, MinimaOptions::from_environment());

    std::string csv = trajectory_csv(trajectory);
    if (trajectory.partial) {
        csv += "# partial: " + trajectory.abort_reason + "\n";
    }

    std::vector<CheckLine> checks;
    nlohmann::json report = nlohmann::json::object();

    std::optional<PhiEstimates> phi;
    try {
        phi = phi_window_estimates(trajectory, tail_fraction);
    } catch (const std::domain_error& e) {
        checks.push_back({"phi_window", true,
                          std::string("skipped: ") + e.what(), ""});
    }
    if (phi) {
        const int dim = static_cast<int>(phi->under.size());
        for (int j = 1; j < dim; ++j) {
            Rational lhs = phi->under[j];
            Rational rhs = phi->over[j - 1] + slack;
            checks.push_back({"p3_under_" + std::to_string(j + 1) +
                                  "_le_over_" + std::to_string(j),
                              lhs <= rhs,
                              format_double(rational_to_double(lhs)),
                              format_double(rational_to_double(rhs))});
        }
        nlohmann::json under = nlohmann::json::array();
        nlohmann::json over = nlohmann::json::array();
        for (int j = 0; j < dim; ++j) {
            under.push_back(format_double(rational_to_double(phi->under[j])));
            over.push_back(format_double(rational_to_double(phi->over[j])));
        }
        report["phi"] = {
            {"under", std::move(under)},
            {"over", std::move(over)},
            {"window_lo", format_double(rational_to_double(phi->window_lo))},
            {"window_hi", format_double(rational_to_double(phi->window_hi))}};
    }

    const bool defect_bounds_given =
        !o.defect_range_bound.empty() || !o.defect_slope_bound.empty();
    std::optional<DefectReport> defect;
    try {
        defect = minkowski_defect_report(trajectory);
    } catch (const std::domain_error& e) {
        if (defect_bounds_given) {
            throw std::invalid_argument(std::string("defect bounds: ") +
                                        e.what());
        }
    }
    if (defect) {
        report["defect"] = {{"min", format_double(defect->min_defect)},
                            {"max", format_double(defect->max_defect)},
                            {"range", format_double(defect->range)},
                            {"slope", format_double(defect->slope)}};
        if (!o.defect_range_bound.empty()) {
            double bound = std::stod(o.defect_range_bound);
            checks.push_back({"defect_range", defect->range < bound,
                              format_double(defect->range),
                              format_double(bound)});
        }
        if (!o.defect_slope_bound.empty()) {
            double bound = std::stod(o.defect_slope_bound);
            double magnitude = std::fabs(defect->slope);
            checks.push_back({"defect_slope", magnitude < bound,
                              format_double(magnitude), format_double(bound)});
        }
    }

    nlohmann::json check_part = report_json(checks);
    report["checks"] = std::move(check_part["checks"]);
    report["pass"] = check_part["pass"];
    report["partial"] = trajectory.partial;
    if (trajectory.partial) report["abort_reason"] = trajectory.abort_reason;

    emit(o.out, csv);
    if (!o.report.empty()) {
        emit(o.report, report.dump(2) + "\n");
    } else if (!o.out.empty() && o.out != "-") {
        emit("", report.dump(2) + "\n");
    }
    warn_failures(checks);

    if (trajectory.partial) return kExitResourceAbort;
    return report["pass"].get<bool>() ? kExitSuccess : kExitCheckFailed;
}

struct CheckOpts {
    std::string mode = "all";
    std::string xi;
    std::string N;
    std::string M = "2";
    std::string report;
};

int cmd_check(const CheckOpts& o) {
    TargetPoint xi(parse_rational_list(o.xi, "--xi"));
    MinimaOptions options = MinimaOptions::from_environment();
    const bool want_mu = o.mode == "mu" || o.mode == "all";
    const bool want_duality = o.mode == "duality" || o.mode == "all";
    const bool want_scaling = o.mode == "scaling" || o.mode == "all";

    std::vector<CheckLine> checks;
    if (want_mu || want_duality) {
        if (o.N.empty()) {
            throw std::invalid_argument(
                "--N is required for the mu and duality checks");
        }
        Rational N = parse_rational_arg(o.N, "--N");
        auto root = exact_nth_root(N, xi.n());
        if (!root) {
            throw std::invalid_argument(
                "--N must be an exact n-th power of a rational (n = " +
                std::to_string(xi.n()) + ")");
        }
        if (want_mu) {
            auto rep = mu_equivalence_check(xi, N, *root, options);
            checks.push_back({"mu_equivalence", rep.pass, gauge_list(rep.mu),
                              gauge_list(rep.lambda)});
        }
        if (want_duality) {
            auto rep = duality_defect(xi, N, *root, options);
            const Rational lo2 = rep.lower_bound * rep.lower_bound;
            const Rational hi2 = rep.upper_bound * rep.upper_bound;
            const std::string bound = "[" + rational_to_string(lo2) + ", " +
                                      rational_to_string(hi2) + "] (squared)";
            for (std::size_t j = 0; j < rep.products_squared.size(); ++j) {
                const Rational& p2 = rep.products_squared[j];
                checks.push_back(
                    {"duality_product_" + std::to_string(j + 1),
                     lo2 <= p2 && p2 <= hi2, rational_to_string(p2), bound});
            }
        }
    }
    if (want_scaling) {
        Rational M = parse_rational_arg(o.M, "--M");
        auto rep = scaling_identity_check(xi, M, options);
        checks.push_back({"scaling_identity", rep.pass,
                          gauge_list(rep.lambda_c),
                          gauge_list(rep.lambda_kstar_back)});
    }

    nlohmann::json report = report_json(checks);
    emit(o.report, report.dump(2) + "\n");
    warn_failures(checks);
    return report["pass"].get<bool>() ? kExitSuccess : kExitCheckFailed;
}

struct AsymptoticsOpts {
    long n = 0;
    long k = 0;
    SequenceArgs seq;
    std::string report;
};

int cmd_asymptotics(const AsymptoticsOpts& o) {
    GeneralizedSystem system = build_from_args(o.n, o.k, o.seq);
    AsymptoticReport report = asymptotic_report(system);

    std::ostringstream out;
    out << "m\tA_ratio_max\tA_ratio_max_float\tC_ratio_min\tC_ratio_min_float"
        << "\n";
    for (const auto& row : report.rows) {
        out << row.m << "\t" << rational_to_string(row.max_a_ratio) << "\t"
            << format_double(rational_to_double(row.max_a_ratio)) << "\t"
            << rational_to_string(row.min_c_ratio) << "\t"
            << format_double(rational_to_double(row.min_c_ratio)) << "\n";
    }
    out << "# limsup_A_target\t" << rational_to_string(report.limsup_a_target)
        << "\n";
    out << "# liminf_C_target\t" << rational_to_string(report.liminf_c_target)
        << "\t" << format_double(rational_to_double(report.liminf_c_target))
        << "\n";
    if (report.limit_target) {
        out << "# limit_target\t"
            << rational_to_string(*report.limit_target) << "\n";
        out << "# matches_limit_target\t"
            << bool_text(report.matches_limit_target) << "\n";
    }
    out << "# tail_gap_A\t"
        << format_double(rational_to_double(report.tail_gap_a)) << "\n";
    out << "# tail_gap_C\t"
        << format_double(rational_to_double(report.tail_gap_c)) << "\n";
    std::cout << out.str();

    if (!o.report.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : report.rows) {
            rows.push_back({{"m", row.m},
                            {"A_ratio_max", rational_to_string(row.max_a_ratio)},
                            {"C_ratio_min", rational_to_string(row.min_c_ratio)}});
        }
        nlohmann::json data = {
            {"rows", std::move(rows)},
            {"limsup_A_target", rational_to_string(report.limsup_a_target)},
            {"liminf_C_target", rational_to_string(report.liminf_c_target)},
            {"tail_gap_A",
             format_double(rational_to_double(report.tail_gap_a))},
            {"tail_gap_C",
             format_double(rational_to_double(report.tail_gap_c))}};
        if (report.limit_target) {
            data["limit_target"] = rational_to_string(*report.limit_target);
            data["matches_limit_target"] = report.matches_limit_target;
        }
        emit(o.report, data.dump(2) + "\n");
    }
    return kExitSuccess;
}

struct SeparationOpts {
    std::string theta;
    std::string theta_prime;
    long n = 0;
    long k = 0;
    std::string blocks;
    std::string report;
};

int cmd_separation(const SeparationOpts& o) {
    auto [m0, m1] = parse_block_range(o.blocks);
    SeparationReport report = separation_check(
        parse_rational_arg(o.theta, "--theta"),
        parse_rational_arg(o.theta_prime, "--theta-prime"),
        static_cast<int>(o.n), static_cast<int>(o.k), m0, m1);

    std::ostringstream out;
    out << "m\tr_theta\tr_theta_prime\tt_theta\tscaling_ok\tlower_ok\t"
        << "upper_ok\tamplitude\tamplitude_ok\n";
    for (const auto& row : report.rows) {
        out << row.m << "\t" << rational_to_string(row.r_theta) << "\t"
            << rational_to_string(row.r_theta_prime) << "\t"
            << rational_to_string(row.t_theta) << "\t"
            << bool_text(row.scaling_ok) << "\t" << bool_text(row.lower_ok)
            << "\t" << bool_text(row.upper_ok) << "\t"
            << rational_to_string(row.amplitude) << "\t"
            << bool_text(row.amplitude_ok) << "\n";
    }
    if (report.sandwich_from) {
        out << "# sandwich_from\t" << *report.sandwich_from << "\n";
    } else {
        out << "# sandwich_from\tnone\n";
    }
    out << "# all_amplitudes_ok\t" << bool_text(report.all_amplitudes_ok)
        << "\n";
    std::cout << out.str();

    if (!o.report.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : report.rows) {
            rows.push_back({{"m", row.m},
                            {"r_theta", rational_to_string(row.r_theta)},
                            {"r_theta_prime",
                             rational_to_string(row.r_theta_prime)},
                            {"t_theta", rational_to_string(row.t_theta)},
                            {"scaling_ok", row.scaling_ok},
                            {"lower_ok", row.lower_ok},
                            {"upper_ok", row.upper_ok},
                            {"amplitude", rational_to_string(row.amplitude)},
                            {"amplitude_ok", row.amplitude_ok}});
        }
        nlohmann::json data = {{"rows", std::move(rows)},
                               {"all_amplitudes_ok", report.all_amplitudes_ok}};
        if (report.sandwich_from) {
            data["sandwich_from"] = *report.sandwich_from;
        }
        emit(o.report, data.dump(2) + "\n");
    }

    const bool pass = report.sandwich_from && *report.sandwich_from == m0 &&
                      report.all_amplitudes_ok;
    return pass ? kExitSuccess : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = apply_config(std::move(args));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    CLI::App app{"exact laboratory for piecewise-linear systems and "
                 "parametric lattice minima"};
    app.require_subcommand(1);

    BuildOpts build_opts;
    auto* build = app.add_subcommand(
        "build", "build a system from (n, k) and a growth sequence");
    build->add_option("--n", build_opts.n, "dimension parameter n >= 2")
        ->required();
    build->add_option("--k", build_opts.k, "index 2 <= k <= n")->required();
    build->add_option("--theta", build_opts.seq.theta,
                      "rational theta of the sequence theta * 2^(m^3)");
    build->add_option("--values", build_opts.seq.values,
                      "explicit sequence window as comma-separated rationals");
    build->add_option("--start", build_opts.seq.start,
                      "window start index for --values (default 0)");
    build->add_option("--blocks", build_opts.seq.blocks,
                      "block range m0..m1 (with --theta)");
    build->add_option("--out", build_opts.out,
                      "system JSON path (default stdout)");
    build->add_option("--knots-csv", build_opts.knots_out,
                      "also write the component knots as CSV");

    ValidateOpts validate_opts;
    auto* validate = app.add_subcommand(
        "validate", "re-run the axiom suite on a system file");
    validate->add_option("--system", validate_opts.system, "system JSON path")
        ->required();
    validate->add_option("--report", validate_opts.report,
                         "report JSON path (default stdout)");

    FigureOpts figure_opts;
    auto* figure = app.add_subcommand(
        "figure", "emit plot data for a block spec or a system file");
    figure->add_option("--spec", figure_opts.spec,
                       "block spec a,b,c,alpha,beta,gamma");
    figure->add_option("--system", figure_opts.system, "system JSON path");
    figure->add_option("--out", figure_opts.out,
                       "TSV plot data path (default stdout)");
    figure->add_option("--svg", figure_opts.svg,
                       "also write a self-contained SVG");

    TraceOpts trace_opts;
    auto* trace = app.add_subcommand(
        "trace", "exact minima of C_xi(Q) over a Q grid");
    trace->add_option("--xi", trace_opts.xi,
                      "target point as comma-separated rationals")
        ->required();
    trace->add_option("--grid", trace_opts.grid,
                      "strictly increasing Q values >= 1, comma-separated")
        ->required();
    trace->add_option("--out", trace_opts.out, "CSV path (default stdout)");
    trace->add_option("--report", trace_opts.report,
                      "report JSON path (default stdout when --out is a file)");
    trace->add_option("--p3-slack", trace_opts.p3_slack,
                      "slack for the neighbor-exponent checks (default 1/20)");
    trace->add_option("--tail-fraction", trace_opts.tail_fraction,
                      "fraction of rows in the estimate window (default 1/3)");
    trace->add_option("--defect-range-bound", trace_opts.defect_range_bound,
                      "fail when the defect range reaches this value");
    trace->add_option("--defect-slope-bound", trace_opts.defect_slope_bound,
                      "fail when |defect trend slope| reaches this value");

    CheckOpts check_opts;
    auto* check = app.add_subcommand(
        "check", "body identities: mu equivalence, duality, scaling");
    check
        ->add_option("--mode", check_opts.mode,
                     "mu, duality, scaling or all (default all)")
        ->check(CLI::IsMember({"mu", "duality", "scaling", "all"}));
    check->add_option("--xi", check_opts.xi,
                      "target point with first coordinate 1")
        ->required();
    check->add_option("--N", check_opts.N,
                      "box parameter, an exact n-th power of a rational");
    check->add_option("--M", check_opts.M,
                      "scaling factor M >= 1 (default 2)");
    check->add_option("--report", check_opts.report,
                      "report JSON path (default stdout)");

    AsymptoticsOpts asym_opts;
    auto* asymptotics = app.add_subcommand(
        "asymptotics", "per-block extremal ratios and their limit targets");
    asymptotics->add_option("--n", asym_opts.n, "dimension parameter n >= 2")
        ->required();
    asymptotics->add_option("--k", asym_opts.k, "index 2 <= k <= n")
        ->required();
    asymptotics->add_option("--theta", asym_opts.seq.theta,
                            "rational theta of the sequence theta * 2^(m^3)");
    asymptotics->add_option(
        "--values", asym_opts.seq.values,
        "explicit sequence window as comma-separated rationals");
    asymptotics->add_option("--start", asym_opts.seq.start,
                            "window start index for --values (default 0)");
    asymptotics->add_option("--blocks", asym_opts.seq.blocks,
                            "block range m0..m1 (with --theta)");
    asymptotics->add_option("--report", asym_opts.report,
                            "also write a report JSON");

    SeparationOpts sep_opts;
    auto* separation = app.add_subcommand(
        "separation", "compare block breakpoints of two theta sequences");
    separation->add_option("--theta", sep_opts.theta, "smaller theta")
        ->required();
    separation->add_option("--theta-prime", sep_opts.theta_prime,
                           "larger theta")
        ->required();
    separation->add_option("--n", sep_opts.n, "dimension parameter n >= 2")
        ->required();
    separation->add_option("--k", sep_opts.k, "index 2 <= k <= n")->required();
    separation->add_option("--blocks", sep_opts.blocks, "block range m0..m1")
        ->required();
    separation->add_option("--report", sep_opts.report,
                           "also write a report JSON");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (app.got_subcommand(build)) return cmd_build(build_opts);
        if (app.got_subcommand(validate)) return cmd_validate(validate_opts);
        if (app.got_subcommand(figure)) return cmd_figure(figure_opts);
        if (app.got_subcommand(trace)) return cmd_trace(trace_opts);
        if (app.got_subcommand(check)) return cmd_check(check_opts);
        if (app.got_subcommand(asymptotics))
            return cmd_asymptotics(asym_opts);
        if (app.got_subcommand(separation)) return cmd_separation(sep_opts);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource abort: " << e.what() << "\n";
        return kExitResourceAbort;
    } catch (const FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
