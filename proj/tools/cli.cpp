#include "cli.hpp"

#include "purex/analysis.hpp"
#include "purex/protocol.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>

namespace purex::cli {

namespace {

using std::numbers::pi;

std::string format_param(double v) { return format_value(v); }

double rounded(double v) {
    // Reparse through the 12-digit representation so CSV and JSON agree.
    return std::strtod(format_value(v).c_str(), nullptr);
}

void add_param(OutputRecord& rec, const std::string& key, double v) {
    rec.parameters.emplace_back(key, format_param(v));
}

void add_param(OutputRecord& rec, const std::string& key, const std::string& v) {
    rec.parameters.emplace_back(key, v);
}

struct CommonOpts {
    std::string format = "csv";
    std::string output;
    bool degrees = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", opts.output, "Write the table to a file instead of stdout");
}

void add_degrees(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--degrees", opts.degrees, "Interpret angle arguments as degrees");
}

double to_rad(const CommonOpts& opts, double angle) {
    return opts.degrees ? angle * pi / 180.0 : angle;
}

int emit(const OutputRecord& rec, const CommonOpts& opts, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!opts.output.empty()) {
        file.open(opts.output);
        if (!file) {
            err << "error: cannot open output file '" << opts.output << "'\n";
            return kExitArgError;
        }
        sink = &file;
    }
    if (opts.format == "json")
        write_json(rec, *sink);
    else
        write_csv(rec, *sink);
    return kExitOk;
}

ProtocolKind parse_protocol_kind(const std::string& name) {
    if (name == "exchange" || name == "exchange-optimal") return ProtocolKind::Exchange;
    if (name == "xy") return ProtocolKind::XY;
    if (name == "bbpssw") return ProtocolKind::BBPSSW;
    return ProtocolKind::DejmpsExchange;  // "dejmps"
}

const char* stability_name(Stability s) {
    return s == Stability::Attractive ? "attractive" : "repulsive";
}

// ---- subcommand bodies ----

struct MapEvalArgs {
    CommonOpts common;
    std::string kind = "heisenberg";
    double f = 0.7;
    double alpha = pi / 2.0;
    double beta = -pi / 2.0;
};

int cmd_map_eval(const MapEvalArgs& args, std::ostream& out, std::ostream& err) {
    double alpha = to_rad(args.common, args.alpha);
    double beta = to_rad(args.common, args.beta);
    double closed = 0.0;
    ExchangeKind sim_kind = ExchangeKind::Heisenberg;
    if (args.kind == "heisenberg") {
        closed = fidelity_map_heisenberg(args.f, alpha, beta);
    } else if (args.kind == "xy") {
        closed = fidelity_map_xy(args.f, alpha, beta);
        sim_kind = ExchangeKind::XY;
    } else if (args.kind == "optimal") {
        alpha = pi / 2.0;
        beta = -pi / 2.0;
        closed = fidelity_map_optimal(args.f);
    } else {  // inverse
        beta = -alpha;
        closed = fidelity_map_inverse_case(args.f, alpha);
    }
    RoundOutcome sim = round_exchange(werner(args.f), werner(args.f), alpha, beta, sim_kind);

    OutputRecord rec;
    rec.command = "map-eval";
    add_param(rec, "kind", args.kind);
    add_param(rec, "f", args.f);
    add_param(rec, "alpha", alpha);
    add_param(rec, "beta", beta);
    rec.columns = {"f", "alpha", "beta", "f_prime_closed", "f_prime_simulated",
                   "abs_diff", "success_prob"};
    rec.rows.push_back({args.f, alpha, beta, closed, sim.out_fidelity,
                        std::abs(closed - sim.out_fidelity), sim.success_prob});
    return emit(rec, args.common, out, err);
}

struct SweepArgs {
    CommonOpts common;
    std::vector<double> betas;
    int alpha_steps = 64;
};

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<double> betas;
    betas.reserve(args.betas.size());
    for (double b : args.betas) betas.push_back(to_rad(args.common, b));

    OutputRecord rec;
    rec.command = "sweep";
    add_param(rec, "alpha_steps", static_cast<double>(args.alpha_steps));
    rec.columns = {"alpha", "beta", "f_min", "f_max", "residual"};
    for (const SweepRow& row : fmin_fmax_sweep(betas, args.alpha_steps)) {
        std::vector<Cell> cells{row.alpha, row.beta, {}, {}, {}};
        if (row.f_min) cells[2] = *row.f_min;
        if (row.f_max) cells[3] = *row.f_max;
        if (row.residual) cells[4] = *row.residual;
        rec.rows.push_back(std::move(cells));
    }
    return emit(rec, args.common, out, err);
}

struct IterateArgs {
    CommonOpts common;
    std::string kind = "exchange-optimal";
    std::string mode = "werner";
    double f0 = 0.7;
    double target = 0.99;
    int max_steps = 100;
    double alpha = pi / 2.0;
    double beta = -pi / 2.0;
};

int cmd_iterate(const IterateArgs& args, std::ostream& out, std::ostream& err) {
    ProtocolConfig config;
    config.kind = parse_protocol_kind(args.kind);
    config.alpha = args.kind == "exchange-optimal" ? pi / 2.0 : to_rad(args.common, args.alpha);
    config.beta = args.kind == "exchange-optimal" ? -pi / 2.0 : to_rad(args.common, args.beta);
    config.mode = args.mode == "belldiag" ? RetwirlMode::BellDiagonalTracking
                                          : RetwirlMode::WernerEachRound;

    IterationTrace trace = iterate(config, args.f0, args.target, args.max_steps);

    OutputRecord rec;
    rec.command = "iterate";
    add_param(rec, "kind", args.kind);
    add_param(rec, "mode", args.mode);
    add_param(rec, "f0", args.f0);
    add_param(rec, "target", args.target);
    add_param(rec, "alpha", config.alpha);
    add_param(rec, "beta", config.beta);
    rec.columns = {"step", "fidelity", "success_prob"};
    for (int i = 0; i < trace.steps; ++i) {
        rec.rows.push_back({static_cast<double>(i + 1), trace.fidelities[static_cast<size_t>(i)],
                            trace.success_probs[static_cast<size_t>(i)]});
    }
    const int status = emit(rec, args.common, out, err);
    if (status != kExitOk) return status;
    if (trace.status == IterationStatus::NonPurifiable) {
        err << "error: initial fidelity " << format_value(args.f0)
            << " is not purifiable with this configuration\n";
        return kExitNonPurifiable;
    }
    if (trace.status == IterationStatus::MaxStepsExceeded) {
        err << "error: target not reached within " << args.max_steps << " steps\n";
        return kExitNonPurifiable;
    }
    return kExitOk;
}

struct RobustnessArgs {
    CommonOpts common;
    double j = 1.0;
    std::vector<double> delta_taus;
    double tau_max = 0.2;
    int tau_steps = 21;
};

int cmd_robustness(const RobustnessArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<double> taus = args.delta_taus;
    if (taus.empty()) {
        for (int i = 0; i < args.tau_steps; ++i)
            taus.push_back(args.tau_max * i / (args.tau_steps - 1));
    }
    OutputRecord rec;
    rec.command = "robustness";
    add_param(rec, "j_uev", args.j);
    rec.columns = {"delta_tau_ns", "delta_alpha_rad", "f_max"};
    for (double tau : taus) {
        const double delta = pulse_deviation_to_angle(args.j, tau);
        RobustnessResult res = robustness(delta, args.j);
        std::vector<Cell> cells{tau, delta, {}};
        if (res.f_max_achievable) cells[2] = *res.f_max_achievable;
        rec.rows.push_back(std::move(cells));
    }
    return emit(rec, args.common, out, err);
}

struct CompareArgs {
    CommonOpts common;
    double f_min = 0.5;
    double f_max = 1.0;
    int steps = 51;
    std::vector<double> alphas;
};

int cmd_compare(const CompareArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<double> alphas;
    alphas.reserve(args.alphas.size());
    for (double a : args.alphas) alphas.push_back(to_rad(args.common, a));

    OutputRecord rec;
    rec.command = "compare";
    add_param(rec, "f_min", args.f_min);
    add_param(rec, "f_max", args.f_max);
    rec.columns = {"f", "f_prime_optimal"};
    for (double a : alphas) rec.columns.push_back("f_prime_alpha_" + format_value(a));
    rec.columns.push_back("f_prime_bbpssw");

    for (int i = 0; i < args.steps; ++i) {
        const double f = args.steps == 1
                             ? args.f_min
                             : args.f_min + (args.f_max - args.f_min) * i / (args.steps - 1);
        std::vector<Cell> cells{f, fidelity_map_optimal(f)};
        for (double a : alphas) cells.emplace_back(fidelity_map_inverse_case(f, a));
        cells.emplace_back(round_bbpssw(werner(f), werner(f)).out_fidelity);
        rec.rows.push_back(std::move(cells));
    }
    return emit(rec, args.common, out, err);
}

struct FixedPointsArgs {
    CommonOpts common;
    std::string kind = "heisenberg";
    double alpha = pi / 2.0;
    double beta = -pi / 2.0;
};

int cmd_fixed_points(const FixedPointsArgs& args, std::ostream& out, std::ostream& err) {
    const ExchangeKind kind =
        args.kind == "xy" ? ExchangeKind::XY : ExchangeKind::Heisenberg;
    const double alpha = to_rad(args.common, args.alpha);
    const double beta = to_rad(args.common, args.beta);
    FixedPointSet set = fixed_points(kind, alpha, beta);

    OutputRecord rec;
    rec.command = "fixed-points";
    add_param(rec, "kind", args.kind);
    add_param(rec, "alpha", alpha);
    add_param(rec, "beta", beta);
    rec.columns = {"point", "value", "stability", "residual"};
    auto emit_point = [&](const char* name, const FixedPoint& p) {
        // Roots of the cleared-denominator cubic can land outside [0, 1],
        // where the fidelity map is undefined; leave the residual blank there.
        Cell residual;
        if (p.value >= 0.0 && p.value <= 1.0)
            residual = std::abs(fidelity_map(kind, p.value, alpha, beta) - p.value);
        rec.rows.push_back({std::string(name), p.value, std::string(stability_name(p.stability)),
                            residual});
    };
    emit_point("f_c", set.f_c);
    if (set.f_min) emit_point("f_min", *set.f_min);
    if (set.f_max) emit_point("f_max", *set.f_max);
    return emit(rec, args.common, out, err);
}

}  // namespace

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(const OutputRecord& rec, std::ostream& out) {
    out << "# schema_version," << rec.schema_version << "\n";
    out << "# command," << rec.command << "\n";
    for (const auto& [key, value] : rec.parameters) out << "# " << key << "," << value << "\n";
    for (size_t i = 0; i < rec.columns.size(); ++i)
        out << rec.columns[i] << (i + 1 < rec.columns.size() ? "," : "\n");
    for (const auto& row : rec.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (const double* d = std::get_if<double>(&row[i]))
                out << format_value(*d);
            else if (const std::string* s = std::get_if<std::string>(&row[i]))
                out << *s;
            out << (i + 1 < row.size() ? "," : "\n");
        }
    }
}

void write_json(const OutputRecord& rec, std::ostream& out) {
    nlohmann::json j;
    j["schema_version"] = rec.schema_version;
    j["command"] = rec.command;
    j["parameters"] = nlohmann::json::object();
    for (const auto& [key, value] : rec.parameters) j["parameters"][key] = value;
    j["columns"] = rec.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rec.rows) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const auto& cell : row) {
            if (const double* d = std::get_if<double>(&cell))
                jrow.push_back(rounded(*d));
            else if (const std::string* s = std::get_if<std::string>(&cell))
                jrow.push_back(*s);
            else
                jrow.push_back(nullptr);
        }
        j["rows"].push_back(std::move(jrow));
    }
    out << j.dump(2) << "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact simulator and analysis tool for exchange-driven entanglement purification"};
    app.require_subcommand(1);

    MapEvalArgs me;
    auto* map_eval = app.add_subcommand("map-eval", "Evaluate one round: closed form vs simulation");
    map_eval->add_option("--kind", me.kind)->check(CLI::IsMember({"heisenberg", "xy", "optimal", "inverse"}));
    map_eval->add_option("--f", me.f, "Initial fidelity")->check(CLI::Range(0.0, 1.0));
    map_eval->add_option("--alpha", me.alpha, "Alice's pulse area");
    map_eval->add_option("--beta", me.beta, "Bob's pulse area");
    add_degrees(map_eval, me.common);
    add_common(map_eval, me.common);

    SweepArgs sw;
    auto* sweep = app.add_subcommand("sweep", "F_min/F_max over an alpha grid for given betas");
    sweep->add_option("--beta", sw.betas, "Pulse areas beta, one curve each")->required();
    sweep->add_option("--alpha-steps", sw.alpha_steps)->check(CLI::Range(2, 100000));
    add_degrees(sweep, sw.common);
    add_common(sweep, sw.common);

    IterateArgs it;
    auto* iter = app.add_subcommand("iterate", "Multi-round purification trace");
    iter->add_option("--kind", it.kind)
        ->check(CLI::IsMember({"exchange-optimal", "exchange", "xy", "bbpssw", "dejmps"}));
    iter->add_option("--mode", it.mode)->check(CLI::IsMember({"werner", "belldiag"}));
    iter->add_option("--f0", it.f0, "Initial fidelity")->required();
    iter->add_option("--target", it.target)->check(CLI::Range(0.0, 1.0));
    iter->add_option("--max-steps", it.max_steps)->check(CLI::Range(1, 100000));
    iter->add_option("--alpha", it.alpha);
    iter->add_option("--beta", it.beta);
    add_degrees(iter, it.common);
    add_common(iter, it.common);

    RobustnessArgs rb;
    auto* rob = app.add_subcommand("robustness", "Attainable F_max vs pulse-timing error");
    rob->add_option("--j", rb.j, "Exchange energy in ueV")->check(CLI::PositiveNumber);
    rob->add_option("--delta-tau", rb.delta_taus, "Timing errors in ns");
    rob->add_option("--tau-max", rb.tau_max)->check(CLI::NonNegativeNumber);
    rob->add_option("--tau-steps", rb.tau_steps)->check(CLI::Range(2, 100000));
    add_common(rob, rb.common);

    CompareArgs cp;
    auto* cmp = app.add_subcommand("compare", "Single-round gain of all protocols over an F grid");
    cmp->add_option("--f-min", cp.f_min)->check(CLI::Range(0.0, 1.0));
    cmp->add_option("--f-max", cp.f_max)->check(CLI::Range(0.0, 1.0));
    cmp->add_option("--steps", cp.steps)->check(CLI::Range(1, 100000));
    cmp->add_option("--alpha", cp.alphas, "Extra beta = -alpha curves");
    add_degrees(cmp, cp.common);
    add_common(cmp, cp.common);

    FixedPointsArgs fp;
    auto* fpt = app.add_subcommand("fixed-points", "Fixed points and stability of a round map");
    fpt->add_option("--kind", fp.kind)->check(CLI::IsMember({"heisenberg", "xy"}));
    fpt->add_option("--alpha", fp.alpha);
    fpt->add_option("--beta", fp.beta);
    add_degrees(fpt, fp.common);
    add_common(fpt, fp.common);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitArgError;
    }

    try {
        if (map_eval->parsed()) return cmd_map_eval(me, out, err);
        if (sweep->parsed()) return cmd_sweep(sw, out, err);
        if (iter->parsed()) return cmd_iterate(it, out, err);
        if (rob->parsed()) return cmd_robustness(rb, out, err);
        if (cmp->parsed()) return cmd_compare(cp, out, err);
        if (fpt->parsed()) return cmd_fixed_points(fp, out, err);
    } catch (const degenerate_map& e) {
        err << "error: " << e.what() << "\n";
        return kExitNonPurifiable;
    } catch (const non_purifiable& e) {
        err << "error: " << e.what() << "\n";
        return kExitNonPurifiable;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitArgError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitArgError;
    }
    return kExitArgError;
}

}  // namespace purex::cli
