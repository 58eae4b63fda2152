#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "tsbs/config.hpp"
#include "tsbs/convergence.hpp"
#include "tsbs/io.hpp"
#include "tsbs/market.hpp"
#include "tsbs/pricers.hpp"
#include "tsbs/solver.hpp"
#include "tsbs/stability.hpp"
#include "tsbs/subordinator.hpp"

namespace {

using nlohmann::json;
using namespace tsbs;

// Exit codes: 0 success, 1 parameter error, 2 gate violation (enforced
// mode), 3 numerical failure.
struct GateViolation : std::runtime_error {
    ConditionReport report;
    explicit GateViolation(ConditionReport r)
        : std::runtime_error("stability gate violated"), report(std::move(r)) {}
};

json market_json(const MarketParams& m) {
    return json{{"spot", m.spot},         {"strike", m.strike}, {"maturity", m.maturity},
                {"rate", m.rate},         {"dividend", m.dividend}, {"sigma", m.sigma}};
}

json subdiffusion_json(const SubdiffusionParams& s) {
    return json{{"alpha", s.alpha}, {"lambda", s.lambda}};
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (!cfg.out_path.empty()) write_text_file(cfg.out_path, text);
}

// Bulk artifacts go to stdout only when no output file was requested.
void emit_bulk(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(cfg.out_path, text);
        std::cout << "wrote " << cfg.out_path << "\n";
    }
}

/// The gate used by enforcement and by the `stability` command when no
/// explicit condition is requested: the theta = 0 convergence condition for
/// implicit runs, the weighted inequality otherwise.
ConditionReport evaluate_gate(const RunConfig& cfg, std::optional<StabilityCondition> which) {
    const double dt = cfg.grid.dt(cfg.market.maturity);
    const StabilityCondition condition =
        which.value_or(cfg.grid.theta == 0.0 ? StabilityCondition::convergence_lemma
                                             : StabilityCondition::weighted_22);
    if (condition == StabilityCondition::weighted_22) {
        const MemoryWeights w = memory_weights(cfg.subdiffusion.alpha, cfg.grid.n_time, dt);
        return check_weighted_stability(pde_coefficients(cfg.market), cfg.subdiffusion, cfg.grid, w,
                                        cfg.stability_grouping);
    }
    return check_implicit_condition(cfg.subdiffusion, cfg.market.rate, dt, cfg.grid.n_time,
                                    condition);
}

void enforce_or_warn(const RunConfig& cfg) {
    if (cfg.method != "fd") return;
    const ConditionReport gate = evaluate_gate(cfg, std::nullopt);
    if (gate.satisfied) return;
    if (cfg.enforce_gate) throw GateViolation(gate);
    std::cerr << "warning: " << condition_name(gate.condition)
              << " violated (margin " << format_double(gate.margin)
              << "); the solve proceeds but may not converge\n";
}

int cmd_price(const RunConfig& cfg, const std::string& surface_out) {
    json record{{"method", cfg.method},
                {"kind", cfg.kind == OptionKind::call ? "call" : "put"},
                {"market", market_json(cfg.market)},
                {"subdiffusion", subdiffusion_json(cfg.subdiffusion)}};
    double price = 0.0;
    if (cfg.method == "bs") {
        price = bs_price(cfg.market, cfg.kind, cfg.market.maturity);
    } else if (cfg.method == "fd") {
        enforce_or_warn(cfg);
        const GridSpec grid = align_to_spot(cfg.grid, cfg.market.spot);
        SolverOptions options = cfg.solver_options();
        options.kind = OptionKind::call;
        const SolutionSurface s = solve(cfg.market, cfg.subdiffusion, grid, options);
        if (!s.weighted_diagonally_dominant)
            std::cerr << "warning: weighted operator lost diagonal dominance at alpha="
                      << format_double(cfg.subdiffusion.alpha) << " lambda="
                      << format_double(cfg.subdiffusion.lambda) << " theta="
                      << format_double(grid.theta) << " dx=" << format_double(grid.dx())
                      << "; check the stability gate\n";
        if (!surface_out.empty()) write_text_file(surface_out, surface_csv(s));
        price = price_at_spot(s, cfg.market.spot);
        if (cfg.kind == OptionKind::put)
            price -= cfg.market.spot * std::exp(-cfg.market.dividend * cfg.market.maturity) -
                     cfg.market.strike * std::exp(-cfg.market.rate * cfg.market.maturity);
        record["grid"] = json{{"x_min", grid.x_min},
                              {"x_max", grid.x_max},
                              {"n_space", grid.n_space},
                              {"n_time", grid.n_time},
                              {"theta", grid.theta}};
    } else if (cfg.method == "mc" || cfg.method == "crr") {
        const PricerEstimate e =
            cfg.method == "mc"
                ? mc_price(cfg.market, cfg.subdiffusion, cfg.kind, cfg.repetitions, cfg.points,
                           cfg.seed)
                : crr_price(cfg.market, cfg.subdiffusion, cfg.kind, cfg.repetitions, cfg.points,
                            cfg.seed);
        price = e.mean;
        record["estimate"] = estimate_json(e);
        std::cout << "price " << format_double(e.mean) << " stderr " << format_double(e.stderr_)
                  << "\n";
        record["price"] = price;
        emit(cfg, record.dump(2) + "\n");
        return 0;
    } else {
        throw std::invalid_argument("price: unknown method '" + cfg.method + "'");
    }
    record["price"] = price;
    std::cout << "price " << format_double(price) << "\n";
    emit(cfg, record.dump(2) + "\n");
    return 0;
}

int cmd_stability(const RunConfig& cfg, const std::string& condition_flag) {
    std::optional<StabilityCondition> which;
    if (condition_flag == "weighted-22") which = StabilityCondition::weighted_22;
    else if (condition_flag == "implicit-oby1") which = StabilityCondition::implicit_oby1;
    else if (condition_flag == "convergence-lemma") which = StabilityCondition::convergence_lemma;
    else if (!condition_flag.empty() && condition_flag != "auto")
        throw std::invalid_argument("stability: unknown condition '" + condition_flag + "'");
    const ConditionReport r = evaluate_gate(cfg, which);
    const std::string text = report_json(r).dump(2) + "\n";
    std::cout << text;
    emit(cfg, text);
    return r.satisfied ? 0 : 2;
}

int cmd_rescale(const RunConfig& cfg) {
    const RescaleResult r = find_stabilizing_beta(cfg.market, cfg.subdiffusion, cfg.grid);
    const json out{{"beta", r.beta},
                   {"market", market_json(r.market)},
                   {"subdiffusion", subdiffusion_json(r.subdiffusion)},
                   {"report", report_json(r.report)}};
    const std::string text = out.dump(2) + "\n";
    std::cout << text;
    emit(cfg, text);
    return 0;
}

int cmd_converge(const RunConfig& cfg, int temporal_base, int spatial_base, int levels, int n_fine,
                 int nt_fine) {
    std::vector<int> t_ladder, x_ladder;
    for (int l = 0, v = temporal_base; l < levels; ++l, v *= 2) t_ladder.push_back(v);
    for (int l = 0, v = spatial_base; l < levels; ++l, v *= 2) x_ladder.push_back(v);

    const OrderStudy temporal =
        temporal_order_study(cfg.market, cfg.subdiffusion, cfg.grid.theta, cfg.grid.x_min,
                             cfg.grid.x_max, n_fine, t_ladder, 8);
    const OrderStudy spatial =
        spatial_order_study(cfg.market, cfg.subdiffusion, cfg.grid.theta, cfg.grid.x_min,
                            cfg.grid.x_max, nt_fine, x_ladder, 4);

    std::string csv = "study,level,error,order\n";
    const auto rows = [&csv](const char* name, const OrderStudy& s) {
        for (size_t i = 0; i < s.ladder.size(); ++i) {
            csv += name;
            csv += ',' + std::to_string(s.ladder[i]) + ',' + format_double(s.errors[i]) + ',';
            if (i > 0) csv += format_double(s.orders[i - 1]);
            csv += '\n';
        }
    };
    rows("temporal", temporal);
    rows("spatial", spatial);
    std::cout << "temporal order " << format_double(temporal.mean_order)
              << (temporal.monotone ? "" : " (inconclusive: non-monotone errors)") << "\n";
    std::cout << "spatial order " << format_double(spatial.mean_order)
              << (spatial.monotone ? "" : " (inconclusive: non-monotone errors)") << "\n";
    emit_bulk(cfg, csv);
    return 0;
}

double sweep_point(const SweepAxis& axis, int i) {
    if (axis.count <= 1) return axis.min;
    const double frac = static_cast<double>(i) / (axis.count - 1);
    // Tempering sweeps need a denser mesh near zero.
    const double shaped = axis.name == "lambda" ? frac * frac : frac;
    return axis.min + (axis.max - axis.min) * shaped;
}

void apply_axis(RunConfig& cfg, const std::string& name, double value) {
    if (name == "alpha") cfg.subdiffusion.alpha = value;
    else if (name == "lambda") cfg.subdiffusion.lambda = value;
    else if (name == "strike") cfg.market.strike = value;
    else if (name == "maturity") cfg.market.maturity = value;
    else throw std::invalid_argument("sweep: unknown axis '" + name + "'");
}

int cmd_surface(const RunConfig& cfg) {
    if (cfg.axis1.name.empty()) throw std::invalid_argument("surface: sweep axis1 required");
    const bool two_axes = !cfg.axis2.name.empty();
    std::string csv = cfg.axis1.name;
    if (two_axes) csv += ',' + cfg.axis2.name;
    csv += ",price\n";
    for (int i = 0; i < cfg.axis1.count; ++i) {
        for (int j = 0; j < (two_axes ? cfg.axis2.count : 1); ++j) {
            RunConfig point = cfg;
            const double v1 = sweep_point(cfg.axis1, i);
            apply_axis(point, cfg.axis1.name, v1);
            double v2 = 0.0;
            if (two_axes) {
                v2 = sweep_point(cfg.axis2, j);
                apply_axis(point, cfg.axis2.name, v2);
            }
            const double price = fd_price(point.market, point.subdiffusion, point.grid,
                                          point.kind, point.solver_options());
            csv += format_double(v1);
            if (two_axes) csv += ',' + format_double(v2);
            csv += ',' + format_double(price) + '\n';
        }
    }
    emit_bulk(cfg, csv);
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    PathParams p;
    p.market = cfg.market;
    p.subdiffusion = cfg.subdiffusion;
    p.drift = cfg.drift;
    const auto path = simulate_tempered_gbm_path(p, cfg.market.maturity, cfg.path_points,
                                                 cfg.points, RngStream{cfg.seed, 0});
    const std::string csv = path_csv(path);
    emit_bulk(cfg, csv);
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    if (cfg.axis1.name != "lambda")
        throw std::invalid_argument("compare: sweep axis1 must be lambda");
    std::string csv =
        "lambda,fd,mc_mean,mc_stderr,crr_mean,crr_stderr,gate_satisfied,gate_margin,agree_mc,"
        "agree_crr\n";
    for (int i = 0; i < cfg.axis1.count; ++i) {
        RunConfig point = cfg;
        point.subdiffusion.lambda = sweep_point(cfg.axis1, i);
        const ConditionReport gate = evaluate_gate(point, std::nullopt);
        const double fd = fd_price(point.market, point.subdiffusion, point.grid, point.kind,
                                   point.solver_options());
        const PricerEstimate mc = mc_price(point.market, point.subdiffusion, point.kind,
                                           point.repetitions, point.points, point.seed);
        const PricerEstimate crr = crr_price(point.market, point.subdiffusion, point.kind,
                                             point.repetitions, point.crr_points, point.seed);
        const bool agree_mc = std::abs(fd - mc.mean) <= 3.0 * mc.stderr_ + 5e-3;
        const bool agree_crr = std::abs(fd - crr.mean) <= 3.0 * crr.stderr_ + 5e-3;
        csv += format_double(point.subdiffusion.lambda) + ',' + format_double(fd) + ',' +
               format_double(mc.mean) + ',' + format_double(mc.stderr_) + ',' +
               format_double(crr.mean) + ',' + format_double(crr.stderr_) + ',' +
               (gate.satisfied ? "true" : "false") + ',' + format_double(gate.margin) + ',' +
               (agree_mc ? "true" : "false") + ',' + (agree_crr ? "true" : "false") + '\n';
    }
    emit_bulk(cfg, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"European option pricing under tempered subdiffusive dynamics"};
    app.require_subcommand(1);

    std::string config_path;
    if (const char* env = std::getenv("TSBS_CONFIG")) config_path = env;

    RunConfig cfg;
    std::string surface_out, condition_flag = "auto";
    int temporal_base = 50, spatial_base = 100, levels = 4, n_fine = 500, nt_fine = 400;

    // Values seen on the command line override the config file.
    struct Override {
        double spot, strike, maturity, rate, dividend, sigma, alpha, lambda, theta, x_min, x_max,
            smoothing, drift;
        int n_space, n_time, repetitions, points, crr_points, path_points;
        uint64_t seed;
        std::string method, kind, format, out, step_reading, stability_grouping;
    } ov{};

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "configuration file (env TSBS_CONFIG)");
        cmd->add_option("--out", ov.out, "output file path");
        cmd->add_option("--format", ov.format, "csv|json");
        cmd->add_option("--seed", ov.seed, "RNG seed");
        cmd->add_flag("--enforce-gate", "abort when the stability gate fails");
        cmd->add_option("--smoothing", ov.smoothing, "payoff smoothing width (0 disables)");
        cmd->add_option("--theta", ov.theta, "scheme weight in [0,1]");
        cmd->add_option("--alpha", ov.alpha, "subdiffusion exponent");
        cmd->add_option("--lambda", ov.lambda, "tempering rate");
        cmd->add_option("--method", ov.method, "fd|mc|crr|bs");
        cmd->add_option("--kind", ov.kind, "call|put");
        cmd->add_option("--spot", ov.spot, "spot price");
        cmd->add_option("--strike", ov.strike, "strike");
        cmd->add_option("--maturity", ov.maturity, "maturity");
        cmd->add_option("--rate", ov.rate, "interest rate");
        cmd->add_option("--dividend", ov.dividend, "dividend yield");
        cmd->add_option("--sigma", ov.sigma, "volatility");
        cmd->add_option("--xmin", ov.x_min, "left log-price bound");
        cmd->add_option("--xmax", ov.x_max, "right log-price bound");
        cmd->add_option("--n", ov.n_space, "space intervals");
        cmd->add_option("--steps", ov.n_time, "time steps");
        cmd->add_option("--reps", ov.repetitions, "MC/CRR repetitions");
        cmd->add_option("--points", ov.points, "subordinator grid points per draw");
        cmd->add_option("--crr-points", ov.crr_points, "tree steps for the compare command");
        cmd->add_option("--step-reading", ov.step_reading, "printed|firstline step reading");
        cmd->add_option("--stability-grouping", ov.stability_grouping, "proof|literal stability grouping");
        cmd->add_option("--drift", ov.drift, "physical drift (simulate only)");
        cmd->add_option("--path-points", ov.path_points, "rows in the path export");
    };

    CLI::App* price = app.add_subcommand("price", "price one contract");
    price->add_option("--surface-out", surface_out, "also export the full surface CSV");
    CLI::App* stability = app.add_subcommand("stability", "evaluate the analytic gate");
    stability->add_option("--condition", condition_flag,
                          "auto|weighted-22|implicit-oby1|convergence-lemma");
    CLI::App* rescale = app.add_subcommand("rescale", "find a stabilizing time scale");
    CLI::App* converge = app.add_subcommand("converge", "self-convergence order study");
    converge->add_option("--temporal-base", temporal_base, "coarsest time-step count");
    converge->add_option("--spatial-base", spatial_base, "coarsest space-interval count");
    converge->add_option("--levels", levels, "ladder levels");
    converge->add_option("--n-fine", n_fine, "fixed space intervals for the time study");
    converge->add_option("--nt-fine", nt_fine, "fixed time steps for the space study");
    CLI::App* surface = app.add_subcommand("surface", "price sweep over one or two axes");
    CLI::App* simulate = app.add_subcommand("simulate", "sample-path export");
    CLI::App* compare = app.add_subcommand("compare", "FD vs MC vs CRR over a lambda sweep");
    for (CLI::App* cmd : {price, stability, rescale, converge, surface, simulate, compare})
        add_common(cmd);

    CLI11_PARSE(app, argc, argv);
    CLI::App* cmd = app.get_subcommands().front();

    try {
        if (!config_path.empty()) cfg = RunConfig::from_file(config_path);

        const auto seen = [&](const char* name) { return cmd->count(name) > 0; };
        if (seen("--out")) cfg.out_path = ov.out;
        if (seen("--format")) cfg.format = ov.format;
        if (seen("--seed")) cfg.seed = ov.seed;
        if (seen("--enforce-gate")) cfg.enforce_gate = true;
        if (seen("--smoothing")) cfg.smoothing = ov.smoothing;
        if (seen("--theta")) cfg.grid.theta = ov.theta;
        if (seen("--alpha")) cfg.subdiffusion.alpha = ov.alpha;
        if (seen("--lambda")) cfg.subdiffusion.lambda = ov.lambda;
        if (seen("--method")) cfg.method = ov.method;
        if (seen("--kind")) {
            if (ov.kind == "call") cfg.kind = OptionKind::call;
            else if (ov.kind == "put") cfg.kind = OptionKind::put;
            else throw std::invalid_argument("kind must be call or put");
        }
        if (seen("--spot")) cfg.market.spot = ov.spot;
        if (seen("--strike")) cfg.market.strike = ov.strike;
        if (seen("--maturity")) cfg.market.maturity = ov.maturity;
        if (seen("--rate")) cfg.market.rate = ov.rate;
        if (seen("--dividend")) cfg.market.dividend = ov.dividend;
        if (seen("--sigma")) cfg.market.sigma = ov.sigma;
        if (seen("--xmin")) cfg.grid.x_min = ov.x_min;
        if (seen("--xmax")) cfg.grid.x_max = ov.x_max;
        if (seen("--n")) cfg.grid.n_space = ov.n_space;
        if (seen("--steps")) cfg.grid.n_time = ov.n_time;
        if (seen("--reps")) cfg.repetitions = ov.repetitions;
        if (seen("--points")) cfg.points = ov.points;
        if (seen("--crr-points")) cfg.crr_points = ov.crr_points;
        if (seen("--step-reading")) {
            if (ov.step_reading == "printed") cfg.step_reading = StepReading::as_printed;
            else if (ov.step_reading == "firstline") cfg.step_reading = StepReading::first_line_constant;
            else throw std::invalid_argument("step_reading must be printed or firstline");
        }
        if (seen("--stability-grouping")) {
            if (ov.stability_grouping == "proof") cfg.stability_grouping = StabilityGrouping::proof_grouping;
            else if (ov.stability_grouping == "literal") cfg.stability_grouping = StabilityGrouping::literal;
            else throw std::invalid_argument("stability_grouping must be proof or literal");
        }
        if (seen("--drift")) cfg.drift = ov.drift;
        if (seen("--path-points")) cfg.path_points = ov.path_points;

        if (cmd == price) return cmd_price(cfg, surface_out);
        if (cmd == stability) return cmd_stability(cfg, condition_flag);
        if (cmd == rescale) return cmd_rescale(cfg);
        if (cmd == converge)
            return cmd_converge(cfg, temporal_base, spatial_base, levels, n_fine, nt_fine);
        if (cmd == surface) return cmd_surface(cfg);
        if (cmd == simulate) return cmd_simulate(cfg);
        if (cmd == compare) return cmd_compare(cfg);
        throw std::invalid_argument("unknown subcommand");
    } catch (const GateViolation& gv) {
        std::cerr << "gate violation:\n" << report_json(gv.report).dump(2) << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
}
