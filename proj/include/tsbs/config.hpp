#pragma once

#include <cstdint>
#include <string>

#include "tsbs/grid.hpp"
#include "tsbs/market.hpp"
#include "tsbs/pricers.hpp"
#include "tsbs/solver.hpp"
#include "tsbs/stability.hpp"
#include "tsbs/subdiffusion.hpp"

namespace tsbs {

/// Sweep axes for the surface/compare commands.
struct SweepAxis {
    std::string name;  // "alpha" | "lambda" | "strike" | "maturity"; empty = unused
    double min = 0.0;
    double max = 0.0;
    int count = 1;
};

/// Full run configuration: parseable from a flat key-value file with
/// sections, overridable by CLI flags, round-trips losslessly.
struct RunConfig {
    MarketParams market;
    SubdiffusionParams subdiffusion;
    GridSpec grid;

    std::string method = "fd";  // fd | mc | crr | bs
    OptionKind kind = OptionKind::call;
    uint64_t seed = 12345;
    int repetitions = 400;
    int points = 50;      // subordinator granularity (MC, simulate)
    int crr_points = 40;  // tree steps / granularity for the compare command
    double smoothing = 0.0;  // payoff smoothing width; 0 disables
    bool enforce_gate = false;
    StepReading step_reading = StepReading::as_printed;
    StabilityGrouping stability_grouping = StabilityGrouping::proof_grouping;
    double drift = 0.0;      // path simulation only
    int path_points = 500;   // rows in the path export

    std::string out_path;
    std::string format = "json";  // csv | json

    SweepAxis axis1;
    SweepAxis axis2;

    SolverOptions solver_options() const {
        SolverOptions o;
        o.kind = kind;
        o.reading = step_reading;
        if (smoothing > 0.0) o.smoothing_width = smoothing;
        return o;
    }

    std::string to_file_string() const;
    static RunConfig from_string(const std::string& text);
    static RunConfig from_file(const std::string& path);
};

/// Double formatting used by every exporter: shortest text that parses back
/// to the identical bits (17 significant digits).
std::string format_double(double v);

}  // namespace tsbs
