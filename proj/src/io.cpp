#include "tsbs/io.hpp"

#include <fstream>
#include <sstream>

#include "tsbs/config.hpp"

namespace tsbs {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string surface_csv(const SolutionSurface& s) {
    std::ostringstream out;
    out << "x,t,u\n";
    const double dt = s.grid.dt(s.market.maturity);
    for (int k = 0; k <= s.grid.n_time; ++k)
        for (int i = 0; i <= s.grid.n_space; ++i)
            out << format_double(s.grid.x(i)) << ',' << format_double(k * dt) << ','
                << format_double(s.at(k, i)) << '\n';
    return out.str();
}

std::string path_csv(const std::vector<PathPoint>& points) {
    std::ostringstream out;
    out << "t,gbm,tempered_gbm,inverse_subordinator\n";
    for (const PathPoint& p : points)
        out << format_double(p.t) << ',' << format_double(p.gbm) << ','
            << format_double(p.tempered_gbm) << ',' << format_double(p.inverse_subordinator)
            << '\n';
    return out.str();
}

nlohmann::json report_json(const ConditionReport& r) {
    return nlohmann::json{
        {"condition", condition_name(r.condition)},
        {"satisfied", r.satisfied},
        {"lhs", r.lhs},
        {"rhs", r.rhs},
        {"margin", r.margin},
        {"parameters",
         {{"alpha", r.alpha},
          {"lambda", r.lambda},
          {"theta", r.theta},
          {"dt", r.dt},
          {"dx", r.dx},
          {"steps", r.steps}}},
    };
}

nlohmann::json estimate_json(const PricerEstimate& e) {
    return nlohmann::json{
        {"mean", e.mean},     {"stderr", e.stderr_}, {"repetitions", e.repetitions},
        {"points", e.points}, {"seed", e.seed},
    };
}

}  // namespace tsbs
