#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tsbs/pricers.hpp"
#include "tsbs/solver.hpp"
#include "tsbs/stability.hpp"
#include "tsbs/subordinator.hpp"

namespace tsbs {

/// Writes text with LF endings, UTF-8. Throws on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

/// Surface export: header x,t,u, row-major by time level, 17 significant
/// digits.
std::string surface_csv(const SolutionSurface& s);

/// Path export: header t,gbm,tempered_gbm,inverse_subordinator.
std::string path_csv(const std::vector<PathPoint>& points);

nlohmann::json report_json(const ConditionReport& r);
nlohmann::json estimate_json(const PricerEstimate& e);

}  // namespace tsbs
