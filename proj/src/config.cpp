#include "tsbs/config.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace tsbs {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string trim(const std::string& s) {
    const auto from = s.find_first_not_of(" \t\r");
    if (from == std::string::npos) return "";
    const auto to = s.find_last_not_of(" \t\r");
    return s.substr(from, to - from + 1);
}

struct KeyValues {
    std::map<std::string, std::string> entries;

    bool has(const std::string& key) const { return entries.count(key) != 0; }

    const std::string& get(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end())
            throw std::invalid_argument("config: missing key '" + key + "'");
        return it->second;
    }

    double number(const std::string& key) const {
        const std::string& raw = get(key);
        size_t used = 0;
        double v;
        try {
            v = std::stod(raw, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("config: bad number for '" + key + "': " + raw);
        }
        if (used != raw.size())
            throw std::invalid_argument("config: bad number for '" + key + "': " + raw);
        return v;
    }

    long integer(const std::string& key) const {
        const double v = number(key);
        const long i = static_cast<long>(v);
        if (static_cast<double>(i) != v)
            throw std::invalid_argument("config: expected integer for '" + key + "'");
        return i;
    }

    bool flag(const std::string& key) const {
        const std::string& raw = get(key);
        if (raw == "true" || raw == "1") return true;
        if (raw == "false" || raw == "0") return false;
        throw std::invalid_argument("config: expected true/false for '" + key + "'");
    }
};

}  // namespace

std::string RunConfig::to_file_string() const {
    std::ostringstream out;
    out << "[market]\n";
    out << "spot = " << format_double(market.spot) << "\n";
    out << "strike = " << format_double(market.strike) << "\n";
    out << "maturity = " << format_double(market.maturity) << "\n";
    out << "rate = " << format_double(market.rate) << "\n";
    out << "dividend = " << format_double(market.dividend) << "\n";
    out << "sigma = " << format_double(market.sigma) << "\n";
    out << "\n[subdiffusion]\n";
    out << "alpha = " << format_double(subdiffusion.alpha) << "\n";
    out << "lambda = " << format_double(subdiffusion.lambda) << "\n";
    out << "\n[grid]\n";
    out << "x_min = " << format_double(grid.x_min) << "\n";
    out << "x_max = " << format_double(grid.x_max) << "\n";
    out << "n_space = " << grid.n_space << "\n";
    out << "n_time = " << grid.n_time << "\n";
    out << "theta = " << format_double(grid.theta) << "\n";
    out << "\n[run]\n";
    out << "method = " << method << "\n";
    out << "kind = " << (kind == OptionKind::call ? "call" : "put") << "\n";
    out << "seed = " << seed << "\n";
    out << "repetitions = " << repetitions << "\n";
    out << "points = " << points << "\n";
    out << "crr_points = " << crr_points << "\n";
    out << "smoothing = " << format_double(smoothing) << "\n";
    out << "enforce_gate = " << (enforce_gate ? "true" : "false") << "\n";
    out << "step_reading = " << (step_reading == StepReading::as_printed ? "printed" : "firstline") << "\n";
    out << "stability_grouping = " << (stability_grouping == StabilityGrouping::proof_grouping ? "proof" : "literal") << "\n";
    out << "drift = " << format_double(drift) << "\n";
    out << "path_points = " << path_points << "\n";
    out << "\n[output]\n";
    out << "path = " << out_path << "\n";
    out << "format = " << format << "\n";
    out << "\n[sweep]\n";
    out << "axis1 = " << axis1.name << "\n";
    out << "min1 = " << format_double(axis1.min) << "\n";
    out << "max1 = " << format_double(axis1.max) << "\n";
    out << "count1 = " << axis1.count << "\n";
    out << "axis2 = " << axis2.name << "\n";
    out << "min2 = " << format_double(axis2.min) << "\n";
    out << "max2 = " << format_double(axis2.max) << "\n";
    out << "count2 = " << axis2.count << "\n";
    return out.str();
}

RunConfig RunConfig::from_string(const std::string& text) {
    std::map<std::string, KeyValues> sections;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw std::invalid_argument("config: malformed section at line " +
                                            std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key = value at line " +
                                        std::to_string(lineno));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty())
            throw std::invalid_argument("config: key outside any section at line " +
                                        std::to_string(lineno));
        sections[section].entries[key] = value;
    }

    RunConfig cfg;
    if (sections.count("market")) {
        const KeyValues& kv = sections["market"];
        if (kv.has("spot")) cfg.market.spot = kv.number("spot");
        if (kv.has("strike")) cfg.market.strike = kv.number("strike");
        if (kv.has("maturity")) cfg.market.maturity = kv.number("maturity");
        if (kv.has("rate")) cfg.market.rate = kv.number("rate");
        if (kv.has("dividend")) cfg.market.dividend = kv.number("dividend");
        if (kv.has("sigma")) cfg.market.sigma = kv.number("sigma");
    }
    if (sections.count("subdiffusion")) {
        const KeyValues& kv = sections["subdiffusion"];
        if (kv.has("alpha")) cfg.subdiffusion.alpha = kv.number("alpha");
        if (kv.has("lambda")) cfg.subdiffusion.lambda = kv.number("lambda");
    }
    if (sections.count("grid")) {
        const KeyValues& kv = sections["grid"];
        if (kv.has("x_min")) cfg.grid.x_min = kv.number("x_min");
        if (kv.has("x_max")) cfg.grid.x_max = kv.number("x_max");
        if (kv.has("n_space")) cfg.grid.n_space = static_cast<int>(kv.integer("n_space"));
        if (kv.has("n_time")) cfg.grid.n_time = static_cast<int>(kv.integer("n_time"));
        if (kv.has("theta")) cfg.grid.theta = kv.number("theta");
    }
    if (sections.count("run")) {
        const KeyValues& kv = sections["run"];
        if (kv.has("method")) cfg.method = kv.get("method");
        if (kv.has("kind")) {
            const std::string& k = kv.get("kind");
            if (k == "call") cfg.kind = OptionKind::call;
            else if (k == "put") cfg.kind = OptionKind::put;
            else throw std::invalid_argument("config: kind must be call or put");
        }
        if (kv.has("seed")) cfg.seed = static_cast<uint64_t>(kv.integer("seed"));
        if (kv.has("repetitions")) cfg.repetitions = static_cast<int>(kv.integer("repetitions"));
        if (kv.has("points")) cfg.points = static_cast<int>(kv.integer("points"));
        if (kv.has("crr_points")) cfg.crr_points = static_cast<int>(kv.integer("crr_points"));
        if (kv.has("smoothing")) cfg.smoothing = kv.number("smoothing");
        if (kv.has("enforce_gate")) cfg.enforce_gate = kv.flag("enforce_gate");
        if (kv.has("step_reading")) {
            const std::string& v = kv.get("step_reading");
            if (v == "printed") cfg.step_reading = StepReading::as_printed;
            else if (v == "firstline") cfg.step_reading = StepReading::first_line_constant;
            else throw std::invalid_argument("config: step_reading must be printed or firstline");
        }
        if (kv.has("stability_grouping")) {
            const std::string& v = kv.get("stability_grouping");
            if (v == "proof") cfg.stability_grouping = StabilityGrouping::proof_grouping;
            else if (v == "literal") cfg.stability_grouping = StabilityGrouping::literal;
            else throw std::invalid_argument("config: stability_grouping must be proof or literal");
        }
        if (kv.has("drift")) cfg.drift = kv.number("drift");
        if (kv.has("path_points")) cfg.path_points = static_cast<int>(kv.integer("path_points"));
    }
    if (sections.count("output")) {
        const KeyValues& kv = sections["output"];
        if (kv.has("path")) cfg.out_path = kv.get("path");
        if (kv.has("format")) cfg.format = kv.get("format");
    }
    if (sections.count("sweep")) {
        const KeyValues& kv = sections["sweep"];
        if (kv.has("axis1")) cfg.axis1.name = kv.get("axis1");
        if (kv.has("min1")) cfg.axis1.min = kv.number("min1");
        if (kv.has("max1")) cfg.axis1.max = kv.number("max1");
        if (kv.has("count1")) cfg.axis1.count = static_cast<int>(kv.integer("count1"));
        if (kv.has("axis2")) cfg.axis2.name = kv.get("axis2");
        if (kv.has("min2")) cfg.axis2.min = kv.number("min2");
        if (kv.has("max2")) cfg.axis2.max = kv.number("max2");
        if (kv.has("count2")) cfg.axis2.count = static_cast<int>(kv.integer("count2"));
    }
    return cfg;
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_string(buf.str());
}

}  // namespace tsbs
