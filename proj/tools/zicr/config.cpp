// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include "config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace zicr::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kDbSuffix = "_db";

bool ends_with_db(std::string_view s) {
    return s.size() > kDbSuffix.size() && s.substr(s.size() - kDbSuffix.size()) == kDbSuffix;
}

std::string field_path(std::string_view parent, std::string_view key) {
    return parent.empty() ? std::string(key) : std::string(parent) + "." + std::string(key);
}

double number(const json &v, const std::string &path) {
    if (!v.is_number()) throw UsageError(path + ": expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw UsageError(path + ": must be finite");
    return x;
}

int integer(const json &v, const std::string &path) {
    if (!v.is_number_integer()) throw UsageError(path + ": expected an integer");
    return v.get<int>();
}

const json &object(const json &v, const std::string &path) {
    if (!v.is_object()) throw UsageError(path + ": expected an object");
    return v;
}

Point point(const json &v, const std::string &path) {
    if (!v.is_array() || v.size() != 2) throw UsageError(path + ": expected [x, y]");
    return {number(v[0], path + "[0]"), number(v[1], path + "[1]")};
}

// Reads `key` or `key_db` into out; both present is an error.
void linear_or_db(const json &obj, std::string_view parent, std::string_view key, double &out,
                  std::string_view dup_name) {
    const std::string k(key);
    const std::string kdb = k + std::string(kDbSuffix);
    if (obj.contains(k) && obj.contains(kdb))
        throw UsageError(field_path(parent, dup_name) + ": give either linear or dB value, not both");
    if (obj.contains(k)) out = number(obj.at(k), field_path(parent, k));
    if (obj.contains(kdb)) out = db_to_linear(number(obj.at(kdb), field_path(parent, kdb)));
}

void reject_unknown(const json &obj, std::string_view parent, std::initializer_list<std::string_view> known) {
    for (const auto &[key, _] : obj.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw UsageError(field_path(parent, key) + ": unknown field");
}

} // namespace

Mode parse_mode(std::string_view name) {
    if (name == "capacity") return Mode::capacity;
    if (name == "gdof") return Mode::gdof;
    if (name == "sweep-fig3") return Mode::sweep_fig3;
    if (name == "sweep-fig5") return Mode::sweep_fig5;
    if (name == "relay-region") return Mode::relay_region;
    if (name == "verify") return Mode::verify;
    throw UsageError("mode: unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
    case Mode::capacity: return "capacity";
    case Mode::gdof: return "gdof";
    case Mode::sweep_fig3: return "sweep-fig3";
    case Mode::sweep_fig5: return "sweep-fig5";
    case Mode::relay_region: return "relay-region";
    case Mode::verify: return "verify";
    }
    return "?";
}

bool ScenarioConfig::has_snr() const {
    return std::all_of(snr.begin(), snr.end(), [](const auto &v) { return v.has_value(); });
}

SnrSextet ScenarioConfig::require_snr() const {
    for (std::size_t i = 0; i < snr.size(); ++i)
        if (!snr[i]) throw UsageError("snr." + std::string(kSnrFields[i]) + ": required for mode " +
                                      std::string(to_string(mode)));
    const SnrSextet s{*snr[0], *snr[1], *snr[2], *snr[3], *snr[4], *snr[5]};
    try {
        validate(s);
    } catch (const DomainError &e) {
        throw UsageError(std::string("snr: ") + e.what());
    }
    return s;
}

GdofExponents ScenarioConfig::require_exponents() const {
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (!exponents[i])
            throw UsageError("exponents." + std::string(kExponentFields[i]) + ": required for mode " +
                             std::string(to_string(mode)));
    const GdofExponents e{*exponents[0], *exponents[1], *exponents[2], *exponents[3]};
    try {
        validate(e);
    } catch (const DomainError &err) {
        throw UsageError(std::string("exponents: ") + err.what());
    }
    return e;
}

void set_snr_field(ScenarioConfig &cfg, std::string_view name, double value) {
    const bool db = ends_with_db(name);
    const std::string_view base = db ? name.substr(0, name.size() - kDbSuffix.size()) : name;
    const auto it = std::find(kSnrFields.begin(), kSnrFields.end(), base);
    if (it == kSnrFields.end()) throw UsageError("snr." + std::string(name) + ": unknown field");
    if (!std::isfinite(value)) throw UsageError("snr." + std::string(name) + ": must be finite");
    cfg.snr[static_cast<std::size_t>(it - kSnrFields.begin())] = db ? db_to_linear(value) : value;
}

void set_exponent_field(ScenarioConfig &cfg, std::string_view name, double value) {
    const auto it = std::find(kExponentFields.begin(), kExponentFields.end(), name);
    if (it == kExponentFields.end()) throw UsageError("exponents." + std::string(name) + ": unknown field");
    if (!std::isfinite(value)) throw UsageError("exponents." + std::string(name) + ": must be finite");
    cfg.exponents[static_cast<std::size_t>(it - kExponentFields.begin())] = value;
}

void apply_json(ScenarioConfig &cfg, std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    object(doc, "config");
    reject_unknown(doc, "", {"mode", "seed", "out", "snr", "exponents", "layout", "pathloss_exponent", "grid",
                             "fig3", "fig5"});

    if (doc.contains("mode")) {
        if (!doc["mode"].is_string()) throw UsageError("mode: expected a string");
        cfg.mode = parse_mode(doc["mode"].get<std::string>());
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned()) throw UsageError("seed: expected a non-negative integer");
        cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("out")) {
        if (!doc["out"].is_string()) throw UsageError("out: expected a string");
        cfg.out = doc["out"].get<std::string>();
    }
    if (doc.contains("snr")) {
        for (const auto &[key, val] : object(doc["snr"], "snr").items())
            set_snr_field(cfg, key, number(val, "snr." + key));
    }
    if (doc.contains("exponents")) {
        for (const auto &[key, val] : object(doc["exponents"], "exponents").items())
            set_exponent_field(cfg, key, number(val, "exponents." + key));
    }
    if (doc.contains("layout")) {
        const json &l = object(doc["layout"], "layout");
        reject_unknown(l, "layout", {"tx1", "rx1", "tx2", "rx2"});
        if (l.contains("tx1")) cfg.layout.tx1 = point(l["tx1"], "layout.tx1");
        if (l.contains("rx1")) cfg.layout.rx1 = point(l["rx1"], "layout.rx1");
        if (l.contains("tx2")) cfg.layout.tx2 = point(l["tx2"], "layout.tx2");
        if (l.contains("rx2")) cfg.layout.rx2 = point(l["rx2"], "layout.rx2");
    }
    if (doc.contains("pathloss_exponent"))
        cfg.pathloss_exponent = number(doc["pathloss_exponent"], "pathloss_exponent");
    if (doc.contains("grid")) {
        const json &g = object(doc["grid"], "grid");
        reject_unknown(g, "grid", {"xmin", "xmax", "ymin", "ymax", "nx", "ny", "resolution"});
        if (g.contains("resolution")) cfg.grid.nx = cfg.grid.ny = integer(g["resolution"], "grid.resolution");
        if (g.contains("xmin")) cfg.grid.xmin = number(g["xmin"], "grid.xmin");
        if (g.contains("xmax")) cfg.grid.xmax = number(g["xmax"], "grid.xmax");
        if (g.contains("ymin")) cfg.grid.ymin = number(g["ymin"], "grid.ymin");
        if (g.contains("ymax")) cfg.grid.ymax = number(g["ymax"], "grid.ymax");
        if (g.contains("nx")) cfg.grid.nx = integer(g["nx"], "grid.nx");
        if (g.contains("ny")) cfg.grid.ny = integer(g["ny"], "grid.ny");
    }
    if (doc.contains("fig3")) {
        const json &f = object(doc["fig3"], "fig3");
        reject_unknown(f, "fig3", {"snrd", "snrd_db", "snrc_db_min", "snrc_db_max", "points", "snr13", "snr13_db"});
        linear_or_db(f, "fig3", "snrd", cfg.fig3.snrd, "snrd");
        linear_or_db(f, "fig3", "snr13", cfg.fig3.snr13, "snr13");
        if (f.contains("snrc_db_min")) cfg.fig3.snrc_db_min = number(f["snrc_db_min"], "fig3.snrc_db_min");
        if (f.contains("snrc_db_max")) cfg.fig3.snrc_db_max = number(f["snrc_db_max"], "fig3.snrc_db_max");
        if (f.contains("points")) cfg.fig3.points = integer(f["points"], "fig3.points");
    }
    if (doc.contains("fig5")) {
        const json &f = object(doc["fig5"], "fig5");
        reject_unknown(f, "fig5", {"points"});
        if (f.contains("points")) cfg.fig5_points = integer(f["points"], "fig5.points");
    }
}

void apply_json_file(ScenarioConfig &cfg, const std::string &path) {
    std::ifstream in(path);
    if (!in) throw UsageError("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_json(cfg, buf.str());
}

void validate_for_mode(const ScenarioConfig &cfg) {
    switch (cfg.mode) {
    case Mode::capacity: cfg.require_snr(); break;
    case Mode::gdof: cfg.require_exponents(); break;
    case Mode::sweep_fig3:
        if (cfg.fig3.points < 2) throw UsageError("fig3.points: must be >= 2");
        if (!(cfg.fig3.snrd > 0.0)) throw UsageError("fig3.snrd: must be > 0");
        if (!(cfg.fig3.snr13 >= 0.0)) throw UsageError("fig3.snr13: must be >= 0");
        if (!(cfg.fig3.snrc_db_max > cfg.fig3.snrc_db_min)) throw UsageError("fig3.snrc_db_max: must exceed snrc_db_min");
        break;
    case Mode::sweep_fig5:
        if (cfg.fig5_points < 2) throw UsageError("fig5.points: must be >= 2");
        if (!cfg.exponents[1]) throw UsageError("exponents.beta: required for mode sweep-fig5");
        if (!cfg.exponents[2]) throw UsageError("exponents.gamma: required for mode sweep-fig5");
        if (*cfg.exponents[1] < 0.0) throw UsageError("exponents.beta: must be >= 0");
        if (*cfg.exponents[2] < 0.0) throw UsageError("exponents.gamma: must be >= 0");
        break;
    case Mode::relay_region:
        if (cfg.grid.nx < 2 || cfg.grid.ny < 2) throw UsageError("grid: resolution must be >= 2 per axis");
        if (!(cfg.grid.xmax > cfg.grid.xmin) || !(cfg.grid.ymax > cfg.grid.ymin))
            throw UsageError("grid: bounding box is empty");
        if (!(cfg.pathloss_exponent > 0.0)) throw UsageError("pathloss_exponent: must be > 0");
        try {
            validate(cfg.layout);
        } catch (const DomainError &e) {
            throw UsageError(std::string("layout: ") + e.what());
        }
        break;
    case Mode::verify:
        if (cfg.has_snr()) cfg.require_snr();
        break;
    }
}

} // namespace zicr::cli
