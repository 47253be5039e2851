// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include "run.hpp"

#include <zicr/geometry.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace zicr::cli {

namespace {

using nlohmann::ordered_json;

ordered_json snr_json(const SnrSextet &s) {
    return {{"snr11", s.snr11}, {"snr21", s.snr21}, {"snr31", s.snr31},
            {"snr22", s.snr22}, {"snr32", s.snr32}, {"snr13", s.snr13}};
}

const char *flag(bool b) { return b ? "1" : "0"; }

std::string execute(const ScenarioConfig &cfg, bool &all_passed) {
    all_passed = true;
    switch (cfg.mode) {
    case Mode::capacity: return capacity_json(cfg.require_snr());
    case Mode::gdof: return gdof_json(cfg.require_exponents());
    case Mode::sweep_fig3:
        return fig3_csv(sweep_fig3(cfg.fig3.snrd, cfg.fig3.snrc_db_min, cfg.fig3.snrc_db_max, cfg.fig3.points,
                                   cfg.fig3.snr13));
    case Mode::sweep_fig5: return fig5_csv(sweep_alpha(*cfg.exponents[1], *cfg.exponents[2], cfg.fig5_points));
    case Mode::relay_region: return region_csv(relay_region(cfg.layout, cfg.grid, cfg.pathloss_exponent));
    case Mode::verify: {
        const auto snr = cfg.has_snr() ? std::optional<SnrSextet>(cfg.require_snr()) : std::nullopt;
        const auto results = run_verification(cfg.seed, snr);
        all_passed = std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
        return verify_table(results);
    }
    }
    return {};
}

} // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string capacity_json(const SnrSextet &s) {
    const SumRate cap = sum_capacity_zicr(s);
    const auto cert = wi_feasible(s);
    const BoundValue genie = genie_sum_upper_bound(s);
    const CutsetBounds cut = cutset_bounds(s);
    const RatePair ach = achievable_rates(s, InputConfig::full_power());
    const SumRate zic = sum_capacity_zic(s);

    ordered_json j;
    j["snr"] = snr_json(s);
    j["sum_capacity"] = cap.value;
    j["certified"] = cap.certified();
    j["certificate"] = cert ? ordered_json{{"beta1", cert->beta1}, {"beta2", cert->beta2}} : ordered_json(nullptr);
    j["relay_condition"] = relay_condition_holds(s);
    j["genie_ub"] = {{"value", genie.value}, {"valid", genie.valid}};
    j["cutset"] = {{"r1_tx_side", cut.r1_tx_side},
                   {"r1_rx_side", cut.r1_rx_side},
                   {"r2_bound", cut.r2_bound},
                   {"sum", cut.sum()}};
    j["achievable"] = {{"r1", ach.r1}, {"r2", ach.r2}, {"sum", ach.sum()}};
    j["zic"] = {{"sum_capacity", zic.value}, {"certified", zic.certified()}};
    return j.dump(2) + "\n";
}

std::string gdof_json(const GdofExponents &e) {
    const GdofReport r = gdof_report(e);
    const GdofUpper u = gdof_upper(e);
    ordered_json j;
    j["exponents"] = {{"alpha", e.alpha}, {"beta", e.beta}, {"gamma", e.gamma}, {"lambda", e.lambda}};
    j["lower"] = r.lower;
    j["upper"] = r.upper ? ordered_json(*r.upper) : ordered_json(nullptr);
    j["upper_valid"] = r.upper_valid;
    j["upper_formula"] = u.formula();
    j["max_certified"] = r.max_certified ? ordered_json(*r.max_certified) : ordered_json(nullptr);
    j["conditions_hold"] = r.conditions_hold;
    j["zic_upper"] = gdof_zic_upper();
    return j.dump(2) + "\n";
}

std::string fig3_csv(const std::vector<Fig3Row> &rows) {
    std::ostringstream os;
    os << "snrc_db,sum_zicr,sum_zic,wi_certified_zicr,wi_certified_zic\n";
    for (const Fig3Row &r : rows)
        os << format_number(r.snrc_db) << ',' << format_number(r.sum_zicr) << ',' << format_number(r.sum_zic)
           << ',' << flag(r.wi_certified_zicr) << ',' << flag(r.wi_certified_zic) << '\n';
    return os.str();
}

std::string fig5_csv(const std::vector<GdofSweepRow> &rows) {
    std::ostringstream os;
    os << "alpha,gdof_lower,gdof_upper,upper_valid,zic_bound,max_certified\n";
    for (const GdofSweepRow &r : rows)
        os << format_number(r.alpha) << ',' << format_number(r.lower) << ',' << format_number(r.upper) << ','
           << flag(r.upper_valid) << ',' << format_number(r.zic_bound) << ','
           << (r.max_certified ? format_number(*r.max_certified) : std::string()) << '\n';
    return os.str();
}

std::string region_csv(const RegionMask &mask) {
    std::ostringstream os;
    os << "x,y,inside\n";
    for (int j = 0; j < mask.grid.ny; ++j)
        for (int i = 0; i < mask.grid.nx; ++i)
            os << format_number(mask.grid.x(i)) << ',' << format_number(mask.grid.y(j)) << ','
               << flag(mask.at(i, j)) << '\n';
    return os.str();
}

std::string verify_table(const std::vector<CheckResult> &results) {
    std::size_t width = 4;
    for (const CheckResult &r : results) width = std::max(width, r.name.size());
    std::ostringstream os;
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(s.size(), w), ' ');
        return s;
    };
    os << pad("id", 4) << "  " << pad("result", 6) << "  " << pad("check", width) << "  detail\n";
    int failed = 0;
    for (const CheckResult &r : results) {
        failed += !r.passed;
        os << pad(r.id, 4) << "  " << pad(r.passed ? "PASS" : "FAIL", 6) << "  " << pad(r.name, width) << "  "
           << r.detail << '\n';
    }
    os << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed << " failed\n";
    return os.str();
}

int run(const ScenarioConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        validate_for_mode(cfg);
        bool all_passed = true;
        const std::string payload = execute(cfg, all_passed);
        if (cfg.out) {
            std::ofstream f(*cfg.out, std::ios::binary);
            if (!f) throw UsageError("out: cannot open '" + *cfg.out + "' for writing");
            f << payload;
            if (!f) throw UsageError("out: write to '" + *cfg.out + "' failed");
            if (cfg.mode == Mode::verify) out << payload;
        } else {
            out << payload;
        }
        return all_passed ? kOk : kCheckFailed;
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError &e) {
        err << to_string(cfg.mode) << ": " << e.what() << '\n';
        return kDomain;
    }
}

} // namespace zicr::cli
