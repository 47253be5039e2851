// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include "config.hpp"
#include "run.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace zicr;
using namespace zicr::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_config(const ScenarioConfig &cfg) {
    std::ostringstream out, err;
    const int code = run(cfg, out, err);
    return {code, out.str(), err.str()};
}

ScenarioConfig from_json(const std::string &text) {
    ScenarioConfig cfg;
    apply_json(cfg, text);
    return cfg;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> v;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

} // namespace

TEST(Modes, ParseAndPrint) {
    for (const char *name : {"capacity", "gdof", "sweep-fig3", "sweep-fig5", "relay-region", "verify"})
        EXPECT_EQ(to_string(parse_mode(name)), name);
    EXPECT_THROW(parse_mode("bogus"), UsageError);
}

TEST(Config, ParsesSnrWithDecibels) {
    const ScenarioConfig cfg = from_json(R"({"mode": "capacity",
        "snr": {"snr11": 1, "snr21_db": -20, "snr31": 1, "snr22": 1, "snr32": 0.01, "snr13_db": 60}})");
    EXPECT_EQ(cfg.mode, Mode::capacity);
    const SnrSextet s = cfg.require_snr();
    EXPECT_NEAR(s.snr21, 0.01, 1e-17);
    EXPECT_NEAR(s.snr13, 1e6, 1e-9);
}

TEST(Config, LaterValuesOverride) {
    ScenarioConfig cfg = from_json(R"({"exponents": {"alpha": 0.3, "beta": 2, "gamma": 2, "lambda": 0.3}})");
    set_exponent_field(cfg, "beta", 2.5);
    EXPECT_EQ(cfg.require_exponents().beta, 2.5);
    set_snr_field(cfg, "snr11_db", 10.0);
    EXPECT_NEAR(*cfg.snr[0], 10.0, 1e-14);
}

TEST(Config, LayoutGridAndSweeps) {
    const ScenarioConfig cfg = from_json(R"({"layout": {"tx2": [0, 3]}, "grid": {"resolution": 50, "xmax": 4},
        "fig3": {"snrd_db": 10, "points": 11}, "fig5": {"points": 21}, "seed": 7, "out": "x.csv"})");
    EXPECT_EQ(cfg.layout.tx2.y, 3.0);
    EXPECT_EQ(cfg.layout.rx1.x, 2.0);
    EXPECT_EQ(cfg.grid.nx, 50);
    EXPECT_EQ(cfg.grid.ny, 50);
    EXPECT_EQ(cfg.grid.xmax, 4.0);
    EXPECT_NEAR(cfg.fig3.snrd, 10.0, 1e-14);
    EXPECT_EQ(cfg.fig3.points, 11);
    EXPECT_EQ(cfg.fig5_points, 21);
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.out.value(), "x.csv");
}

TEST(Config, UsageErrors) {
    EXPECT_THROW(from_json("{"), UsageError);
    EXPECT_THROW(from_json(R"({"colour": 1})"), UsageError);
    EXPECT_THROW(from_json(R"({"snr": {"snr99": 1}})"), UsageError);
    EXPECT_THROW(from_json(R"({"snr": {"snr11": "high"}})"), UsageError);
    EXPECT_THROW(from_json(R"({"fig3": {"snrd": 1, "snrd_db": 0}})"), UsageError);
    EXPECT_THROW(from_json(R"({"layout": {"tx1": [0]}})"), UsageError);
    EXPECT_THROW(from_json(R"({"seed": -1})"), UsageError);

    ScenarioConfig cfg = from_json(R"({"mode": "capacity", "snr": {"snr11": 1}})");
    const Outcome o = run_config(cfg);
    EXPECT_EQ(o.code, kUsage);
    EXPECT_NE(o.err.find("snr21"), std::string::npos);
    EXPECT_TRUE(o.out.empty());
}

TEST(Run, DomainErrorsExitWithDedicatedCode) {
    const ScenarioConfig cfg = from_json(R"({"mode": "gdof",
        "exponents": {"alpha": -1, "beta": 2, "gamma": 2, "lambda": 0.3}})");
    EXPECT_NE(run_config(cfg).code, kOk);
}

TEST(Run, CapacityRecord) {
    const Outcome o = run_config(from_json(R"({"mode": "capacity",
        "snr": {"snr11": 1, "snr21": 0.01, "snr31": 1, "snr22": 1, "snr32": 0.01, "snr13": 1e6}})"));
    ASSERT_EQ(o.code, kOk) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_NEAR(j["sum_capacity"].get<double>(), 2.5682484024350412, 1e-14);
    EXPECT_TRUE(j["certified"].get<bool>());
    EXPECT_TRUE(j["relay_condition"].get<bool>());
    ASSERT_TRUE(j["certificate"].is_object());
    EXPECT_TRUE(wi_conditions_hold(symmetric_snr(1.0, 0.01, 1e6),
                                   {j["certificate"]["beta1"].get<double>(), j["certificate"]["beta2"].get<double>()}));
    EXPECT_TRUE(j["genie_ub"]["valid"].get<bool>());
    EXPECT_TRUE(j.contains("cutset"));
}

TEST(Run, GdofReportBoundary) {
    const Outcome o = run_config(from_json(R"({"mode": "gdof",
        "exponents": {"alpha": 0.5, "beta": 2, "gamma": 2, "lambda": 0.5}})"));
    ASSERT_EQ(o.code, kOk) << o.err;
    const auto j = nlohmann::json::parse(o.out);
    EXPECT_EQ(j["lower"].get<double>(), 2.0);
    EXPECT_EQ(j["upper"].get<double>(), 3.0);
    EXPECT_FALSE(j["upper_valid"].get<bool>());
    EXPECT_EQ(j["upper_formula"].get<double>(), 2.0);
    EXPECT_TRUE(j["max_certified"].is_null());
}

TEST(Run, Fig3CsvCrossesAtZeroDb) {
    const Outcome o = run_config(from_json(R"({"mode": "sweep-fig3"})"));
    ASSERT_EQ(o.code, kOk) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 72u);
    EXPECT_EQ(rows[0], "snrc_db,sum_zicr,sum_zic,wi_certified_zicr,wi_certified_zic");
    bool found = false;
    for (const std::string &r : rows) {
        if (r.rfind("0,", 0) != 0) continue;
        found = true;
        const std::string rest = r.substr(2);
        const auto comma = rest.find(',');
        const std::string a = rest.substr(0, comma);
        const std::string b = rest.substr(comma + 1, rest.find(',', comma + 1) - comma - 1);
        EXPECT_EQ(a, b);
    }
    EXPECT_TRUE(found);
}

TEST(Run, Fig5CsvRows) {
    const Outcome o = run_config(from_json(R"({"mode": "sweep-fig5", "exponents": {"beta": 2, "gamma": 2}})"));
    ASSERT_EQ(o.code, kOk) << o.err;
    const auto rows = lines(o.out);
    ASSERT_EQ(rows.size(), 102u);
    EXPECT_EQ(rows[0], "alpha,gdof_lower,gdof_upper,upper_valid,zic_bound,max_certified");
    EXPECT_EQ(rows[1], "0,3,3,1,2,3");
    EXPECT_EQ(rows[51], "0.5,2,2,0,2,");
}

TEST(Run, RegionCsvIsDeterministic) {
    const ScenarioConfig cfg = from_json(R"({"mode": "relay-region", "grid": {"resolution": 30}})");
    const Outcome a = run_config(cfg);
    const Outcome b = run_config(cfg);
    ASSERT_EQ(a.code, kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto rows = lines(a.out);
    ASSERT_EQ(rows.size(), 901u);
    EXPECT_EQ(rows[0], "x,y,inside");
    EXPECT_EQ(rows[1], "-1,-1,0");
}

TEST(Run, RegionRejectsCoincidentLayout) {
    const Outcome o = run_config(from_json(R"({"mode": "relay-region", "layout": {"tx2": [2, 0]}})"));
    EXPECT_EQ(o.code, kUsage);
}

TEST(VerifyTable, CountsFailures) {
    const std::string t = verify_table({{"C1", "first", true, "ok"}, {"C2", "second", false, "off by 1"}});
    const auto rows = lines(t);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_NE(rows[1].find("PASS"), std::string::npos);
    EXPECT_NE(rows[2].find("FAIL"), std::string::npos);
    EXPECT_NE(rows[2].find("off by 1"), std::string::npos);
    EXPECT_EQ(rows[3], "1 passed, 1 failed");
}

TEST(FormatNumber, ShortestStableForm) {
    EXPECT_EQ(format_number(0.5), "0.5");
    EXPECT_EQ(format_number(3.0), "3");
    EXPECT_EQ(format_number(-30.0), "-30");
}
