// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include "config.hpp"
#include "run.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char **argv) {
    using namespace zicr::cli;

    CLI::App app{"Capacity and GDoF toolkit for the phase-fading Z-interference channel with a relay"};
    app.set_help_flag("-h,--help", "Print help and exit");

    std::string mode;
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::map<std::string, double> snr_over;
    std::map<std::string, double> exp_over;
    std::optional<int> grid;
    std::optional<int> points;

    app.add_option("mode", mode, "capacity | gdof | sweep-fig3 | sweep-fig5 | relay-region | verify")->required();
    app.add_option("--config", config_path, "JSON scenario file");
    app.add_option("--out", out, "Write output to this file instead of stdout");
    app.add_option("--seed", seed, "Seed for randomized checks (default 42)");
    for (std::string_view f : kSnrFields) {
        const std::string name(f);
        app.add_option_function<double>("--" + name, [&, name](double v) { snr_over[name] = v; },
                                        "Linear SNR override");
        app.add_option_function<double>("--" + name + "_db", [&, name](double v) { snr_over[name + "_db"] = v; },
                                        "SNR override in dB");
    }
    for (std::string_view f : kExponentFields) {
        const std::string name(f);
        app.add_option_function<double>("--" + name, [&, name](double v) { exp_over[name] = v; },
                                        "GDoF exponent override");
    }
    app.add_option("--grid", grid, "Relay-region resolution per axis");
    app.add_option("--points", points, "Number of sweep points");

    CLI11_PARSE(app, argc, argv);

    ScenarioConfig cfg;
    try {
        if (!config_path.empty()) apply_json_file(cfg, config_path);
        cfg.mode = parse_mode(mode);
        for (const auto &[k, v] : snr_over) set_snr_field(cfg, k, v);
        for (const auto &[k, v] : exp_over) set_exponent_field(cfg, k, v);
        if (out) cfg.out = *out;
        if (seed) cfg.seed = *seed;
        if (grid) cfg.grid.nx = cfg.grid.ny = *grid;
        if (points) cfg.fig3.points = cfg.fig5_points = *points;
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return run(cfg, std::cout, std::cerr);
}
