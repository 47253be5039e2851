// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/geometry.hpp>
#include <zicr/model.hpp>
#include <zicr/verification.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zicr::cli {

// Invalid configuration; the message names the offending field.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Mode { capacity, gdof, sweep_fig3, sweep_fig5, relay_region, verify };

Mode parse_mode(std::string_view name);
std::string_view to_string(Mode mode) noexcept;

inline constexpr std::array<std::string_view, 6> kSnrFields{"snr11", "snr21", "snr31", "snr22", "snr32", "snr13"};
inline constexpr std::array<std::string_view, 4> kExponentFields{"alpha", "beta", "gamma", "lambda"};

struct Fig3Params {
    double snrd = 1.0;
    double snrc_db_min = -30.0;
    double snrc_db_max = 5.0;
    int points = 71;
    double snr13 = 1e6;
};

struct ScenarioConfig {
    Mode mode = Mode::verify;
    std::array<std::optional<double>, 6> snr;      // order of kSnrFields, linear scale
    std::array<std::optional<double>, 4> exponents; // order of kExponentFields
    NodeLayout layout;
    GridSpec grid;
    double pathloss_exponent = kPathlossExponent;
    Fig3Params fig3;
    int fig5_points = 101;
    std::optional<std::string> out;
    std::uint64_t seed = kDefaultSeed;

    bool has_snr() const;
    SnrSextet require_snr() const;
    GdofExponents require_exponents() const;
};

// Applies a JSON document on top of `cfg`.
void apply_json(ScenarioConfig &cfg, std::string_view json_text);
void apply_json_file(ScenarioConfig &cfg, const std::string &path);

// Sets one SNR field by name; a "_db" suffix means the value is in dB.
void set_snr_field(ScenarioConfig &cfg, std::string_view name, double value);
void set_exponent_field(ScenarioConfig &cfg, std::string_view name, double value);

// Checks that everything the mode needs is present and in range.
void validate_for_mode(const ScenarioConfig &cfg);

} // namespace zicr::cli
