// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#pragma once

#include <zicr/model.hpp>

#include <cstdint>
#include <vector>

namespace zicr {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b) noexcept;

struct NodeLayout {
    Point tx1{0.0, 0.0};
    Point rx1{2.0, 0.0};
    Point tx2{0.0, 2.0};
    Point rx2{2.0, 2.0};
};

void validate(const NodeLayout &layout);

struct GridSpec {
    double xmin = -1.0;
    double xmax = 3.0;
    double ymin = -1.0;
    double ymax = 3.0;
    int nx = 200;
    int ny = 200;

    double x(int i) const;
    double y(int j) const;
};

// Cell (i, j) sits at (grid.x(i), grid.y(j)); stored row-major in j.
struct RegionMask {
    GridSpec grid;
    std::vector<std::uint8_t> cells;

    bool at(int i, int j) const { return cells[static_cast<std::size_t>(j) * grid.nx + i] != 0; }
    std::size_t count() const;
};

inline constexpr double kPathlossExponent = 4.0;
inline constexpr double kCoincidenceEps = 1e-9;

SnrSextet snr_from_layout(const NodeLayout &layout, Point relay, double exponent = kPathlossExponent);

// True where the relay and weak-interference conditions both hold.
bool relay_certified_at(const NodeLayout &layout, Point relay, double exponent = kPathlossExponent);

RegionMask relay_region(const NodeLayout &layout, const GridSpec &grid,
                        double exponent = kPathlossExponent);

} // namespace zicr
