// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/capacity.hpp>
#include <zicr/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace zicr {

double distance(Point a, Point b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

void validate(const NodeLayout &l) {
    const Point nodes[] = {l.tx1, l.rx1, l.tx2, l.rx2};
    for (const Point &p : nodes)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("node coordinates must be finite");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (distance(nodes[i], nodes[j]) <= kCoincidenceEps) throw DomainError("layout nodes must be distinct");
}

double GridSpec::x(int i) const { return xmin + (xmax - xmin) * i / (nx - 1); }
double GridSpec::y(int j) const { return ymin + (ymax - ymin) * j / (ny - 1); }

std::size_t RegionMask::count() const {
    return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), std::uint8_t{1}));
}

SnrSextet snr_from_layout(const NodeLayout &l, Point relay, double exponent) {
    validate(l);
    if (!std::isfinite(exponent) || exponent <= 0.0) throw DomainError("pathloss exponent must be > 0");
    for (const Point &p : {l.tx1, l.rx1, l.tx2, l.rx2})
        if (distance(p, relay) <= kCoincidenceEps) throw DomainError("relay coincides with a node");
    auto snr = [&](Point a, Point b) { return std::pow(distance(a, b), -exponent); };
    return SnrSextet{snr(l.tx1, l.rx1), snr(l.tx2, l.rx1), snr(relay, l.rx1),
                     snr(l.tx2, l.rx2), snr(relay, l.rx2), snr(l.tx1, relay)};
}

bool relay_certified_at(const NodeLayout &l, Point relay, double exponent) {
    const SnrSextet s = snr_from_layout(l, relay, exponent);
    return relay_condition_holds(s) && wi_feasible(s).has_value();
}

RegionMask relay_region(const NodeLayout &l, const GridSpec &grid, double exponent) {
    validate(l);
    if (grid.nx < 2 || grid.ny < 2) throw DomainError("relay region grid needs at least 2 points per axis");
    if (!(grid.xmax > grid.xmin) || !(grid.ymax > grid.ymin)) throw DomainError("empty grid bounding box");
    RegionMask mask{grid, std::vector<std::uint8_t>(static_cast<std::size_t>(grid.nx) * grid.ny, 0)};
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            const Point p{grid.x(i), grid.y(j)};
            bool on_node = false;
            for (const Point &q : {l.tx1, l.rx1, l.tx2, l.rx2}) on_node |= distance(p, q) <= kCoincidenceEps;
            if (!on_node && relay_certified_at(l, p, exponent))
                mask.cells[static_cast<std::size_t>(j) * grid.nx + i] = 1;
        }
    return mask;
}

} // namespace zicr
