// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 zicr contributors

#include <zicr/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace zicr {

namespace {

// Mean of log2(A + B cos t) over a period, for A > |B|.
double log2_cos_average(double a, double b) {
    if (!(a > std::abs(b))) throw DomainError("log-average needs A > |B|");
    return std::log2(0.5 * (a + std::sqrt((a - b) * (a + b))));
}

double grid_value(int i, int res) { return static_cast<double>(i) / (res - 1); }

// Maximizer of a concave function on [lo, hi] from its derivative.
template <typename D>
double concave_argmax(D &&deriv, double lo, double hi) {
    if (hi <= lo) return lo;
    if (deriv(hi) >= 0.0) return hi;
    if (deriv(lo) <= 0.0) return lo;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (deriv(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

F2Params f2_params(const Prop1Setup &setup, const InputConfig &inp) {
    validate(inp);
    validate(setup.genie);
    const SnrSextet &s = setup.snr;
    F2Params p;
    p.c1 = s.snr11 * inp.p1 + s.snr31 * inp.p3;
    p.c2 = 2.0 * std::sqrt(s.snr11 * inp.p1 * s.snr31 * inp.p3);
    p.c3 = 1.0 + s.snr21 * inp.p2;
    p.c4 = std::norm(setup.genie.eta1);
    p.c5 = std::abs(setup.genie.eta1) * std::abs(setup.genie.vtilde1);
    p.theta2 = std::arg(std::conj(setup.genie.eta1) * std::conj(setup.genie.vtilde1));
    p.v = std::abs(inp.upsilon);
    return p;
}

double f2_integrand(const F2Params &p, double theta1) {
    const double d = p.c1 + p.c2 * p.v * std::cos(theta1);
    const double den = d + p.c4;
    if (!(den > 0.0)) throw DomainError("integrand denominator must be positive");
    return p.c3 + (d * p.c4 - 2.0 * d * p.c5 * std::cos(p.theta2) - p.c5 * p.c5) / den;
}

double f2_closed_form(const F2Params &p) {
    const double den = p.c1 + p.c4 - p.c2 * p.v;
    if (!(den > 0.0)) throw DomainError("f2 denominator must be positive");
    const double num = p.c3 * p.c4 + p.c1 * (p.c3 + p.c4) - p.c5 * p.c5 - p.c2 * p.c3 * p.v -
                       p.c2 * p.c4 * p.v - 2.0 * p.c5 * (p.c1 - p.c2 * p.v) * std::cos(p.theta2);
    return num / den;
}

double f3_closed_form(const F2Params &p) {
    F2Params q = p;
    q.v = 0.0;
    return f2_closed_form(q);
}

double f2_log_average_exact(const F2Params &p) {
    // integrand = (k d + c3 c4 - c5^2) / (d + c4), d = c1 + c2 v cos t
    const double k = p.c3 + p.c4 - 2.0 * p.c5 * std::cos(p.theta2);
    const double b = p.c2 * p.v;
    return log2_cos_average(k * p.c1 + p.c3 * p.c4 - p.c5 * p.c5, k * b) -
           log2_cos_average(p.c1 + p.c4, b);
}

PhaseAverageCheck phase_average_check(const F2Params &p, int points) {
    PhaseAverageCheck r;
    r.closed_form = std::log2(f2_closed_form(p));
    r.numeric = periodic_average([&](double t) { return std::log2(f2_integrand(p, t)); }, points);
    r.discrepancy = std::abs(r.numeric - r.closed_form);
    return r;
}

PhaseAverageCheck phase_average_check(const Prop1Setup &setup, const InputConfig &inp) {
    return phase_average_check(f2_params(setup, inp));
}

namespace {

// Phase-averaged var(Y1|S1) entropies for every P2 on the grid. X2 is independent of
// S1 and enters Y1 additively, so it adds p2 * snr21 to the conditional variance.
std::vector<double> first_term_over_p2(const Prop1Setup &setup, double v, double p1, double p3,
                                       const std::vector<double> &p2_values) {
    const InputConfig inp{p1, 0.0, p3, cplx(v, 0.0)};
    auto var_at = [&](const ChannelRealization &ph) {
        const JointGaussian jg = build_joint(setup.snr, inp, setup.genie, ph, {Var::Y1, Var::S1});
        return conditional_covariance(jg, {Var::Y1}, {Var::S1})(0, 0).real();
    };

    // Even trapezoid nodes and weights on [0, pi]; the integrand depends on cos(theta1) only.
    std::vector<double> vars;
    std::vector<double> weights;
    if (v == 0.0 || p1 == 0.0 || p3 == 0.0) {
        vars.push_back(var_at(ChannelRealization{}));
        weights.push_back(1.0);
    } else {
        const int n = setup.phase_points;
        for (int k = 0; k <= n / 2; ++k) {
            vars.push_back(var_at(phases_for_theta1(kTwoPi * k / n, inp.upsilon)));
            weights.push_back((k == 0 || k == n / 2 ? 1.0 : 2.0) / n);
        }
    }

    std::vector<double> out;
    out.reserve(p2_values.size());
    for (double p2 : p2_values) {
        double acc = 0.0;
        for (std::size_t k = 0; k < vars.size(); ++k)
            acc += weights[k] * scalar_entropy(vars[k] + p2 * setup.snr.snr21);
        out.push_back(acc);
    }
    return out;
}

double second_term(const Prop1Setup &setup, double p2, double p3) {
    const InputConfig inp{0.0, p2, p3, 0.0};
    const JointGaussian jg = build_joint(setup.snr, inp, setup.genie, ChannelRealization{}, {Var::Y2, Var::S2});
    return conditional_entropy(jg, {Var::Y2}, {Var::S2});
}

void check_phase_points(const Prop1Setup &setup) {
    if (setup.phase_points < 2 || setup.phase_points % 2 != 0)
        throw DomainError("phase_points must be even and >= 2");
}

} // namespace

double prop1_objective(const Prop1Setup &setup, const Prop1Point &pt) {
    check_phase_points(setup);
    validate(InputConfig{pt.p1, pt.p2, pt.p3, cplx(pt.v, 0.0)});
    return first_term_over_p2(setup, pt.v, pt.p1, pt.p3, {pt.p2}).front() + second_term(setup, pt.p2, pt.p3);
}

Prop1Result prop1_bruteforce(const Prop1Setup &setup) {
    check_phase_points(setup);
    const int res = setup.grid_resolution;
    if (res < 2) throw DomainError("brute-force grid needs at least 2 points per axis");
    std::vector<double> axis(static_cast<std::size_t>(res));
    for (int i = 0; i < res; ++i) axis[static_cast<std::size_t>(i)] = grid_value(i, res);

    std::vector<double> second(axis.size() * axis.size());
    for (std::size_t i2 = 0; i2 < axis.size(); ++i2)
        for (std::size_t i3 = 0; i3 < axis.size(); ++i3) second[i2 * axis.size() + i3] = second_term(setup, axis[i2], axis[i3]);

    Prop1Result r;
    r.best = -std::numeric_limits<double>::infinity();
    for (double v : axis)
        for (double p1 : axis)
            for (std::size_t i3 = 0; i3 < axis.size(); ++i3) {
                const std::vector<double> first = first_term_over_p2(setup, v, p1, axis[i3], axis);
                for (std::size_t i2 = 0; i2 < axis.size(); ++i2) {
                    const double val = first[i2] + second[i2 * axis.size() + i3];
                    if (val > r.best) {
                        r.best = val;
                        r.argmax = {v, p1, axis[i2], axis[i3]};
                    }
                }
            }
    r.corner = prop1_objective(setup, Prop1Point{0.0, 1.0, 1.0, 1.0});
    return r;
}

bool maxp_gdof_monotonicity(const SnrSextet &s, int grid) {
    validate(s);
    if (grid < 2) throw DomainError("monotonicity grid needs at least 2 points");
    auto expr = [&](double p1, double p3) {
        return (p1 * s.snr11 + p3 * s.snr31 + p1 * p3 * s.snr11 * s.snr32 +
                2.0 * std::sqrt(s.snr11 * s.snr31 * p1 * p3)) /
               (1.0 + p3 * s.snr32);
    };
    constexpr double slack = 1e-12;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const double p1 = grid_value(i, grid);
            const double p3 = grid_value(j, grid);
            const double here = expr(p1, p3);
            const double tol = slack * std::max(1.0, std::abs(here));
            if (i + 1 < grid && expr(grid_value(i + 1, grid), p3) - here < -tol) return false;
            if (j + 1 < grid && expr(p1, grid_value(j + 1, grid)) - here < -tol) return false;
        }
    return true;
}

bool kkt_feasible(const KktProblem &p) noexcept {
    return p.nbar2 * p.snr31 - p.snr32 * p.snr11 / 2.0 - p.snr32 * p.nbar1 > 0.0;
}

void validate(const KktProblem &p) {
    for (double v : {p.snr11, p.snr31, p.snr32, p.nbar1})
        if (!std::isfinite(v) || v < 0.0) throw DomainError("KKT problem data must be finite and >= 0");
    if (!(p.nbar2 > 0.0 && p.nbar2 <= 0.5)) throw DomainError("nbar2 must lie in (0, 1/2]");
    if (p.n < 1) throw DomainError("KKT problem needs n >= 1");
    if (!kkt_feasible(p)) throw DomainError("KKT problem violates the feasibility condition");
}

double kkt_objective(const KktProblem &p, const std::vector<double> &d3, const std::vector<double> &dm) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d3.size(); ++i)
        acc += 0.5 * (std::log2(p.snr11 * dm[i] + p.snr31 * d3[i] + p.nbar1) -
                      std::log2(p.snr32 * d3[i] + p.nbar2));
    return acc;
}

double kkt_closed_form_objective(const KktProblem &p) {
    return p.n * (std::log2(p.snr11 + p.snr31 + 2.0 * p.nbar1) - std::log2(p.snr32 + 2.0 * p.nbar2));
}

KktPoint kkt_random_start(const KktProblem &p, std::mt19937_64 &rng) {
    const auto m = static_cast<std::size_t>(2 * p.n);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    KktPoint s;
    s.d3.resize(m);
    s.dm.resize(m);
    for (auto &x : s.d3) x = u(rng);
    const double total = std::accumulate(s.d3.begin(), s.d3.end(), 0.0);
    const double budget = p.n * u(rng);
    for (auto &x : s.d3) x = total > 0.0 ? x * budget / total : 0.0;
    for (auto &x : s.dm) x = 0.5 * u(rng);
    return s;
}

KktSolution kkt_solve(const KktProblem &p) {
    const auto m = static_cast<std::size_t>(2 * p.n);
    return kkt_solve(p, KktPoint{std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)});
}

KktSolution kkt_solve(const KktProblem &p, const KktPoint &start) {
    validate(p);
    const auto m = static_cast<std::size_t>(2 * p.n);
    if (start.d3.size() != m || start.dm.size() != m) throw DomainError("start point has wrong length");
    std::vector<double> d3 = start.d3;
    std::vector<double> dm = start.dm;
    for (std::size_t i = 0; i < m; ++i)
        if (d3[i] < 0.0 || dm[i] < 0.0 || dm[i] > 0.5) throw DomainError("start point is infeasible");
    if (std::accumulate(d3.begin(), d3.end(), 0.0) > p.n * (1.0 + 1e-12))
        throw DomainError("start point exceeds the power budget");

    // derivative of term i in d3 (up to the constant 1 / (2 ln 2))
    auto slope = [&](std::size_t i, double x) {
        return p.snr31 / (p.snr11 * dm[i] + p.snr31 * x + p.nbar1) - p.snr32 / (p.snr32 * x + p.nbar2);
    };

    KktSolution sol;
    constexpr double tol = 1e-10;
    constexpr int max_sweeps = 100000;
    for (sol.sweeps = 1; sol.sweeps <= max_sweeps; ++sol.sweeps) {
        double change = 0.0;
        // Every term increases with dm_i, so its optimum is the upper bound.
        if (p.snr11 > 0.0)
            for (auto &x : dm) {
                change = std::max(change, std::abs(0.5 - x));
                x = 0.5;
            }
        // Single-coordinate step: spend any unused budget.
        for (std::size_t i = 0; i < m; ++i) {
            const double others = std::accumulate(d3.begin(), d3.end(), 0.0) - d3[i];
            const double cap = std::max(0.0, p.n - others);
            const double x = concave_argmax([&](double t) { return slope(i, t); }, 0.0, cap);
            change = std::max(change, std::abs(x - d3[i]));
            d3[i] = x;
        }
        // Pair step: move budget between two coordinates with their sum fixed.
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                const double total = d3[i] + d3[j];
                const double x = concave_argmax(
                    [&](double t) { return slope(i, t) - slope(j, total - t); }, 0.0, total);
                change = std::max(change, std::abs(x - d3[i]));
                d3[i] = x;
                d3[j] = total - x;
            }
        if (change < tol) break;
    }
    sol.objective = kkt_objective(p, d3, dm);
    sol.d3 = std::move(d3);
    sol.dm = std::move(dm);
    return sol;
}

} // namespace zicr
