// acceptance.cpp: one PASS/FAIL line per acceptance criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "gbomb/classifier.hpp"
#include "gbomb/serialization.hpp"
#include "gbomb/thermalization.hpp"
#include "support/oracles.hpp"

using namespace gbomb;
using namespace gbomb::testing;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

double series_term_diff(const GeneratorSeries& a, const GeneratorSeries& b, int k)
{
    return max_diff(a.terms[k], b.terms[k]);
}

OscillatorBathSetup bath(const Matrix& G, double nu_A, double dt)
{
    OscillatorBathSetup s;
    s.nu_A = nu_A;
    s.G = G;
    s.dt = dt;
    return s;
}

Matrix diag2(double a, double b)
{
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

// Fixed point of sigma -> T sigma T^T + R.
Matrix channel_fixed_point(const GaussianChannel& c)
{
    const Eigen::Index n = c.dim();
    const Matrix K = Matrix::Identity(n * n, n * n) - tensor_product(c.T, c.T);
    return unvec(K.partialPivLu().solve(vec(c.R)), n, n);
}

Outcome interpolation_exactness()
{
    Rng rng = make_rng(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double dt = trial % 2 == 0 ? 0.01 : 0.1;
        const JointSetup j = random_setup_any(rng, dt);
        const GaussianChannel step = reduce_from_joint(j);
        const Generators g = generators_from_channel(step, dt);
        for (int n = 1; n <= 20; ++n) {
            worst = std::max(worst, max_diff(propagate(g, n * dt), power(step, n)));
        }
    }
    return {worst <= 1e-8, "max error " + fmt(worst)};
}

Outcome series_cross_route()
{
    Rng rng = make_rng(1002);
    double cross = 0.0, numeric = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const JointSetup j = random_setup_any(rng, 0.1);
        const GeneratorSeries closed = closed_form_series(j, 2);
        const GeneratorSeries route = series_from_channel_series(channel_taylor(j, 3), 2);
        const GeneratorSeries fit = numeric_series(j, {1e-2, 5e-3, 2.5e-3});
        for (int k = 0; k <= 2; ++k) {
            cross = std::max(cross, series_term_diff(closed, route, k));
            numeric = std::max({numeric, series_term_diff(closed, fit, k), series_term_diff(route, fit, k)});
        }
    }
    return {cross <= 1e-10 && numeric <= 1e-5, "cross-route " + fmt(cross) + ", numerical " + fmt(numeric)};
}

Outcome thermalization_fixed_point()
{
    const OscillatorBathSetup s = bath(rwa_coupling(0.1, 0.0), 3.0, 0.05);
    const ThermalReport r = analyze(s);
    if (!r.nu_infinity || *r.nu_infinity != 3.0) {
        return {false, "nu_infinity is not 3"};
    }
    SimulationOptions o;
    o.steps = std::llround(10.0 / (s.dt * r.det_G) / s.dt);
    o.sample_stride = o.steps;
    const Trajectory t = simulate(s, thermal_state(1.0, 1), o);
    const double nu = t.points.back().coefficients.nu_S;
    return {std::abs(nu - 3.0) <= 1e-2, "nu_S(T) = " + fmt(nu) + " after " + std::to_string(o.steps) + " steps"};
}

Outcome effective_temperature()
{
    const double formula = 3.75;
    const ThermalReport r = analyze(bath(diag2(0.2, 0.1), 3.0, 0.05));
    if (!r.nu_infinity || std::abs(*r.nu_infinity - formula) > 1e-14) {
        return {false, "formula value wrong"};
    }
    auto gap = [&](double dt, double& nu) {
        const Matrix fp = channel_fixed_point(step_channel(bath(diag2(0.2, 0.1), 3.0, dt), SimulationMode::exact));
        nu = decompose_cov(0.5 * (fp + fp.transpose())).nu_S;
        return max_abs(fp - formula * Matrix::Identity(2, 2));
    };
    double nu_full = 0.0, nu_half = 0.0;
    const double g_full = gap(0.05, nu_full);
    const double g_half = gap(0.025, nu_half);

    // Cross-check the linear solve against the simulated asymptote.
    const OscillatorBathSetup s = bath(diag2(0.2, 0.1), 3.0, 0.05);
    SimulationOptions o;
    o.steps = std::llround(30.0 / (s.dt * r.det_G) / s.dt);
    o.sample_stride = o.steps;
    const double simulated = simulate(s, thermal_state(1.0, 1), o).points.back().coefficients.nu_S;

    const double ratio = g_half / g_full;
    const bool pass = std::abs(nu_full - formula) <= 0.1 * formula && std::abs(simulated - nu_full) <= 1e-6 * formula &&
                      ratio >= 0.4 && ratio <= 0.6;
    return {pass, "asymptote " + fmt(nu_full) + " (simulated " + fmt(simulated) + "), gap ratio " + fmt(ratio)};
}

Outcome non_thermalization()
{
    const OscillatorBathSetup s = bath(diag2(0.1, 0.0), 3.0, 0.05);
    const ThermalReport r = analyze(s);
    if (r.has_fixed_point || r.nu_infinity) {
        return {false, "fixed point reported"};
    }
    SimulationOptions o;
    o.steps = 10000;
    const Trajectory t = simulate(s, thermal_state(1.0, 1), o);
    bool increasing = true;
    for (std::size_t i = 1; i < t.points.size(); ++i) {
        increasing = increasing && t.points[i].coefficients.nu_S > t.points[i - 1].coefficients.nu_S;
    }
    return {increasing && t.points.size() == 10001, "trace strictly increasing over 10^4 steps: " +
                                                         std::string(increasing ? "yes" : "no")};
}

Outcome rank_one()
{
    Rng rng = make_rng(1006);
    std::uniform_int_distribution<int> modes(1, 3);
    double worst = 0.0;
    bool any_flag = false;
    for (int trial = 0; trial < 1000; ++trial) {
        const Vector u = random_vector(rng, 2 * modes(rng));
        const Vector v = random_vector(rng, 2 * modes(rng));
        const PurifyReport p = first_order_purify(rank_one_coupling(u, v));
        worst = std::max(worst, std::abs(p.value));
        any_flag = any_flag || p.purifies;
    }
    return {worst <= 1e-12 && !any_flag, "max |value| " + fmt(worst)};
}

Outcome cp_through_second_order()
{
    Rng rng = make_rng(1007);
    double worst = INFINITY;
    for (int trial = 0; trial < 100; ++trial) {
        const JointSetup j = random_setup_any(rng, 0.01);
        const GeneratorSeries s = series_from_channel_series(channel_taylor(j, 3), 2);
        for (int k = 0; k <= 2; ++k) {
            worst = std::min(worst, truncated_cp_check(s, k, j.dt).margin);
        }
    }
    return {worst >= -1e-9, "min margin " + fmt(worst)};
}

double order3_margin(const JointSetup& j)
{
    return truncated_cp_check(series_from_channel_series(channel_taylor(j, 4), 3), 3, j.dt).margin;
}

Outcome third_order_failure()
{
    double worst = INFINITY;
    for (double ws : {0.5, 1.0, 2.0}) {
        for (double wa : {0.5, 1.0, 2.0}) {
            for (double g : {0.1, 0.3, 1.0}) {
                for (double dt : {0.05, 0.1, 0.2}) {
                    worst = std::min(worst, order3_margin(qq_ground_setup(ws, wa, g, dt)));
                }
            }
        }
    }
    const Json fixture = read_json_file(std::string(GBOMB_TEST_DATA_DIR) + "/fixtures/third_order_cp_counterexample.json");
    const double stored = fixture["margin"].get<double>();
    const double recomputed = order3_margin(joint_setup_from_json(fixture["setup"]));
    const bool fixture_ok = stored < -1e-6 && std::abs(recomputed - stored) <= 1e-9 * std::max(1.0, std::abs(stored));
    return {worst < -1e-6 && fixture_ok, "search min margin " + fmt(worst) + ", fixture margin " + fmt(recomputed)};
}

Outcome purification_consistency()
{
    Rng rng = make_rng(1009);
    std::uniform_real_distribution<double> nu_dist(1.0, 3.0);
    int checked_pos = 0, checked_neg = 0;
    bool ok = true;
    std::string why;
    while (checked_pos < 20 || checked_neg < 20) {
        const Matrix G = random_matrix(rng, 2, 2);
        const double det = G.determinant();
        if (std::abs(det) < 0.05 || (det > 0 && checked_pos >= 20) || (det < 0 && checked_neg >= 20)) {
            continue;
        }
        const OscillatorBathSetup s = bath(G, nu_dist(rng), 0.05);
        const ThermalReport r = analyze(s);
        const Generators a1 = closed_form_series(to_joint_setup(s), 1).truncated(1, s.dt);
        const bool flag = can_purify(a1.A * s.dt);
        SimulationOptions o;
        o.mode = SimulationMode::first_order;
        if (det > 0) {
            o.steps = std::llround(1.0 / (s.dt * r.det_G) / s.dt);
            const Trajectory t = simulate(s, thermal_state(2.0 * *r.nu_tilde, 1), o);
            bool up = true;
            for (std::size_t i = 1; i < t.points.size(); ++i) {
                up = up && t.points[i].purity > t.points[i - 1].purity;
            }
            if (!flag || !up) {
                ok = false;
                why = "det G > 0 case failed";
            }
            ++checked_pos;
        } else {
            o.steps = 2000;
            const Trajectory t = simulate(s, thermal_state(2.0, 1), o);
            bool down = true;
            for (std::size_t i = 1; i < t.points.size(); ++i) {
                down = down && t.points[i].purity < t.points[i - 1].purity;
            }
            if (flag || !down) {
                ok = false;
                why = "det G < 0 case failed";
            }
            ++checked_neg;
        }
    }
    return {ok, ok ? "20 setups with det G > 0, 20 with det G < 0" : why};
}

Outcome table_conformance()
{
    Rng rng = make_rng(1010);
    double parity = 0.0;
    int violations = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const JointSetup j = random_setup_any(rng, 0.1);
        const GeneratorSeries s = series_from_channel_series(channel_taylor(j, 3), 2);
        for (int k = 0; k <= 2; ++k) {
            if (!table_availability(s, k).subset_of(available_dynamics(k))) {
                ++violations;
            }
            const Matrix& A = s.terms[k].A;
            parity = std::max(parity, k % 2 == 0 ? max_abs(A - A.transpose()) : max_abs(A + A.transpose()));
        }
    }
    return {violations == 0 && parity <= 1e-12,
            std::to_string(violations) + " subset violations, parity defect " + fmt(parity)};
}

Outcome propagation_quadrature()
{
    Rng rng = make_rng(1011);
    std::uniform_int_distribution<int> modes(1, 2);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 2 * modes(rng);
        const Matrix C0 = random_matrix(rng, n, n);
        const Generators g{random_matrix(rng, n, n), random_vector(rng, n), C0 * C0.transpose()};
        const double t = 0.5 + trial % 5 * 0.25;
        worst = std::max(worst, max_abs(propagate(g, t).R - noise_quadrature(g, t)));
    }
    return {worst <= 1e-8, "max error " + fmt(worst)};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"interpolation exactness", interpolation_exactness},
        {"series cross-route", series_cross_route},
        {"thermalization fixed point", thermalization_fixed_point},
        {"effective temperature", effective_temperature},
        {"non-thermalization", non_thermalization},
        {"rank-one no purification", rank_one},
        {"CP through second order", cp_through_second_order},
        {"third-order CP failure", third_order_failure},
        {"purification consistency", purification_consistency},
        {"table conformance", table_conformance},
        {"covariance propagation quadrature", propagation_quadrature},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
                  << " (" << fmt(secs) << " s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
