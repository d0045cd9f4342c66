// thermalization.cpp

#include "gbomb/thermalization.hpp"

#include <cmath>
#include <sstream>

#include "gbomb/errors.hpp"

namespace gbomb {

namespace {

Matrix pauli_x()
{
    Matrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    return x;
}

Matrix pauli_z()
{
    Matrix z(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    return z;
}

} // namespace

void validate_bath_setup(const OscillatorBathSetup& s)
{
    if (!(s.E_S > 0.0) || !(s.E_A > 0.0)) {
        throw InvalidSetup("oscillator bath: energy gaps E_S, E_A must be positive");
    }
    if (!(s.nu_A >= 1.0) || !std::isfinite(s.nu_A)) {
        throw InvalidSetup("oscillator bath: nu_A must be finite and >= 1");
    }
    if (!(s.dt > 0.0)) {
        throw InvalidSetup("oscillator bath: dt must be positive");
    }
    if (s.G.rows() != 2 || s.G.cols() != 2) {
        throw InvalidSetup("oscillator bath: G must be 2 x 2");
    }
    if (!s.G.allFinite()) {
        throw InvalidSetup("oscillator bath: G has non-finite entries");
    }
}

JointSetup to_joint_setup(const OscillatorBathSetup& s)
{
    validate_bath_setup(s);
    JointSetup j;
    j.F_S = s.E_S * Matrix::Identity(2, 2);
    j.alpha_S = Vector::Zero(2);
    j.F_A = s.E_A * Matrix::Identity(2, 2);
    j.alpha_A = Vector::Zero(2);
    j.G = s.G;
    j.ancilla = thermal_state(s.nu_A, 1);
    j.dt = s.dt;
    return j;
}

Matrix CovCoefficients::reconstruct() const
{
    return nu_S * Matrix::Identity(2, 2) + s_cross * pauli_x() + s_plus * pauli_z();
}

CovCoefficients decompose_cov(const Matrix& sigma)
{
    if (sigma.rows() != 2 || sigma.cols() != 2) {
        throw InvalidSetup("decompose_cov: sigma must be 2 x 2");
    }
    require_symmetric(sigma, "decompose_cov: sigma", 1e-12 * std::max(1.0, max_abs(sigma)));
    return {0.5 * (sigma(0, 0) + sigma(1, 1)), 0.5 * (sigma(0, 1) + sigma(1, 0)), 0.5 * (sigma(0, 0) - sigma(1, 1))};
}

CovCoefficients coefficient_rhs(const CovCoefficients& c, const OscillatorBathSetup& s)
{
    const Matrix& G = s.G;
    const double det = G.determinant();
    const double noise = 0.5 * s.dt * s.nu_A;
    CovCoefficients out;
    out.nu_S = -s.dt * det * c.nu_S + noise * (G.transpose() * G).trace();
    out.s_cross = -2.0 * s.E_S * c.s_plus - s.dt * det * c.s_cross - noise * (G.transpose() * pauli_x() * G).trace();
    out.s_plus = 2.0 * s.E_S * c.s_cross - s.dt * det * c.s_plus - noise * (G.transpose() * pauli_z() * G).trace();
    return out;
}

ThermalReport analyze(const OscillatorBathSetup& s)
{
    validate_bath_setup(s);
    ThermalReport r;
    r.det_G = s.G.determinant();
    r.trace_GtG = (s.G.transpose() * s.G).trace();
    r.rate = s.dt * r.det_G;
    if (r.det_G != 0.0) {
        r.nu_tilde = r.trace_GtG / (2.0 * r.det_G) * s.nu_A;
    }
    r.has_fixed_point = r.det_G > 0.0;
    r.cooling_saturated = std::abs(r.trace_GtG - 2.0 * r.det_G) <= 1e-12 * std::max(1.0, r.trace_GtG);
    if (r.has_fixed_point) {
        r.nu_infinity = r.nu_tilde;
        const double lhs = beta_energy_from_nu(*r.nu_infinity);
        const double rhs = beta_energy_from_nu(s.nu_A);
        r.passivity_ok = lhs <= rhs * (1.0 + 1e-12);
    }
    return r;
}

Matrix rwa_coupling(double g1, double gw)
{
    return g1 * Matrix::Identity(2, 2) + gw * symplectic_form(1);
}

Matrix ladder_coupling(std::complex<double> g, std::complex<double> h)
{
    Matrix G(2, 2);
    G << g.real() + h.real(), g.imag() + h.imag(), -g.imag() + h.imag(), g.real() - h.real();
    return G;
}

GaussianChannel step_channel(const OscillatorBathSetup& s, SimulationMode mode)
{
    const JointSetup j = to_joint_setup(s);
    if (mode == SimulationMode::exact) {
        return reduce_from_joint(j);
    }
    return propagate(closed_form_series(j, 1).truncated(1, s.dt), s.dt);
}

Trajectory simulate(const OscillatorBathSetup& s, const GaussianState& initial, const SimulationOptions& options)
{
    if (options.steps < 1 || options.sample_stride < 1) {
        throw InvalidSetup("simulate: steps and sample_stride must be >= 1");
    }
    if (initial.dim() != 2) {
        throw DimensionMismatch("simulate: the system is a single oscillator");
    }
    require_valid_state(initial, "simulate: initial state");
    const GaussianChannel step = step_channel(s, options.mode);

    Trajectory traj;
    auto record = [&](long long n, const GaussianState& state) {
        traj.points.push_back({static_cast<double>(n) * s.dt, decompose_cov(state.cov), 1.0 / state.cov.determinant()});
    };

    GaussianState state = initial;
    record(0, state);
    for (long long n = 1; n <= options.steps; ++n) {
        GaussianState next = apply(step, state);
        next.cov = 0.5 * (next.cov + next.cov.transpose());
        const double change = max_abs(next.cov - state.cov) / (s.dt * std::max(1.0, max_abs(state.cov)));
        state = std::move(next);
        const bool settled = change < options.fixed_point_tol;
        if (settled && !traj.reached_fixed_point) {
            traj.reached_fixed_point = true;
            traj.fixed_point_time = static_cast<double>(n) * s.dt;
        }
        const bool last = n == options.steps || (settled && options.stop_at_fixed_point);
        if (n % options.sample_stride == 0 || last) {
            record(n, state);
        }
        if (last) {
            break;
        }
    }
    traj.final_state = state;
    return traj;
}

} // namespace gbomb
