// thermalization.hpp: a single oscillator bombarded by thermal oscillators.
//
// With F_S = E_S I, F_A = E_A I and thermal ancillae (nu_A), the first-order
// dynamics of the system covariance sigma_S = nu_S I + s_cross X + s_plus Z
// reduce to three linear ODEs. X = [[0, 1], [1, 0]], Z = [[1, 0], [0, -1]].

#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gbomb/bombardment.hpp"

namespace gbomb {

struct OscillatorBathSetup {
    double E_S = 1.0;
    double E_A = 1.0;
    double nu_A = 1.0;
    Matrix G = Matrix::Zero(2, 2);
    double dt = 0.0;
};

/// Throws InvalidSetup unless E_S, E_A, dt > 0, nu_A >= 1 and G is 2 x 2.
void validate_bath_setup(const OscillatorBathSetup& s);

/// The general bombardment setup this corresponds to.
JointSetup to_joint_setup(const OscillatorBathSetup& s);

struct CovCoefficients {
    double nu_S = 0.0;
    double s_cross = 0.0;
    double s_plus = 0.0;

    Matrix reconstruct() const;
};

/// Coefficients over {I, X, Z}. Throws InvalidSetup if sigma is not 2 x 2 symmetric.
CovCoefficients decompose_cov(const Matrix& sigma);

/// Time derivatives of the coefficients under the first-order master equation.
CovCoefficients coefficient_rhs(const CovCoefficients& c, const OscillatorBathSetup& s);

struct ThermalReport {
    double det_G = 0.0;
    double trace_GtG = 0.0;
    bool has_fixed_point = false;
    std::optional<double> nu_infinity;
    double rate = 0.0;     ///< dt det G
    std::optional<double> nu_tilde; ///< Tr(G^T G)/(2 det G) nu_A, defined for det G != 0
    bool cooling_saturated = false;
    bool passivity_ok = false; ///< beta_S(inf) E_S <= beta_A E_A; false without a fixed point
};

ThermalReport analyze(const OscillatorBathSetup& s);

/// G = g1 I + gw omega.
Matrix rwa_coupling(double g1, double gw);

/// Quadrature form of the interaction g a b^dag + h a b + h.c. with a = (q + ip)/sqrt 2:
/// det G = |g|^2 - |h|^2, Tr(G^T G) = 2(|g|^2 + |h|^2).
Matrix ladder_coupling(std::complex<double> g, std::complex<double> h);

enum class SimulationMode {
    first_order, ///< flow of the first-order interpolation generators
    exact,       ///< the discrete bombardment channel, iterated
};

struct TrajectoryPoint {
    double t = 0.0;
    CovCoefficients coefficients;
    double purity = 0.0;
};

struct SimulationOptions {
    SimulationMode mode = SimulationMode::exact;
    long long steps = 1;
    long long sample_stride = 1;     ///< record every n-th step (the last step is always recorded)
    bool stop_at_fixed_point = false;
    double fixed_point_tol = 1e-10;  ///< relative change per unit time
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    GaussianState final_state;
    bool reached_fixed_point = false;
    std::optional<double> fixed_point_time;
};

/// Evolves the system state for whole steps of duration dt.
Trajectory simulate(const OscillatorBathSetup& s, const GaussianState& initial, const SimulationOptions& options);

/// Single-step channel for the chosen mode.
GaussianChannel step_channel(const OscillatorBathSetup& s, SimulationMode mode);

} // namespace gbomb
