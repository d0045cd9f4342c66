// phase_space.hpp: Gaussian states, the symplectic form, quadratic Hamiltonians
// and their symplectic-affine flows.
//
// Quadratures are ordered (q1, p1, ..., qN, pN) everywhere and [q, p] = i, so
// every quantity is dimensionless.

#pragma once

#include <optional>
#include <string>

#include "gbomb/linalg.hpp"

namespace gbomb {

/// Omega = diag(w, ..., w) with w = [[0, 1], [-1, 0]]; size 2N x 2N.
Matrix symplectic_form(int n_modes);

/// Mode count of a phase-space dimension; throws DimensionMismatch for odd or zero dim.
int mode_count(Eigen::Index dim);

struct GaussianState {
    Vector mean;
    Matrix cov;

    Eigen::Index dim() const { return mean.size(); }
    int modes() const { return mode_count(mean.size()); }
};

struct StateCheck {
    bool valid = false;
    double min_eigenvalue = 0.0; ///< smallest eigenvalue of cov + i Omega
    double tolerance = 0.0;
    std::string reason; ///< empty when valid
};

/// Uncertainty-principle test cov + i Omega >= 0 with tolerance 1e-9 max(1, |cov|).
/// Throws DimensionMismatch for inconsistent shapes.
StateCheck validate_state(const GaussianState& s);

/// Throws InvalidState (or the given subclass message prefix) if the state is invalid.
void require_valid_state(const GaussianState& s, const char* what = "state");

/// 1 / det(cov). Throws InvalidState for invalid states.
double purity(const GaussianState& s);

/// Thermal state with cov = nu I and zero mean. Throws InvalidState for nu < 1.
GaussianState thermal_state(double nu, int n_modes);

GaussianState vacuum_state(int n_modes);

/// nu = (e^{x} + 1) / (e^{x} - 1) for x = beta E > 0 (x = +inf gives 1).
double nu_from_beta(double beta, double energy);

/// Inverse of nu_from_beta as beta E = ln((nu + 1)/(nu - 1)). nu = 1 returns +inf.
/// Throws InvalidState for nu < 1.
double beta_energy_from_nu(double nu);

/// beta = beta_energy_from_nu(nu) / E.
double beta_from_nu(double nu, double energy);

struct QuadraticHamiltonian {
    Matrix F;     ///< symmetric, energy units
    Vector alpha; ///< linear term
};

struct AffineSymplectic {
    Matrix S;
    Vector d;
};

/// Flow of H = X^T F X / 2 + alpha^T X for time t: S = exp(Omega F t),
/// d = (exp(Omega F t) - I)/(Omega F) Omega alpha.
AffineSymplectic hamiltonian_flow(const QuadraticHamiltonian& h, double t);

/// mean -> S mean + d, cov -> S cov S^T.
GaussianState apply_affine(const GaussianState& s, const AffineSymplectic& m);

/// max |S Omega S^T - Omega|.
double symplectic_defect(const Matrix& s);

void require_symmetric(const Matrix& m, const char* what, double tol);

} // namespace gbomb
