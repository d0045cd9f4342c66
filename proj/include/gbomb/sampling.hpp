// sampling.hpp: seeded random setups for sweeps and property tests, and the
// q(x)q family with ground-state ancillae used to search for third-order CP failure.

#pragma once

#include <random>

#include "gbomb/channels.hpp"

namespace gbomb {

using Rng = std::mt19937_64;

struct RandomSetupOptions {
    int system_modes = 1;
    int ancilla_modes = 1;
    double dt = 0.1;
    double nu_min = 1.0;  ///< ancilla symplectic eigenvalues ~ U[nu_min, nu_max]
    double nu_max = 3.0;
    double squeeze = 0.5; ///< scale of the random symplectic acting on the ancilla
};

/// Entries ~ U[-1, 1], symmetrized.
Matrix random_symmetric(Rng& rng, Eigen::Index n);
Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols);
Vector random_vector(Rng& rng, Eigen::Index n);

/// exp(Omega H scale) for random symmetric H.
Matrix random_symplectic(Rng& rng, int n_modes, double scale);

/// S diag(nu_1 I, ..., nu_N I) S^T with nu_i ~ U[nu_min, nu_max], mean ~ U[-1, 1].
GaussianState random_state(Rng& rng, int n_modes, double nu_min, double nu_max, double squeeze);

/// F_S, F_A, G, alpha_S, alpha_A, X_A with entries ~ U[-1, 1]; random ancilla state.
JointSetup random_setup(Rng& rng, const RandomSetupOptions& options);

/// F_S = omega_S I, F_A = omega_A I, G = g diag(1, 0) (q_S coupled to q_A), vacuum ancilla.
JointSetup qq_ground_setup(double omega_s, double omega_a, double g, double dt);

} // namespace gbomb
