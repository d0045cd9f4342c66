// interpolation.hpp: the time-independent master equation whose flow reproduces a
// discrete Gaussian channel exactly at every multiple of the step duration.
//
//   dX/dt     = Omega (A X + b)
//   dsigma/dt = (Omega A) sigma + sigma (Omega A)^T + C

#pragma once

#include "gbomb/channels.hpp"

namespace gbomb {

struct Generators {
    Matrix A;
    Vector b;
    Matrix C; ///< symmetric

    Eigen::Index dim() const { return A.rows(); }
};

/// Interpolation generators of channel c with step dt (principal branch):
///   Omega A = Log(T)/dt
///   Omega b = Log(T)/(T - I) d / dt
///   C       = unvec(Log(T (x) T)/(T (x) T - I) vec(R)) / dt
/// Throws BranchCutEigenvalue (dt too large; halve it) or SingularInput.
Generators generators_from_channel(const GaussianChannel& c, double dt,
                                   const Tolerances& tol = default_tolerances());

/// b from the block logarithm of the affine lift [[1, 0], [d, T]]. Independent of
/// logm_div; used to cross-check generators_from_channel.
Vector displacement_generator_via_lift(const GaussianChannel& c, double dt,
                                       const Tolerances& tol = default_tolerances());

/// Generator of the vectorized covariance flow, K = Omega A (x) I + I (x) Omega A,
/// so that vec(exp(Omega A t) sigma exp(Omega A t)^T) = exp(K t) vec(sigma).
Matrix covariance_flow_generator(const Generators& g);

/// Channel obtained by integrating the master equation for time t >= 0.
GaussianChannel propagate(const Generators& g, double t);

/// margin = min eig(C - i Omega (A - A^T) Omega); ok iff margin >= -tol.
CpReport cp_differential_check(const Generators& g, double tol = 1e-9);

struct StateDerivative {
    Vector mean;
    Matrix cov;
};

StateDerivative master_rhs(const Generators& g, const GaussianState& s);

} // namespace gbomb
