// channels.hpp: general Gaussian channels, complete-positivity test, composition,
// and reduction of a joint system-ancilla Hamiltonian step to a system channel.

#pragma once

#include <vector>

#include "gbomb/phase_space.hpp"

namespace gbomb {

/// mean -> T mean + d, cov -> T cov T^T + R.
struct GaussianChannel {
    Matrix T;
    Vector d;
    Matrix R;

    Eigen::Index dim() const { return T.rows(); }

    static GaussianChannel identity(Eigen::Index dim);
};

struct CpReport {
    bool ok = false;
    double margin = 0.0; ///< smallest eigenvalue of the Hermitian test matrix
};

/// Throws DimensionMismatch unless T, d, R are consistently 2N-dimensional.
void require_consistent(const GaussianChannel& c, const char* what);

GaussianState apply(const GaussianChannel& c, const GaussianState& s);

/// margin = min eig(R - i(T Omega T^T - Omega)); ok iff margin >= -tol.
CpReport is_cptp(const GaussianChannel& c, double tol = 1e-9);

/// The channel "first, then second".
GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first);

/// n-fold composition c o c o ... o c (n >= 0), by repeated squaring.
GaussianChannel power(const GaussianChannel& c, long long n);

/// Bombardment setup: system S (2 N_S) coupled to a fresh ancilla A (2 N_A) for a
/// step of duration dt. Joint ordering is system modes first, then ancilla modes.
struct JointSetup {
    Matrix F_S;
    Vector alpha_S;
    Matrix F_A;
    Vector alpha_A;
    Matrix G; ///< 2 N_S x 2 N_A coupling
    GaussianState ancilla;
    double dt = 0.0;

    int system_modes() const { return mode_count(F_S.rows()); }
    int ancilla_modes() const { return mode_count(F_A.rows()); }
    Matrix joint_F() const;
    Vector joint_alpha() const;
    /// Omega_S (+) Omega_A.
    Matrix joint_omega() const;
};

/// Shapes, symmetry of F_S and F_A, and ancilla validity. Throws DimensionMismatch,
/// InvalidSetup or InvalidAncillaState.
void validate_setup(const JointSetup& j);

/// Joint flow exp(Omega_SA F_SA dt) restricted to the system:
/// T = M_SS, d = M_SA X_A + d_S, R = M_SA sigma_A M_SA^T.
GaussianChannel reduce_from_joint(const JointSetup& j);

/// Taylor coefficients of reduce_from_joint in dt about 0: channel(dt) = sum_k dt^k {T_k, d_k, R_k}.
struct ChannelSeries {
    std::vector<Matrix> T;
    std::vector<Vector> d;
    std::vector<Matrix> R;

    int order() const { return static_cast<int>(T.size()) - 1; }
    /// Partial sum at dt.
    GaussianChannel evaluate(double dt) const;
};

inline constexpr int kMaxChannelTaylorOrder = 4;

/// Exact coefficients from the exponential series of Omega_SA F_SA; order <= 4.
ChannelSeries channel_taylor(const JointSetup& j, int order);

} // namespace gbomb
