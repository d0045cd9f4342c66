// bombardment.hpp: power series of the interpolation generators in the step
// duration dt for a system repeatedly hit by fresh Gaussian ancillae, plus the
// purification predicates that go with them.

#pragma once

#include <vector>

#include "gbomb/interpolation.hpp"

namespace gbomb {

/// Generators(dt) = sum_k dt^k terms[k].
struct GeneratorSeries {
    std::vector<Generators> terms;

    int order() const { return static_cast<int>(terms.size()) - 1; }
    /// Partial sum through order k at step dt.
    Generators truncated(int k, double dt) const;
};

inline constexpr int kMaxGeneratorSeriesOrder = 3;
inline constexpr int kMaxClosedFormOrder = 2;

/// Generator coefficients through `order` (<= 3) from channel Taylor coefficients
/// through order + 1. Orders 0..2 use the closed combinatoric formulas; order 3
/// comes from composing the logarithm series. Throws MalformedSeries when
/// T_0 != I, d_0 != 0, R_0 != 0 or too few channel terms are supplied.
GeneratorSeries series_from_channel_series(const ChannelSeries& channel, int order);

/// Same coefficients for every order, all obtained by truncated power-series
/// composition of Log(I + P), Log(I + P)/P and the vectorized covariance map.
GeneratorSeries series_by_log_composition(const ChannelSeries& channel, int order);

/// Closed forms in terms of the joint Hamiltonian and ancilla state, order <= 2.
GeneratorSeries closed_form_series(const JointSetup& j, int order);

/// Tr(Omega A) < -tol: some state gains purity under the dynamics.
bool can_purify(const Matrix& A, double tol = 1e-12);

struct PurifyReport {
    bool purifies = false;
    double value = 0.0; ///< Tr(Omega_S A_1) = Tr(Omega_S G Omega_A G^T) / 2
};

/// Purification at first order in dt for coupling G (2 N_S x 2 N_A).
PurifyReport first_order_purify(const Matrix& G, double tol = 1e-12);

/// G = u v^T, the phase-space form of a tensor-product interaction.
Matrix rank_one_coupling(const Vector& u, const Vector& v);

/// Differential CP test on the series truncated at order k and evaluated at dt.
CpReport truncated_cp_check(const GeneratorSeries& series, int k, double dt, double tol = 1e-9);

} // namespace gbomb
