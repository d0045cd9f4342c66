// classifier.hpp: split generators into 2x2 blocks over {I, omega, X, Z} and
// report which of the eleven kinds of Gaussian dynamics they contain.

#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "gbomb/bombardment.hpp"

namespace gbomb {

/// m_block = c_I I + c_omega omega + c_X X + c_Z Z.
struct BlockCoefficients {
    double c_I = 0.0;
    double c_omega = 0.0;
    double c_X = 0.0;
    double c_Z = 0.0;

    Matrix reconstruct() const;
};

struct BlockDecomposition {
    int modes = 0;
    std::vector<BlockCoefficients> blocks; ///< row-major over mode pairs (i, j)

    const BlockCoefficients& at(int i, int j) const { return blocks[static_cast<std::size_t>(i * modes + j)]; }
    Matrix reconstruct() const;
};

/// Throws DimensionMismatch for non-square or odd-dimensional m.
BlockDecomposition block_decompose(const Matrix& m);

enum class DynamicsType {
    single_mode_rotation,
    single_mode_squeezing,
    displacement,
    single_mode_squeezed_noise,
    amplification_relaxation,
    thermal_noise,
    multi_mode_rotation,
    multi_mode_squeezing,
    multi_mode_counter_rotation,
    multi_mode_noise,
    multi_mode_counter_squeezing,
};

inline constexpr std::size_t kDynamicsTypeCount = 11;

/// Row label as in the table of available dynamics.
std::string_view dynamics_name(DynamicsType t);
std::string_view dynamics_key(DynamicsType t); ///< snake_case key used in JSON
DynamicsType dynamics_type(std::size_t index);

struct DynamicsReport {
    std::array<bool, kDynamicsTypeCount> present{};

    bool operator[](DynamicsType t) const { return present[static_cast<std::size_t>(t)]; }
    void set(DynamicsType t, bool v = true) { present[static_cast<std::size_t>(t)] = v; }
    bool subset_of(const DynamicsReport& other) const;
    int count() const;
};

/// Flags every type with a coefficient above eps * (largest entry of A, b, C).
DynamicsReport classify(const Generators& g, double eps = 1e-10);

/// "Yes" entries of the table for order k: order 0 joins the free and induced
/// columns; odd and even k >= 1 use their own columns.
DynamicsReport available_dynamics(int k);

/// classify applied to the order-k coefficients of the series.
DynamicsReport table_availability(const GeneratorSeries& series, int k, double eps = 1e-10);

} // namespace gbomb
