// classifier.cpp

#include "gbomb/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "gbomb/errors.hpp"

namespace gbomb {

namespace {

constexpr std::array<std::string_view, kDynamicsTypeCount> kNames = {
    "Single-mode Rotation",      "Single-mode Squeezing",      "Displacement",
    "Single-mode Squeezed Noise", "Amplification/Relaxation", "Thermal Noise",
    "Multi Mode Rotation",        "Multi Mode Squeezing",       "Multi Mode Counter-Rotation",
    "Multi Mode Noise",           "Multi Mode Counter-Squeezing",
};

constexpr std::array<std::string_view, kDynamicsTypeCount> kKeys = {
    "single_mode_rotation",        "single_mode_squeezing",      "displacement",
    "single_mode_squeezed_noise",  "amplification_relaxation",   "thermal_noise",
    "multi_mode_rotation",         "multi_mode_squeezing",       "multi_mode_counter_rotation",
    "multi_mode_noise",            "multi_mode_counter_squeezing",
};

BlockCoefficients decompose_block(const Matrix& b)
{
    // orthogonal basis, each element with trace norm 2
    return {0.5 * (b(0, 0) + b(1, 1)), 0.5 * (b(0, 1) - b(1, 0)), 0.5 * (b(0, 1) + b(1, 0)),
            0.5 * (b(0, 0) - b(1, 1))};
}

bool rotation_like(const BlockCoefficients& c, double thr)
{
    return std::abs(c.c_I) > thr || std::abs(c.c_omega) > thr;
}

bool squeezing_like(const BlockCoefficients& c, double thr)
{
    return std::abs(c.c_X) > thr || std::abs(c.c_Z) > thr;
}

} // namespace

Matrix BlockCoefficients::reconstruct() const
{
    Matrix m(2, 2);
    m << c_I + c_Z, c_omega + c_X, -c_omega + c_X, c_I - c_Z;
    return m;
}

BlockDecomposition block_decompose(const Matrix& m)
{
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("block_decompose: matrix must be square");
    }
    BlockDecomposition d;
    d.modes = mode_count(m.rows());
    d.blocks.reserve(static_cast<std::size_t>(d.modes * d.modes));
    for (int i = 0; i < d.modes; ++i) {
        for (int j = 0; j < d.modes; ++j) {
            d.blocks.push_back(decompose_block(m.block(2 * i, 2 * j, 2, 2)));
        }
    }
    return d;
}

Matrix BlockDecomposition::reconstruct() const
{
    Matrix m(2 * modes, 2 * modes);
    for (int i = 0; i < modes; ++i) {
        for (int j = 0; j < modes; ++j) {
            m.block(2 * i, 2 * j, 2, 2) = at(i, j).reconstruct();
        }
    }
    return m;
}

std::string_view dynamics_name(DynamicsType t) { return kNames[static_cast<std::size_t>(t)]; }

std::string_view dynamics_key(DynamicsType t) { return kKeys[static_cast<std::size_t>(t)]; }

DynamicsType dynamics_type(std::size_t index)
{
    if (index >= kDynamicsTypeCount) {
        throw InvalidSetup("dynamics_type: index out of range");
    }
    return static_cast<DynamicsType>(index);
}

bool DynamicsReport::subset_of(const DynamicsReport& other) const
{
    for (std::size_t i = 0; i < kDynamicsTypeCount; ++i) {
        if (present[i] && !other.present[i]) {
            return false;
        }
    }
    return true;
}

int DynamicsReport::count() const { return static_cast<int>(std::count(present.begin(), present.end(), true)); }

DynamicsReport classify(const Generators& g, double eps)
{
    const Eigen::Index n = g.A.rows();
    if (g.A.cols() != n || g.b.size() != n || g.C.rows() != n || g.C.cols() != n) {
        throw DimensionMismatch("classify: generator blocks have inconsistent shapes");
    }
    const double scale = std::max({max_abs(g.A), max_abs(g.b), max_abs(g.C)});
    const double thr = eps * scale;

    const BlockDecomposition sym = block_decompose(0.5 * (g.A + g.A.transpose()));
    const BlockDecomposition anti = block_decompose(0.5 * (g.A - g.A.transpose()));
    const BlockDecomposition noise = block_decompose(0.5 * (g.C + g.C.transpose()));

    DynamicsReport r;
    using T = DynamicsType;
    for (int i = 0; i < sym.modes; ++i) {
        const BlockCoefficients& s = sym.at(i, i);
        if (std::abs(s.c_I) > thr) {
            r.set(T::single_mode_rotation);
        }
        if (squeezing_like(s, thr)) {
            r.set(T::single_mode_squeezing);
        }
        if (std::abs(anti.at(i, i).c_omega) > thr) {
            r.set(T::amplification_relaxation);
        }
        const BlockCoefficients& c = noise.at(i, i);
        if (std::abs(c.c_I) > thr) {
            r.set(T::thermal_noise);
        }
        if (squeezing_like(c, thr)) {
            r.set(T::single_mode_squeezed_noise);
        }
        for (int j = i + 1; j < sym.modes; ++j) {
            if (rotation_like(sym.at(i, j), thr)) {
                r.set(T::multi_mode_rotation);
            }
            if (squeezing_like(sym.at(i, j), thr)) {
                r.set(T::multi_mode_squeezing);
            }
            if (rotation_like(anti.at(i, j), thr)) {
                r.set(T::multi_mode_counter_rotation);
            }
            if (squeezing_like(anti.at(i, j), thr)) {
                r.set(T::multi_mode_counter_squeezing);
            }
            if (max_abs(noise.at(i, j).reconstruct()) > thr) {
                r.set(T::multi_mode_noise);
            }
        }
    }
    if (max_abs(g.b) > thr) {
        r.set(T::displacement);
    }
    return r;
}

DynamicsReport available_dynamics(int k)
{
    if (k < 0) {
        throw InvalidSetup("available_dynamics: order must be >= 0");
    }
    using T = DynamicsType;
    DynamicsReport r;
    r.set(T::displacement);
    if (k == 0 || k % 2 == 0) {
        r.set(T::single_mode_rotation);
        r.set(T::single_mode_squeezing);
        r.set(T::multi_mode_rotation);
        r.set(T::multi_mode_squeezing);
    }
    if (k >= 1) {
        r.set(T::single_mode_squeezed_noise);
        r.set(T::thermal_noise);
        r.set(T::multi_mode_noise);
    }
    if (k % 2 == 1) {
        r.set(T::amplification_relaxation);
        r.set(T::multi_mode_counter_rotation);
        r.set(T::multi_mode_counter_squeezing);
    }
    return r;
}

DynamicsReport table_availability(const GeneratorSeries& series, int k, double eps)
{
    if (k < 0 || k > series.order()) {
        throw MalformedSeries("table_availability: order not present in the series");
    }
    return classify(series.terms[static_cast<std::size_t>(k)], eps);
}

} // namespace gbomb
