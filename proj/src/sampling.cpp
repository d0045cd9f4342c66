// sampling.cpp

#include "gbomb/sampling.hpp"

namespace gbomb {

namespace {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

} // namespace

Matrix random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols)
{
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = uniform(rng, -1.0, 1.0);
        }
    }
    return m;
}

Matrix random_symmetric(Rng& rng, Eigen::Index n)
{
    const Matrix m = random_matrix(rng, n, n);
    return 0.5 * (m + m.transpose());
}

Vector random_vector(Rng& rng, Eigen::Index n)
{
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = uniform(rng, -1.0, 1.0);
    }
    return v;
}

Matrix random_symplectic(Rng& rng, int n_modes, double scale)
{
    return mat_exp(symplectic_form(n_modes) * random_symmetric(rng, 2 * n_modes) * scale);
}

GaussianState random_state(Rng& rng, int n_modes, double nu_min, double nu_max, double squeeze)
{
    Vector nus(2 * n_modes);
    for (int i = 0; i < n_modes; ++i) {
        nus(2 * i) = nus(2 * i + 1) = uniform(rng, nu_min, nu_max);
    }
    const Matrix s = random_symplectic(rng, n_modes, squeeze);
    Matrix cov = s * nus.asDiagonal() * s.transpose();
    cov = 0.5 * (cov + cov.transpose());
    return {random_vector(rng, 2 * n_modes), cov};
}

JointSetup random_setup(Rng& rng, const RandomSetupOptions& o)
{
    const Eigen::Index ns = 2 * o.system_modes;
    const Eigen::Index na = 2 * o.ancilla_modes;
    JointSetup j;
    j.F_S = random_symmetric(rng, ns);
    j.alpha_S = random_vector(rng, ns);
    j.F_A = random_symmetric(rng, na);
    j.alpha_A = random_vector(rng, na);
    j.G = random_matrix(rng, ns, na);
    j.ancilla = random_state(rng, o.ancilla_modes, o.nu_min, o.nu_max, o.squeeze);
    j.dt = o.dt;
    return j;
}

JointSetup qq_ground_setup(double omega_s, double omega_a, double g, double dt)
{
    JointSetup j;
    j.F_S = omega_s * Matrix::Identity(2, 2);
    j.alpha_S = Vector::Zero(2);
    j.F_A = omega_a * Matrix::Identity(2, 2);
    j.alpha_A = Vector::Zero(2);
    j.G = Matrix::Zero(2, 2);
    j.G(0, 0) = g;
    j.ancilla = vacuum_state(1);
    j.dt = dt;
    return j;
}

} // namespace gbomb
