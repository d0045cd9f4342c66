// phase_space.cpp

#include "gbomb/phase_space.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "gbomb/errors.hpp"

namespace gbomb {

Matrix symplectic_form(int n_modes)
{
    if (n_modes < 1) {
        throw DimensionMismatch("symplectic_form: need at least one mode");
    }
    Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

int mode_count(Eigen::Index dim)
{
    if (dim <= 0 || dim % 2 != 0) {
        std::ostringstream os;
        os << "phase-space dimension " << dim << " is not a positive even number";
        throw DimensionMismatch(os.str());
    }
    return static_cast<int>(dim / 2);
}

void require_symmetric(const Matrix& m, const char* what, double tol)
{
    if (m.rows() != m.cols()) {
        std::ostringstream os;
        os << what << ": expected a square matrix, got " << m.rows() << "x" << m.cols();
        throw DimensionMismatch(os.str());
    }
    const double asym = max_abs(m - m.transpose());
    if (asym > tol * std::max(1.0, max_abs(m))) {
        std::ostringstream os;
        os << what << ": not symmetric (max |m - m^T| = " << asym << ")";
        throw InvalidSetup(os.str());
    }
}

StateCheck validate_state(const GaussianState& s)
{
    const int n = mode_count(s.mean.size());
    if (s.cov.rows() != s.mean.size() || s.cov.cols() != s.mean.size()) {
        throw DimensionMismatch("validate_state: covariance shape does not match mean");
    }
    StateCheck check;
    check.tolerance = 1e-9 * std::max(1.0, max_abs(s.cov));
    if (!s.cov.allFinite() || !s.mean.allFinite()) {
        check.reason = "non-finite entries";
        check.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
        return check;
    }
    if (max_abs(s.cov - s.cov.transpose()) > 1e-12 * std::max(1.0, max_abs(s.cov))) {
        check.reason = "covariance is not symmetric";
        check.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
        return check;
    }
    const CMatrix m = s.cov.cast<std::complex<double>>() +
                      std::complex<double>(0.0, 1.0) * symplectic_form(n).cast<std::complex<double>>();
    check.min_eigenvalue = min_eig_hermitian(m);
    check.valid = check.min_eigenvalue >= -check.tolerance;
    if (!check.valid) {
        std::ostringstream os;
        os << "uncertainty principle violated: min eig(cov + i Omega) = " << check.min_eigenvalue;
        check.reason = os.str();
    }
    return check;
}

void require_valid_state(const GaussianState& s, const char* what)
{
    const StateCheck check = validate_state(s);
    if (!check.valid) {
        throw InvalidState(std::string(what) + ": " + check.reason);
    }
}

double purity(const GaussianState& s)
{
    require_valid_state(s, "purity");
    return 1.0 / s.cov.determinant();
}

GaussianState thermal_state(double nu, int n_modes)
{
    if (!(nu >= 1.0)) {
        std::ostringstream os;
        os << "thermal_state: nu = " << nu << " < 1 is not a valid thermal parameter";
        throw InvalidState(os.str());
    }
    const int dim = 2 * n_modes;
    if (n_modes < 1) {
        throw DimensionMismatch("thermal_state: need at least one mode");
    }
    return {Vector::Zero(dim), nu * Matrix::Identity(dim, dim)};
}

GaussianState vacuum_state(int n_modes) { return thermal_state(1.0, n_modes); }

double nu_from_beta(double beta, double energy)
{
    const double x = beta * energy;
    if (std::isnan(x) || x <= 0.0) {
        std::ostringstream os;
        os << "nu_from_beta: beta * E = " << x << " must be positive";
        throw InvalidSetup(os.str());
    }
    if (std::isinf(x)) {
        return 1.0;
    }
    // (e^x + 1)/(e^x - 1) = coth(x/2), written to stay accurate for small x.
    return 1.0 + 2.0 / std::expm1(x);
}

double beta_energy_from_nu(double nu)
{
    if (!(nu >= 1.0)) {
        std::ostringstream os;
        os << "beta_energy_from_nu: nu = " << nu << " < 1";
        throw InvalidState(os.str());
    }
    if (nu == 1.0) {
        return std::numeric_limits<double>::infinity();
    }
    // ln((nu + 1)/(nu - 1)) = log1p(2/(nu - 1))
    return std::log1p(2.0 / (nu - 1.0));
}

double beta_from_nu(double nu, double energy)
{
    if (!(energy > 0.0)) {
        throw InvalidSetup("beta_from_nu: energy gap must be positive");
    }
    return beta_energy_from_nu(nu) / energy;
}

AffineSymplectic hamiltonian_flow(const QuadraticHamiltonian& h, double t)
{
    const int n = mode_count(h.F.rows());
    if (h.F.cols() != h.F.rows() || h.alpha.size() != h.F.rows()) {
        throw DimensionMismatch("hamiltonian_flow: F and alpha dimensions disagree");
    }
    require_symmetric(h.F, "hamiltonian_flow: F", 1e-12);
    const Matrix omega = symplectic_form(n);
    const Matrix generator = omega * h.F;
    return {mat_exp(generator * t), expm1_div(generator, t) * (omega * h.alpha)};
}

GaussianState apply_affine(const GaussianState& s, const AffineSymplectic& m)
{
    if (m.S.rows() != s.mean.size() || m.S.cols() != s.mean.size() || m.d.size() != s.mean.size() ||
        s.cov.rows() != s.mean.size()) {
        throw DimensionMismatch("apply_affine: dimensions disagree");
    }
    return {m.S * s.mean + m.d, m.S * s.cov * m.S.transpose()};
}

double symplectic_defect(const Matrix& s)
{
    const Matrix omega = symplectic_form(mode_count(s.rows()));
    return max_abs(s * omega * s.transpose() - omega);
}

} // namespace gbomb
