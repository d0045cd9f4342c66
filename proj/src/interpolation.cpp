// interpolation.cpp

#include "gbomb/interpolation.hpp"

#include <sstream>

#include "gbomb/errors.hpp"

namespace gbomb {

namespace {

using Complex = std::complex<double>;

void require_generators(const Generators& g, const char* what)
{
    const Eigen::Index n = g.A.rows();
    mode_count(n);
    if (g.A.cols() != n || g.b.size() != n || g.C.rows() != n || g.C.cols() != n) {
        std::ostringstream os;
        os << what << ": generator blocks have inconsistent shapes";
        throw DimensionMismatch(os.str());
    }
}

} // namespace

Generators generators_from_channel(const GaussianChannel& c, double dt, const Tolerances& tol)
{
    require_consistent(c, "generators_from_channel");
    if (!(dt > 0.0)) {
        throw InvalidSetup("generators_from_channel: dt must be positive");
    }
    const Eigen::Index n = c.dim();
    const Matrix omega = symplectic_form(mode_count(n));
    // Omega^{-1} = -Omega
    const Matrix log_t = mat_log_principal(c.T, tol);
    const Matrix a = -omega * log_t / dt;
    const Vector b = -omega * (logm_div(c.T, tol) * c.d) / dt;

    const Matrix tt = tensor_product(c.T, c.T);
    Matrix cov_gen = unvec(logm_div(tt, tol) * vec(c.R), n, n) / dt;
    cov_gen = 0.5 * (cov_gen + cov_gen.transpose());
    return {a, b, cov_gen};
}

Vector displacement_generator_via_lift(const GaussianChannel& c, double dt, const Tolerances& tol)
{
    require_consistent(c, "displacement_generator_via_lift");
    if (!(dt > 0.0)) {
        throw InvalidSetup("displacement_generator_via_lift: dt must be positive");
    }
    const Eigen::Index n = c.dim();
    Matrix lift = Matrix::Zero(n + 1, n + 1);
    lift(0, 0) = 1.0;
    lift.bottomLeftCorner(n, 1) = c.d;
    lift.bottomRightCorner(n, n) = c.T;
    const Matrix log_lift = mat_log_principal(lift, tol) / dt;
    const Matrix omega = symplectic_form(mode_count(n));
    return -omega * Vector(log_lift.bottomLeftCorner(n, 1));
}

Matrix covariance_flow_generator(const Generators& g)
{
    require_generators(g, "covariance_flow_generator");
    const Eigen::Index n = g.dim();
    const Matrix drift = symplectic_form(mode_count(n)) * g.A;
    const Matrix id = Matrix::Identity(n, n);
    return tensor_product(drift, id) + tensor_product(id, drift);
}

GaussianChannel propagate(const Generators& g, double t)
{
    require_generators(g, "propagate");
    if (!(t >= 0.0)) {
        throw InvalidSetup("propagate: t must be nonnegative");
    }
    const Eigen::Index n = g.dim();
    const Matrix omega = symplectic_form(mode_count(n));
    const Matrix drift = omega * g.A;
    const Matrix k = covariance_flow_generator(g);
    Matrix noise = unvec(expm1_div(k, t) * vec(g.C), n, n);
    noise = 0.5 * (noise + noise.transpose());
    return {mat_exp(drift * t), expm1_div(drift, t) * (omega * g.b), noise};
}

CpReport cp_differential_check(const Generators& g, double tol)
{
    require_generators(g, "cp_differential_check");
    const Matrix omega = symplectic_form(mode_count(g.dim()));
    const Matrix rhs = omega * (g.A - g.A.transpose()) * omega;
    const CMatrix test = g.C.cast<Complex>() - Complex(0.0, 1.0) * rhs.cast<Complex>();
    CpReport report;
    report.margin = min_eig_hermitian(test);
    report.ok = report.margin >= -tol;
    return report;
}

StateDerivative master_rhs(const Generators& g, const GaussianState& s)
{
    require_generators(g, "master_rhs");
    if (s.mean.size() != g.dim() || s.cov.rows() != g.dim() || s.cov.cols() != g.dim()) {
        throw DimensionMismatch("master_rhs: state and generator dimensions differ");
    }
    const Matrix omega = symplectic_form(mode_count(g.dim()));
    const Matrix drift = omega * g.A;
    return {omega * (g.A * s.mean + g.b), drift * s.cov + s.cov * drift.transpose() + g.C};
}

} // namespace gbomb
