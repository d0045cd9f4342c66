// channels.cpp

#include "gbomb/channels.hpp"

#include <cmath>
#include <sstream>

#include "gbomb/errors.hpp"

namespace gbomb {

namespace {

using Complex = std::complex<double>;

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

} // namespace

GaussianChannel GaussianChannel::identity(Eigen::Index dim)
{
    return {Matrix::Identity(dim, dim), Vector::Zero(dim), Matrix::Zero(dim, dim)};
}

void require_consistent(const GaussianChannel& c, const char* what)
{
    const Eigen::Index n = c.T.rows();
    mode_count(n);
    if (c.T.cols() != n || c.d.size() != n || c.R.rows() != n || c.R.cols() != n) {
        std::ostringstream os;
        os << what << ": channel blocks have inconsistent shapes";
        throw DimensionMismatch(os.str());
    }
}

GaussianState apply(const GaussianChannel& c, const GaussianState& s)
{
    require_consistent(c, "apply");
    if (s.mean.size() != c.dim() || s.cov.rows() != c.dim() || s.cov.cols() != c.dim()) {
        throw DimensionMismatch("apply: state and channel dimensions differ");
    }
    return {c.T * s.mean + c.d, c.T * s.cov * c.T.transpose() + c.R};
}

CpReport is_cptp(const GaussianChannel& c, double tol)
{
    require_consistent(c, "is_cptp");
    const Matrix omega = symplectic_form(mode_count(c.dim()));
    const Matrix defect = c.T * omega * c.T.transpose() - omega;
    const CMatrix test = c.R.cast<Complex>() - Complex(0.0, 1.0) * defect.cast<Complex>();
    CpReport report;
    report.margin = min_eig_hermitian(test);
    report.ok = report.margin >= -tol;
    return report;
}

GaussianChannel compose(const GaussianChannel& second, const GaussianChannel& first)
{
    require_consistent(first, "compose");
    require_consistent(second, "compose");
    if (first.dim() != second.dim()) {
        throw DimensionMismatch("compose: channel dimensions differ");
    }
    return {second.T * first.T, second.T * first.d + second.d,
            second.T * first.R * second.T.transpose() + second.R};
}

GaussianChannel power(const GaussianChannel& c, long long n)
{
    if (n < 0) {
        throw InvalidSetup("power: negative exponent");
    }
    GaussianChannel result = GaussianChannel::identity(c.dim());
    GaussianChannel base = c;
    while (n > 0) {
        if (n & 1) {
            result = compose(base, result);
        }
        n >>= 1;
        if (n > 0) {
            base = compose(base, base);
        }
    }
    return result;
}

Matrix JointSetup::joint_F() const
{
    const Eigen::Index ns = F_S.rows();
    const Eigen::Index na = F_A.rows();
    Matrix f(ns + na, ns + na);
    f.topLeftCorner(ns, ns) = F_S;
    f.topRightCorner(ns, na) = G;
    f.bottomLeftCorner(na, ns) = G.transpose();
    f.bottomRightCorner(na, na) = F_A;
    return f;
}

Matrix JointSetup::joint_omega() const
{
    return direct_sum(symplectic_form(system_modes()), symplectic_form(ancilla_modes()));
}

Vector JointSetup::joint_alpha() const
{
    Vector a(alpha_S.size() + alpha_A.size());
    a << alpha_S, alpha_A;
    return a;
}

void validate_setup(const JointSetup& j)
{
    const Eigen::Index ns = j.F_S.rows();
    const Eigen::Index na = j.F_A.rows();
    mode_count(ns);
    mode_count(na);
    if (j.F_S.cols() != ns || j.F_A.cols() != na || j.alpha_S.size() != ns || j.alpha_A.size() != na ||
        j.G.rows() != ns || j.G.cols() != na || j.ancilla.mean.size() != na || j.ancilla.cov.rows() != na ||
        j.ancilla.cov.cols() != na) {
        throw DimensionMismatch("joint setup: block shapes are inconsistent");
    }
    require_symmetric(j.F_S, "joint setup F_S", 1e-12);
    require_symmetric(j.F_A, "joint setup F_A", 1e-12);
    if (!(j.dt >= 0.0) || !std::isfinite(j.dt)) {
        throw InvalidSetup("joint setup: dt must be finite and nonnegative");
    }
    const StateCheck check = validate_state(j.ancilla);
    if (!check.valid) {
        throw InvalidAncillaState("joint setup ancilla: " + check.reason);
    }
}

GaussianChannel reduce_from_joint(const JointSetup& j)
{
    validate_setup(j);
    const Eigen::Index ns = j.F_S.rows();
    const Eigen::Index na = j.F_A.rows();
    const Matrix omega = j.joint_omega();
    const Matrix generator = omega * j.joint_F();
    const Matrix flow = mat_exp(generator * j.dt);
    const Vector shift = expm1_div(generator, j.dt) * (omega * j.joint_alpha());

    const Matrix m_ss = flow.topLeftCorner(ns, ns);
    const Matrix m_sa = flow.topRightCorner(ns, na);
    Matrix noise = m_sa * j.ancilla.cov * m_sa.transpose();
    noise = 0.5 * (noise + noise.transpose());
    return {m_ss, m_sa * j.ancilla.mean + shift.head(ns), noise};
}

GaussianChannel ChannelSeries::evaluate(double dt) const
{
    GaussianChannel c{Matrix::Zero(T[0].rows(), T[0].cols()), Vector::Zero(d[0].size()),
                      Matrix::Zero(R[0].rows(), R[0].cols())};
    double scale = 1.0;
    for (std::size_t k = 0; k < T.size(); ++k) {
        c.T += scale * T[k];
        c.d += scale * d[k];
        c.R += scale * R[k];
        scale *= dt;
    }
    return c;
}

ChannelSeries channel_taylor(const JointSetup& j, int order)
{
    if (order < 0 || order > kMaxChannelTaylorOrder) {
        std::ostringstream os;
        os << "channel_taylor: order " << order << " outside [0, " << kMaxChannelTaylorOrder << "]";
        throw InvalidSetup(os.str());
    }
    validate_setup(j);
    const Eigen::Index ns = j.F_S.rows();
    const Eigen::Index na = j.F_A.rows();
    const Matrix omega = j.joint_omega();
    const Matrix generator = omega * j.joint_F();
    const Vector drive = omega * j.joint_alpha();

    // exp(H dt) = sum_k dt^k H^k / k!, and d_SA(dt) = sum_{k>=1} dt^k H^{k-1} Omega alpha / k!.
    std::vector<Matrix> flow_coeff;
    Matrix h_power = Matrix::Identity(ns + na, ns + na);
    for (int k = 0; k <= order; ++k) {
        flow_coeff.push_back(h_power / factorial(k));
        h_power = h_power * generator;
    }

    ChannelSeries series;
    Vector drive_power = drive;
    for (int k = 0; k <= order; ++k) {
        series.T.push_back(flow_coeff[k].topLeftCorner(ns, ns));
        Vector dk = flow_coeff[k].topRightCorner(ns, na) * j.ancilla.mean;
        if (k == 0) {
            dk.setZero();
        } else {
            dk += drive_power.head(ns) / factorial(k);
            drive_power = generator * drive_power;
        }
        series.d.push_back(dk);
        Matrix rk = Matrix::Zero(ns, ns);
        for (int i = 0; i <= k; ++i) {
            rk += flow_coeff[i].topRightCorner(ns, na) * j.ancilla.cov *
                  flow_coeff[k - i].topRightCorner(ns, na).transpose();
        }
        series.R.push_back(0.5 * (rk + rk.transpose()));
    }
    return series;
}

} // namespace gbomb
