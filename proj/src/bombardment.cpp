// bombardment.cpp

#include "gbomb/bombardment.hpp"

#include <sstream>

#include "gbomb/errors.hpp"

namespace gbomb {

namespace {

// Truncated power series with matrix (or vector) coefficients; index = power of dt.
using MatrixSeries = std::vector<Matrix>;
using VectorSeries = std::vector<Vector>;

MatrixSeries multiply(const MatrixSeries& a, const MatrixSeries& b)
{
    MatrixSeries out(a.size(), Matrix::Zero(a[0].rows(), b[0].cols()));
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            out[k] += a[i] * b[k - i];
        }
    }
    return out;
}

VectorSeries multiply(const MatrixSeries& a, const VectorSeries& v)
{
    VectorSeries out(a.size(), Vector::Zero(a[0].rows()));
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            out[k] += a[i] * v[k - i];
        }
    }
    return out;
}

// X -> T X T^T - X on series, with T = sum_k dt^k t[k].
MatrixSeries congruence_minus_identity(const MatrixSeries& t, const MatrixSeries& x)
{
    MatrixSeries out(x.size(), Matrix::Zero(x[0].rows(), x[0].cols()));
    for (std::size_t k = 0; k < x.size(); ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t j = 0; i + j <= k; ++j) {
                out[k] += t[i] * x[k - i - j] * t[j].transpose();
            }
        }
        out[k] -= x[k];
    }
    return out;
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

void require_channel_series(const ChannelSeries& channel, int order)
{
    if (order < 0 || order > kMaxGeneratorSeriesOrder) {
        std::ostringstream os;
        os << "generator series order " << order << " outside [0, " << kMaxGeneratorSeriesOrder << "]";
        throw MalformedSeries(os.str());
    }
    if (channel.T.empty() || channel.T.size() != channel.d.size() || channel.T.size() != channel.R.size()) {
        throw MalformedSeries("channel series: T, d, R lists must be nonempty and equally long");
    }
    if (channel.order() < order + 1) {
        std::ostringstream os;
        os << "channel series of order " << channel.order() << " cannot give generator order " << order;
        throw MalformedSeries(os.str());
    }
    const Eigen::Index n = channel.T[0].rows();
    mode_count(n);
    for (int k = 0; k <= channel.order(); ++k) {
        if (channel.T[k].rows() != n || channel.T[k].cols() != n || channel.d[k].size() != n ||
            channel.R[k].rows() != n || channel.R[k].cols() != n) {
            throw MalformedSeries("channel series: coefficient shapes differ");
        }
    }
    constexpr double zero_tol = 1e-12;
    if (max_abs(channel.T[0] - Matrix::Identity(n, n)) > zero_tol || max_abs(channel.d[0]) > zero_tol ||
        max_abs(channel.R[0]) > zero_tol) {
        throw MalformedSeries("channel series: need T_0 = I, d_0 = 0, R_0 = 0");
    }
}

} // namespace

Generators GeneratorSeries::truncated(int k, double dt) const
{
    if (terms.empty() || k < 0 || k > order()) {
        std::ostringstream os;
        os << "generator series: truncation order " << k << " unavailable (series order " << order() << ")";
        throw MalformedSeries(os.str());
    }
    Generators g{Matrix::Zero(terms[0].A.rows(), terms[0].A.cols()), Vector::Zero(terms[0].b.size()),
                 Matrix::Zero(terms[0].C.rows(), terms[0].C.cols())};
    double scale = 1.0;
    for (int j = 0; j <= k; ++j) {
        g.A += scale * terms[j].A;
        g.b += scale * terms[j].b;
        g.C += scale * terms[j].C;
        scale *= dt;
    }
    return g;
}

GeneratorSeries series_by_log_composition(const ChannelSeries& channel, int order)
{
    require_channel_series(channel, order);
    const int degree = order + 1;
    const Eigen::Index n = channel.T[0].rows();
    const Matrix omega = symplectic_form(mode_count(n));

    MatrixSeries t(channel.T.begin(), channel.T.begin() + degree + 1);
    MatrixSeries p = t;
    p[0].setZero();
    const VectorSeries d(channel.d.begin(), channel.d.begin() + degree + 1);
    const MatrixSeries r(channel.R.begin(), channel.R.begin() + degree + 1);

    // P has no constant term, so P^m only contributes from dt^m on; m <= degree suffices.
    MatrixSeries log_t(degree + 1, Matrix::Zero(n, n));
    VectorSeries ratio_d = d;
    MatrixSeries ratio_r = r;
    MatrixSeries p_power = p;
    VectorSeries pd = d;
    MatrixSeries pr = r;
    for (int m = 1; m <= degree; ++m) {
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        for (int k = 0; k <= degree; ++k) {
            log_t[k] += sign / m * p_power[k];
        }
        p_power = multiply(p_power, p);

        pd = multiply(p, pd);
        pr = congruence_minus_identity(t, pr);
        for (int k = 0; k <= degree; ++k) {
            ratio_d[k] += -sign / (m + 1) * pd[k];
            ratio_r[k] += -sign / (m + 1) * pr[k];
        }
    }

    GeneratorSeries series;
    for (int k = 0; k <= order; ++k) {
        series.terms.push_back({-omega * log_t[k + 1], -omega * ratio_d[k + 1], symmetrized(ratio_r[k + 1])});
    }
    return series;
}

GeneratorSeries series_from_channel_series(const ChannelSeries& channel, int order)
{
    require_channel_series(channel, order);
    const Eigen::Index n = channel.T[0].rows();
    const Matrix omega = symplectic_form(mode_count(n));
    const auto& T = channel.T;
    const auto& d = channel.d;
    const auto& R = channel.R;

    GeneratorSeries series;
    // Omega^{-1} = -Omega
    series.terms.push_back({-omega * T[1], -omega * d[1], symmetrized(R[1])});
    if (order >= 1) {
        const Matrix a1 = T[2] - 0.5 * T[1] * T[1];
        const Vector b1 = d[2] - 0.5 * T[1] * d[1];
        const Matrix c1 = R[2] - 0.5 * (T[1] * R[1] + R[1] * T[1].transpose());
        series.terms.push_back({-omega * a1, -omega * b1, symmetrized(c1)});
    }
    if (order >= 2) {
        const Matrix t1_sq = T[1] * T[1];
        const Matrix a2 = T[3] - 0.5 * (T[1] * T[2] + T[2] * T[1]) + t1_sq * T[1] / 3.0;
        const Vector b2 = d[3] - 0.5 * (T[1] * d[2] + T[2] * d[1]) + t1_sq * d[1] / 3.0;
        const Matrix c2 = R[3] -
                          0.5 * (T[2] * R[1] + R[1] * T[2].transpose() + T[1] * R[2] + R[2] * T[1].transpose()) +
                          (t1_sq * R[1] + R[1] * t1_sq.transpose()) / 3.0 + T[1] * R[1] * T[1].transpose() / 6.0;
        series.terms.push_back({-omega * a2, -omega * b2, symmetrized(c2)});
    }
    if (order >= 3) {
        series.terms.push_back(series_by_log_composition(channel, order).terms[3]);
    }
    return series;
}

GeneratorSeries closed_form_series(const JointSetup& j, int order)
{
    if (order < 0 || order > kMaxClosedFormOrder) {
        std::ostringstream os;
        os << "closed_form_series: order " << order << " outside [0, " << kMaxClosedFormOrder << "]";
        throw MalformedSeries(os.str());
    }
    validate_setup(j);
    const Eigen::Index ns = j.F_S.rows();
    const Matrix omega_s = symplectic_form(j.system_modes());
    const Matrix omega_a = symplectic_form(j.ancilla_modes());
    const Matrix& G = j.G;
    const Matrix& F_S = j.F_S;
    const Matrix& F_A = j.F_A;
    const Vector& x_a = j.ancilla.mean;
    const Matrix& sigma_a = j.ancilla.cov;

    const Matrix exchange = G * omega_a * G.transpose(); // antisymmetric
    const Matrix ancilla_drift = omega_a * F_A;

    GeneratorSeries series;
    series.terms.push_back({F_S, j.alpha_S + G * x_a, Matrix::Zero(ns, ns)});
    if (order >= 1) {
        const Matrix c1 = omega_s * G * sigma_a * G.transpose() * omega_s.transpose();
        series.terms.push_back({0.5 * exchange, 0.5 * G * omega_a * (F_A * x_a + j.alpha_A), symmetrized(c1)});
    }
    if (order >= 2) {
        const Matrix a2 = -(exchange * omega_s * F_S + F_S * omega_s * exchange) / 12.0 +
                          G * ancilla_drift * omega_a * G.transpose() / 6.0;
        const Vector b2 = -F_S * omega_s * G * omega_a * j.alpha_A / 12.0 +
                          G * ancilla_drift * omega_a * j.alpha_A / 6.0 -
                          F_S * omega_s * G * ancilla_drift * x_a / 12.0 +
                          G * ancilla_drift * ancilla_drift * x_a / 6.0 - exchange * omega_s * j.alpha_S / 12.0 -
                          exchange * omega_s * G * x_a / 12.0;
        const Matrix c2 = 0.5 * omega_s * G * (ancilla_drift * sigma_a + sigma_a * ancilla_drift.transpose()) *
                          G.transpose() * omega_s.transpose();
        series.terms.push_back({a2, b2, symmetrized(c2)});
    }
    return series;
}

bool can_purify(const Matrix& A, double tol)
{
    const Matrix omega = symplectic_form(mode_count(A.rows()));
    if (A.cols() != A.rows()) {
        throw DimensionMismatch("can_purify: A must be square");
    }
    return (omega * A).trace() < -tol;
}

PurifyReport first_order_purify(const Matrix& G, double tol)
{
    const Matrix omega_s = symplectic_form(mode_count(G.rows()));
    const Matrix omega_a = symplectic_form(mode_count(G.cols()));
    PurifyReport report;
    report.value = 0.5 * (omega_s * G * omega_a * G.transpose()).trace();
    report.purifies = report.value < -tol;
    return report;
}

Matrix rank_one_coupling(const Vector& u, const Vector& v)
{
    mode_count(u.size());
    mode_count(v.size());
    return u * v.transpose();
}

CpReport truncated_cp_check(const GeneratorSeries& series, int k, double dt, double tol)
{
    return cp_differential_check(series.truncated(k, dt), tol);
}

} // namespace gbomb
