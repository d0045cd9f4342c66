// linalg.cpp: dense kernels.

#include "gbomb/linalg.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "gbomb/errors.hpp"

namespace gbomb {

namespace {

// Below this 1-norm distance from I the log series is summed directly.
constexpr double kSeriesRadius = 0.25;
constexpr int kMaxSquareRoots = 64;
constexpr int kMaxSeriesTerms = 400;

void require_square(const Matrix& m, const char* what)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << what << ": expected a nonempty square matrix, got " << m.rows() << "x" << m.cols();
        throw DimensionMismatch(os.str());
    }
}

double norm1(const Matrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Pade approximant r_m(a) for exp(a); a is already scaled.
Matrix pade_exp(const Matrix& a, int degree)
{
    const Eigen::Index n = a.rows();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix a2 = a * a;
    Matrix u;
    Matrix v;

    if (degree == 13) {
        static constexpr std::array<double, 14> b = {
            64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
            129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
            1323241920.0,        40840800.0,          960960.0,           16380.0,
            182.0,               1.0};
        const Matrix a4 = a2 * a2;
        const Matrix a6 = a4 * a2;
        const Matrix inner_u = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
        u = a * (inner_u + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
        v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
    } else {
        static constexpr std::array<double, 4> b3 = {120.0, 60.0, 12.0, 1.0};
        static constexpr std::array<double, 6> b5 = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
        static constexpr std::array<double, 8> b7 = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                                     25200.0,    1512.0,    56.0,      1.0};
        static constexpr std::array<double, 10> b9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                                      302702400.0,   30270240.0,   2162160.0,
                                                      110880.0,      3960.0,       90.0,
                                                      1.0};
        const double* b = degree == 3 ? b3.data() : degree == 5 ? b5.data() : degree == 7 ? b7.data() : b9.data();
        Matrix odd = b[1] * id;
        Matrix even = b[0] * id;
        Matrix power = id;
        for (int k = 2; k <= degree; k += 2) {
            power = power * a2;
            even += b[k] * power;
            odd += b[k + 1] * power;
        }
        u = a * odd;
        v = even;
    }
    return (v - u).partialPivLu().solve(v + u);
}

// Series sum_{m>=0} coeff(m) y^m, truncated once terms fall below machine precision.
template <typename Coeff>
Matrix power_series(const Matrix& y, Coeff coeff)
{
    const Eigen::Index n = y.rows();
    Matrix sum = coeff(0) * Matrix::Identity(n, n);
    Matrix power = Matrix::Identity(n, n);
    for (int m = 1; m < kMaxSeriesTerms; ++m) {
        power = power * y;
        const Matrix term = coeff(m) * power;
        sum += term;
        if (max_abs(term) <= 1e-18 * std::max(1.0, max_abs(sum))) {
            break;
        }
    }
    return sum;
}

} // namespace

Matrix tensor_product(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b)
{
    Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.topLeftCorner(a.rows(), a.cols()) = a;
    out.bottomRightCorner(b.rows(), b.cols()) = b;
    return out;
}

Vector vec(const Matrix& m)
{
    Vector v(m.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            v(i * m.cols() + j) = m(i, j);
        }
    }
    return v;
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols)
{
    if (rows <= 0 || cols <= 0 || v.size() != rows * cols) {
        std::ostringstream os;
        os << "unvec: vector of length " << v.size() << " cannot be restacked as " << rows << "x" << cols;
        throw DimensionMismatch(os.str());
    }
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            m(i, j) = v(i * cols + j);
        }
    }
    return m;
}

Matrix mat_exp(const Matrix& m)
{
    require_square(m, "mat_exp");
    const double norm = norm1(m);
    static constexpr std::array<std::pair<int, double>, 4> low = {
        {{3, 1.495585217958292e-2}, {5, 2.539398330063230e-1}, {7, 9.504178996162932e-1}, {9, 2.097847961257068e0}}};
    for (const auto& [degree, theta] : low) {
        if (norm <= theta) {
            return pade_exp(m, degree);
        }
    }
    constexpr double theta13 = 5.371920351148152;
    const int squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    Matrix result = pade_exp(m / std::ldexp(1.0, squarings), 13);
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return result;
}

void require_principal_log_domain(const Matrix& m, const Tolerances& tol)
{
    require_square(m, "principal log");
    if (!m.allFinite()) {
        throw SingularInput("principal log: non-finite entries");
    }
    const Eigen::EigenSolver<Matrix> solver(m, false);
    const double scale = std::max(1.0, max_abs(m));
    for (const std::complex<double>& lambda : solver.eigenvalues()) {
        const double magnitude = std::abs(lambda);
        if (magnitude <= tol.singular * scale) {
            throw SingularInput("principal log: matrix is singular");
        }
        if (lambda.real() < 0.0 && std::abs(lambda.imag()) <= tol.branch_cut * magnitude) {
            std::ostringstream os;
            os << "principal log: eigenvalue " << lambda.real() << " lies on the negative real axis";
            throw BranchCutEigenvalue(os.str());
        }
    }
}

Matrix sqrtm_principal(const Matrix& m, const Tolerances& tol)
{
    require_principal_log_domain(m, tol);
    // Product form of the Denman-Beavers iteration with determinant scaling.
    const Eigen::Index n = m.rows();
    const Matrix id = Matrix::Identity(n, n);
    Matrix mk = m;
    Matrix yk = m;
    bool scaling = true;
    for (int iter = 0; iter < 100; ++iter) {
        const Eigen::PartialPivLU<Matrix> lu(mk);
        const Matrix mk_inv = lu.inverse();
        double mu = 1.0;
        if (scaling) {
            mu = std::pow(std::abs(lu.determinant()), -1.0 / (2.0 * static_cast<double>(n)));
            if (!std::isfinite(mu) || mu <= 0.0) {
                mu = 1.0;
            }
        }
        yk = 0.5 * mu * yk * (id + mk_inv / (mu * mu));
        mk = 0.5 * (id + 0.5 * (mu * mu * mk + mk_inv / (mu * mu)));
        const double residual = max_abs(mk - id);
        if (residual < 1e-2) {
            scaling = false;
        }
        if (residual <= 1e-15) {
            break;
        }
    }
    return yk;
}

Matrix mat_log_principal(const Matrix& m, const Tolerances& tol)
{
    require_principal_log_domain(m, tol);
    const Eigen::Index n = m.rows();
    const Matrix id = Matrix::Identity(n, n);
    Matrix x = m;
    int roots = 0;
    while (norm1(x - id) > kSeriesRadius && roots < kMaxSquareRoots) {
        x = sqrtm_principal(x, tol);
        ++roots;
    }
    const Matrix y = x - id;
    // Log(I + y) = y * sum_m (-1)^m/(m+1) y^m
    const Matrix log_x = y * power_series(y, [](int k) { return (k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0); });
    return std::ldexp(1.0, roots) * log_x;
}

Matrix logm_div(const Matrix& x, const Tolerances& tol)
{
    require_principal_log_domain(x, tol);
    const Eigen::Index n = x.rows();
    const Matrix id = Matrix::Identity(n, n);
    // L(x) = 2 L(sqrt x) (I + sqrt x)^{-1}; every factor is a function of x, so they commute.
    Matrix factor = id;
    Matrix y = x;
    int roots = 0;
    while (norm1(y - id) > kSeriesRadius && roots < kMaxSquareRoots) {
        y = sqrtm_principal(y, tol);
        factor = 2.0 * factor * (id + y).partialPivLu().inverse();
        ++roots;
    }
    const Matrix series = power_series(y - id, [](int k) { return (k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0); });
    return series * factor;
}

Matrix expm1_div(const Matrix& x, double t)
{
    require_square(x, "expm1_div");
    const Eigen::Index n = x.rows();
    // exp([[x t, t I], [0, 0]]) has (exp(x t) - I)/x in its top-right block.
    Matrix block = Matrix::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = x * t;
    block.topRightCorner(n, n) = t * Matrix::Identity(n, n);
    return mat_exp(block).topRightCorner(n, n);
}

double min_eig_hermitian(const CMatrix& m, const Tolerances& tol)
{
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionMismatch("min_eig_hermitian: expected a nonempty square matrix");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double deviation = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (deviation > tol.hermitian * scale) {
        std::ostringstream os;
        os << "min_eig_hermitian: deviation from Hermiticity " << deviation;
        throw NotHermitian(os.str());
    }
    const CMatrix h = 0.5 * (m + m.adjoint());
    const Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

} // namespace gbomb
