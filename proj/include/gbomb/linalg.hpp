// linalg.hpp: dense kernels (matrix exponential/logarithm, the two series
// functions, tensor products and row-stacking vectorization).

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gbomb {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;

/// Tolerances for kernel postconditions and positivity tests.
struct Tolerances {
    double kernel = 1e-10;        ///< absolute tolerance on kernel postconditions
    double hermitian = 1e-10;     ///< allowed deviation from Hermiticity (relative to max(1, |m|))
    double symmetric = 1e-12;     ///< allowed deviation from symmetry for F, R, C
    double branch_cut = 1e-10;    ///< |Im l| / |l| below which an eigenvalue counts as real
    double singular = 1e-14;      ///< |l| / max(1, |m|) below which an eigenvalue counts as zero
};

inline const Tolerances& default_tolerances()
{
    static const Tolerances tol{};
    return tol;
}

/// Kronecker product a (x) b.
Matrix tensor_product(const Matrix& a, const Matrix& b);

/// Block-diagonal a (+) b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Row-stacking vectorization: vec([[a,b],[c,d]]) = (a,b,c,d). With this ordering
/// vec(X Y Z^T) = (X (x) Z) vec(Y).
Vector vec(const Matrix& m);
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Matrix exponential (Pade scaling and squaring).
Matrix mat_exp(const Matrix& m);

/// Principal matrix logarithm. Throws SingularInput or BranchCutEigenvalue.
Matrix mat_log_principal(const Matrix& m, const Tolerances& tol = default_tolerances());

/// (exp(x t) - I) / x, i.e. sum_m t^{m+1}/(m+1)! x^m. Valid for singular x.
Matrix expm1_div(const Matrix& x, double t);

/// Log(x) / (x - I), i.e. sum_m (-1)^m/(m+1) (x - I)^m continued analytically.
/// Valid when x - I is singular. Same errors as mat_log_principal.
Matrix logm_div(const Matrix& x, const Tolerances& tol = default_tolerances());

/// Principal square root for matrices with no eigenvalues on (-inf, 0].
Matrix sqrtm_principal(const Matrix& m, const Tolerances& tol = default_tolerances());

/// Smallest eigenvalue of a Hermitian matrix. Throws NotHermitian.
double min_eig_hermitian(const CMatrix& m, const Tolerances& tol = default_tolerances());

/// Throws BranchCutEigenvalue / SingularInput if the principal log of m is undefined.
void require_principal_log_domain(const Matrix& m, const Tolerances& tol = default_tolerances());

/// Largest absolute entry; 0 for empty matrices.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

} // namespace gbomb
