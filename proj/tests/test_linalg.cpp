#include <doctest.h>

#include <cmath>

#include "gbomb/errors.hpp"
#include "gbomb/phase_space.hpp"
#include "support/oracles.hpp"

using namespace gbomb;
using namespace gbomb::testing;

namespace {

Matrix rotation(double theta)
{
    Matrix r(2, 2);
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return r;
}

} // namespace

TEST_CASE("tensor_product")
{
    CHECK(max_abs(tensor_product(Matrix::Identity(2, 2), Matrix::Identity(2, 2)) - Matrix::Identity(4, 4)) == 0.0);

    Matrix expected = Matrix::Zero(4, 4);
    expected.topRightCorner(2, 2) = Matrix::Identity(2, 2);
    expected.bottomLeftCorner(2, 2) = -Matrix::Identity(2, 2);
    CHECK(max_abs(tensor_product(symplectic_form(1), Matrix::Identity(2, 2)) - expected) == 0.0);

    Rng rng = make_rng(1);
    const Matrix a = random_matrix(rng, 2, 3);
    const Matrix b = random_matrix(rng, 3, 2);
    const Matrix k = tensor_product(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 6);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 2; ++q)
                    CHECK(k(i * 3 + p, j * 2 + q) == doctest::Approx(a(i, j) * b(p, q)).epsilon(1e-15));
}

TEST_CASE("vec is row stacking and unvec inverts it")
{
    Matrix m(2, 2);
    m << 1, 2, 3, 4;
    const Vector v = vec(m);
    CHECK(v(0) == 1);
    CHECK(v(1) == 2);
    CHECK(v(2) == 3);
    CHECK(v(3) == 4);
    CHECK(max_abs(vec(Matrix::Zero(3, 2))) == 0.0);
    CHECK(max_abs(unvec(v, 2, 2) - m) == 0.0);
    CHECK_THROWS_AS(unvec(v, 3, 2), DimensionMismatch);

    Rng rng = make_rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix x = random_matrix(rng, 3, 3), y = random_matrix(rng, 3, 3), z = random_matrix(rng, 3, 3);
        CHECK(max_abs(vec(x * y * z.transpose()) - tensor_product(x, z) * vec(y)) < 1e-13);
    }
}

TEST_CASE("mat_exp")
{
    CHECK(max_abs(mat_exp(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)) == 0.0);
    for (double theta : {0.1, 1.0, 2.5, 7.0}) {
        CHECK(max_abs(mat_exp(theta * symplectic_form(1)) - rotation(theta)) < 1e-13);
    }
    Rng rng = make_rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix m = 2.0 * random_matrix(rng, 4, 4);
        CHECK(max_abs(mat_exp(m) * mat_exp(-m) - Matrix::Identity(4, 4)) < 1e-12);
    }
    // norm up to 10, against the Taylor series computed by squaring
    const Matrix big = 10.0 / 4.0 * random_matrix(rng, 4, 4);
    Matrix taylor = Matrix::Identity(4, 4), term = Matrix::Identity(4, 4);
    const Matrix small = big / 1024.0;
    for (int m = 1; m < 30; ++m) {
        term = term * small / m;
        taylor += term;
    }
    for (int s = 0; s < 10; ++s) {
        taylor = taylor * taylor;
    }
    CHECK(max_abs(mat_exp(big) - taylor) / max_abs(taylor) < 1e-12);
}

TEST_CASE("mat_log_principal")
{
    CHECK(max_abs(mat_log_principal(Matrix::Identity(4, 4))) == 0.0);
    for (double theta : {0.3, -1.2, 3.0}) {
        CHECK(max_abs(mat_log_principal(rotation(theta)) - theta * symplectic_form(1)) < 1e-10);
    }
    CHECK_THROWS_AS(mat_log_principal(rotation(M_PI)), BranchCutEigenvalue);
    CHECK_THROWS_AS(mat_log_principal(Matrix::Zero(2, 2)), SingularInput);
    Matrix neg = Matrix::Identity(2, 2);
    neg(1, 1) = -2.0;
    CHECK_THROWS_AS(mat_log_principal(neg), BranchCutEigenvalue);

    Rng rng = make_rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix m = mat_exp(1.5 * random_matrix(rng, 4, 4));
        CHECK(max_abs(mat_exp(mat_log_principal(m)) - m) < 1e-10 * std::max(1.0, max_abs(m)));
    }
    // defective (Jordan) input
    Matrix jordan(2, 2);
    jordan << 2.0, 1.0, 0.0, 2.0;
    CHECK(max_abs(mat_exp(mat_log_principal(jordan)) - jordan) < 1e-12);
}

TEST_CASE("tensor-log identity")
{
    Rng rng = make_rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix t = Matrix::Identity(4, 4) + 0.2 * random_matrix(rng, 4, 4);
        const Matrix l = mat_log_principal(t);
        const Matrix id = Matrix::Identity(4, 4);
        CHECK(max_abs(mat_log_principal(tensor_product(t, t)) - tensor_product(l, id) - tensor_product(id, l)) < 1e-10);
    }
}

TEST_CASE("expm1_div")
{
    CHECK(max_abs(expm1_div(Matrix::Zero(3, 3), 0.7) - 0.7 * Matrix::Identity(3, 3)) < 1e-15);
    Matrix nil(2, 2);
    nil << 0, 1, 0, 0;
    CHECK(max_abs(expm1_div(nil, 1.0) - (Matrix::Identity(2, 2) + 0.5 * nil)) < 1e-15);

    Rng rng = make_rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix x = random_matrix(rng, 4, 4);
        const double t = 0.3 + trial * 0.02;
        const Matrix e = expm1_div(x, t);
        CHECK(max_abs(e - x.inverse() * (mat_exp(x * t) - Matrix::Identity(4, 4))) < 1e-10);
        CHECK(max_abs(e - expm1_div_series(x, t)) < 1e-12);
        CHECK(max_abs(e * x - (mat_exp(x * t) - Matrix::Identity(4, 4))) < 1e-10);
    }
    // singular x: rank-deficient product
    const Vector u = random_vector(rng, 4), w = random_vector(rng, 4);
    const Matrix singular = u * w.transpose();
    CHECK(max_abs(expm1_div(singular, 1.3) - expm1_div_series(singular, 1.3)) < 1e-12);
    CHECK(max_abs(expm1_div(singular, 1.3) * singular - (mat_exp(1.3 * singular) - Matrix::Identity(4, 4))) < 1e-10);
}

TEST_CASE("logm_div")
{
    CHECK(max_abs(logm_div(Matrix::Identity(3, 3)) - Matrix::Identity(3, 3)) < 1e-15);
    Matrix x = Matrix::Identity(2, 2);
    x(0, 0) = std::exp(1.0);
    Matrix expected = Matrix::Identity(2, 2);
    expected(0, 0) = 1.0 / (std::exp(1.0) - 1.0);
    CHECK(max_abs(logm_div(x) - expected) < 1e-14);

    Rng rng = make_rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix near = Matrix::Identity(4, 4) + 0.1 * random_matrix(rng, 4, 4);
        CHECK(max_abs(logm_div(near) - logm_div_series(near)) < 1e-10);
        const Matrix far = mat_exp(random_matrix(rng, 4, 4));
        CHECK(max_abs((far - Matrix::Identity(4, 4)) * logm_div(far) - mat_log_principal(far)) < 1e-10);
    }
    CHECK_THROWS_AS(logm_div(-Matrix::Identity(2, 2)), BranchCutEigenvalue);
}

TEST_CASE("min_eig_hermitian")
{
    CHECK(min_eig_hermitian(CMatrix::Identity(3, 3)) == doctest::Approx(1.0));
    CMatrix d = CMatrix::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = -3.0;
    CHECK(min_eig_hermitian(d) == doctest::Approx(-3.0));
    const CMatrix vac = Matrix::Identity(2, 2).cast<std::complex<double>>() +
                        std::complex<double>(0, 1) * symplectic_form(1).cast<std::complex<double>>();
    CHECK(std::abs(min_eig_hermitian(vac)) < 1e-15);
    CMatrix bad = CMatrix::Zero(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(min_eig_hermitian(bad), NotHermitian);
}
