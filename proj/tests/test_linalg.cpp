#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sectordet/generators.hpp"
#include "sectordet/matrix.hpp"

using namespace sectordet;

namespace {

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Cmat m(2, 2);
    m << a, b, c, d;
    return ComplexMatrix(m);
}

const Complex I(0, 1);

// Brute-force determinant by Laplace expansion; the independent oracle for
// everything determinant-shaped below.
Complex det_expand(const Cmat& m) {
    const Eigen::Index n = m.rows();
    if (n == 0) return Complex(1, 0);
    if (n == 1) return m(0, 0);
    Complex d(0, 0);
    double sign = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        Cmat minor(n - 1, n - 1);
        for (Eigen::Index r = 1; r < n; ++r) {
            Eigen::Index cc = 0;
            for (Eigen::Index c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        d += sign * m(0, j) * det_expand(minor);
        sign = -sign;
    }
    return d;
}

}  // namespace

TEST_CASE("cartesian decomposition") {
    auto [h, k] = cartesian_decomposition(ComplexMatrix::identity(2));
    CHECK(h.raw().isApprox(Cmat::Identity(2, 2)));
    CHECK(k.raw().norm() == doctest::Approx(0.0));

    auto [h2, k2] = cartesian_decomposition(mat2(1, I, I, 1));
    CHECK(h2.raw().isApprox(Cmat::Identity(2, 2)));
    Cmat expected_im(2, 2);
    expected_im << 0, 1, 1, 0;
    CHECK(k2.raw().isApprox(expected_im));

    auto [h3, k3] = cartesian_decomposition(ComplexMatrix(Cmat(I * Cmat::Identity(2, 2))));
    CHECK(h3.raw().norm() == doctest::Approx(0.0));
    CHECK(k3.raw().isApprox(Cmat::Identity(2, 2)));
}

TEST_CASE("reconstruction property: Re A + i Im A = A") {
    Rng rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        Eigen::Index n = 1 + trial % 8;
        Cmat g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
        ComplexMatrix a(g);
        auto [h, k] = cartesian_decomposition(a);
        Cmat rec = h.raw() + I * k.raw();
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                CHECK(std::abs(rec(i, j) - g(i, j)) <= 4e-15 * (1.0 + std::abs(g(i, j))));
    }
}

TEST_CASE("leading principal submatrix") {
    Cmat d(2, 2);
    d << 2, 0, 0, 1;
    ComplexMatrix a(d);
    CHECK(leading_principal_submatrix(a, 1)(0, 0) == Complex(2, 0));
    CHECK(leading_principal_submatrix(mat2(5, 1, 1, 3), 1)(0, 0) == Complex(5, 0));
    CHECK(leading_principal_submatrix(a, 0).order() == 0);
    CHECK(logabsdet(leading_principal_submatrix(a, 0)).magnitude() == doctest::Approx(1.0));
    CHECK(leading_principal_submatrix(a, 2).raw().isApprox(d));
    CHECK_THROWS_AS(leading_principal_submatrix(a, 3), DomainError);
    CHECK_THROWS_AS(leading_principal_submatrix(a, -1), DomainError);
}

TEST_CASE("schur complement fixed values") {
    CHECK(schur_complement(mat2(1, I, I, 1), 1)(0, 0).real() == doctest::Approx(2.0));
    CHECK(schur_complement(mat2(1, I, I, 1), 1)(0, 0).imag() == doctest::Approx(0.0));
    Cmat d(2, 2);
    d << 3, 0, 0, 7;
    CHECK(schur_complement(ComplexMatrix(d), 1)(0, 0).real() == doctest::Approx(7.0));
    CHECK(schur_complement(mat2(2, 1, 1, 2), 1)(0, 0).real() == doctest::Approx(1.5));
    CHECK_THROWS_AS(schur_complement(mat2(0, 1, 1, 0), 1), SingularBlockError);
    CHECK_THROWS_AS(schur_complement(mat2(1, 0, 0, 1), 0), DomainError);
}

TEST_CASE("schur determinant identity on random well-conditioned matrices") {
    Rng rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        Eigen::Index n = 2 + trial % 7;
        ComplexMatrix a = gen_sector(n, 0.8, rng, 50.0);
        Complex da = det_expand(a.raw());
        for (Eigen::Index k = 1; k <= n - 1; ++k) {
            Complex dk = det_expand(a.raw().topLeftCorner(k, k));
            Complex ds = det_expand(schur_complement(a, k).raw());
            CHECK(std::abs(da - dk * ds) <= 1e-9 * std::abs(da));
        }
    }
}

TEST_CASE("hermitian eigenvalues") {
    Rvec ev = hermitian_eigenvalues(HermitianMatrix(Cmat::Identity(3, 3)));
    for (int i = 0; i < 3; ++i) CHECK(ev(i) == doctest::Approx(1.0));

    Cmat x(2, 2);
    x << 0, 1, 1, 0;
    ev = hermitian_eigenvalues(HermitianMatrix(x));
    CHECK(ev(0) == doctest::Approx(1.0));
    CHECK(ev(1) == doctest::Approx(-1.0));

    x << 2, 1, 1, 2;
    ev = hermitian_eigenvalues(HermitianMatrix(x));
    CHECK(ev(0) == doctest::Approx(3.0));
    CHECK(ev(1) == doctest::Approx(1.0));

    Cmat bad(2, 2);
    bad << 1, 2, 3, 1;
    CHECK_THROWS_AS(HermitianMatrix{bad}, SymmetryError);
}

TEST_CASE("eigenvalue sum matches trace") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::Index n = 2 + trial % 7;
        Cmat g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
        HermitianMatrix h(Cmat(0.5 * (g + g.adjoint())));
        Rvec ev = hermitian_eigenvalues(h);
        double tr = h.raw().trace().real();
        CHECK(std::abs(ev.sum() - tr) <= 1e-10 * (1.0 + std::abs(tr)));
    }
}

TEST_CASE("singular values") {
    Rvec s = singular_values(ComplexMatrix::identity(4));
    for (int i = 0; i < 4; ++i) CHECK(s(i) == doctest::Approx(1.0));

    s = singular_values(mat2(1, I, I, 1));  // A*A = 2I
    CHECK(s(0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(s(1) == doctest::Approx(std::sqrt(2.0)));

    Cmat d(2, 2);
    d << 3, 0, 0, -4;
    s = singular_values(ComplexMatrix(d));
    CHECK(s(0) == doctest::Approx(4.0));
    CHECK(s(1) == doctest::Approx(3.0));
}

TEST_CASE("logdet_pd") {
    CHECK(logdet_pd(HermitianMatrix(Cmat::Identity(5, 5))) == doctest::Approx(0.0));
    Cmat d(2, 2);
    d << 2, 0, 0, 3;
    CHECK(logdet_pd(HermitianMatrix(d)) == doctest::Approx(std::log(6.0)));
    d << 2, 1, 1, 2;
    CHECK(logdet_pd(HermitianMatrix(d)) == doctest::Approx(std::log(3.0)));
    d << 1, 0, 0, -1;
    CHECK_THROWS_AS(logdet_pd(HermitianMatrix(d)), DefinitenessError);
}

TEST_CASE("logdet_pd equals eigenvalue log sum") {
    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::Index n = 2 + trial % 7;
        ComplexMatrix a = gen_pd_with_floor(n, 0.0, rng);
        HermitianMatrix h(a.raw());
        Rvec ev = hermitian_eigenvalues(h);
        double s = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) s += std::log(ev(i));
        CHECK(std::abs(logdet_pd(h) - s) <= 1e-10 * (1.0 + std::abs(s)));
    }
}

TEST_CASE("logabsdet") {
    LogAbsDet r = logabsdet(ComplexMatrix::identity(3));
    CHECK(r.log_abs == doctest::Approx(0.0));
    CHECK(std::abs(r.phase - Complex(1, 0)) < 1e-14);

    r = logabsdet(mat2(1, I, I, 1));  // det = 2
    CHECK(r.log_abs == doctest::Approx(std::log(2.0)));
    CHECK(std::abs(r.phase - Complex(1, 0)) < 1e-14);

    r = logabsdet(ComplexMatrix(Cmat(I * Cmat::Identity(2, 2))));  // det = -1
    CHECK(r.log_abs == doctest::Approx(0.0));
    CHECK(std::abs(r.phase - Complex(-1, 0)) < 1e-14);

    r = logabsdet(mat2(1, 1, 1, 1));  // singular
    CHECK(std::isinf(r.log_abs));
    CHECK(r.log_abs < 0);
}

TEST_CASE("det_ratio fixed values and the two-route identity") {
    Cmat d(2, 2);
    d << 2, 0, 0, 1;
    CHECK(det_ratio(ComplexMatrix(d), 1).magnitude() == doctest::Approx(1.0));
    CHECK(det_ratio(mat2(2, 1, 1, 2), 1).magnitude() == doctest::Approx(1.5));
    CHECK(det_ratio(mat2(5, 1, 1, 3), 1).magnitude() == doctest::Approx(2.8));

    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::Index n = 2 + trial % 7;
        ComplexMatrix a = gen_sector(n, 0.7, rng, 50.0);
        Complex da = det_expand(a.raw());
        for (Eigen::Index k = 0; k <= n - 1; ++k) {
            Complex dk = det_expand(a.raw().topLeftCorner(k, k));
            double quotient = std::abs(da / dk);
            double via_schur = det_ratio(a, k).magnitude();
            CHECK(std::abs(via_schur - quotient) <= 1e-9 * quotient);
        }
    }
}

TEST_CASE("psd_check") {
    PsdVerdict v = psd_check(HermitianMatrix(Cmat::Identity(2, 2)), 1.0);
    CHECK(v.is_psd);
    CHECK(v.lambda_min == doctest::Approx(0.0));

    Cmat x(2, 2);
    x << 2, 1, 1, 2;
    v = psd_check(HermitianMatrix(x), 1.0);
    CHECK(v.is_psd);
    v = psd_check(HermitianMatrix(x), 1.5);
    CHECK_FALSE(v.is_psd);
}

TEST_CASE("ostrowski-taussky spectral part on random matrices with PD real part") {
    Rng rng(404);
    for (int trial = 0; trial < 40; ++trial) {
        Eigen::Index n = 2 + trial % 7;
        ComplexMatrix a = gen_sector(n, 1.0, rng);
        Rvec sv = singular_values(a);
        Rvec ev = hermitian_eigenvalues(real_part(a));
        for (Eigen::Index i = 0; i < n; ++i)
            CHECK(ev(i) <= sv(i) + 1e-10 * (1.0 + sv(0)));
    }
}

TEST_CASE("degenerate shapes") {
    // n = 1 everywhere
    ComplexMatrix one(Cmat::Constant(1, 1, Complex(3, 0)));
    CHECK(det_ratio(one, 0).magnitude() == doctest::Approx(3.0));
    CHECK(singular_values(one)(0) == doctest::Approx(3.0));
    // non-square rejected
    Cmat rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(ComplexMatrix{rect}, DimensionError);
    // non-finite rejected
    Cmat nan2 = Cmat::Identity(2, 2);
    nan2(0, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
    CHECK_THROWS_AS(ComplexMatrix{nan2}, DomainError);
}
