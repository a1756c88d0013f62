#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sectordet/generators.hpp"
#include "sectordet/sector.hpp"

using namespace sectordet;

namespace {

const Complex I(0, 1);
constexpr double pi = 2.0 * half_pi;

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Cmat m(2, 2);
    m << a, b, c, d;
    return ComplexMatrix(m);
}

// Does z lie in the closed sector of half-angle alpha (with slack)?
bool in_sector(Complex z, double alpha, double slack) {
    return z.real() > -slack && std::abs(z.imag()) <= z.real() * std::tan(alpha) + slack;
}

Eigen::VectorXcd random_unit_vector(Eigen::Index n, Rng& rng) {
    Eigen::VectorXcd x(n);
    for (Eigen::Index i = 0; i < n; ++i) x(i) = rng.complex_gaussian();
    return x / x.norm();
}

}  // namespace

TEST_CASE("sector membership fixed cases") {
    SectorCertificate c = sector_membership(ComplexMatrix::identity(3), 0.0);
    CHECK(c.member);
    CHECK(c.lambda_min_re == doctest::Approx(1.0));

    c = sector_membership(mat2(1, I, I, 1), pi / 4);
    CHECK(c.member);
    CHECK(c.lambda_min_plus == doctest::Approx(0.0));
    CHECK(c.lambda_min_minus == doctest::Approx(0.0));

    c = sector_membership(mat2(1, I, I, 1), pi / 6);
    CHECK_FALSE(c.member);

    CHECK_THROWS_AS(sector_membership(ComplexMatrix::identity(2), -0.1), DomainError);
    CHECK_THROWS_AS(sector_membership(ComplexMatrix::identity(2), half_pi), DomainError);
}

TEST_CASE("minimal sector angle fixed cases") {
    CHECK(minimal_sector_angle(ComplexMatrix::identity(4)) == doctest::Approx(0.0));
    CHECK(minimal_sector_angle(mat2(1, I, I, 1)) == doctest::Approx(pi / 4));
    for (double theta : {0.3, -0.7, 1.2}) {
        ComplexMatrix a(Cmat(std::polar(1.0, theta) * Cmat::Identity(3, 3)));
        CHECK(minimal_sector_angle(a) == doctest::Approx(std::abs(theta)));
    }
    // Re A not PD
    CHECK_THROWS_AS(minimal_sector_angle(ComplexMatrix(Cmat(-Cmat::Identity(2, 2)))),
                    NotSectorialError);
}

TEST_CASE("rotation law: minimal angle of e^{i theta} A for Hermitian PD A") {
    Rng rng(808);
    for (int trial = 0; trial < 25; ++trial) {
        Eigen::Index n = 2 + trial % 6;
        ComplexMatrix a = gen_pd_with_floor(n, 0.0, rng);
        double theta = rng.uniform(-1.4, 1.4);
        ComplexMatrix rotated(Cmat(std::polar(1.0, theta) * a.raw()));
        CHECK(minimal_sector_angle(rotated) == doctest::Approx(std::abs(theta)).epsilon(1e-8));
    }
}

TEST_CASE("minimality: membership flips at alpha*") {
    Rng rng(909);
    for (int trial = 0; trial < 40; ++trial) {
        Eigen::Index n = 2 + trial % 6;
        double target = rng.uniform(0.05, 1.3);
        ComplexMatrix a = gen_sector(n, target, rng);
        double astar = minimal_sector_angle(a);
        CHECK(astar == doctest::Approx(target).epsilon(1e-9));
        CHECK(sector_membership(a, astar).member);
        if (astar > 1e-6) CHECK_FALSE(sector_membership(a, astar - 1e-6).member);
        // monotone: any wider angle still contains W(A)
        CHECK(sector_membership(a, std::min(astar + 0.1, half_pi - 1e-9)).member);
    }
}

TEST_CASE("characterization agrees with numerical-range sampling") {
    Rng rng(1001);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::Index n = 2 + trial % 5;
        double alpha = rng.uniform(0.1, 1.2);
        // half the trials in-sector by construction, half random square matrices
        ComplexMatrix a = (trial % 2 == 0)
                              ? gen_sector(n, alpha * rng.uniform(0.3, 1.0), rng)
                              : gen_accretive_dissipative(n, rng);
        SectorCertificate c = sector_membership(a, alpha);
        bool sampled_ok = true;
        for (int s = 0; s < 1000; ++s) {
            Eigen::VectorXcd x = random_unit_vector(n, rng);
            Complex q = (x.adjoint() * a.raw() * x)(0, 0);
            if (!in_sector(q, alpha, 1e-9)) {
                sampled_ok = false;
                break;
            }
        }
        if (c.member) CHECK(sampled_ok);
        // member = false must be witnessed by a certificate eigenvector
        if (!c.member) {
            double worst = std::min({c.lambda_min_re, c.lambda_min_plus, c.lambda_min_minus});
            CHECK(worst < c.threshold);
        }
    }
}

TEST_CASE("real part floor") {
    CHECK(real_part_floor(ComplexMatrix::identity(3)) == doctest::Approx(1.0));
    CHECK(real_part_floor(mat2(2, 1, 1, 2)) == doctest::Approx(1.0));
    CHECK(real_part_floor(mat2(1, I, I, 1)) == doctest::Approx(1.0));
    CHECK(real_part_floor(ComplexMatrix(Cmat(-Cmat::Identity(2, 2)))) == doctest::Approx(-1.0));
}

TEST_CASE("floor consistency property") {
    Rng rng(117);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::Index n = 2 + trial % 6;
        ComplexMatrix a = gen_sector(n, 0.9, rng);
        double f = real_part_floor(a);
        HermitianMatrix re = real_part(a);
        CHECK(psd_check(re, f - 1e-12).is_psd);
        CHECK_FALSE(psd_check(re, f + 1e-6).is_psd);
    }
}

TEST_CASE("accretive-dissipative detection") {
    ComplexMatrix a(Cmat(Complex(1, 1) * Cmat::Identity(3, 3)));
    CHECK(is_accretive_dissipative(a));
    CHECK_FALSE(is_accretive_dissipative(ComplexMatrix::identity(3)));
    CHECK_FALSE(is_accretive_dissipative(mat2(1, I, I, 1)));
}

TEST_CASE("accretive-dissipative rotates into the pi/4 sector") {
    Rng rng(2024);
    const Complex rot = std::polar(1.0, -pi / 4);
    for (int trial = 0; trial < 30; ++trial) {
        Eigen::Index n = 2 + trial % 6;
        ComplexMatrix a = gen_accretive_dissipative(n, rng);
        REQUIRE(is_accretive_dissipative(a));
        ComplexMatrix r(Cmat(rot * a.raw()));
        CHECK(sector_membership(r, pi / 4).member);
    }
}
