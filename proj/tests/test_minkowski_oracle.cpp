#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sectordet/campaign.hpp"
#include "sectordet/generators.hpp"
#include "sectordet/inequalities.hpp"

using namespace sectordet;
using big = boost::multiprecision::cpp_bin_float_50;

namespace {

// 50-digit re-evaluation of both sides of the scalar Minkowski-complement
// inequality; independent of the double-precision implementation.
std::pair<big, big> oracle(const ScalarGrid& g) {
    const Eigen::Index m = g.x.rows(), n = g.x.cols();
    const big p = g.p;
    big rhs = 0;
    for (Eigen::Index i = 0; i < m; ++i) {
        big row = pow(big(g.x(i, 0)), p);
        for (Eigen::Index j = 1; j < n; ++j) row -= pow(big(g.x(i, j)), p);
        if (row < 0) row = 0;
        rhs += pow(row, 1 / p);
    }
    big lb = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        big col = 0;
        for (Eigen::Index i = 0; i < m; ++i) col += big(g.x(i, j));
        if (j == 0)
            lb += pow(col, p);
        else
            lb -= pow(col, p);
    }
    if (lb < 0) lb = 0;
    return {pow(lb, 1 / p), rhs};
}

}  // namespace

TEST_CASE("fixed grids against the 50-digit oracle") {
    ScalarGrid g;
    g.p = 2.0;
    g.x.resize(2, 2);
    g.x << 5, 3, 5, 4;
    auto [lhs, rhs] = oracle(g);
    CHECK(static_cast<double>(lhs) == doctest::Approx(std::sqrt(51.0)).epsilon(1e-14));
    CHECK(static_cast<double>(rhs) == doctest::Approx(7.0).epsilon(1e-14));
    auto r = check_minkowski_complement(g);
    CHECK(r.lhs == doctest::Approx(static_cast<double>(lhs)).epsilon(1e-12));
    CHECK(r.rhs == doctest::Approx(static_cast<double>(rhs)).epsilon(1e-12));
}

TEST_CASE("random feasible grids match the oracle within 1e-10 relative") {
    for (int trial = 0; trial < 300; ++trial) {
        Rng rng(Rng::derive(6060, trial));
        ScalarGrid g = campaign_detail::gen_feasible_grid(rng);
        auto r = check_minkowski_complement(g);
        auto [lhs, rhs] = oracle(g);
        const double lo = static_cast<double>(lhs), ro = static_cast<double>(rhs);
        CHECK(std::abs(r.lhs - lo) <= 1e-10 * std::max(1.0, std::abs(lo)));
        CHECK(std::abs(r.rhs - ro) <= 1e-10 * std::max(1.0, std::abs(ro)));
        CHECK(lhs + big("1e-40") >= rhs);  // the inequality itself, in high precision
    }
}

TEST_CASE("oracle confirms the inequality on integer grids exactly") {
    // integer entries: p = 2 brackets are exact in 50-digit arithmetic
    ScalarGrid g;
    g.p = 2.0;
    g.x.resize(3, 3);
    g.x << 13, 3, 4, 25, 7, 24, 17, 8, 15;
    auto [lhs, rhs] = oracle(g);
    CHECK(lhs >= rhs);
    auto r = check_minkowski_complement(g);
    CHECK(r.holds);
    CHECK(r.lhs == doctest::Approx(static_cast<double>(lhs)).epsilon(1e-12));
}
