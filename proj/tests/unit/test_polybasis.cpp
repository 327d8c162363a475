// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specabs/errors.hpp"
#include "specabs/polybasis.hpp"
#include "specabs/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace specabs;

TEST_CASE("legendre_eval") {
    CHECK(legendre_eval(0, 0.3) == 1.0);
    CHECK(legendre_eval(1, -1.0) == -1.0);
    CHECK(legendre_eval(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    for (int i = 0; i < 20; ++i) {
        CHECK(legendre_eval(i, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(legendre_eval(i, -1.0) == doctest::Approx(i % 2 ? -1.0 : 1.0).epsilon(1e-15));
    }
}

TEST_CASE("legendre recurrence stays bounded") {
    double worst = 0.0;
    for (int j = 0; j <= 400; ++j) {
        const double x = -1.0 + 2.0 * j / 400.0;
        std::vector<double> v(501);
        eval_family_upto(Family::Legendre, 500, x, v);
        for (double p : v) worst = std::max(worst, std::abs(p));
    }
    CHECK(worst <= 1.0 + 1e-13);
}

TEST_CASE("chebyshev_eval") {
    CHECK(chebyshev_eval(3, 1.0) == 1.0);
    CHECK(chebyshev_eval(2, 0.0) == -1.0);
    CHECK(std::abs(chebyshev_eval(5, std::cos(std::numbers::pi / 10))) < 1e-14);
    for (int i = 0; i < 30; ++i) {
        CHECK(std::abs(chebyshev_eval(i, 0.3) - std::cos(i * std::acos(0.3))) < 1e-13);
    }
}

TEST_CASE("legendre_norm_sq") {
    CHECK(legendre_norm_sq(0) == 1.0);
    CHECK(legendre_norm_sq(3) == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
    CHECK(legendre_norm_sq(MultiIndex{{1, 2}}) == doctest::Approx(1.0 / 15.0).epsilon(1e-15));
}

TEST_CASE("pairing functions") {
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 0) == 2);
    CHECK(cantor_pair(2, 1) == 8);
    CHECK(rosenberg_pair(0, 1) == 1);
    CHECK(rosenberg_pair(1, 1) == 2);
    CHECK(rosenberg_pair(2, 0) == 8);

    for (std::uint64_t k = 0; k < 10000; ++k) {
        const auto [a, b] = cantor_unpair(k);
        REQUIRE(cantor_pair(a, b) == k);
        const auto [c, d] = rosenberg_unpair(k);
        REQUIRE(rosenberg_pair(c, d) == k);
    }
    // closed form of the Cantor pairing
    for (std::uint64_t i1 = 0; i1 < 40; ++i1) {
        for (std::uint64_t i2 = 0; i2 < 40; ++i2) {
            CHECK(cantor_pair(i1, i2) == (i1 * i1 + 3 * i1 + 2 * i1 * i2 + i2 + i2 * i2) / 2);
        }
    }
}

TEST_CASE("graded_indices examples") {
    const auto t = graded_indices(2, DegreeNorm::Total, 1);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == MultiIndex{{0, 0}});
    CHECK(t[1] == MultiIndex{{0, 1}});
    CHECK(t[2] == MultiIndex{{1, 0}});

    const auto m = graded_indices(2, DegreeNorm::Maximal, 1);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == MultiIndex{{0, 0}});
    CHECK(m[1] == MultiIndex{{0, 1}});
    CHECK(m[2] == MultiIndex{{1, 1}});
    CHECK(m[3] == MultiIndex{{1, 0}});

    for (auto norm : {DegreeNorm::Total, DegreeNorm::Maximal}) {
        const auto one = graded_indices(1, norm, 5);
        REQUIRE(one.size() == 6);
        for (int i = 0; i <= 5; ++i) CHECK(one[i] == MultiIndex{{i}});
    }
}

TEST_CASE("graded order equals the pairing value") {
    for (int pd = 0; pd <= 30; ++pd) {
        const GradedBasis total(Family::Legendre, 2, DegreeNorm::Total, pd);
        const GradedBasis maxi(Family::Legendre, 2, DegreeNorm::Maximal, pd);
        REQUIRE(total.size() == static_cast<std::size_t>((pd + 1) * (pd + 2) / 2));
        REQUIRE(maxi.size() == static_cast<std::size_t>((pd + 1) * (pd + 1)));
        for (std::size_t k = 0; k < total.size(); ++k) {
            const auto& idx = total.index(k);
            REQUIRE(cantor_pair(idx[0], idx[1]) == k);
            REQUIRE(total.position(idx) == static_cast<std::ptrdiff_t>(k));
        }
        for (std::size_t k = 0; k < maxi.size(); ++k) {
            const auto& idx = maxi.index(k);
            REQUIRE(rosenberg_pair(idx[0], idx[1]) == k);
            REQUIRE(maxi.position(idx) == static_cast<std::ptrdiff_t>(k));
        }
    }
    const GradedBasis total(Family::Legendre, 2, DegreeNorm::Total, 3);
    CHECK(total.position(MultiIndex{{2, 2}}) == -1);
}

TEST_CASE("graded_indices in three dimensions") {
    const auto idx = graded_indices(3, DegreeNorm::Total, 4);
    CHECK(idx.size() == 35);
    CHECK(graded_size(3, DegreeNorm::Total, 4) == 35);
    CHECK(graded_size(3, DegreeNorm::Maximal, 2) == 27);
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const int a = idx[k - 1].total_degree();
        const int b = idx[k].total_degree();
        CHECK(a <= b);
        if (a == b) CHECK(idx[k - 1].entries < idx[k].entries);
    }
    const GradedBasis basis(Family::Legendre, 3, DegreeNorm::Maximal, 2);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        CHECK(basis.position(basis.index(k)) == static_cast<std::ptrdiff_t>(k));
    }
}

TEST_CASE("basis_eval") {
    const GradedBasis leg(Family::Legendre, 2, DegreeNorm::Total, 4);
    const std::vector<double> p{0.5, -0.5};
    CHECK(basis_eval(leg, MultiIndex{{0, 0}}, p) == 1.0);
    CHECK(basis_eval(leg, MultiIndex{{1, 1}}, p) == doctest::Approx(-0.25).epsilon(1e-15));
    const GradedBasis cheb(Family::Chebyshev, 2, DegreeNorm::Total, 4);
    CHECK(basis_eval(cheb, MultiIndex{{2, 0}}, std::vector<double>{0.0, 0.9}) == -1.0);
}

TEST_CASE("Legendre orthogonality under a Gauss rule") {
    const Rule g1 = gauss_legendre(20);
    for (int i = 0; i <= 12; ++i) {
        for (int j = 0; j <= 12; ++j) {
            double s = 0.0;
            for (std::size_t q = 0; q < g1.size(); ++q) {
                const double x = g1.node(q)[0];
                s += 0.5 * g1.weights[q] * legendre_eval(i, x) * legendre_eval(j, x);
            }
            if (i == j) {
                CHECK(std::abs(s - legendre_norm_sq(i)) < 1e-12);
            } else {
                CHECK(std::abs(s) < 1e-12);
            }
        }
    }

    const GradedBasis basis(Family::Legendre, 2, DegreeNorm::Total, 4);
    const Rule g2 = tensor_gauss(12);
    for (const auto& a : basis.indices()) {
        for (const auto& b : basis.indices()) {
            double s = 0.0;
            for (std::size_t q = 0; q < g2.size(); ++q) {
                s += 0.25 * g2.weights[q] * basis_eval(basis, a, g2.node(q)) *
                     basis_eval(basis, b, g2.node(q));
            }
            const double expect = a == b ? legendre_norm_sq(a) : 0.0;
            CHECK(std::abs(s - expect) < 1e-12);
        }
    }
}

TEST_CASE("CoefficientSet evaluation") {
    const GradedBasis leg(Family::Legendre, 1, DegreeNorm::Total, 3);
    CHECK_THROWS_AS(CoefficientSet(leg, {1.0, 2.0}), ConfigError);
    const CoefficientSet one(leg, {1.0, 0.0, 0.0, 0.0});
    CHECK(one(0.77) == 1.0);
    const CoefficientSet lin(GradedBasis(Family::Legendre, 1, DegreeNorm::Total, 1), {0.0, 1.0});
    CHECK(lin(0.7) == doctest::Approx(0.7).epsilon(1e-15));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto family : {Family::Legendre, Family::Chebyshev}) {
        for (auto norm : {DegreeNorm::Total, DegreeNorm::Maximal}) {
            const GradedBasis b(family, 2, norm, 6);
            std::vector<double> c(b.size());
            for (double& v : c) v = u(rng);
            const CoefficientSet set(b, c);
            for (int t = 0; t < 20; ++t) {
                const std::vector<double> p{u(rng), u(rng)};
                double direct = 0.0;
                for (std::size_t i = 0; i < b.size(); ++i) direct += c[i] * basis_eval(b, b.index(i), p);
                CHECK(std::abs(set.evaluate(p) - direct) < 1e-12);
            }
        }
        const GradedBasis b1(family, 1, DegreeNorm::Total, 25);
        std::vector<double> c(b1.size());
        for (double& v : c) v = u(rng);
        const CoefficientSet set(b1, c);
        for (int t = 0; t < 20; ++t) {
            const double x = u(rng);
            double direct = 0.0;
            for (int i = 0; i <= 25; ++i) {
                direct += c[i] * (family == Family::Legendre ? legendre_eval(i, x) : chebyshev_eval(i, x));
            }
            CHECK(std::abs(set(x) - direct) < 1e-12);
        }
    }
}

TEST_CASE("cheb_to_leg examples") {
    const GradedBasis cheb(Family::Chebyshev, 1, DegreeNorm::Total, 2);
    const auto c0 = cheb_to_leg(CoefficientSet(cheb, {1.0, 0.0, 0.0}));
    CHECK(c0.basis.family() == Family::Legendre);
    CHECK(std::abs(c0.coeffs[0] - 1.0) < 1e-14);
    CHECK(std::abs(c0.coeffs[1]) < 1e-14);
    CHECK(std::abs(c0.coeffs[2]) < 1e-14);

    const auto t2 = cheb_to_leg(CoefficientSet(cheb, {0.0, 0.0, 1.0}));
    CHECK(std::abs(t2.coeffs[0] + 1.0 / 3.0) < 1e-14);
    CHECK(std::abs(t2.coeffs[1]) < 1e-14);
    CHECK(std::abs(t2.coeffs[2] - 4.0 / 3.0) < 1e-14);
}

TEST_CASE("cheb_to_leg preserves point values") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int deg : {20, 50}) {
        const GradedBasis cheb(Family::Chebyshev, 1, DegreeNorm::Total, deg);
        std::vector<double> c(cheb.size());
        for (double& v : c) v = u(rng);
        const CoefficientSet in(cheb, c);
        const auto out = cheb_to_leg(in);
        double worst = 0.0;
        for (int j = 0; j <= 100; ++j) {
            const double x = -1.0 + 0.02 * j;
            worst = std::max(worst, std::abs(in(x) - out(x)));
        }
        CHECK(worst < 1e-12);
    }
    for (auto norm : {DegreeNorm::Total, DegreeNorm::Maximal}) {
        const GradedBasis cheb(Family::Chebyshev, 2, norm, 10);
        std::vector<double> c(cheb.size());
        for (double& v : c) v = u(rng);
        const CoefficientSet in(cheb, c);
        const auto out = cheb_to_leg(in);
        CHECK(out.basis.same_layout(cheb));
        for (int t = 0; t < 50; ++t) {
            const std::vector<double> p{u(rng), u(rng)};
            CHECK(std::abs(in.evaluate(p) - out.evaluate(p)) < 1e-12);
        }
    }
}
