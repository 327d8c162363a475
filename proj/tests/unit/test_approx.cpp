// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "specabs/approx.hpp"
#include "specabs/errors.hpp"
#include "specabs/oracle.hpp"
#include "specabs/problems.hpp"

#include <cmath>
#include <random>

using namespace specabs;

namespace {

GradedBasis leg1(int p) { return GradedBasis(Family::Legendre, 1, DegreeNorm::Total, p); }

ErrorRecord rec(int p, double e) { return ErrorRecord{p, static_cast<std::size_t>(p + 1), e, std::nullopt}; }

}  // namespace

TEST_CASE("galerkin_coeffs examples") {
    // the kink at 0 limits Gauss accuracy to O(M^-2)
    const auto mssae = galerkin_coeffs(benchmark_field(Benchmark::MSSAE1), leg1(1), gauss_legendre(32));
    CHECK(std::abs(mssae.coeffs[0] - 0.25) < 1e-3);
    CHECK(std::abs(mssae.coeffs[1] - 0.5) < 1e-3);
    const auto fine = galerkin_coeffs(benchmark_field(Benchmark::MSSAE1), leg1(1), gauss_legendre(320));
    CHECK(std::abs(fine.coeffs[0] - 0.25) < 1e-5);
    // a rule exact on each linear piece
    const auto sym = galerkin_coeffs(benchmark_field(Benchmark::MSSAE1), leg1(1), trapezoid_rule(2));
    CHECK(std::abs(sym.coeffs[0] - 0.25) < 1e-15);

    const auto sae = galerkin_coeffs(benchmark_field(Benchmark::SAE1), leg1(1), gauss_legendre(32));
    CHECK(std::abs(sae.coeffs[0] - std::sinh(1.0)) < 1e-12);
    CHECK(std::abs(sae.coeffs[1] - 3.0 / std::exp(1.0)) < 1e-12);

    const ScalarField p2(1, [](std::span<const double> x) { return legendre_eval(2, x[0]); });
    const auto rep = galerkin_coeffs(p2, leg1(4), gauss_legendre(8));
    for (int i = 0; i <= 4; ++i) CHECK(std::abs(rep.coeffs[i] - (i == 2 ? 1.0 : 0.0)) < 1e-12);

    CHECK_THROWS_AS((void)galerkin_coeffs(p2, leg1(2), padua_cubature(4)), ConfigError);
    CHECK_THROWS_AS(
        (void)galerkin_coeffs(p2, GradedBasis(Family::Chebyshev, 1, DegreeNorm::Total, 2), gauss_legendre(4)),
        ConfigError);
}

TEST_CASE("galerkin reproduces 2-D polynomials") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto norm : {DegreeNorm::Total, DegreeNorm::Maximal}) {
        const GradedBasis b(Family::Legendre, 2, norm, 6);
        std::vector<double> c(b.size());
        for (double& v : c) v = u(rng);
        const CoefficientSet g(b, c);
        const ScalarField f(2, [&g](std::span<const double> p) { return g.evaluate(p); });
        const auto out = galerkin_coeffs(f, b, tensor_gauss(8));
        CHECK(coeff_error_sum(g, out) < 1e-11);
        if (norm == DegreeNorm::Total) {
            // Padua cubature of degree 2 P_d covers every product p_i p_j
            const auto pad = galerkin_coeffs(f, b, padua_cubature(12));
            CHECK(coeff_error_sum(g, pad) < 1e-11);
        }
    }
}

TEST_CASE("obeys_decoupling") {
    CHECK(obeys_decoupling(leg1(10), gauss_legendre(10)));
    CHECK_FALSE(obeys_decoupling(leg1(10), gauss_legendre(9)));
    const GradedBasis total(Family::Legendre, 2, DegreeNorm::Total, 12);
    const GradedBasis maxi(Family::Legendre, 2, DegreeNorm::Maximal, 12);
    CHECK(obeys_decoupling(total, padua_cubature(12)));
    CHECK_FALSE(obeys_decoupling(total, padua_cubature(11)));
    CHECK(obeys_decoupling(maxi, tensor_cc_cubature(12)));
    CHECK_FALSE(obeys_decoupling(total, tensor_cc_cubature(8)));
}

TEST_CASE("cheb_interp_1d") {
    const auto line = cheb_interp_1d(benchmark_field(Benchmark::MSSAE1), 1);
    CHECK(line.basis.family() == Family::Chebyshev);
    CHECK(std::abs(line.coeffs[0] - 0.5) < 1e-15);
    CHECK(std::abs(line.coeffs[1] - 0.5) < 1e-15);

    const ScalarField t3(1, [](std::span<const double> x) { return chebyshev_eval(3, x[0]); });
    const auto rep = cheb_interp_1d(t3, 3);
    for (int i = 0; i <= 3; ++i) CHECK(std::abs(rep.coeffs[i] - (i == 3 ? 1.0 : 0.0)) < 1e-14);

    const auto sae = benchmark_field(Benchmark::SAE1);
    CHECK(linf_rel_error(sae, cheb_interp_1d(sae, 20), 10001) < 1e-10);
    CHECK(linf_rel_error(sae, cheb_interp_1d(sae, 8), 10001) < 1e-5);
    const auto s30 = cheb_interp_1d(sae, 30);
    CHECK(std::abs(s30(0.3) - std::exp(0.3)) < 1e-12);

    const auto zero = cheb_interp_1d(sae, 0);
    CHECK(zero.size() == 1);
    CHECK(zero.coeffs[0] == 1.0);
}

TEST_CASE("interpolation conditions at the nodes") {
    const auto mn = benchmark_field(Benchmark::MNSSAE1);
    for (int p : {5, 17, 63}) {
        const auto c = cheb_interp_1d(mn, p);
        for (int j = 0; j <= p; ++j) {
            const double x = std::cos(j * M_PI / p);
            CHECK(std::abs(c(x) - mn(x)) < 1e-11 * (1.0 + std::abs(mn(x))));
        }
    }
}

TEST_CASE("padua_interp") {
    const ScalarField one(2, [](std::span<const double>) { return 1.0; });
    const auto c1 = padua_interp(one, 4);
    CHECK(std::abs(c1.coeffs[0] - 1.0) < 1e-14);
    for (std::size_t i = 1; i < c1.size(); ++i) CHECK(std::abs(c1.coeffs[i]) < 1e-14);

    const ScalarField t2x(2, [](std::span<const double> p) { return 2.0 * p[0] * p[0] - 1.0; });
    const auto c2 = padua_interp(t2x, 2);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const std::vector<double> p{u(rng), u(rng)};
        CHECK(std::abs(c2.evaluate(p) - t2x(p)) < 1e-12);
    }

    const auto osc = memoize(benchmark_field(Benchmark::OSC_SAE));
    const auto c8 = padua_interp(osc, 8);
    CHECK(c8.basis.norm() == DegreeNorm::Total);
    CHECK(c8.basis.degree_bound() == 8);
    for (const auto& p : padua_points(8)) {
        CHECK(std::abs(c8.evaluate(p) - osc(p[0], p[1])) < 1e-11);
    }
}

TEST_CASE("padua_interp reproduces total-degree polynomials") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const GradedBasis b(Family::Chebyshev, 2, DegreeNorm::Total, 7);
    std::vector<double> c(b.size());
    for (double& v : c) v = u(rng);
    const CoefficientSet g(b, c);
    const ScalarField f(2, [&g](std::span<const double> p) { return g.evaluate(p); });
    CHECK(coeff_error_sum(g, padua_interp(f, 7)) < 1e-11);
}

TEST_CASE("tensor_interp") {
    const ScalarField xy(2, [](std::span<const double> p) { return p[0] * p[1]; });
    const auto c = tensor_interp(xy, 1);
    const auto pos = c.basis.position(MultiIndex{{1, 1}});
    REQUIRE(pos >= 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        CHECK(std::abs(c.coeffs[i] - (static_cast<std::ptrdiff_t>(i) == pos ? 1.0 : 0.0)) < 1e-14);
    }

    const ScalarField one(2, [](std::span<const double>) { return 1.0; });
    const auto c1 = tensor_interp(one, 3);
    CHECK(std::abs(c1.coeffs[0] - 1.0) < 1e-14);
    for (std::size_t i = 1; i < c1.size(); ++i) CHECK(std::abs(c1.coeffs[i]) < 1e-14);

    const auto osc = memoize(benchmark_field(Benchmark::OSC_MSSAE));
    const auto c8 = tensor_interp(osc, 8);
    CHECK(c8.basis.norm() == DegreeNorm::Maximal);
    for (int j = 0; j <= 8; ++j) {
        for (int k = 0; k <= 8; ++k) {
            const double x = std::cos(j * M_PI / 8), y = std::cos(k * M_PI / 8);
            const double v = osc(x, y);
            CHECK(std::abs(c8.evaluate(std::vector<double>{x, y}) - v) < 1e-11 * (1.0 + std::abs(v)));
        }
    }
}

TEST_CASE("eval_approx") {
    const CoefficientSet c(leg1(3), {1.0, 0.0, 0.0, 0.0});
    CHECK(eval_approx(c, std::vector<double>{0.42}) == 1.0);
    const CoefficientSet d(leg1(1), {0.0, 1.0});
    CHECK(eval_approx(d, std::vector<double>{0.7}) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("linf_rel_error") {
    const auto mssae = benchmark_field(Benchmark::MSSAE1);
    const CoefficientSet lin(leg1(1), {0.25, 0.5});
    CHECK(std::abs(linf_rel_error(mssae, lin, 10001) - 0.25) < 1e-12);

    const ScalarField p3(1, [](std::span<const double> x) { return legendre_eval(3, x[0]); });
    const CoefficientSet exact(leg1(3), {0.0, 0.0, 0.0, 1.0});
    CHECK(linf_rel_error(p3, exact, 1001) < 1e-12);

    const auto grid = equispaced_grid(2, 3);
    CHECK(grid.size() == 9);
    CHECK(grid.front() == std::vector<double>{-1.0, -1.0});
    CHECK(grid.back() == std::vector<double>{1.0, 1.0});
}

TEST_CASE("fit_rate") {
    std::vector<ErrorRecord> a, b;
    for (int p = 2; p <= 40; p += 2) {
        a.push_back(rec(p, 3.0 / p));
        b.push_back(rec(p, 0.7 / std::sqrt(p)));
    }
    CHECK(std::abs(fit_rate(a, 2, 40) + 1.0) < 1e-12);
    CHECK(std::abs(fit_rate(b, 2, 40) + 0.5) < 1e-12);
    CHECK(std::abs(fit_rate(a) + 1.0) < 1e-12);
    CHECK_THROWS_AS((void)fit_rate(a, 2, 6), InsufficientDataError);
    std::vector<ErrorRecord> zeros{rec(1, 0.0), rec(2, 0.0), rec(3, 0.0), rec(4, 1.0), rec(5, 0.5)};
    CHECK_THROWS_AS((void)fit_rate(zeros, 1, 5), InsufficientDataError);
}

TEST_CASE("MSSAE1 Galerkin rate over odd P") {
    const auto f = benchmark_field(Benchmark::MSSAE1);
    std::vector<ErrorRecord> recs;
    for (int p = 9; p <= 63; p += 2) {
        const auto c = galerkin_coeffs(f, leg1(p), gauss_legendre(4 * p));
        recs.push_back(rec(p, linf_rel_error(f, c, 10001)));
    }
    const double slope = fit_rate(recs, 9, 63);
    CHECK(slope >= -1.25);
    CHECK(slope <= -0.75);
}

TEST_CASE("coeff_error_sum") {
    const CoefficientSet a(leg1(2), {1.0, 2.0, 3.0});
    CoefficientSet b = a;
    CHECK(coeff_error_sum(a, b) == 0.0);
    b.coeffs[1] += 1e-3;
    CHECK(std::abs(coeff_error_sum(a, b) - 1e-3) < 1e-15);
    CHECK_THROWS_AS((void)coeff_error_sum(a, CoefficientSet(leg1(1), {1.0, 2.0})), ConfigError);

    const auto sae = benchmark_field(Benchmark::SAE1);
    const auto g64 = galerkin_coeffs(sae, leg1(20), gauss_legendre(64));
    const auto g128 = galerkin_coeffs(sae, leg1(20), gauss_legendre(128));
    CHECK(coeff_error_sum(g64, g128) < 1e-12);
}

TEST_CASE("Galerkin is rho-optimal against collocation") {
    for (auto b : {Benchmark::SAE1, Benchmark::MSSAE1, Benchmark::MNSSAE1}) {
        const auto f = benchmark_field(b);
        for (int p : {1, 4, 9, 16, 25, 40}) {
            const auto gal = galerkin_coeffs(f, leg1(p), gauss_legendre(std::max(4 * p, 200)));
            const auto col = cheb_interp_1d(f, p);
            CHECK(rho_norm_error(f, gal) <= rho_norm_error(f, col) + 1e-10);
        }
    }
}

TEST_CASE("build_approx") {
    const auto f = benchmark_field(Benchmark::SAE1);
    ApproxConfig cfg{Method::Galerkin, leg1(6), gauss_legendre(3)};
    const auto r = build_approx(f, cfg);
    CHECK(r.decoupling_violated);
    cfg.rule = gauss_legendre(24);
    CHECK_FALSE(build_approx(f, cfg).decoupling_violated);
    cfg.rule.reset();
    CHECK_THROWS_AS((void)build_approx(f, cfg), ConfigError);

    cfg.method = Method::Collocation;
    cfg.basis = GradedBasis(Family::Chebyshev, 1, DegreeNorm::Total, 6);
    const auto c = build_approx(f, cfg);
    CHECK(c.coeffs.basis.family() == Family::Chebyshev);

    CHECK(parse_method("collocation") == Method::Collocation);
    CHECK_THROWS_AS((void)parse_method("remez"), ConfigError);
}
