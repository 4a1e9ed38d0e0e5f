#include <doctest.h>

#include <cmath>

#include "isores/hermite.hpp"

using namespace isores;

namespace {

Grid default_grid() { return Grid::symmetric(20.0, 4096); }

std::vector<long long> coeffs(const HermitePoly& p) {
    std::vector<long long> out;
    for (const auto& c : p.coefficients) {
        out.push_back(static_cast<long long>(c));
    }
    return out;
}

}  // namespace

TEST_SUITE("hermite-eig") {

TEST_CASE("low-order hermite polynomials") {
    CHECK(coeffs(hermite(0)) == std::vector<long long>{1});
    CHECK(coeffs(hermite(1)) == std::vector<long long>{0, 2});
    CHECK(coeffs(hermite(2)) == std::vector<long long>{-2, 0, 4});
    CHECK(coeffs(hermite(3)) == std::vector<long long>{0, -12, 0, 8});
    CHECK(coeffs(hermite(4)) == std::vector<long long>{12, 0, -48, 0, 16});
    CHECK(coeffs(hermite(5)) == std::vector<long long>{0, 120, 0, -160, 0, 32});
}

TEST_CASE("structure of hermite coefficients") {
    for (int n = 0; n <= max_hermite_degree; ++n) {
        const HermitePoly h = hermite(n);
        REQUIRE(h.degree == n);
        REQUIRE(h.coefficients.size() == static_cast<std::size_t>(n) + 1);
        REQUIRE(h.coefficients.back() == BigInt(1) << n);
        for (int k = 0; k <= n; ++k) {
            if ((k - n) % 2 != 0) {
                REQUIRE(h.coefficients[static_cast<std::size_t>(k)] == 0);
            }
        }
    }
    CHECK_THROWS_AS(hermite(65), std::invalid_argument);
    CHECK_THROWS_AS(hermite(-1), std::invalid_argument);
}

TEST_CASE("degree 64 stays exact") {
    // H_64(0) = (-1)^32 64! / 32!
    BigInt expected = 1;
    for (int k = 33; k <= 64; ++k) {
        expected *= k;
    }
    CHECK(hermite(64).coefficients[0] == expected);
}

TEST_CASE("rodrigues agrees with the recurrence") {
    for (int n = 0; n <= 12; ++n) {
        REQUIRE(rodrigues_check(n));
    }
    CHECK(rodrigues_polynomial(4).evaluate(Rational(1)) == Rational(-20));
    CHECK(hermite(4).evaluate(Rational(1)) == Rational(-20));
    CHECK(rodrigues_polynomial(0).evaluate(Rational(3, 7)) == Rational(1));
    CHECK(rodrigues_polynomial(7).evaluate(Rational(0)) == Rational(0));
    CHECK_THROWS_AS(rodrigues_check(13), std::invalid_argument);
}

TEST_CASE("floating-point recurrence matches exact coefficients") {
    for (int n = 0; n <= 10; ++n) {
        for (double t : {-2.5, -0.3, 0.0, 1.0, 3.75}) {
            const double exact = static_cast<double>(hermite(n).evaluate(Rational(static_cast<long long>(t * 100), 100)));
            REQUIRE(hermite_value(n, t) == doctest::Approx(exact).epsilon(1e-13));
        }
    }
}

TEST_CASE("eigenfunction spec") {
    for (int n = 0; n <= 12; ++n) {
        const EigenfunctionSpec s = eigenfunction_spec(n);
        const cplx l4 = s.eigenvalue * s.eigenvalue * s.eigenvalue * s.eigenvalue;
        REQUIRE(std::abs(l4 - cplx(4.0 * M_PI * M_PI, 0.0)) < 1e-12);
        REQUIRE(s.kappa == -(2.0 * n + 1.0));
        REQUIRE(s.eigenvalue == admissible_eigenvalues()[static_cast<std::size_t>(n % 4)]);
    }
    CHECK(eigenfunction_spec(1, {1}).eigenvalue == cplx(0.0, sqrt_two_pi));
    CHECK_THROWS_AS(eigenfunction_spec(-1), std::invalid_argument);
}

TEST_CASE("psi") {
    const Grid g = default_grid();
    const Signal p2 = psi(2, g);
    CHECK(p2.at_origin().real() == -2.0);
    CHECK_THROWS_AS(psi(21, g), std::invalid_argument);
    CHECK_THROWS_AS(psi(10, Grid::symmetric(3.0, 301)), std::invalid_argument);
    CHECK(energy(psi_normalized(7, g)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("orthogonality") {
    const Grid g = default_grid();
    for (int m = 0; m <= 10; ++m) {
        for (int n = m + 1; n <= 10; ++n) {
            REQUIRE(std::abs(inner_product(psi_normalized(m, g), psi_normalized(n, g))) < 1e-8);
        }
    }
}

TEST_CASE("eigen relation") {
    const Grid g = default_grid();
    for (int n = 0; n <= 10; ++n) {
        const Signal s = psi(n, g);
        const Signal F = transform_onto(s, g);
        const cplx lambda = eigenfunction_spec(n).eigenvalue;
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            num += std::norm(F[i] - lambda * s[i]);
            den += std::norm(sqrt_two_pi * s[i]);
        }
        REQUIRE(std::sqrt(num / den) < 1e-6);
    }
}

TEST_CASE("ode residual") {
    const Grid g = default_grid();
    CHECK(ode_residual(psi(3, g), -7.0) < 1e-5);
    CHECK(ode_residual(psi(0, g), -1.0) < 1e-6);
    const double wrong = ode_residual(psi(2, g), -3.0);
    CHECK(wrong > 0.1);
    // 2 ||psi_2|| / ||(3 + t^2) psi_2|| in closed form.
    CHECK(wrong == doctest::Approx(0.34426518632954817).epsilon(1e-6));
}

TEST_CASE("oscillator residual") {
    const Grid g = default_grid();
    CHECK(oscillator_residual(psi(1, g), 1) < 1e-5);
    CHECK(oscillator_residual(psi(0, g), 0) < 1e-6);
    CHECK(oscillator_residual(psi(5, g), 5) == ode_residual(psi(5, g), -11.0));

    std::vector<cplx> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        v[i] = g[i] * g[i] * std::exp(-g[i] * g[i] / 2.0);
    }
    const double r = oscillator_residual(Signal(g, v), 0);
    CHECK(r > 0.1);
    CHECK(r == doctest::Approx(0.85039040552437420).epsilon(1e-6));
}

TEST_CASE("ode residual separates neighbouring eigenvalues") {
    const Grid g = default_grid();
    for (int n = 0; n <= 10; ++n) {
        const Signal s = psi(n, g);
        const double kappa = -(2.0 * n + 1.0);
        REQUIRE(ode_residual(s, kappa) < 1e-5);
        REQUIRE(ode_residual(s, kappa + 2.0) > 1e-2);
        REQUIRE(ode_residual(s, kappa - 2.0) > 1e-2);
    }
}

}  // TEST_SUITE
