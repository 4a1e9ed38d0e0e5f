#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "isores/invariants.hpp"
#include "isores/signal.hpp"

using namespace isores;

namespace {

const double pi = std::acos(-1.0);

Grid default_grid() { return Grid::symmetric(20.0, 4096); }

}  // namespace

TEST_SUITE("sig-core") {

TEST_CASE("grid construction") {
    const Grid g(-1.0, 3.0, 17);
    CHECK(g.step() == doctest::Approx(0.25));
    CHECK(g[0] == -1.0);
    CHECK(g[16] == 3.0);
    CHECK_FALSE(g.is_symmetric());

    CHECK_THROWS_AS(Grid(0.0, 1.0, 15), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1.0, 1.0, 32), std::invalid_argument);
    CHECK_THROWS_AS(Grid(2.0, 1.0, 32), std::invalid_argument);
}

TEST_CASE("symmetric grids are odd and mirror exactly") {
    const Grid g = default_grid();
    CHECK(g.size() == 4097);
    CHECK(g.is_symmetric());
    CHECK(g[g.size() / 2] == 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE(g[i] == -g[g.mirror(i)]);
    }
    const Grid h = Grid::symmetric_with_step(4.0, 1.0 / 1024.0);
    CHECK(h.step() == 1.0 / 1024.0);
    CHECK(h[h.nearest(0.5)] == 0.5);
}

TEST_CASE("windows keep the step") {
    const Grid g = default_grid();
    const Grid w = g.window(5.0);
    CHECK(w.step() == doctest::Approx(g.step()).epsilon(1e-14));
    CHECK(w.is_symmetric());
    CHECK(w.t_max() <= 5.0);
    CHECK(w.t_max() > 5.0 - g.step());
    CHECK(g[g.window_offset(5.0)] == doctest::Approx(w[0]));
}

TEST_CASE("sample evaluates closed forms at the nodes") {
    const Grid g = default_grid();
    const Signal s = sample("gaussian", g);
    CHECK(s.at_origin() == cplx(1.0, 0.0));
    CHECK(s.provenance_id() == "gaussian");

    const double a = std::sqrt(pi / 2.0);
    CHECK(sample("sech-a", g, std::span<const double>(&a, 1)).at_origin() == cplx(1.0, 0.0));

    const Grid unit = Grid::symmetric(1.0, 17);
    const double one = 1.0;
    const Signal h1 = sample("hermite-gauss", unit, std::span<const double>(&one, 1));
    CHECK(h1[16].real() == doctest::Approx(1.2130613194252668).epsilon(1e-15));
}

TEST_CASE("sample rejects unknown forms and bad parameters") {
    const Grid g = default_grid();
    CHECK_THROWS_AS(sample("no-such-form", g), std::invalid_argument);
    const double bad = -1.0;
    CHECK_THROWS_AS(sample("sech-a", g, std::span<const double>(&bad, 1)), std::invalid_argument);
    const double zero = 0.0;
    CHECK_THROWS_AS(sample("sech-a", g, std::span<const double>(&zero, 1)), std::invalid_argument);
}

TEST_CASE("signals reject non-finite samples") {
    const Grid g(-1.0, 1.0, 16);
    std::vector<cplx> v(16, 1.0);
    v[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(Signal(g, v), std::invalid_argument);
    v[3] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Signal(g, v), std::invalid_argument);
    CHECK_THROWS_AS(Signal(g, std::vector<cplx>(15)), std::invalid_argument);
}

TEST_CASE("integrate") {
    const Signal sech2 = sample("sech-squared", Grid::symmetric(40.0, 8192));
    CHECK(std::abs(integrate(sech2) - 2.0) < 1e-9);

    CHECK(integrate(zeros(default_grid())) == cplx(0.0, 0.0));

    const Signal gauss = sample("gaussian", default_grid());
    CHECK(std::abs(integrate(gauss) - 2.5066282746310005) < 1e-10);
}

TEST_CASE("integral of sech itself is pi, not 2") {
    const double one = 1.0;
    const Signal s = sample("sech-a", Grid::symmetric(60.0, 16385), std::span<const double>(&one, 1));
    CHECK(integrate(s).real() == doctest::Approx(pi).epsilon(1e-10));
}

TEST_CASE("singular signals cannot be integrated") {
    // An even node count keeps t = 0 off the grid.
    const Signal h2 = sample("h2", Grid(-20.0, 20.0, 4096));
    CHECK(h2.flags().singular);
    CHECK_THROWS(integrate(h2));
    CHECK_THROWS_AS(sample("h2", default_grid()), std::domain_error);
}

TEST_CASE("energy") {
    const double zero = 0.0;
    const Signal psi0 = sample("hermite-gauss", default_grid(), std::span<const double>(&zero, 1));
    CHECK(energy(psi0) == doctest::Approx(1.7724538509055160).epsilon(1e-12));
    CHECK(energy(zeros(default_grid())) == 0.0);
    CHECK(energy(sample("tanh-sech", default_grid())) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("parity parts") {
    const Grid g = default_grid();
    const Signal gauss = sample("gaussian", g);
    CHECK(odd_part(gauss).flags().zero);

    std::vector<cplx> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        v[i] = 2.0 * g[i] * std::exp(-g[i] * g[i] / 2.0);
    }
    CHECK(even_part(Signal(g, v)).flags().zero);

    const Grid unit = Grid::symmetric(2.0, 17);
    const Signal e = even_part(sample("one-sided-exp", unit));
    const double expected = 0.1839397205857212;
    CHECK(e[unit.nearest(1.0)].real() == doctest::Approx(expected).epsilon(1e-15));
    CHECK(e[unit.nearest(-1.0)].real() == doctest::Approx(expected).epsilon(1e-15));

    CHECK_THROWS_AS(even_part(sample("gaussian", Grid(-1.0, 2.0, 33))), std::invalid_argument);
    CHECK_THROWS_AS(odd_part(sample("gaussian", Grid(-1.0, 2.0, 33))), std::invalid_argument);
}

TEST_CASE("parity reconstruction is exact to rounding") {
    const Grid g = default_grid();
    std::mt19937_64 rng(3);
    for (int k = 0; k < 5; ++k) {
        const Signal s = sample(random_mixture(rng), g);
        const Signal e = even_part(s);
        const Signal o = odd_part(s);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double scale = std::max(std::abs(s[i]), std::abs(s[g.mirror(i)]));
            REQUIRE(std::abs(e[i] + o[i] - s[i]) <= std::numeric_limits<double>::epsilon() * scale);
            REQUIRE(e[i] == e[g.mirror(i)]);
            REQUIRE(o[i] == -o[g.mirror(i)]);
        }
    }
    // Pure-parity inputs come back bit for bit.
    const Signal gauss = sample("gaussian", g);
    const Signal back = combine(1.0, even_part(gauss), 1.0, odd_part(gauss));
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE(back[i] == gauss[i]);
    }
}

TEST_CASE("inner product") {
    const Grid g = default_grid();
    auto psi_n = [&](double n) { return sample("hermite-gauss", g, std::span<const double>(&n, 1)); };
    CHECK(std::abs(inner_product(psi_n(0), psi_n(1))) < 1e-10);
    CHECK(std::abs(inner_product(psi_n(2), psi_n(4))) < 1e-8);

    const Signal m = sample("modulated-gaussian", g, std::vector<double>{2.0, 0.3});
    const Signal s = sample("sech-a", g, std::vector<double>{0.7});
    CHECK(inner_product(m, m).real() == doctest::Approx(energy(m)).epsilon(1e-14));
    const cplx ab = inner_product(m, s);
    const cplx ba = inner_product(s, m);
    CHECK(std::abs(ab - std::conj(ba)) < 1e-15);

    CHECK_THROWS_AS(inner_product(m, sample("gaussian", Grid::symmetric(10.0, 4097))), std::invalid_argument);
}

TEST_CASE("integrate is linear") {
    const Grid g = default_grid();
    const Signal a = sample("gaussian", g, std::vector<double>{1.0, 0.5});
    const Signal b = sample("lorentzian", g);
    const cplx alpha(0.3, 2.0), beta(-1.5, 0.1);
    const cplx lhs = integrate(combine(alpha, a, beta, b));
    const cplx rhs = alpha * integrate(a) + beta * integrate(b);
    CHECK(std::abs(lhs - rhs) < 1e-14 * std::abs(rhs));
}

TEST_CASE("trapezoid converges for the gaussian") {
    double prev = integrate(sample("gaussian", Grid::symmetric(20.0, 1025))).real();
    for (std::size_t n : {2049, 4097, 8193}) {
        const double cur = integrate(sample("gaussian", Grid::symmetric(20.0, n))).real();
        CHECK(std::abs(cur - prev) < 1e-10);
        prev = cur;
    }
}

TEST_CASE("jump points take the midpoint value") {
    const Grid g = Grid::symmetric_with_step(2.0, 1.0 / 8.0);
    const Signal haar = sample("haar", g);
    CHECK(haar[g.nearest(0.0)].real() == 0.5);
    CHECK(haar[g.nearest(0.5)].real() == 0.0);
    CHECK(haar[g.nearest(1.0)].real() == -0.5);
    CHECK(haar[g.nearest(0.25)].real() == 1.0);
    CHECK(sample("one-sided-exp", g).at_origin().real() == 0.5);
}

TEST_CASE("derivatives") {
    const Grid g = default_grid();
    const Signal s = sample("gaussian", g);
    const Signal d = derivative(s);
    const Signal d2 = second_derivative(s);
    double e1 = 0.0, e2 = 0.0;
    for (std::size_t i = 3; i + 3 < g.size(); ++i) {
        const double t = g[i];
        const double f = std::exp(-t * t / 2.0);
        e1 = std::max(e1, std::abs(d[i].real() + t * f));
        e2 = std::max(e2, std::abs(d2[i].real() - (t * t - 1.0) * f));
    }
    CHECK(e1 < 1e-8);
    CHECK(e2 < 1e-7);
}

}  // TEST_SUITE
