#include <doctest.h>

#include <cmath>
#include <random>

#include "isores/hermite.hpp"
#include "isores/invariants.hpp"

using namespace isores;

namespace {

const double pi = std::acos(-1.0);

Grid default_grid() { return Grid::symmetric(20.0, 4096); }

Signal odd_gaussian(const Grid& g) {
    std::vector<cplx> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        v[i] = 2.0 * g[i] * std::exp(-g[i] * g[i] / 2.0);
    }
    return Signal(g, v);
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("h1 from the lorentzian pair") {
    const CatalogEntry e = catalog("h1", catalog_default_grid("h1"));
    REQUIRE(e.signal);
    const Signal& h = *e.signal;
    for (double t : {0.0, 0.5, -2.0, 7.0}) {
        const double expected = sqrt_two_pi / (1.0 + t * t) + pi * std::exp(-std::abs(t));
        CHECK(h[h.grid().nearest(t)].real() == doctest::Approx(expected).epsilon(1e-14));
    }
    const EigenReport r = eigencheck(h);
    CHECK(r.best_eigenvalue == cplx(sqrt_two_pi, 0.0));
    CHECK(r.relative_residual < 1e-4);
}

TEST_CASE("analytic pair consistency") {
    auto F = std::make_shared<ClosedForm>();
    F->id = "pi-two-sided-exp";
    F->eval = [](double w) { return cplx(pi * std::exp(-std::abs(w))); };
    const TransformPair lor = analytic_pair(closed_form("lorentzian"), F, catalog_default_grid("h1"));
    CHECK(lor.analytic);
    CHECK(pair_consistency(lor) < 1e-4);

    auto G = std::make_shared<ClosedForm>();
    G->id = "scaled-gaussian";
    G->eval = [](double w) { return cplx(sqrt_two_pi * std::exp(-w * w / 2.0)); };
    CHECK(pair_consistency(analytic_pair(closed_form("gaussian"), G, default_grid())) < 1e-12);
}

TEST_CASE("even invariant of the gaussian is 2 sqrt(2 pi) gaussian") {
    const Grid g = default_grid();
    auto G = std::make_shared<ClosedForm>();
    G->id = "scaled-gaussian";
    G->eval = [](double w) { return cplx(sqrt_two_pi * std::exp(-w * w / 2.0)); };
    const Signal h = even_invariant(analytic_pair(closed_form("gaussian"), G, g));
    for (std::size_t i = 0; i < g.size(); i += 97) {
        REQUIRE(std::abs(h[i] - 2.0 * sqrt_two_pi * std::exp(-g[i] * g[i] / 2.0)) < 1e-14);
    }
    CHECK(eigencheck(h).quarter_turns == 0);
}

TEST_CASE("even invariant of an odd signal vanishes") {
    const Signal h = even_invariant(numeric_pair(odd_gaussian(default_grid())));
    CHECK(h.flags().zero);
}

TEST_CASE("odd invariant of psi_1 is a multiple of psi_1") {
    const Grid g = default_grid();
    const Signal h = odd_invariant(numeric_pair(odd_gaussian(g)));
    const Signal p1 = psi(1, g);
    // h = sqrt(2 pi) f + j (-j sqrt(2 pi) f) = 2 sqrt(2 pi) psi_1
    double worst = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        worst = std::max(worst, std::abs(h[i] - 2.0 * sqrt_two_pi * p1[i]));
    }
    CHECK(worst < 1e-12);
    const EigenReport r = eigencheck(h);
    CHECK(r.best_eigenvalue == odd_invariant_eigenvalue());
    CHECK(r.relative_residual < 1e-6);
}

TEST_CASE("odd invariant of an even signal vanishes") {
    CHECK(odd_invariant(numeric_pair(sample("gaussian", default_grid()))).flags().zero);
}

TEST_CASE("odd invariant of t exp(-|t|)") {
    // The spectrum decays like w^-3, so the grid must be wide for 1e-4.
    const Grid g = Grid::symmetric(40.0, 8193);
    const Signal h = odd_invariant(numeric_pair(sample("t-two-sided-exp", g)));
    const EigenReport r = eigencheck(h);
    CHECK(r.best_eigenvalue == cplx(0.0, -sqrt_two_pi));
    CHECK(r.relative_residual < 1e-4);
}

TEST_CASE("no odd combination has eigenvalue -sqrt(2 pi)") {
    // F applied twice is -2 pi on odd signals, so any odd eigenvalue squares
    // to -2 pi. The real-coefficient combination sqrt(2 pi) O{f} - O{F}
    // therefore misses -sqrt(2 pi) by a residual of order one.
    const Grid g = Grid::symmetric(40.0, 8193);
    const TransformPair pair = numeric_pair(sample("t-two-sided-exp", g));
    const Signal h = combine(sqrt_two_pi, odd_part(pair.f), -1.0, odd_part(pair.F));
    const EigenReport r = eigencheck(h);
    CHECK(r.residuals[2] > 1.0);
    CHECK(r.residuals[2] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-3));
    CHECK(r.best_eigenvalue == cplx(0.0, -sqrt_two_pi));
}

TEST_CASE("constructor closure over random gaussian mixtures") {
    const Grid g = default_grid();
    std::mt19937_64 rng(99);
    for (int k = 0; k < 20; ++k) {
        const TransformPair pair = numeric_pair(sample(random_mixture(rng), g));
        const Signal he = even_invariant(pair);
        const Signal ho = odd_invariant(pair);
        REQUIRE_FALSE(he.flags().zero);
        REQUIRE_FALSE(ho.flags().zero);
        const EigenReport re = eigencheck(he);
        const EigenReport ro = eigencheck(ho);
        REQUIRE(re.best_eigenvalue == even_invariant_eigenvalue());
        REQUIRE(re.relative_residual < 1e-4);
        REQUIRE(ro.best_eigenvalue == odd_invariant_eigenvalue());
        REQUIRE(ro.relative_residual < 1e-4);
    }
}

TEST_CASE("even input gives sqrt(2 pi) f + F without halving") {
    const Grid g = default_grid();
    const Signal f = sample("sech-a", g, std::vector<double>{0.9});
    const TransformPair pair = numeric_pair(f);
    const Signal h = even_invariant(pair);
    for (std::size_t i = 0; i < g.size(); ++i) {
        REQUIRE(std::abs(h[i] - (sqrt_two_pi * f[i] + pair.F[i])) < 1e-12);
    }
}

TEST_CASE("sech catalog entry") {
    const CatalogEntry e = catalog("sech", default_grid());
    REQUIRE(e.signal);
    CHECK(e.signal->at_origin().real() == 1.0);
    const EigenReport r = eigencheck(*e.signal);
    CHECK(r.best_eigenvalue == cplx(sqrt_two_pi, 0.0));
    CHECK(r.relative_residual < 1e-6);
    CHECK(e.expected_eigenvalue == cplx(sqrt_two_pi, 0.0));
}

TEST_CASE("h2 is symbolic only") {
    const CatalogEntry e = catalog("h2-symbolic", default_grid());
    CHECK_FALSE(e.numeric);
    CHECK_FALSE(e.signal.has_value());
    CHECK(e.definition == "sqrt(2 pi) |t| - 2 / t^2");
    CHECK_THROWS_AS(catalog("h3", default_grid()), std::invalid_argument);
}

TEST_CASE("invariants carry a closed form for later rescaling") {
    const Signal h = even_invariant(numeric_pair(sample("gaussian", default_grid())));
    CHECK_FALSE(h.provenance());
    const CatalogEntry e = catalog("h1", default_grid());
    REQUIRE(e.signal->provenance());
    CHECK(e.signal->provenance()->eval(0.0).real() == doctest::Approx(sqrt_two_pi + pi));
}

}  // TEST_SUITE
