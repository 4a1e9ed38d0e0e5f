#include "isores/invariants.hpp"

#include <cmath>
#include <stdexcept>

#include "forms.hpp"

namespace isores {

using detail::pi;

TransformPair numeric_pair(const Signal& f, FourierConvention conv) {
    return {f, transform_onto(f, f.grid(), conv), false};
}

TransformPair analytic_pair(std::shared_ptr<const ClosedForm> f, std::shared_ptr<const ClosedForm> F,
                            const Grid& grid) {
    return {sample(std::move(f), grid), sample(std::move(F), grid), true};
}

double pair_consistency(const TransformPair& pair, FourierConvention conv) {
    const Grid& g = pair.f.grid();
    if (!g.same_as(pair.F.grid())) {
        throw std::invalid_argument("pair_consistency: f and F must share a grid");
    }
    const double half = comparison_half_width(g);
    const Grid win = g.window(half);
    const std::size_t offset = g.window_offset(half);
    const Signal numeric = transform_onto(pair.f, win, conv);
    std::vector<double> diff(win.size()), ref(win.size());
    for (std::size_t i = 0; i < win.size(); ++i) {
        diff[i] = std::norm(numeric[i] - pair.F[offset + i]);
        ref[i] = std::norm(pair.F[offset + i]);
    }
    const double denom = trapezoid(std::span<const double>(ref), win.step());
    if (denom == 0.0) {
        throw std::invalid_argument("pair_consistency: F vanishes on the comparison window");
    }
    return std::sqrt(trapezoid(std::span<const double>(diff), win.step()) / denom);
}

namespace {

// Closed form of a * P{f} + b * P{F}, P the even (parity = +1) or odd part.
std::shared_ptr<const ClosedForm> combined_form(const TransformPair& pair, cplx a, cplx b, int parity,
                                                const std::string& id) {
    const auto& f = pair.f.provenance();
    const auto& F = pair.F.provenance();
    if (!f || !F) {
        return nullptr;
    }
    auto out = std::make_shared<ClosedForm>();
    out->id = id;
    out->smooth = f->smooth && F->smooth;
    out->eval = [f, F, a, b, parity](double t) {
        const cplx pf = 0.5 * (f->eval(t) + static_cast<double>(parity) * f->eval(-t));
        const cplx pF = 0.5 * (F->eval(t) + static_cast<double>(parity) * F->eval(-t));
        return a * pf + b * pF;
    };
    return out;
}

// A combination whose energy is roundoff relative to its inputs is the zero
// signal: the transform of an odd input has an even part of order 1e-16.
constexpr double vanishing_ratio = 1e-24;

Signal snap_to_zero(const Signal& h, const TransformPair& pair) {
    const double scale = 2.0 * pi * energy(pair.f) + energy(pair.F);
    if (!h.flags().zero && energy(h) <= vanishing_ratio * scale) {
        return zeros(h.grid());
    }
    return h;
}

Signal with_provenance(const Signal& s, std::shared_ptr<const ClosedForm> form) {
    return Signal(s.grid(), std::vector<cplx>(s.samples().begin(), s.samples().end()), std::move(form), s.flags());
}

}  // namespace

cplx even_invariant_eigenvalue() { return admissible_eigenvalues()[0]; }
cplx odd_invariant_eigenvalue() { return admissible_eigenvalues()[1]; }

Signal even_invariant(const TransformPair& pair) {
    const cplx a = sqrt_two_pi;
    const cplx b = 1.0;
    const Signal h = snap_to_zero(combine(a, even_part(pair.f), b, even_part(pair.F)), pair);
    return with_provenance(h, combined_form(pair, a, b, +1, "even-invariant"));
}

Signal odd_invariant(const TransformPair& pair) {
    const cplx a = sqrt_two_pi;
    const cplx b(0.0, 1.0);
    const Signal h = snap_to_zero(combine(a, odd_part(pair.f), b, odd_part(pair.F)), pair);
    return with_provenance(h, combined_form(pair, a, b, -1, "odd-invariant"));
}

std::shared_ptr<const ClosedForm> random_mixture(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(2, 4);
    std::uniform_real_distribution<double> weight(0.2, 1.0);
    std::uniform_real_distribution<double> shift(-3.0, 3.0);
    std::uniform_real_distribution<double> width(0.5, 2.0);
    std::bernoulli_distribution negative(0.3);
    std::vector<double> p;
    for (int k = count(rng); k > 0; --k) {
        const double w = weight(rng);
        p.push_back(negative(rng) ? -w : w);
        p.push_back(shift(rng));
        p.push_back(width(rng));
    }
    return closed_form("gaussian-mixture", p);
}

const std::vector<std::string>& invariant_names() {
    static const std::vector<std::string> names{"h1", "sech", "h2-symbolic"};
    return names;
}

Grid catalog_default_grid(std::string_view name) {
    // The 1/t^2 tail of h1 leaves a truncation error of order T^{-3/2} in the
    // spectrum, and its e^{-|t|} kink an aliasing floor of order step^2.
    if (name == "h1") {
        return Grid::symmetric(1000.0, 400001);
    }
    return Grid::symmetric(20.0, 4097);
}

CatalogEntry catalog(std::string_view name, const Grid& grid) {
    CatalogEntry entry;
    entry.name = std::string(name);
    entry.expected_eigenvalue = even_invariant_eigenvalue();
    if (name == "h1") {
        auto F = std::make_shared<ClosedForm>();
        F->id = "pi-two-sided-exp";
        F->eval = [](double w) { return cplx(pi * std::exp(-std::abs(w))); };
        const TransformPair pair = analytic_pair(closed_form("lorentzian"), F, grid);
        const Signal h = even_invariant(pair);
        auto form = std::make_shared<ClosedForm>(*h.provenance());
        form->id = "h1";
        entry.signal = with_provenance(h, form);
        entry.definition = "sqrt(2 pi) / (1 + t^2) + pi exp(-|t|)";
        entry.expected_tolerance = 1e-4;
        return entry;
    }
    if (name == "sech") {
        const double a = std::sqrt(pi / 2.0);
        entry.signal = sample("sech-a", grid, std::span<const double>(&a, 1));
        entry.definition = "sech(sqrt(pi/2) t)";
        entry.expected_tolerance = 1e-6;
        return entry;
    }
    if (name == "h2-symbolic") {
        entry.definition = "sqrt(2 pi) |t| - 2 / t^2";
        entry.numeric = false;
        return entry;
    }
    throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
}

}  // namespace isores
