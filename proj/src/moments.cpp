#include "isores/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "forms.hpp"

namespace isores {

using detail::pi;

namespace {

struct RawMoments {
    double mass = 0.0;
    double first = 0.0;
    double second = 0.0;
};

RawMoments raw_moments(std::span<const double> density, const Grid& grid, std::size_t first, std::size_t count) {
    std::vector<double> m0(count), m1(count), m2(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double x = grid[first + i];
        const double d = density[first + i];
        m0[i] = d;
        m1[i] = x * d;
        m2[i] = x * x * d;
    }
    const double h = grid.step();
    return {trapezoid(std::span<const double>(m0), h), trapezoid(std::span<const double>(m1), h),
            trapezoid(std::span<const double>(m2), h)};
}

double central_variance(std::span<const double> density, const Grid& grid, double mean, double mass) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double dx = grid[i] - mean;
        v[i] = dx * dx * density[i];
    }
    return trapezoid(std::span<const double>(v), grid.step()) / mass;
}

}  // namespace

DivergenceVerdict nested_moment_verdict(std::span<const double> density, const Grid& grid,
                                        std::span<const double> half_widths, const DivergencePolicy& policy) {
    if (density.size() != grid.size()) {
        throw std::invalid_argument("divergence: density does not match grid");
    }
    if (half_widths.size() < 3) {
        throw std::invalid_argument("divergence: need at least three nested domains");
    }
    DivergenceVerdict verdict;
    RawMoments widest;
    for (const double hw : half_widths) {
        const std::size_t first = grid.window_offset(hw);
        const std::size_t count = grid.window(hw).size();
        widest = raw_moments(density, grid, first, count);
        if (!(widest.mass > 0.0)) {
            throw std::invalid_argument("divergence: zero energy on a domain");
        }
        verdict.m2_by_domain.push_back(widest.second / widest.mass);
    }
    const auto& m = verdict.m2_by_domain;
    const std::size_t k = m.size();
    const double last = std::abs(m[k - 1] - m[k - 2]);
    const double prev = std::abs(m[k - 2] - m[k - 3]);
    const double scale = std::abs(m[k - 1]);
    verdict.last_ratio = prev > 0.0 ? last / prev : (last > 0.0 ? divergent_value : 0.0);

    const bool negligible = last <= 1e-12 * scale;
    const bool shrinking = verdict.last_ratio <= policy.ratio_threshold && last < policy.relative_increment * scale;
    verdict.divergent = !(negligible || shrinking);

    verdict.mean = widest.first / widest.mass;
    if (verdict.divergent) {
        verdict.m2 = divergent_value;
        verdict.var = divergent_value;
    } else {
        verdict.m2 = m[k - 1];
        verdict.var = central_variance(density, grid, verdict.mean, widest.mass);
    }
    return verdict;
}

namespace {

std::vector<double> nested_half_widths(double full, const DivergencePolicy& policy) {
    std::vector<double> hw;
    for (int k = policy.doublings; k >= 0; --k) {
        hw.push_back(full / std::ldexp(1.0, k));
    }
    return hw;
}

std::vector<double> densities(const Signal& s) {
    std::vector<double> d(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        d[i] = std::norm(s[i]);
    }
    return d;
}

}  // namespace

MomentReport moments(const Signal& s, FourierConvention conv, const DivergencePolicy& policy) {
    if (!s.grid().is_symmetric()) {
        throw std::invalid_argument("moments: grid must be symmetric");
    }
    MomentReport r;
    r.energy = energy(s);
    if (!(r.energy > 0.0)) {
        throw std::invalid_argument("moments: zero-energy signal");
    }

    const std::vector<double> dt = densities(s);
    const auto t_hw = nested_half_widths(s.grid().t_max(), policy);
    const DivergenceVerdict tv = nested_moment_verdict(dt, s.grid(), t_hw, policy);

    const Signal F = transform(s, conv);
    const std::vector<double> dw = densities(F);
    const auto w_hw = nested_half_widths(F.grid().t_max(), policy);
    const DivergenceVerdict wv = nested_moment_verdict(dw, F.grid(), w_hw, policy);

    r.mean_t = tv.mean;
    r.m2_t = tv.m2;
    r.var_t = tv.var;
    r.divergent_t = tv.divergent;
    r.mean_w = wv.mean;
    r.m2_w = wv.m2;
    r.var_w = wv.var;
    r.divergent_w = wv.divergent;

    r.delta_t = std::sqrt(r.var_t);
    r.delta_w = std::sqrt(r.var_w);
    r.Delta_T = std::sqrt(2.0 * pi * r.var_t);
    r.Delta_F = std::sqrt(r.var_w / (2.0 * pi));
    r.gabor_product = r.finite() ? r.delta_t * r.delta_w : divergent_value;
    return r;
}

namespace {

Signal every_other(const Signal& s) {
    const Grid& g = s.grid();
    if (g.size() % 2 == 0) {
        throw std::invalid_argument("resolution_by_derivative: needs an odd number of nodes");
    }
    std::vector<cplx> v((g.size() + 1) / 2);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = s[2 * i];
    }
    const Grid coarse(g.t_min(), g.t_max(), v.size());
    return Signal(coarse, std::move(v));
}

// Returns sqrt(E[s'] / E[s]) and whether E[s'] grows like 1/step.
std::pair<double, bool> derivative_spread(const Signal& s) {
    const double e = energy(s);
    if (!(e > 0.0)) {
        throw std::invalid_argument("resolution_by_derivative: zero-energy signal");
    }
    const double fine = energy(derivative(s));
    const double coarse = energy(derivative(every_other(s)));
    const bool divergent = coarse > 0.0 && fine / coarse > 1.5;
    return {std::sqrt(fine / e), divergent};
}

}  // namespace

DerivativeResolution resolution_by_derivative(const Signal& s, FourierConvention conv) {
    DerivativeResolution out;
    const auto [dw, div_w] = derivative_spread(s);
    const Signal F = transform_onto(s, s.grid(), conv);
    const auto [dt, div_t] = derivative_spread(F);
    out.delta_w = div_w ? divergent_value : dw;
    out.divergent_w = div_w;
    out.delta_t = div_t ? divergent_value : dt;
    out.divergent_t = div_t;
    return out;
}

double gabor_product(const Signal& s, FourierConvention conv) {
    const MomentReport r = moments(s, conv);
    if (!r.finite()) {
        throw std::domain_error("gabor_product: resolution diverges on the " +
                                std::string(r.divergent_t ? "time" : "frequency") + " axis");
    }
    return r.gabor_product;
}

}  // namespace isores
