#pragma once

#include <array>
#include <functional>
#include <limits>

#include "isores/fourier.hpp"

namespace isores {

inline constexpr double divergent_value = std::numeric_limits<double>::infinity();

// Expanding-domain test for the second moment of an energy density.
struct DivergencePolicy {
    // The moment is integrated over [-T, T] for T = base, 2 base, ...
    double base_half_width = 20.0;
    int doublings = 3;
    // Convergent iff the last increment is at most ratio_threshold times the
    // one before and below relative_increment of the final value.
    double ratio_threshold = 0.25;
    double relative_increment = 1e-4;
};

struct DivergenceVerdict {
    bool divergent = false;
    // Moments over the widest domain (divergent_value when divergent).
    double m2 = 0.0;
    double mean = 0.0;
    double var = 0.0;
    double last_ratio = 0.0;
    std::vector<double> m2_by_domain;
};

// Applies the expanding-domain rule to a density sampled on a symmetric grid
// whose nested windows are the domains to compare. `half_widths` must be
// increasing and no wider than the grid.
DivergenceVerdict nested_moment_verdict(std::span<const double> density, const Grid& grid,
                                        std::span<const double> half_widths,
                                        const DivergencePolicy& policy);

struct MomentReport {
    double energy = 0.0;
    double mean_t = 0.0, mean_w = 0.0;
    double var_t = 0.0, var_w = 0.0;
    double m2_t = 0.0, m2_w = 0.0;
    double delta_t = 0.0, delta_w = 0.0;
    // r.m.s. duration sqrt(2 pi var_t) and bandwidth sqrt(var_w / (2 pi)).
    double Delta_T = 0.0, Delta_F = 0.0;
    double gabor_product = 0.0;
    bool divergent_t = false, divergent_w = false;

    bool finite() const noexcept { return !divergent_t && !divergent_w; }
};

// Time moments of |s|^2 / E on the signal grid, frequency moments of
// |F|^2 / (2 pi E) on the dual grid. Divergence is judged on the nested
// windows W/8, W/4, W/2, W of each axis.
MomentReport moments(const Signal& s, FourierConvention conv = {},
                     const DivergencePolicy& policy = {});

struct DerivativeResolution {
    double delta_t = 0.0;
    double delta_w = 0.0;
    bool divergent_t = false;
    bool divergent_w = false;
};

// delta_w = sqrt(E[f'] / E[f]) and delta_t = sqrt(E[F'] / E[F]), with F
// evaluated on a frequency grid of the same step and extent as the time grid.
// A derivative energy that grows like 1/step under halving of the resolution
// marks the axis divergent.
DerivativeResolution resolution_by_derivative(const Signal& s, FourierConvention conv = {});

// delta_t * delta_w from central moments; throws on a divergent axis.
double gabor_product(const Signal& s, FourierConvention conv = {});

}  // namespace isores
