#pragma once

#include <array>
#include <utility>

#include "isores/signal.hpp"

namespace isores {

// Unnormalized continuous Fourier transform
//     F(w) = integral f(t) exp(j * kernel_sign * w * t) dt.
// The default kernel_sign = -1 makes H_n(t) exp(-t^2/2) map to
// (-j)^n sqrt(2 pi) H_n(w) exp(-w^2/2).
struct FourierConvention {
    int kernel_sign = -1;
};

// sqrt(2 pi), the modulus of every eigenvalue of the transform.
inline const double sqrt_two_pi = 2.5066282746310002;

// The four admissible eigenvalues sqrt(2 pi) * (-j)^k, k = 0..3, exact.
std::array<cplx, 4> admissible_eigenvalues();

// Frequency grid reached by an N-point FFT of a symmetric grid with step h:
// N nodes with spacing 2 pi / (N h), symmetric about 0.
Grid dual_grid(const Grid& time_grid);

// Transform onto dual_grid(s.grid()). The result carries the slow_decay flag
// when |s| at the grid ends exceeds tail_tolerance times its peak.
Signal transform(const Signal& s, FourierConvention conv = {},
                 double tail_tolerance = default_tail_tolerance);

// Same quadrature evaluated on an arbitrary uniform output grid (chirp-z).
Signal transform_onto(const Signal& s, const Grid& out, FourierConvention conv = {});

// Inverse transform (1/2pi) integral F(w) exp(-j * kernel_sign * w t) dw
// evaluated on an arbitrary uniform time grid.
Signal inverse_onto(const Signal& spectrum, const Grid& out, FourierConvention conv = {});

// n-fold application, 1 <= n <= 4.
Signal iterate(const Signal& s, int n, FourierConvention conv = {});

struct EigenReport {
    cplx best_eigenvalue;
    // best_eigenvalue = sqrt(2 pi) * (-j)^quarter_turns
    int quarter_turns = 0;
    double relative_residual = 0.0;
    // Residual of the runner-up candidate.
    double second_residual = 0.0;
    std::array<double, 4> residuals{};
    bool is_invariant = false;
};

struct EigenOptions {
    double tolerance = 1e-6;
    // Half width of the comparison window; <= 0 selects
    // min(t_max, pi/step) / 2.
    double window = 0.0;
};

// Compares F{s} against lambda*s on the comparison window for each admissible
// lambda. F{s} is evaluated directly on the time nodes of the window.
EigenReport eigencheck(const Signal& s, FourierConvention conv = {}, EigenOptions opts = {});

// Relative residuals of F{f''}(w) = (jw)^2 F(w) and F{(-jt)^2 f}(w) = F''(w)
// over the comparison window.
std::pair<double, double> differentiation_check(const Signal& s, FourierConvention conv = {});

// Half width of the default comparison window for a grid.
double comparison_half_width(const Grid& g);

}  // namespace isores
