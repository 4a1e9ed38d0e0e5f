#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "isores/fourier.hpp"
#include "isores/signal.hpp"

namespace isores {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int max_hermite_degree = 64;

// Physicists' Hermite polynomial in the monomial basis, exact integers.
struct HermitePoly {
    int degree = 0;
    // coefficients[k] multiplies t^k.
    std::vector<BigInt> coefficients;

    Rational evaluate(const Rational& t) const;
};

// Order n Hermite-Gauss eigenfunction: eigenvalue (-j)^n sqrt(2 pi),
// kappa = -(2n+1) in f'' - t^2 f = kappa f.
struct EigenfunctionSpec {
    int order = 0;
    cplx eigenvalue;
    double kappa = -1.0;
};

// Under kernel_sign = +1 the eigenvalue is (+j)^n sqrt(2 pi).
EigenfunctionSpec eigenfunction_spec(int n, FourierConvention conv = {});

// Built with H_{n+1} = 2t H_n - 2n H_{n-1}. Throws for n outside [0, 64].
HermitePoly hermite(int n);

// Differentiates exp(-t^2) n times symbolically (the derivative of
// p(t) exp(-t^2) is (p' - 2t p) exp(-t^2)) and compares
// (-1)^n exp(t^2) d^n/dt^n exp(-t^2) against hermite(n) at
// t in {0, +-1/2, +-1, +-2}, in exact rational arithmetic.
bool rodrigues_check(int n);

// Rodrigues polynomial itself, exposed for tests.
HermitePoly rodrigues_polynomial(int n);

// H_n(t) by the three-term recurrence in floating point.
double hermite_value(int n, double t);

inline constexpr int max_psi_order = 20;
inline constexpr double psi_tail_tolerance = 1e-8;

// H_n(t) exp(-t^2/2) on the grid. Throws if n > max_psi_order or the tail at
// the grid ends exceeds psi_tail_tolerance of the peak.
Signal psi(int n, const Grid& grid);

// psi(n) / sqrt(2^n n! sqrt(pi)), unit energy.
Signal psi_normalized(int n, const Grid& grid);

// ||f'' - t^2 f - kappa f|| / ||(|kappa| + t^2) f|| over the interior
// (three nodes dropped at each end), five-point second differences.
double ode_residual(const Signal& s, double kappa);

// y'' + (2n+1 - x^2) y = 0, i.e. ode_residual(s, -(2n+1)).
double oscillator_residual(const Signal& s, int n);

}  // namespace isores
