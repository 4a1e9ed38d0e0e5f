#include "isores/hermite.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "forms.hpp"
#include "isores/fourier.hpp"

namespace isores {

Rational HermitePoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = acc * t + Rational(*it);
    }
    return acc;
}

EigenfunctionSpec eigenfunction_spec(int n, FourierConvention conv) {
    if (n < 0) {
        throw std::invalid_argument("eigenfunction order must be nonnegative");
    }
    EigenfunctionSpec spec;
    spec.order = n;
    const int turns = conv.kernel_sign == 1 ? (4 - n % 4) % 4 : n % 4;
    spec.eigenvalue = admissible_eigenvalues()[static_cast<std::size_t>(turns)];
    spec.kappa = -(2.0 * n + 1.0);
    return spec;
}

HermitePoly hermite(int n) {
    if (n < 0 || n > max_hermite_degree) {
        throw std::invalid_argument("hermite: degree must lie in [0, " + std::to_string(max_hermite_degree) + "]");
    }
    std::vector<BigInt> prev{1};
    if (n == 0) {
        return {0, prev};
    }
    std::vector<BigInt> cur{0, 2};
    for (int k = 1; k < n; ++k) {
        std::vector<BigInt> next(static_cast<std::size_t>(k) + 2, 0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += 2 * cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            next[i] -= 2 * k * prev[i];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, cur};
}

HermitePoly rodrigues_polynomial(int n) {
    if (n < 0 || n > max_hermite_degree) {
        throw std::invalid_argument("rodrigues_polynomial: degree out of range");
    }
    // d/dt [p exp(-t^2)] = (p' - 2 t p) exp(-t^2)
    std::vector<BigInt> p{1};
    for (int k = 0; k < n; ++k) {
        std::vector<BigInt> next(p.size() + 1, 0);
        for (std::size_t i = 1; i < p.size(); ++i) {
            next[i - 1] += static_cast<int>(i) * p[i];
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            next[i + 1] -= 2 * p[i];
        }
        p = std::move(next);
    }
    if (n % 2 == 1) {
        for (auto& c : p) {
            c = -c;
        }
    }
    return {n, p};
}

bool rodrigues_check(int n) {
    if (n < 0 || n > 12) {
        throw std::invalid_argument("rodrigues_check: degree must lie in [0, 12]");
    }
    const HermitePoly rec = hermite(n);
    const HermitePoly rod = rodrigues_polynomial(n);
    const std::array<Rational, 7> points{Rational(0),     Rational(1, 2), Rational(-1, 2), Rational(1),
                                         Rational(-1), Rational(2),     Rational(-2)};
    for (const auto& t : points) {
        if (rec.evaluate(t) != rod.evaluate(t)) {
            return false;
        }
    }
    return true;
}

double hermite_value(int n, double t) {
    if (n < 0) {
        throw std::invalid_argument("hermite_value: negative degree");
    }
    double prev = 1.0;
    if (n == 0) {
        return prev;
    }
    double cur = 2.0 * t;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * t * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Signal psi(int n, const Grid& grid) {
    if (n < 0 || n > max_psi_order) {
        throw std::invalid_argument("psi: order must lie in [0, " + std::to_string(max_psi_order) + "]");
    }
    const double order = n;
    Signal s = sample("hermite-gauss", grid, std::span<const double>(&order, 1));
    const double tail = std::max(std::abs(s[0]), std::abs(s[s.size() - 1]));
    if (tail > psi_tail_tolerance * s.peak()) {
        throw std::invalid_argument("psi: order " + std::to_string(n) + " does not decay on this grid");
    }
    return s;
}

Signal psi_normalized(int n, const Grid& grid) {
    const Signal s = psi(n, grid);
    // 2^n n! sqrt(pi)
    double norm2 = std::sqrt(detail::pi);
    for (int k = 1; k <= n; ++k) {
        norm2 *= 2.0 * k;
    }
    return s.scaled(1.0 / std::sqrt(norm2));
}

double ode_residual(const Signal& s, double kappa) {
    constexpr std::size_t skip = 3;
    if (s.size() <= 2 * skip + 1) {
        throw std::invalid_argument("ode_residual: grid too small");
    }
    const Signal d2 = second_derivative(s);
    const std::size_t m = s.size() - 2 * skip;
    std::vector<double> r(m), scale(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + skip;
        const double t = s.grid()[j];
        r[i] = std::norm(d2[j] - t * t * s[j] - kappa * s[j]);
        scale[i] = std::norm((std::abs(kappa) + t * t) * s[j]);
    }
    const double h = s.grid().step();
    const double denom = trapezoid(std::span<const double>(scale), h);
    if (denom == 0.0) {
        return 0.0;
    }
    return std::sqrt(trapezoid(std::span<const double>(r), h) / denom);
}

double oscillator_residual(const Signal& s, int n) { return ode_residual(s, -(2.0 * n + 1.0)); }

}  // namespace isores
