#include "isores/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "fft.hpp"
#include "forms.hpp"

namespace isores {

using detail::pi;

namespace {

void require_symmetric(const Grid& g, const char* what) {
    if (!g.is_symmetric()) {
        throw std::invalid_argument(std::string(what) + ": grid must be symmetric about t = 0");
    }
}

void require_sign(FourierConvention conv) {
    if (conv.kernel_sign != 1 && conv.kernel_sign != -1) {
        throw std::invalid_argument("fourier: kernel_sign must be +1 or -1");
    }
}

// exp(j * sign * (pi / (2N)) * r) for an integer r reduced mod 4N.
cplx quarter_phase(std::int64_t r, std::int64_t n, int sign) {
    const std::int64_t m = 4 * n;
    r %= m;
    if (r < 0) {
        r += m;
    }
    return std::polar(1.0, sign * pi * static_cast<double>(r) / (2.0 * static_cast<double>(n)));
}

// exp(j x) with the argument reduced in extended precision.
cplx phase(long double x) {
    constexpr long double two_pi = 6.283185307179586476925286766559005768L;
    x = std::fmod(x, two_pi);
    return std::polar(1.0, static_cast<double>(x));
}

std::vector<cplx> trapezoid_weighted(const Signal& s) {
    std::vector<cplx> a(s.samples().begin(), s.samples().end());
    a.front() *= 0.5;
    a.back() *= 0.5;
    return a;
}

bool slow_decay(const Signal& s, double tail_tolerance) {
    const double peak = s.peak();
    if (peak == 0.0) {
        return false;
    }
    const double tail = std::max(std::abs(s[0]), std::abs(s[s.size() - 1]));
    return tail > tail_tolerance * peak;
}

}  // namespace

std::array<cplx, 4> admissible_eigenvalues() {
    return {cplx(sqrt_two_pi, 0.0), cplx(0.0, -sqrt_two_pi), cplx(-sqrt_two_pi, 0.0), cplx(0.0, sqrt_two_pi)};
}

double comparison_half_width(const Grid& g) { return std::min(g.t_max(), pi / g.step()) / 2.0; }

Grid dual_grid(const Grid& g) {
    require_symmetric(g, "dual_grid");
    const double n = static_cast<double>(g.size());
    const double dw = 2.0 * pi / (n * g.step());
    const double half = 0.5 * (n - 1.0) * dw;
    return Grid(-half, half, g.size());
}

Signal transform(const Signal& s, FourierConvention conv, double tail_tolerance) {
    require_symmetric(s.grid(), "transform");
    require_sign(conv);
    const auto n = static_cast<std::int64_t>(s.size());
    const int sign = conv.kernel_sign;

    // With t_i = (i - M) h, w_k = (k - M) dw, M = (N-1)/2 and h dw = 2 pi / N:
    // w_k t_i = (pi / 2N) [4 k i - 2 (N-1)(k + i) + (N-1)^2].
    std::vector<cplx> a = trapezoid_weighted(s);
    for (std::int64_t i = 0; i < n; ++i) {
        a[static_cast<std::size_t>(i)] *= quarter_phase(-2 * (n - 1) * i, n, sign);
    }
    detail::Fft fft(a.size(), sign);
    fft(a);
    const double h = s.grid().step();
    for (std::int64_t k = 0; k < n; ++k) {
        a[static_cast<std::size_t>(k)] *= h * quarter_phase(-2 * (n - 1) * k + (n - 1) * (n - 1), n, sign);
    }
    SignalFlags flags;
    flags.slow_decay = s.flags().slow_decay || slow_decay(s, tail_tolerance);
    return Signal(dual_grid(s.grid()), std::move(a), nullptr, flags);
}

Signal transform_onto(const Signal& s, const Grid& out, FourierConvention conv) {
    require_sign(conv);
    if (s.flags().singular) {
        throw std::domain_error("transform: signal has a non-integrable singularity");
    }
    const std::size_t n = s.size();
    const std::size_t k_count = out.size();
    const int sign = conv.kernel_sign;
    const long double t0 = s.grid()[0];
    const long double h = s.grid().step();
    const long double w0 = out[0];
    const long double dw = out.step();
    const long double theta = sign * dw * h;

    // Bluestein: k i = (k^2 + i^2 - (k - i)^2) / 2 turns the sum into a
    // convolution with the chirp exp(-j theta m^2 / 2).
    const std::size_t len = detail::next_pow2(n + k_count - 1);
    std::vector<cplx> a(len), b(len);
    const std::vector<cplx> weighted = trapezoid_weighted(s);
    for (std::size_t i = 0; i < n; ++i) {
        const long double li = static_cast<long double>(i);
        a[i] = weighted[i] * phase(sign * w0 * h * li + theta * li * li / 2.0L);
    }
    const std::size_t span = std::max(n, k_count);
    for (std::size_t m = 0; m < span; ++m) {
        const long double lm = static_cast<long double>(m);
        const cplx c = phase(-theta * lm * lm / 2.0L);
        if (m < k_count) {
            b[m] = c;
        }
        if (m > 0 && m < n) {
            b[len - m] = c;
        }
    }
    detail::Fft forward(len, -1);
    detail::Fft backward(len, +1);
    forward(a);
    forward(b);
    for (std::size_t i = 0; i < len; ++i) {
        a[i] *= b[i];
    }
    backward(a);

    std::vector<cplx> F(k_count);
    const double scale = static_cast<double>(h) / static_cast<double>(len);
    for (std::size_t k = 0; k < k_count; ++k) {
        const long double lk = static_cast<long double>(k);
        F[k] = scale * a[k] * phase(sign * (w0 * t0 + dw * t0 * lk) + theta * lk * lk / 2.0L);
    }
    SignalFlags flags;
    flags.slow_decay = s.flags().slow_decay || slow_decay(s, default_tail_tolerance);
    return Signal(out, std::move(F), nullptr, flags);
}

Signal inverse_onto(const Signal& spectrum, const Grid& out, FourierConvention conv) {
    require_sign(conv);
    return transform_onto(spectrum, out, {-conv.kernel_sign}).scaled(1.0 / (2.0 * pi));
}

Signal iterate(const Signal& s, int n, FourierConvention conv) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("iterate: n must lie in [1, 4]");
    }
    Signal out = transform(s, conv);
    for (int i = 1; i < n; ++i) {
        out = transform(out, conv);
    }
    return out;
}

namespace {

double window_norm(std::span<const cplx> v, double step) {
    std::vector<double> d(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        d[i] = std::norm(v[i]);
    }
    return std::sqrt(trapezoid(std::span<const double>(d), step));
}

}  // namespace

EigenReport eigencheck(const Signal& s, FourierConvention conv, EigenOptions opts) {
    require_symmetric(s.grid(), "eigencheck");
    require_sign(conv);
    const double half = opts.window > 0.0 ? opts.window : comparison_half_width(s.grid());
    if (!(half > 0.0)) {
        throw std::invalid_argument("eigencheck: empty comparison window");
    }
    const Grid win = s.grid().window(half);
    const std::size_t offset = s.grid().window_offset(half);
    const std::span<const cplx> f = s.samples().subspan(offset, win.size());
    const double f_norm = window_norm(f, win.step());
    if (f_norm == 0.0) {
        throw std::invalid_argument("eigencheck: signal has zero energy on the comparison window");
    }
    const Signal F = transform_onto(s, win, conv);

    EigenReport report;
    const auto lambdas = admissible_eigenvalues();
    std::vector<cplx> diff(win.size());
    for (int k = 0; k < 4; ++k) {
        for (std::size_t i = 0; i < win.size(); ++i) {
            diff[i] = F[i] - lambdas[static_cast<std::size_t>(k)] * f[i];
        }
        report.residuals[static_cast<std::size_t>(k)] = window_norm(diff, win.step()) / (sqrt_two_pi * f_norm);
    }
    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return report.residuals[static_cast<std::size_t>(x)] < report.residuals[static_cast<std::size_t>(y)];
    });
    report.quarter_turns = order[0];
    report.best_eigenvalue = lambdas[static_cast<std::size_t>(order[0])];
    report.relative_residual = report.residuals[static_cast<std::size_t>(order[0])];
    report.second_residual = report.residuals[static_cast<std::size_t>(order[1])];
    report.is_invariant = report.relative_residual < opts.tolerance;
    return report;
}

std::pair<double, double> differentiation_check(const Signal& s, FourierConvention conv) {
    require_symmetric(s.grid(), "differentiation_check");
    require_sign(conv);
    if (s.flags().zero) {
        return {0.0, 0.0};
    }
    const Grid win = s.grid().window(comparison_half_width(s.grid()));
    const Signal F = transform_onto(s, win, conv);

    // F{f''} against (jw)^2 F
    const Signal lhs1 = transform_onto(second_derivative(s), win, conv);
    // F{(-jt)^2 f} against F''
    std::vector<cplx> t2f(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double t = s.grid()[i];
        t2f[i] = -t * t * s[i];
    }
    const Signal lhs2 = transform_onto(Signal(s.grid(), std::move(t2f)), win, conv);
    const Signal rhs2 = second_derivative(F);

    constexpr std::size_t skip = 3;
    const std::size_t m = win.size() - 2 * skip;
    std::vector<cplx> d1(m), d2(m), r1(m), r2(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + skip;
        const double w = win[j];
        r1[i] = -w * w * F[j];
        d1[i] = lhs1[j] - r1[i];
        r2[i] = rhs2[j];
        d2[i] = lhs2[j] - r2[i];
    }
    auto rel = [&](const std::vector<cplx>& d, const std::vector<cplx>& r) {
        const double denom = window_norm(r, win.step());
        const double num = window_norm(d, win.step());
        return denom == 0.0 ? num : num / denom;
    };
    return {rel(d1, r1), rel(d2, r2)};
}

}  // namespace isores
