#include "forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "isores/hermite.hpp"

namespace isores {

using detail::pi;

namespace detail {

double sinc(double x) {
    if (std::abs(x) < 1e-8) {
        return 1.0 - (pi * x) * (pi * x) / 6.0;
    }
    return std::sin(pi * x) / (pi * x);
}

namespace {

constexpr double jump_tolerance = 1e-9;

bool at(double x, double point) { return std::abs(x - point) <= jump_tolerance; }

std::shared_ptr<ClosedForm> make(std::string id, std::function<cplx(double)> f) {
    auto form = std::make_shared<ClosedForm>();
    form->id = std::move(id);
    form->eval = std::move(f);
    return form;
}

// Haar: +1 on [0, 1/2), -1 on [1/2, 1); jumps take the mean of the one-sided limits.
cplx haar(double t) {
    if (at(t, 0.0)) return 0.5;
    if (at(t, 0.5)) return 0.0;
    if (at(t, 1.0)) return -0.5;
    if (t > 0.0 && t < 0.5) return 1.0;
    if (t > 0.5 && t < 1.0) return -1.0;
    return 0.0;
}

double haar_density(double t) {
    if (at(t, 0.0) || at(t, 1.0)) return 0.5;
    return (t > 0.0 && t < 1.0) ? 1.0 : 0.0;
}

// (1 - e^{-jw/2})^2 / (jw) = 4j sin^2(w/4) e^{-jw/2} / w
cplx haar_spectrum(double w) {
    if (w == 0.0) return 0.0;
    const double s = std::sin(w / 4.0);
    return cplx(0.0, 4.0) * (s * s / w) * std::polar(1.0, -w / 2.0);
}

// Indicator of (0, 2 pi) with half values at the band edges.
cplx shannon_spectrum(double w) {
    if (at(w, 0.0) || at(w, 2.0 * pi)) return 0.5;
    return (w > 0.0 && w < 2.0 * pi) ? 1.0 : 0.0;
}

double shannon_density(double w) {
    if (at(w, 0.0) || at(w, 2.0 * pi)) return 0.5;
    return (w > 0.0 && w < 2.0 * pi) ? 1.0 : 0.0;
}

}  // namespace

std::shared_ptr<const ClosedForm> wavelet_time_form(std::string_view name) {
    const double mexh_norm = 2.0 / (std::pow(pi, 0.25) * std::sqrt(3.0));
    if (name == "gaus1") {
        return make("gaus1", [](double t) { return cplx(t * std::exp(-t * t / 2.0)); });
    }
    if (name == "mexh") {
        return make("mexh", [mexh_norm](double t) { return cplx(mexh_norm * (t * t - 1.0) * std::exp(-t * t / 2.0)); });
    }
    if (name == "morl") {
        return make("morl", [](double t) { return cplx(std::cos(5.0 * t) * std::exp(-t * t / 2.0)); });
    }
    if (name == "fbsp-2-1-0.5") {
        return make("fbsp-2-1-0.5", [](double t) {
            const double s = sinc(t);
            return s * s * std::polar(1.0, pi * t);
        });
    }
    if (name == "shan-1-0.5") {
        return make("shan-1-0.5", [](double t) { return sinc(t) * std::polar(1.0, pi * t); });
    }
    if (name == "haar") {
        auto form = make("haar", haar);
        form->density = haar_density;
        form->smooth = false;
        return form;
    }
    return nullptr;
}

std::shared_ptr<const ClosedForm> wavelet_freq_form(std::string_view name) {
    const double s2p = std::sqrt(2.0 * pi);
    if (name == "gaus1") {
        return make("gaus1-spectrum", [s2p](double w) { return cplx(0.0, -s2p * w * std::exp(-w * w / 2.0)); });
    }
    if (name == "mexh") {
        const double c = -2.0 * std::sqrt(2.0 / 3.0) * std::pow(pi, 0.25);
        return make("mexh-spectrum", [c](double w) { return cplx(c * w * w * std::exp(-w * w / 2.0)); });
    }
    if (name == "morl") {
        return make("morl-spectrum", [s2p](double w) {
            return cplx(0.5 * s2p * (std::exp(-(w - 5.0) * (w - 5.0) / 2.0) + std::exp(-(w + 5.0) * (w + 5.0) / 2.0)));
        });
    }
    if (name == "fbsp-2-1-0.5") {
        return make("fbsp-2-1-0.5-spectrum", [](double w) {
            return cplx(std::max(0.0, 1.0 - std::abs(w - pi) / (2.0 * pi)));
        });
    }
    if (name == "shan-1-0.5") {
        auto form = make("shan-1-0.5-spectrum", shannon_spectrum);
        form->density = shannon_density;
        form->smooth = false;
        return form;
    }
    if (name == "haar") {
        return make("haar-spectrum", haar_spectrum);
    }
    return nullptr;
}

}  // namespace detail

namespace {

double param(std::span<const double> params, std::size_t i, std::string_view id) {
    if (params.size() <= i) {
        throw std::invalid_argument("closed form '" + std::string(id) + "' needs parameter " + std::to_string(i));
    }
    return params[i];
}

int order_param(std::span<const double> params, std::string_view id) {
    const double n = param(params, 0, id);
    if (n < 0.0 || n != std::floor(n)) {
        throw std::invalid_argument("closed form '" + std::string(id) + "': order must be a nonnegative integer");
    }
    return static_cast<int>(n);
}

std::shared_ptr<ClosedForm> form(std::string id, std::function<cplx(double)> f) {
    auto out = std::make_shared<ClosedForm>();
    out->id = std::move(id);
    out->eval = std::move(f);
    return out;
}

}  // namespace

std::shared_ptr<const ClosedForm> closed_form(std::string_view id, std::span<const double> params) {
    if (id == "gaussian") {
        const double shift = params.size() > 0 ? params[0] : 0.0;
        const double sigma = params.size() > 1 ? params[1] : 1.0;
        if (!(sigma > 0.0)) {
            throw std::invalid_argument("closed form 'gaussian': sigma must be positive");
        }
        return form("gaussian", [shift, sigma](double t) {
            const double u = (t - shift) / sigma;
            return cplx(std::exp(-u * u / 2.0));
        });
    }
    if (id == "gaussian-mixture") {
        if (params.empty() || params.size() % 3 != 0) {
            throw std::invalid_argument("closed form 'gaussian-mixture': expects (weight, shift, sigma) triples");
        }
        std::vector<double> p(params.begin(), params.end());
        for (std::size_t k = 2; k < p.size(); k += 3) {
            if (!(p[k] > 0.0)) {
                throw std::invalid_argument("closed form 'gaussian-mixture': sigma must be positive");
            }
        }
        return form("gaussian-mixture", [p](double t) {
            double acc = 0.0;
            for (std::size_t k = 0; k < p.size(); k += 3) {
                const double u = (t - p[k + 1]) / p[k + 2];
                acc += p[k] * std::exp(-u * u / 2.0);
            }
            return cplx(acc);
        });
    }
    if (id == "modulated-gaussian") {
        const double w0 = param(params, 0, id);
        const double phi0 = params.size() > 1 ? params[1] : 0.0;
        return form("modulated-gaussian",
                    [w0, phi0](double t) { return std::exp(-t * t / 2.0) * std::polar(1.0, w0 * t + phi0); });
    }
    if (id == "sech-a") {
        const double a = param(params, 0, id);
        if (!(a > 0.0)) {
            throw std::invalid_argument("closed form 'sech-a': a must be positive");
        }
        return form("sech-a", [a](double t) { return cplx(1.0 / std::cosh(a * t)); });
    }
    if (id == "sech-squared") {
        return form("sech-squared", [](double t) {
            const double s = 1.0 / std::cosh(t);
            return cplx(s * s);
        });
    }
    if (id == "tanh-sech") {
        return form("tanh-sech", [](double t) { return cplx(std::tanh(t) / std::cosh(t)); });
    }
    if (id == "lorentzian") {
        return form("lorentzian", [](double t) { return cplx(1.0 / (1.0 + t * t)); });
    }
    if (id == "two-sided-exp") {
        return form("two-sided-exp", [](double t) { return cplx(std::exp(-std::abs(t))); });
    }
    if (id == "t-two-sided-exp") {
        return form("t-two-sided-exp", [](double t) { return cplx(t * std::exp(-std::abs(t))); });
    }
    if (id == "one-sided-exp") {
        auto f = form("one-sided-exp", [](double t) {
            if (t == 0.0) return cplx(0.5);
            return cplx(t > 0.0 ? std::exp(-t) : 0.0);
        });
        f->density = [](double t) {
            if (t == 0.0) return 0.5;
            return t > 0.0 ? std::exp(-2.0 * t) : 0.0;
        };
        f->smooth = false;
        return f;
    }
    if (id == "hermite-gauss") {
        const int n = order_param(params, id);
        if (n > max_hermite_degree) {
            throw std::invalid_argument("closed form 'hermite-gauss': order above " + std::to_string(max_hermite_degree));
        }
        return form("hermite-gauss " + std::to_string(n),
                    [n](double t) { return cplx(hermite_value(n, t) * std::exp(-t * t / 2.0)); });
    }
    if (id == "h2") {
        auto f = form("h2", [](double t) {
            if (t == 0.0) return cplx(-std::numeric_limits<double>::infinity());
            return cplx(std::sqrt(2.0 * pi) * std::abs(t) - 2.0 / (t * t));
        });
        f->singular = true;
        return f;
    }
    if (auto w = detail::wavelet_time_form(id)) {
        return w;
    }
    throw std::invalid_argument("unknown closed form '" + std::string(id) + "'");
}

}  // namespace isores
