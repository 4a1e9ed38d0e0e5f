#include "isores/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isores {

double ClosedForm::energy_density(double x) const {
    if (density) {
        return density(x);
    }
    return std::norm(eval(x));
}

Signal::Signal(Grid grid, std::vector<cplx> samples, std::shared_ptr<const ClosedForm> provenance,
               SignalFlags flags)
    : grid_(grid), samples_(std::move(samples)), provenance_(std::move(provenance)), flags_(flags) {
    if (samples_.size() != grid_.size()) {
        throw std::invalid_argument("signal: sample count does not match grid");
    }
    bool all_zero = true;
    for (const cplx& v : samples_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw std::invalid_argument("signal: non-finite sample");
        }
        all_zero = all_zero && v == cplx{};
    }
    flags_.zero = all_zero;
}

std::string Signal::provenance_id() const { return provenance_ ? provenance_->id : std::string{}; }

Signal Signal::with_flags(SignalFlags flags) const {
    Signal out = *this;
    flags.zero = flags_.zero;
    out.flags_ = flags;
    return out;
}

Signal Signal::scaled(cplx factor) const {
    std::vector<cplx> v(samples_.begin(), samples_.end());
    for (auto& x : v) {
        x *= factor;
    }
    std::shared_ptr<const ClosedForm> form;
    if (provenance_) {
        auto scaled_form = std::make_shared<ClosedForm>(*provenance_);
        scaled_form->eval = [base = provenance_, factor](double t) { return factor * base->eval(t); };
        if (provenance_->density) {
            scaled_form->density = [base = provenance_, factor](double t) {
                return std::norm(factor) * base->density(t);
            };
        }
        form = std::move(scaled_form);
    }
    return Signal(grid_, std::move(v), std::move(form), flags_);
}

cplx Signal::at_origin() const {
    if (!grid_.is_symmetric() || grid_.size() % 2 == 0) {
        throw std::invalid_argument("signal: t = 0 is not a grid node");
    }
    return samples_[grid_.size() / 2];
}

double Signal::peak() const noexcept {
    double p = 0.0;
    for (const cplx& v : samples_) {
        p = std::max(p, std::abs(v));
    }
    return p;
}

Signal sample(std::shared_ptr<const ClosedForm> form, const Grid& grid) {
    if (!form || !form->eval) {
        throw std::invalid_argument("sample: empty closed form");
    }
    std::vector<cplx> v(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        v[i] = form->eval(grid[i]);
        if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) {
            throw std::domain_error("sample: '" + form->id + "' is not finite at t = " + std::to_string(grid[i]));
        }
    }
    SignalFlags flags;
    flags.singular = form->singular;
    return Signal(grid, std::move(v), std::move(form), flags);
}

Signal sample(std::string_view id, const Grid& grid, std::span<const double> params) {
    return sample(closed_form(id, params), grid);
}

Signal zeros(const Grid& grid) { return Signal(grid, std::vector<cplx>(grid.size())); }

cplx trapezoid(std::span<const cplx> values, double step) {
    if (values.size() < 2) {
        return {};
    }
    cplx acc = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        acc += values[i];
    }
    return acc * step;
}

double trapezoid(std::span<const double> values, double step) {
    if (values.size() < 2) {
        return 0.0;
    }
    double acc = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        acc += values[i];
    }
    return acc * step;
}

namespace {

void require_integrable(const Signal& s) {
    if (s.flags().singular) {
        throw std::domain_error("integrate: signal '" + s.provenance_id() + "' has a non-integrable singularity");
    }
}

void require_same_grid(const Signal& a, const Signal& b) {
    if (!a.grid().same_as(b.grid())) {
        throw std::invalid_argument("signals live on different grids");
    }
}

void require_symmetric(const Signal& s) {
    if (!s.grid().is_symmetric()) {
        throw std::invalid_argument("parity needs a symmetric grid");
    }
}

}  // namespace

cplx integrate(const Signal& s) {
    require_integrable(s);
    return trapezoid(s.samples(), s.grid().step());
}

double energy(const Signal& s) {
    require_integrable(s);
    std::vector<double> d(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        d[i] = std::norm(s[i]);
    }
    return trapezoid(std::span<const double>(d), s.grid().step());
}

cplx inner_product(const Signal& a, const Signal& b) {
    require_same_grid(a, b);
    require_integrable(a);
    require_integrable(b);
    std::vector<cplx> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        d[i] = a[i] * std::conj(b[i]);
    }
    return trapezoid(std::span<const cplx>(d), a.grid().step());
}

Signal reversed(const Signal& s) {
    require_symmetric(s);
    std::vector<cplx> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        v[i] = s[s.grid().mirror(i)];
    }
    return Signal(s.grid(), std::move(v), nullptr, s.flags());
}

Signal even_part(const Signal& s) {
    require_symmetric(s);
    std::vector<cplx> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        v[i] = 0.5 * (s[i] + s[s.grid().mirror(i)]);
    }
    return Signal(s.grid(), std::move(v), nullptr, s.flags());
}

Signal odd_part(const Signal& s) {
    require_symmetric(s);
    std::vector<cplx> v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        v[i] = 0.5 * (s[i] - s[s.grid().mirror(i)]);
    }
    return Signal(s.grid(), std::move(v), nullptr, s.flags());
}

Signal combine(cplx a, const Signal& x, cplx b, const Signal& y) {
    require_same_grid(x, y);
    std::vector<cplx> v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        v[i] = a * x[i] + b * y[i];
    }
    SignalFlags f;
    f.singular = x.flags().singular || y.flags().singular;
    f.slow_decay = x.flags().slow_decay || y.flags().slow_decay;
    return Signal(x.grid(), std::move(v), nullptr, f);
}

Signal derivative(const Signal& s) {
    const std::size_t n = s.size();
    const double h = s.grid().step();
    std::vector<cplx> d(n);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (s[i - 2] - 8.0 * s[i - 1] + 8.0 * s[i + 1] - s[i + 2]) / (12.0 * h);
    }
    d[1] = (s[2] - s[0]) / (2.0 * h);
    d[n - 2] = (s[n - 1] - s[n - 3]) / (2.0 * h);
    d[0] = (s[1] - s[0]) / h;
    d[n - 1] = (s[n - 1] - s[n - 2]) / h;
    return Signal(s.grid(), std::move(d), nullptr, s.flags());
}

Signal second_derivative(const Signal& s) {
    const std::size_t n = s.size();
    const double h2 = s.grid().step() * s.grid().step();
    std::vector<cplx> d(n);
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (-s[i - 2] + 16.0 * s[i - 1] - 30.0 * s[i] + 16.0 * s[i + 1] - s[i + 2]) / (12.0 * h2);
    }
    d[1] = (s[0] - 2.0 * s[1] + s[2]) / h2;
    d[n - 2] = (s[n - 3] - 2.0 * s[n - 2] + s[n - 1]) / h2;
    d[0] = d[1];
    d[n - 1] = d[n - 2];
    return Signal(s.grid(), std::move(d), nullptr, s.flags());
}

}  // namespace isores
