#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isores/grid.hpp"

namespace isores {

using cplx = std::complex<double>;

// A function of one real variable known in closed form.
//
// `density` overrides |eval(x)|^2 where the form jumps: at a discontinuity the
// energy density takes the mean of its one-sided limits, which is not the
// square of the mean signal value. Leave it empty for continuous forms.
struct ClosedForm {
    std::string id;
    std::function<cplx(double)> eval;
    std::function<double(double)> density;
    bool smooth = true;
    // Non-integrable singularity somewhere on the real line.
    bool singular = false;

    double energy_density(double x) const;
};

struct SignalFlags {
    bool singular = false;
    // |s| at the grid ends exceeds the tail tolerance.
    bool slow_decay = false;
    // Identically zero on the grid.
    bool zero = false;
};

// Complex samples on a uniform grid. Immutable once constructed.
class Signal {
public:
    Signal(Grid grid, std::vector<cplx> samples,
           std::shared_ptr<const ClosedForm> provenance = nullptr,
           SignalFlags flags = {});

    const Grid& grid() const noexcept { return grid_; }
    std::span<const cplx> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    cplx operator[](std::size_t i) const noexcept { return samples_[i]; }

    const std::shared_ptr<const ClosedForm>& provenance() const noexcept { return provenance_; }
    std::string provenance_id() const;
    const SignalFlags& flags() const noexcept { return flags_; }

    Signal with_flags(SignalFlags flags) const;
    Signal scaled(cplx factor) const;

    // Value at t = 0 (symmetric grids only).
    cplx at_origin() const;
    double peak() const noexcept;

private:
    Grid grid_;
    std::vector<cplx> samples_;
    std::shared_ptr<const ClosedForm> provenance_;
    SignalFlags flags_;
};

// Registered closed forms:
//   gaussian [shift [sigma]]    exp(-(t-shift)^2 / (2 sigma^2))
//   gaussian-mixture (w, shift, sigma)...  sum of weighted gaussians
//   modulated-gaussian w0 [phi0]  exp(-t^2/2) exp(j (w0 t + phi0))
//   sech-a a                    sech(a t), a > 0
//   sech-squared                sech(t)^2
//   tanh-sech                   tanh(t) sech(t)
//   lorentzian                  1 / (1 + t^2)
//   two-sided-exp               exp(-|t|)
//   one-sided-exp               exp(-t) step(t)
//   t-two-sided-exp             t exp(-|t|)
//   hermite-gauss n             H_n(t) exp(-t^2/2)
//   h2                          sqrt(2 pi)|t| - 2/t^2 (singular)
//   gaus1 mexh morl fbsp-2-1-0.5 shan-1-0.5 haar   wavelet catalog
std::shared_ptr<const ClosedForm> closed_form(std::string_view id, std::span<const double> params = {});

// Tail tolerance used by transform() and friends to flag slow decay.
inline constexpr double default_tail_tolerance = 1e-6;

Signal sample(std::shared_ptr<const ClosedForm> form, const Grid& grid);
Signal sample(std::string_view id, const Grid& grid, std::span<const double> params = {});
Signal zeros(const Grid& grid);

// Composite trapezoid over the whole grid.
cplx integrate(const Signal& s);
double energy(const Signal& s);
cplx inner_product(const Signal& a, const Signal& b);

Signal even_part(const Signal& s);
Signal odd_part(const Signal& s);
// s(-t) on a symmetric grid.
Signal reversed(const Signal& s);

// Pointwise a*x + b*y on identical grids.
Signal combine(cplx a, const Signal& x, cplx b, const Signal& y);

// Five-point central differences; the two nodes at each end fall back to
// lower-order stencils.
Signal derivative(const Signal& s);
Signal second_derivative(const Signal& s);

// Composite trapezoid of raw samples with the given step.
cplx trapezoid(std::span<const cplx> values, double step);
double trapezoid(std::span<const double> values, double step);

}  // namespace isores
