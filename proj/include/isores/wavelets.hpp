#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isores/grid.hpp"
#include "isores/moments.hpp"

namespace isores {

enum class Axis { time, frequency };

struct WaveletSpec {
    std::string name;
    std::string time_definition;
    std::string freq_definition;
    std::shared_ptr<const ClosedForm> time_form;
    // Spectrum under the default kernel sign.
    std::shared_ptr<const ClosedForm> freq_form;
    bool diverges_in_time = false;
    bool diverges_in_frequency = false;
    bool complex_valued = false;
};

// gaus1, mexh, morl, fbsp-2-1-0.5, shan-1-0.5, haar in table order.
const std::vector<std::string>& wavelet_names();
WaveletSpec wavelet(std::string_view name);

// Sampling used when resolving closed forms on expanding domains.
struct GridPolicy {
    DivergencePolicy divergence;
    // Binary steps keep the Haar jumps on nodes.
    double time_step = 1.0 / 1024.0;
    // Multiples of 2 pi / 4096 keep the Shannon and B-spline band edges on nodes.
    double freq_step = 2.0 * 3.14159265358979323846 / 4096.0;
};

// Second moment of form's energy density over [-T, 2T, 4T, 8T] domains.
// On the frequency axis `form` is the spectrum and the density is divided by
// 2 pi, which cancels in the normalized moments.
DivergenceVerdict detect_divergence(const ClosedForm& form, Axis axis,
                                    const GridPolicy& policy = {});

struct ResolutionReport {
    std::string wavelet;
    // Second moments about the origin; divergent_value when divergent.
    double m2_t = 0.0, m2_w = 0.0;
    // Central standard deviations.
    double delta_t = 0.0, delta_w = 0.0;
    double mean_t = 0.0, mean_w = 0.0;
    bool divergent_t = false, divergent_w = false;
    // sqrt(m2_t / m2_w): the factor column of the reference table.
    std::optional<double> paper_factor;
    // sqrt(delta_t / delta_w): the dilation that equalizes the spreads.
    std::optional<double> equalizing_factor;
    std::string notes;
};

ResolutionReport resolution_report(std::string_view name, const GridPolicy& policy = {});

// All six wavelets in table order (rows computed concurrently).
std::vector<ResolutionReport> table1(const GridPolicy& policy = {});

// Reference row of the resolution table; nullopt marks an infinite entry.
struct ReferenceRow {
    std::string wavelet;
    std::optional<double> m2_t;
    std::optional<double> m2_w;
    std::optional<double> factor;
    // Accepted absolute deviations of the computed m2 values.
    double tol_t = 1e-5;
    double tol_w = 1e-5;
};
const std::vector<ReferenceRow>& reference_table();
const ReferenceRow& reference_row(std::string_view name);

struct RowCheck {
    bool time_ok = false;
    bool freq_ok = false;
    // The fbsp row is reported with its disagreement rather than scored.
    bool annotated = false;
    bool pass() const noexcept { return time_ok && freq_ok; }
};
// A finite reference entry must be matched within the row tolerance, an
// infinite one by a divergence verdict.
RowCheck check_row(const ResolutionReport& report, const ReferenceRow& row);

// Grid on which the sampled time form reproduces the closed-form spectrum:
// compact supports need the whole support, sinc tails a long window.
Grid consistency_grid(std::string_view name);
// pair_consistency of (time_form, freq_form) on consistency_grid(name).
double spectrum_consistency(std::string_view name);

struct IsoScaleResult {
    Signal scaled;
    double a = 1.0;
    MomentReport before;
    MomentReport after;
};

// s(a t) with a = sqrt(delta_t / delta_w), resampled on the same grid from the
// closed form when available, otherwise by spectral interpolation. Throws on a
// divergent axis or a zero spread.
IsoScaleResult isoresolution_scale(const Signal& s, FourierConvention conv = {});

}  // namespace isores
