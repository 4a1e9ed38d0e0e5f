#pragma once

#include <memory>
#include <string_view>

#include "isores/signal.hpp"

namespace isores::detail {

inline constexpr double pi = 3.14159265358979323846;

// Time-domain wavelet and its spectrum under the default kernel sign.
// Both return nullptr for an unknown name.
std::shared_ptr<const ClosedForm> wavelet_time_form(std::string_view name);
std::shared_ptr<const ClosedForm> wavelet_freq_form(std::string_view name);

// Normalized sinc, sin(pi x) / (pi x).
double sinc(double x);

}  // namespace isores::detail
