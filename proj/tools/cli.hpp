#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isores/fourier.hpp"
#include "isores/grid.hpp"
#include "isores/moments.hpp"

namespace isores::cli {

enum class Format { text, csv, json };

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_mismatch = 2 };

// Named tolerances accepted by --tolerance KEY=VAL.
struct Tolerances {
    double eigen = 1e-6;
    double ode = 1e-5;
    double gabor = 1e-6;
    double iso = 1e-6;
    double tail = 1e-6;
    double divergence_ratio = 0.25;
    double divergence_rel = 1e-4;
};

const std::vector<std::string>& tolerance_keys();
// Throws std::invalid_argument for an unknown key or a non-positive value.
void set_tolerance(Tolerances& tol, std::string_view key, double value);
double get_tolerance(const Tolerances& tol, std::string_view key);

struct RunConfig {
    // Unset means "use the default for the entry" (20 and 4097 for most).
    std::optional<double> t_max;
    std::optional<std::size_t> n_points;
    int kernel_sign = -1;
    Tolerances tol;
    Format format = Format::text;

    static constexpr double default_t_max = 20.0;
    static constexpr std::size_t default_n_points = 4097;

    // Symmetric grid from t_max and n_points (bumped to odd).
    Grid grid() const;
    // Same, but an unset field falls back to the catalog entry's own default.
    Grid grid_for(std::string_view entry) const;
    FourierConvention convention() const { return {kernel_sign}; }
    DivergencePolicy divergence() const;
};

// Parses args (without the program name), runs the subcommand and writes its
// report to out. Usage errors go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isores::cli
