#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "isores/fourier.hpp"

namespace isores {

// f <-> F with the spectrum sampled on the time grid (w renamed to t).
struct TransformPair {
    Signal f;
    Signal F;
    bool analytic = false;
};

// Pair whose spectrum is computed numerically with transform_onto.
TransformPair numeric_pair(const Signal& f, FourierConvention conv = {});

// Pair from two closed forms sampled on the same grid.
TransformPair analytic_pair(std::shared_ptr<const ClosedForm> f,
                            std::shared_ptr<const ClosedForm> F, const Grid& grid);

// ||transform(f) - F|| / ||F|| on the comparison window.
double pair_consistency(const TransformPair& pair, FourierConvention conv = {});

// sqrt(2 pi) E{f} + E{F}; eigenvalue +sqrt(2 pi). A vanishing result is
// returned with flags().zero set.
Signal even_invariant(const TransformPair& pair);

// sqrt(2 pi) O{f} + j O{F}; eigenvalue -j sqrt(2 pi).
// Odd eigenfunctions satisfy lambda^2 = -2 pi because F applied twice is
// 2 pi times time reversal, so the odd combination needs the factor j.
Signal odd_invariant(const TransformPair& pair);

// Eigenvalues produced by the two constructors.
cplx even_invariant_eigenvalue();
cplx odd_invariant_eigenvalue();

// Two to four Gaussians with random weights, shifts in [-3, 3] and widths in
// [0.5, 2]: a smooth pair with no particular symmetry.
std::shared_ptr<const ClosedForm> random_mixture(std::mt19937_64& rng);

struct CatalogEntry {
    std::string name;
    std::string definition;
    // Absent for h2-symbolic, which is not square integrable.
    std::optional<Signal> signal;
    cplx expected_eigenvalue;
    double expected_tolerance = 0.0;
    bool numeric = true;
};

// Names: h1, sech, h2-symbolic.
const std::vector<std::string>& invariant_names();
CatalogEntry catalog(std::string_view name, const Grid& grid);

// A grid wide enough for the entry's tail to meet expected_tolerance.
Grid catalog_default_grid(std::string_view name);

}  // namespace isores
