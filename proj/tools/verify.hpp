#pragma once

#include <string>
#include <vector>

#include "cli.hpp"

namespace isores::cli {

struct PropertyResult {
    std::string module;
    std::string property;
    bool passed = false;
    // Worst observed value and the bound it was held to.
    double value = 0.0;
    std::string relation;
    double limit = 0.0;
    std::string detail;
};

// Every module invariant, evaluated on the configured grid where a property
// is grid-generic and on its own grid where it needs a particular one.
// Output order is fixed; independent groups run concurrently.
std::vector<PropertyResult> run_properties(const RunConfig& cfg);

}  // namespace isores::cli
