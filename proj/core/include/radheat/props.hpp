#pragma once

#include <string>
#include <vector>

namespace radheat {

struct PropResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Randomized structural checks behind `radheat props`: matrix oracles,
/// row sums, the tau >= h^2/4 bound, B-form coercivity, the discrete
/// Poincare inequality, positivity and comparison trials, the N=2
/// scheme cross-check, Thomas round trips, and energy monotonicity.
/// Deterministic for a fixed seed.
std::vector<PropResult> run_property_suite(unsigned seed = 20240811u);

} // namespace radheat
