#pragma once

#include "flagcurves/report.hpp"

namespace flagcurves {

// One-shot verification of every worked example the engine is built around:
// exponential displays, the cleared Mobius exponential, the Borel criterion
// systems, both reference classifications, the conjugation identities, the
// full normal-form table, the six vector-field closures, the model ODE
// solutions, the three coordinate changes, and the flow identities.
// corrupt flips one table expectation as a negative control.
CheckReport run_all_checks(long long budget, int series_order, bool corrupt = false);

}  // namespace flagcurves
