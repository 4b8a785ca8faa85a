#pragma once

#include "ggl/canonical.hpp"

namespace ggl {

/// Every cross-check that applies to H: the classifier's own routes, the
/// trace-Ulrich theorem, the conductor idealization, the Ulrich-set and
/// blow-up chain theorems under minimal multiplicity, and the exponent
/// criteria when H is 3-generated. A check that raises ConsistencyFailure
/// is recorded as failed under the name of the stage that raised it.
RouteChecks verify_all(const NumericalSemigroup& h);

bool all_passed(const RouteChecks& checks);

/// Name of the first failed check, or empty.
std::string first_failed(const RouteChecks& checks);

} // namespace ggl
