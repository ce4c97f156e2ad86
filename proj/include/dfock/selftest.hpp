#pragma once

#include <iosfwd>

namespace dfock {

// Runs the oracle-equivalence and invariant suite, printing one pass/fail
// line per check. Returns true iff all checks pass.
// corrupt_hook: test-only switch that perturbs one coefficient so the
// failure path can be exercised.
bool run_selftest(std::ostream& out, bool corrupt_hook = false);

}  // namespace dfock
