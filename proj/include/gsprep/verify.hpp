#pragma once

#include <string>

#include "gsprep/planner.hpp"
#include "gsprep/tableau.hpp"

namespace gsprep {

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty on success; else what failed and where
};

/// Executes the plan on a stabilizer tableau (fusions with forced +
/// outcomes) and checks state equality against the target graph state under
/// the plan's qubit map.
VerifyResult verify_plan(const PreparationPlan& plan, const Graph& target);

}  // namespace gsprep
