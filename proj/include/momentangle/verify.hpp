#pragma once

#include <string>
#include <vector>

#include "momentangle/simplicial_complex.hpp"

namespace momentangle {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first violation or exception message
};

struct VerifyOptions {
  bool polytope = true;     // dual-block retraction, cup diagram, GLM ring
  bool idempotents = true;  // ℤ/2 idempotency of the real ring of ghost vertices
};

/// Runs the invariant suites of all modules on sigma. Each entry reports one
/// suite; an exception inside a suite counts as a failure.
std::vector<CheckResult> verify_complex(const SimplicialComplex& sigma,
                                        const VerifyOptions& options = {});

}  // namespace momentangle
