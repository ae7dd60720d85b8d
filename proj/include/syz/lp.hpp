#pragma once
// Exact feasibility of { x >= 0 : A x = b } over the rationals, by phase-1
// simplex with Bland's rule (entering: lowest eligible index; leaving: lowest
// basis index among ties). Bland's rule makes the run finite and the outcome
// deterministic. No phase 2: callers only ever need a point or a certificate.

#include <vector>

#include "syz/matrix.hpp"

namespace syz {

struct LpResult {
  bool feasible = false;
  // feasible: x >= 0 with A x = b, re-verified by substitution before return
  std::vector<Rational> x;
  // infeasible: y with y^T A >= 0 and y^T b < 0, likewise re-verified
  std::vector<Rational> farkas;
  int pivot_steps = 0;
};

LpResult lp_feasible_nonneg(const Matrix<RatField>& a,
                            const std::vector<Rational>& b);

}  // namespace syz
