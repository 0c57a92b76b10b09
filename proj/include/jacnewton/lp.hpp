// Small dense exact linear programs: two-phase tableau simplex with Bland's rule.
#pragma once

#include "jacnewton/arith.hpp"

#include <vector>

namespace jacnewton::lp {

enum class Relation { less_equal, equal, greater_equal };

struct Constraint {
  RatVec coeffs;
  Relation relation;
  Rat rhs;
};

/// minimize objective . x  subject to constraints, x >= 0.
struct Problem {
  RatVec objective;
  std::vector<Constraint> constraints;
};

enum class Status { optimal, infeasible, unbounded };

struct Solution {
  Status status = Status::infeasible;
  Rat value;
  RatVec x;
};

Solution minimize(const Problem& problem);

}  // namespace jacnewton::lp
