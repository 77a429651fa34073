#pragma once

#include <map>
#include <vector>

#include "invtrace/algsolve.hpp"

namespace invtrace {

// Minimize f(t_1..t_n) over the box |t_i| <= 2, optionally with some t_i
// pinned to +-2 beforehand.
struct BranchProblem {
  Polynomial f;
  std::map<int, int> pins;  // variable -> +2 or -2
};

// (t_i^2 - 4) df/dt_i for every unpinned i, in the unpinned variables (in
// increasing index order).
Ideal branch_critical_ideal(const BranchProblem& p);

struct BranchResult {
  AlgebraicReal minimum;
  std::vector<AlgebraicReal> witness;  // all n coordinates, pins included
  std::size_t critical_points = 0;
  std::size_t in_box = 0;
};

BranchResult branch_minimize(const BranchProblem& p, const SolveOptions& options = {});

}  // namespace invtrace
