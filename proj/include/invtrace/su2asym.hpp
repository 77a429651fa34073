#pragma once

#include <complex>
#include <string>
#include <vector>

#include "invtrace/rootdata.hpp"
#include "invtrace/upoly.hpp"

namespace invtrace {

// chi_d(t) with t = s + 1/s: chi_0 = 1, chi_1 = t, chi_d = t chi_{d-1} - chi_{d-2}.
UPoly chebyshev_character(int d);

struct Su2Min {
  AlgebraicReal value;
  std::vector<AlgebraicReal> argmin;  // every t in [-2, 2] attaining it
};
// Exact minimum of chi_d over [-2, 2].
Su2Min su2_min(int d);

struct LimitConstant {
  double c;       // -min sin(x)/x
  double theta0;  // the minimizer on (pi, 3pi/2)
};
LimitConstant limit_constant();

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

enum class XMethod { WeylSum, RhoProduct, Perturbed, Origin };
const char* to_string(XMethod m);

struct XEvaluation {
  Complex value;
  XMethod method = XMethod::WeylSum;
  double error = 0;  // estimate; zero for the closed-form paths
};

struct XOptions {
  std::uint64_t weyl_cap = 2000;  // rank <= 4 by default
  double wall_tolerance = 1e-6;   // |r.s| or |r.t| below this counts as a wall
  double max_error = 1e-7;
};

// X(s, t) = prod_{r>0} (r.rho) / ((r.s)(r.t)) * sum_w sgn(w) e^{s.wt}, with
// s, t in fundamental-weight coordinates and the pairing given by A.
XEvaluation eval_X(const RootDatum& datum, const ComplexVector& s, const ComplexVector& t,
                   const XOptions& options = {});

}  // namespace invtrace
