#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "invtrace/polynomial.hpp"
#include "invtrace/serialize.hpp"
#include "invtrace/upoly.hpp"

namespace invtrace {

enum class MonomialOrder { Lex, DegRevLex };

struct Ideal {
  int nvars = 0;
  std::vector<Polynomial> gens;
  MonomialOrder order = MonomialOrder::DegRevLex;
};

struct GroebnerOptions {
  std::size_t pair_cap = 500000;  // S-pairs processed before giving up
};

// Leading monomial under `order`; p must be non-zero.
Monomial leading_monomial(const Polynomial& p, MonomialOrder order);
bool monomial_less(const Monomial& a, const Monomial& b, int nvars, MonomialOrder order);

// Reduced Groebner basis (monic, sorted by leading monomial) of the ideal.
Ideal groebner(const Ideal& ideal, const GroebnerOptions& options = {});
Polynomial normal_form(const Polynomial& p, const Ideal& basis);
bool is_zero_dimensional(const Ideal& basis);

// Shared rational univariate representation of a finite set of points:
// x_i = g_i(theta) with h(theta) = 0, h square-free.
struct Rur {
  int nvars = 0;
  UPoly h;
  std::vector<UPoly> g;
  std::vector<UPoly> eliminants;           // square-free, one per variable
  std::vector<UPoly> repeated_factors;     // gcd(p_i, p_i') of the raw eliminants
  // Disjoint isolating intervals of the real roots of each eliminant;
  // rational roots are stored as points.
  std::vector<std::vector<Interval>> eliminant_roots;

  // Monomials in x reduced to Q[theta]/(h); shared by every point of the RUR.
  struct ReductionCache {
    std::mutex mutex;
    std::map<Monomial, UPoly> monomials;
    // Element of Q[theta]/(h) -> square-free minimal polynomial of its
    // values and that polynomial's isolated real roots.
    std::map<std::vector<Q>, std::pair<UPoly, std::vector<Interval>>> values;
  };
  std::shared_ptr<ReductionCache> reductions = std::make_shared<ReductionCache>();
};

// Certified real point of a zero-dimensional ideal.
class AlgebraicPoint {
 public:
  AlgebraicPoint(std::shared_ptr<const Rur> rur, AlgebraicReal theta);
  static AlgebraicPoint rational(const std::vector<Q>& coords);

  int nvars() const { return rur_->nvars; }
  const Rur& rur() const { return *rur_; }
  const AlgebraicReal& theta() const { return theta_; }
  const AlgebraicReal& coordinate(int i) const { return coords_[i]; }
  AlgebraicReal& coordinate(int i) { return coords_[i]; }
  bool multiple() const { return multiple_; }
  // True and sets `out` when every coordinate is rational.
  bool rational_coordinates(std::vector<Q>& out);

  // p(x) as an element of Q[theta]/(h).
  UPoly reduce(const Polynomial& p) const;
  UPoly mulmod(const UPoly& a, const UPoly& b) const;
  // Exact sign of an element of Q[theta]/(h) at this point.
  int sign(const UPoly& element);
  AlgebraicReal value(const UPoly& element);

  Interval enclosure(const UPoly& element);
  std::vector<Interval> coordinate_intervals();
  void refine_to(const Q& width);

  Json to_json(int digits = 10);
  void set_refinement_budget(int steps) { budget_ = steps; }

 private:
  std::shared_ptr<const Rur> rur_;
  AlgebraicReal theta_;
  std::vector<AlgebraicReal> coords_;
  bool multiple_ = false;
  int budget_ = 4000;
};

struct SolveOptions {
  GroebnerOptions groebner;
  int max_refinements = 4000;  // bisection steps before Undecided
};

// All real points, sorted lexicographically by coordinates.
std::vector<AlgebraicPoint> solve_zero_dim(const Ideal& ideal, const SolveOptions& options = {});

// -1, 0, +1.
int sign_of(const Polynomial& p, AlgebraicPoint& x);
AlgebraicReal value_of(const Polynomial& p, AlgebraicPoint& x);

Interval evaluate_interval(const Polynomial& p, const std::vector<Interval>& x);

// Lexicographic exact comparison of coordinates.
int compare_points(AlgebraicPoint& a, AlgebraicPoint& b);

Json algebraic_real_to_json(AlgebraicReal& x, int digits = 10);

}  // namespace invtrace
