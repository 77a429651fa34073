#pragma once

#include <string>
#include <vector>

#include "invtrace/rational.hpp"

namespace invtrace {

struct Interval {
  Q lo, hi;
  bool contains(const Q& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Q width() const { return hi - lo; }
  Q mid() const { return (lo + hi) / 2; }
};

// Dense univariate polynomial over Q, coefficients in ascending degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Q> coeffs);
  static UPoly constant(const Q& c);
  static UPoly x();
  static UPoly from_integers(const std::vector<long long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Q& lc() const { return c_.back(); }
  const std::vector<Q>& coeffs() const { return c_; }
  Q coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Q(0); }

  Q operator()(const Q& x) const;
  double operator()(double x) const;
  Interval operator()(const Interval& x) const;
  int sign_at(const Q& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Q& s);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // a = q*b + r with deg r < deg b.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  friend UPoly operator%(const UPoly& a, const UPoly& b);
  friend UPoly operator/(const UPoly& a, const UPoly& b);

  UPoly derivative() const;
  UPoly monic() const;
  // Integer coefficients, content 1, positive leading coefficient.
  UPoly primitive() const;
  UPoly compose(const UPoly& inner) const;

  static UPoly gcd(UPoly a, UPoly b);
  UPoly squarefree() const;

  std::vector<long long> to_int64() const;  // throws if not integral/small
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Q> c_;
};

// Sturm chain p, p', -rem, ... normalized by positive scalars.
std::vector<UPoly> sturm_sequence(const UPoly& p);
// Distinct roots in (a, b].
int sturm_count(const std::vector<UPoly>& seq, const Q& a, const Q& b);
// Distinct roots in [a, b].
int sturm_count_closed(const std::vector<UPoly>& seq, const Q& a, const Q& b);

// Sorted isolating intervals with dyadic endpoints for the distinct real
// roots of p. Rational roots hit during bisection come back as [r, r].
std::vector<Interval> isolate_real_roots(const UPoly& p);

// Rational with the smallest denominator in [a, b].
Q simplest_rational(const Q& a, const Q& b);

// Exact real algebraic number: a root of a square-free integer polynomial
// pinned by an isolating interval. Intervals only ever shrink.
class AlgebraicReal {
 public:
  AlgebraicReal() : AlgebraicReal(Q(0)) {}
  explicit AlgebraicReal(const Q& value);
  // `p` must have exactly one root in [lo, hi].
  AlgebraicReal(const UPoly& p, const Q& lo, const Q& hi);

  const UPoly& poly() const { return poly_; }
  const Q& lo() const { return lo_; }
  const Q& hi() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }
  bool is_exact() const { return lo_ == hi_; }

  void refine();  // one bisection step
  void refine_below(const Q& width);

  int sign();
  // Rational value if the root is rational; detected by bounded search
  // over denominators dividing the leading coefficient.
  bool try_rational(Q& out);

  double approx();
  std::string decimal(int digits);

  // Exact three-way comparison; equality is certified through the gcd of
  // the defining polynomials.
  static int compare(AlgebraicReal& a, AlgebraicReal& b);
  static int compare(AlgebraicReal& a, const Q& b);

 private:
  UPoly poly_;
  Q lo_, hi_;
  int sign_lo_ = 0;  // sign of poly_ at lo_ when lo_ < hi_
};

}  // namespace invtrace
