#pragma once

#include <complex>
#include <vector>

#include "invtrace/rational.hpp"
#include "invtrace/upoly.hpp"

namespace invtrace {

const UPoly& cyclotomic_polynomial(int m);

// Element of Q(zeta_m), zeta_m = exp(2 pi i / m), stored reduced modulo the
// m-th cyclotomic polynomial.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1, Q(0)) {}
  Cyclotomic(int m, const Q& value);
  Cyclotomic(int m, const UPoly& poly_in_zeta);
  // sum counts[k] * zeta^k over k = 0..m-1.
  static Cyclotomic from_power_counts(int m, const std::vector<Z>& counts);

  int order() const { return m_; }
  const UPoly& poly() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_rational() const { return v_.degree() <= 0; }
  Q rational() const;  // throws unless is_rational()
  bool is_real() const;
  Cyclotomic conj() const;
  Cyclotomic inverse() const;
  std::complex<double> to_complex() const;

  // Exact real part as a real algebraic number; the root is identified
  // against a double-precision approximation, guarded by root separation.
  AlgebraicReal real_part() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // Lift both operands into Q(zeta_lcm).
  Cyclotomic lift(int m) const;

 private:
  int m_;
  UPoly v_;
};

}  // namespace invtrace
