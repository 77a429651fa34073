#include "invtrace/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "invtrace/errors.hpp"
#include "invtrace/linalg.hpp"

namespace invtrace {

namespace {

const UPoly& phi_locked(int m, std::map<int, UPoly>& cache) {
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<Q> c(m + 1);
  c[0] = -1;
  c[m] = 1;
  UPoly p(std::move(c));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = p / phi_locked(d, cache);
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

const UPoly& cyclotomic_polynomial(int m) {
  static std::mutex mu;
  static std::map<int, UPoly> cache;
  if (m < 1) throw InvalidInput("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  return phi_locked(m, cache);
}

Cyclotomic::Cyclotomic(int m, const Q& value) : m_(m), v_(UPoly::constant(value)) {}

Cyclotomic::Cyclotomic(int m, const UPoly& poly_in_zeta)
    : m_(m), v_(poly_in_zeta % cyclotomic_polynomial(m)) {}

Cyclotomic Cyclotomic::from_power_counts(int m, const std::vector<Z>& counts) {
  std::vector<Q> c(counts.begin(), counts.end());
  return Cyclotomic(m, UPoly(std::move(c)));
}

Q Cyclotomic::rational() const {
  if (!is_rational()) throw Error("cyclotomic value is not rational");
  return v_.coeff(0);
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<Q> c(m_);
  for (int k = 0; k <= v_.degree(); ++k) c[(m_ - k) % m_] += v_.coeff(k);
  return Cyclotomic(m_, UPoly(std::move(c)));
}

bool Cyclotomic::is_real() const { return conj() == *this; }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("inverse of zero in cyclotomic field");
  // Extended Euclid: s*v + t*phi = g, g a nonzero constant since phi is
  // irreducible.
  UPoly r0 = cyclotomic_polynomial(m_), r1 = v_;
  UPoly s0, s1 = UPoly::constant(1);
  while (r1.degree() > 0) {
    UPoly q, r;
    UPoly::divmod(r0, r1, q, r);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw Error("cyclotomic inverse: not invertible");
  return Cyclotomic(m_, s1 * (1 / r1.coeff(0)));
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0;
  for (int k = 0; k <= v_.degree(); ++k) {
    double a = 2 * M_PI * k / m_;
    acc += v_.coeff(k).get_d() * std::complex<double>(std::cos(a), std::sin(a));
  }
  return acc;
}

AlgebraicReal Cyclotomic::real_part() const {
  Cyclotomic re = (*this + conj()) * Cyclotomic(m_, Q(1, 2));
  if (re.is_rational()) return AlgebraicReal(re.rational());
  const UPoly& phi = cyclotomic_polynomial(m_);
  std::size_t dim = static_cast<std::size_t>(phi.degree());
  auto apply = [&](const QVector& v) {
    UPoly p = (UPoly(v) * re.v_) % phi;
    QVector out(dim);
    for (std::size_t i = 0; i < dim; ++i) out[i] = p.coeff(static_cast<int>(i));
    return out;
  };
  QVector e0(dim);
  e0[0] = 1;
  UPoly minpoly = krylov_minpoly(apply, e0, dim).primitive();
  double target = re.to_complex().real();
  double scale = 1;
  for (const auto& c : re.v_.coeffs()) scale += std::abs(c.get_d());
  double tol = 1e-9 * scale;
  auto roots = isolate_real_roots(minpoly);
  int best = -1;
  double best_d = 0, second_d = 1e300;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    AlgebraicReal a(minpoly, roots[i].lo, roots[i].hi);
    a.refine_below(frac(1, Z(1) << 50));
    double d = std::abs(a.approx() - target);
    if (best < 0 || d < best_d) {
      second_d = best < 0 ? second_d : best_d;
      best_d = d;
      best = static_cast<int>(i);
    } else {
      second_d = std::min(second_d, d);
    }
  }
  if (best < 0 || best_d > tol || second_d < 10 * tol)
    throw Undecided("cannot identify the real part of a cyclotomic value");
  return AlgebraicReal(minpoly, roots[best].lo, roots[best].hi);
}

Cyclotomic Cyclotomic::lift(int m) const {
  if (m % m_) throw Error("cyclotomic lift: order does not divide target");
  int step = m / m_;
  std::vector<Q> c(m);
  for (int k = 0; k <= v_.degree(); ++k) c[(k * step) % m] += v_.coeff(k);
  return Cyclotomic(m, UPoly(std::move(c)));
}

namespace {

int common(const Cyclotomic& a, const Cyclotomic& b) { return std::lcm(a.order(), b.order()); }

}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common(a, b);
  return Cyclotomic(m, a.lift(m).v_ + b.lift(m).v_);
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common(a, b);
  return Cyclotomic(m, a.lift(m).v_ - b.lift(m).v_);
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common(a, b);
  return Cyclotomic(m, a.lift(m).v_ * b.lift(m).v_);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  int m = common(a, b);
  return a.lift(m).v_ == b.lift(m).v_;
}

}  // namespace invtrace
