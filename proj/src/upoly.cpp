#include "invtrace/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "invtrace/errors.hpp"

namespace invtrace {

UPoly::UPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Q& c) { return UPoly(std::vector<Q>{c}); }

UPoly UPoly::x() { return UPoly(std::vector<Q>{0, 1}); }

UPoly UPoly::from_integers(const std::vector<long long>& coeffs) {
  std::vector<Q> c;
  for (long long v : coeffs) c.emplace_back(static_cast<long>(v));
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Q UPoly::operator()(const Q& x) const {
  Q acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double UPoly::operator()(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

namespace {

Interval imul(const Interval& a, const Interval& b) {
  Q p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

}  // namespace

Interval UPoly::operator()(const Interval& x) const {
  if (x.lo == x.hi) {
    Q v = (*this)(x.lo);
    return {v, v};
  }
  Interval acc{0, 0};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = imul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

int UPoly::sign_at(const Q& x) const { return sgn((*this)(x)); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Q> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Q> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Q> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Q& s) {
  std::vector<Q> c = a.c_;
  for (auto& v : c) v *= s;
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const { return *this * Q(-1); }

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw Error("UPoly division by zero");
  std::vector<Q> rem = a.c_;
  int db = b.degree();
  std::vector<Q> quo(std::max(0, a.degree() - db + 1));
  Q inv = 1 / b.lc();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    Q f = rem[k] * inv;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
  }
  q = UPoly(std::move(quo));
  rem.resize(std::max(0, db));
  r = UPoly(std::move(rem));
}

UPoly operator%(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  return r;
}

UPoly operator/(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  UPoly::divmod(a, b, q, r);
  return q;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Q> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return *this * (1 / lc());
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Z g = 0, l = 1;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  Q s = frac(l, g);
  if (lc() < 0) s = -s;
  return *this * s;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UPoly::constant(*it);
  return acc;
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = (a % b).primitive();
    a = std::move(b);
    b = std::move(r);
  }
  return a.primitive();
}

UPoly UPoly::squarefree() const {
  if (degree() <= 0) return primitive();
  UPoly g = gcd(*this, derivative());
  return (*this / g).primitive();
}

std::vector<long long> UPoly::to_int64() const {
  std::vector<long long> out;
  for (const auto& v : c_) {
    if (v.get_den() != 1 || !v.get_num().fits_slong_p())
      throw Error("coefficient does not fit a 64-bit integer");
    out.push_back(v.get_num().get_si());
  }
  return out;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Q& v = c_[k];
    if (v == 0) continue;
    Q a = abs(v);
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    first = false;
    if (a != 1 || k == 0) {
      os << a.get_str();
      if (k) os << "*";
    }
    if (k) os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

namespace {

// Content removal by a positive scalar only; Sturm chains must keep signs.
UPoly positive_primitive(const UPoly& p) {
  UPoly q = p.primitive();
  if (sgn(q.lc()) != sgn(p.lc())) q = -q;
  return q;
}

}  // namespace

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  seq.push_back(positive_primitive(p));
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(positive_primitive(d));
  for (;;) {
    UPoly r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    seq.push_back(positive_primitive(-r));
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<UPoly>& seq, const Q& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const std::vector<UPoly>& seq, const Q& a, const Q& b) {
  if (a >= b) return 0;
  return sign_changes(seq, a) - sign_changes(seq, b);
}

int sturm_count_closed(const std::vector<UPoly>& seq, const Q& a, const Q& b) {
  int n = a == b ? 0 : sturm_count(seq, a, b);
  if (seq.front().sign_at(a) == 0) ++n;
  return n;
}

namespace {

// Power of two strictly above every root's absolute value (Cauchy bound).
Q root_bound(const UPoly& p) {
  Q m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Q(abs(p.coeff(i) / p.lc())));
  Q bound = 1 + m;
  Q b = 1;
  while (b <= bound) b *= 2;
  return b;
}

}  // namespace

std::vector<Interval> isolate_real_roots(const UPoly& input) {
  std::vector<Interval> out;
  if (input.degree() < 1) return out;
  UPoly p = input.squarefree();
  if (p.degree() < 1) return out;
  auto seq = sturm_sequence(p);
  Q b = root_bound(p);
  struct Task {
    Q a, b;
    int n;
  };
  std::vector<Task> stack{{-b, b, sturm_count(seq, -b, b)}};
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.n == 0) continue;
    if (t.n == 1) {
      if (p.sign_at(t.b) == 0) {
        out.push_back({t.b, t.b});
        continue;
      }
      if (p.sign_at(t.a) != 0) {
        out.push_back({t.a, t.b});
        continue;
      }
    }
    Q m = (t.a + t.b) / 2;
    int left = sturm_count(seq, t.a, m);
    stack.push_back({m, t.b, t.n - left});
    stack.push_back({t.a, m, left});
  }
  std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return out;
}

Q simplest_rational(const Q& a, const Q& b) {
  if (a > b) throw Error("simplest_rational: empty interval");
  if (a <= 0 && b >= 0) return 0;
  if (b < 0) return -simplest_rational(-b, -a);
  Z ca;
  mpz_cdiv_q(ca.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (Q(ca) <= b) return Q(ca);
  Z fa;
  mpz_fdiv_q(fa.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  return Q(fa) + 1 / simplest_rational(1 / (b - fa), 1 / (a - fa));
}

AlgebraicReal::AlgebraicReal(const Q& value)
    : poly_(UPoly(std::vector<Q>{-value, 1}).primitive()), lo_(value), hi_(value) {}

AlgebraicReal::AlgebraicReal(const UPoly& p, const Q& lo, const Q& hi)
    : poly_(p.primitive()), lo_(lo), hi_(hi) {
  if (lo_ > hi_) throw Error("AlgebraicReal: empty interval");
  if (lo_ == hi_) {
    if (poly_(lo_) != 0) throw Error("AlgebraicReal: degenerate interval is not a root");
    return;
  }
  if (poly_.sign_at(hi_) == 0) {
    lo_ = hi_;
    return;
  }
  if (poly_.sign_at(lo_) == 0) {
    hi_ = lo_;
    return;
  }
  sign_lo_ = poly_.sign_at(lo_);
  if (sign_lo_ == poly_.sign_at(hi_))
    throw Error("AlgebraicReal: interval does not bracket a simple root");
}

void AlgebraicReal::refine() {
  if (lo_ == hi_) return;
  Q m = (lo_ + hi_) / 2;
  int s = poly_.sign_at(m);
  if (s == 0) {
    lo_ = hi_ = m;
  } else if (s == sign_lo_) {
    lo_ = m;
  } else {
    hi_ = m;
  }
}

void AlgebraicReal::refine_below(const Q& width) {
  while (hi_ - lo_ > width) refine();
}

int AlgebraicReal::sign() { return compare(*this, Q(0)); }

bool AlgebraicReal::try_rational(Q& out) {
  if (lo_ == hi_) {
    out = lo_;
    return true;
  }
  if (poly_.degree() == 1) {
    out = -poly_.coeff(0) / poly_.coeff(1);
    return true;
  }
  Z lead = abs(poly_.lc().get_num());
  if (mpz_sizeinbase(lead.get_mpz_t(), 2) > 4096) return false;
  Q width(1, lead * lead * 2);
  refine_below(width);
  if (lo_ == hi_) {
    out = lo_;
    return true;
  }
  Q r = simplest_rational(lo_, hi_);
  if (r.get_den() <= lead && poly_(r) == 0) {
    out = r;
    lo_ = hi_ = r;
    return true;
  }
  return false;
}

double AlgebraicReal::approx() {
  refine_below(abs(lo_) / Q(Z(1) << 52) + frac(1, Z(1) << 60));
  return Q((lo_ + hi_) / 2).get_d();
}

std::string AlgebraicReal::decimal(int digits) {
  Z scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  refine_below(frac(1, scale * 10));
  Q mid = (lo_ + hi_) / 2;
  Q scaled = abs(mid) * scale;
  Z rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), Q(scaled + Q(1, 2)).get_num_mpz_t(),
             Q(scaled + Q(1, 2)).get_den_mpz_t());
  std::string s = rounded.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string int_part = s.substr(0, s.size() - digits);
  std::string frac = s.substr(s.size() - digits);
  bool negative = mid < 0 && rounded != 0;
  std::string out = (negative ? "-" : "") + int_part;
  if (digits > 0) out += "." + frac;
  return out;
}

int AlgebraicReal::compare(AlgebraicReal& a, const Q& b) {
  AlgebraicReal rb(b);
  return compare(a, rb);
}

int AlgebraicReal::compare(AlgebraicReal& a, AlgebraicReal& b) {
  if (a.is_exact() && b.is_exact()) return a.lo_ < b.lo_ ? -1 : (a.lo_ > b.lo_ ? 1 : 0);
  bool equality_checked = false;
  for (int iter = 0; iter < 100000; ++iter) {
    if (a.hi_ < b.lo_) return -1;
    if (b.hi_ < a.lo_) return 1;
    if (!equality_checked) {
      equality_checked = true;
      if (a.poly_ == b.poly_) {
        // Both intervals isolate one root of the same square-free polynomial,
        // so the overlap holds at most one root and a sign test decides it.
        Q lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
        int slo = a.poly_.sign_at(lo), shi = a.poly_.sign_at(hi);
        if (slo == 0 || shi == 0 || slo != shi) return 0;
        a.refine();
        b.refine();
        continue;
      }
      UPoly g = UPoly::gcd(a.poly_, b.poly_);
      if (g.degree() >= 1) {
        Q lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
        if (lo == hi) {
          if (g(lo) == 0) return 0;
        } else if (sturm_count_closed(sturm_sequence(g), lo, hi) > 0) {
          return 0;
        }
      }
    }
    // A degenerate interval sitting inside the other and not equal to it:
    // keep refining the other side only.
    a.refine();
    b.refine();
  }
  throw Undecided("algebraic comparison did not separate after refinement budget");
}

}  // namespace invtrace
