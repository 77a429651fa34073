#include "invtrace/su2asym.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "invtrace/algsolve.hpp"
#include "invtrace/errors.hpp"

namespace invtrace {

UPoly chebyshev_character(int d) {
  if (d < 0) throw InvalidInput("chebyshev_character needs d >= 0");
  UPoly prev = UPoly::constant(Q(1));
  if (d == 0) return prev;
  UPoly cur = UPoly::x();
  for (int k = 2; k <= d; ++k) {
    UPoly next = UPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Su2Min su2_min(int d) {
  if (d < 1) throw InvalidInput("su2_min needs d >= 1");
  const UPoly chi = chebyshev_character(d);
  Polynomial f(1);
  for (int k = 0; k <= chi.degree(); ++k) f.add_term(Monomial::var(0, k), chi.coeff(k));

  std::vector<std::pair<AlgebraicReal, AlgebraicReal>> candidates;  // (t, chi(t))
  for (int e : {-2, 2}) candidates.emplace_back(AlgebraicReal(Q(e)), AlgebraicReal(chi(Q(e))));
  if (d >= 2) {
    Ideal crit{1, {f.derivative(0)}, MonomialOrder::DegRevLex};
    for (auto& x : solve_zero_dim(crit)) {
      AlgebraicReal t = x.coordinate(0);
      if (AlgebraicReal::compare(t, Q(-2)) < 0 || AlgebraicReal::compare(t, Q(2)) > 0) continue;
      candidates.emplace_back(t, value_of(f, x));
    }
  }
  Su2Min out;
  bool first = true;
  for (auto& [t, v] : candidates) {
    int c = first ? -1 : AlgebraicReal::compare(v, out.value);
    if (c < 0) {
      out.value = v;
      out.argmin = {t};
      first = false;
    } else if (c == 0) {
      out.argmin.push_back(t);
    }
  }
  return out;
}

LimitConstant limit_constant() {
  // sin x / x is minimal where tan x = x; on (pi, 3pi/2) that is the zero
  // of sin x - x cos x, which changes sign there.
  auto g = [](double x) { return std::sin(x) - x * std::cos(x); };
  double lo = M_PI, hi = 1.5 * M_PI;
  double glo = g(lo);
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    double gm = g(mid);
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  double theta0 = 0.5 * (lo + hi);
  return {-std::sin(theta0) / theta0, theta0};
}

const char* to_string(XMethod m) {
  switch (m) {
    case XMethod::WeylSum: return "weyl-sum";
    case XMethod::RhoProduct: return "rho-product";
    case XMethod::Perturbed: return "limit-fallback";
    case XMethod::Origin: return "origin";
  }
  return "?";
}

namespace {

using LComplex = std::complex<long double>;

struct WeylData {
  std::vector<std::vector<std::vector<long double>>> matrices;
  std::vector<int> signs;
};

const WeylData& weyl_data(const RootDatum& d, std::uint64_t cap) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<WeylData>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[d.hash()];
  if (!slot) {
    if (d.weyl_order() > cap)
      throw Infeasible("Weyl group of " + d.name() + " exceeds the enumeration cap " + std::to_string(cap));
    slot = std::make_unique<WeylData>();
    for (const auto& w : weyl_elements(d, cap)) {
      std::vector<std::vector<long double>> m;
      for (const auto& row : w.matrix) m.emplace_back(row.begin(), row.end());
      slot->matrices.push_back(std::move(m));
      slot->signs.push_back(w.length % 2 ? -1 : 1);
    }
  }
  return *slot;
}

// A(x, y) for complex x, y in the fundamental-weight basis (bilinear, no
// conjugation).
LComplex pair(const RootDatum& d, const std::vector<LComplex>& x, const std::vector<LComplex>& y) {
  const auto& A = d.form_A();
  LComplex s = 0;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j) s += static_cast<long double>(A[i][j]) * x[i] * y[j];
  return s;
}

std::vector<LComplex> to_l(const RootDatum& d, const Weight& w) {
  std::vector<LComplex> out;
  for (int i = 0; i < d.rank(); ++i) out.emplace_back(static_cast<long double>(w[i]));
  return out;
}

std::vector<LComplex> to_l(const ComplexVector& v) {
  std::vector<LComplex> out;
  for (const auto& z : v) out.emplace_back(z.real(), z.imag());
  return out;
}

// (e^{x/2} - e^{-x/2}) / x, equal to 1 at x = 0.
LComplex shc(LComplex x) {
  if (std::abs(x) < 1e-4L) return 1.0L + x * x / 24.0L + x * x * x * x / 1920.0L;
  return (std::exp(x / 2.0L) - std::exp(-x / 2.0L)) / x;
}

long double min_wall_distance(const RootDatum& d, const std::vector<LComplex>& v) {
  long double best = INFINITY;
  for (const auto& r : d.positive_roots()) best = std::min(best, std::abs(pair(d, to_l(d, r), v)));
  return best;
}

LComplex weyl_sum(const RootDatum& d, const WeylData& W, const std::vector<LComplex>& s,
                  const std::vector<LComplex>& t) {
  const int n = d.rank();
  LComplex pref = 1;
  const auto rho = to_l(d, d.rho());
  for (const auto& r : d.positive_roots()) {
    auto rl = to_l(d, r);
    pref *= pair(d, rl, rho) / (pair(d, rl, s) * pair(d, rl, t));
  }
  LComplex sum = 0;
  std::vector<LComplex> wt(n);
  for (std::size_t k = 0; k < W.matrices.size(); ++k) {
    const auto& m = W.matrices[k];
    for (int i = 0; i < n; ++i) {
      wt[i] = 0;
      for (int j = 0; j < n; ++j) wt[i] += m[i][j] * t[j];
    }
    sum += static_cast<long double>(W.signs[k]) * std::exp(pair(d, s, wt));
  }
  return pref * sum;
}

}  // namespace

XEvaluation eval_X(const RootDatum& d, const ComplexVector& s_in, const ComplexVector& t_in,
                   const XOptions& options) {
  const int n = d.rank();
  if (static_cast<int>(s_in.size()) != n || static_cast<int>(t_in.size()) != n)
    throw InvalidInput("X needs s and t of length rank");
  auto s = to_l(s_in), t = to_l(t_in);
  auto is_zero = [](const std::vector<LComplex>& v) {
    for (const auto& z : v)
      if (z != 0.0L) return false;
    return true;
  };
  if (is_zero(s) || is_zero(t)) return {Complex(1, 0), XMethod::Origin, 0};

  bool s_is_rho = true, t_is_rho = true;
  for (int i = 0; i < n; ++i) {
    s_is_rho = s_is_rho && s[i] == 1.0L;
    t_is_rho = t_is_rho && t[i] == 1.0L;
  }
  if (s_is_rho || t_is_rho) {
    const auto& other = s_is_rho ? t : s;
    LComplex v = 1;
    for (const auto& r : d.positive_roots()) v *= shc(pair(d, to_l(d, r), other));
    return {Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())), XMethod::RhoProduct, 0};
  }

  const WeylData& W = weyl_data(d, options.weyl_cap);
  const long double tol = options.wall_tolerance;
  if (min_wall_distance(d, s) > tol && min_wall_distance(d, t) > tol) {
    LComplex v = weyl_sum(d, W, s, t);
    return {Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())), XMethod::WeylSum, 0};
  }

  // X is entire: average over +-delta shifts along a fixed generic
  // direction and extrapolate in delta^2.
  std::vector<LComplex> dir(n);
  for (int i = 0; i < n; ++i) dir[i] = 1.0L / (1.0L + 0.6180339887L * (i + 1)) + 0.01L * i;
  auto averaged = [&](long double delta) {
    std::vector<LComplex> sp(n), sm(n), tp(n), tm(n);
    for (int i = 0; i < n; ++i) {
      sp[i] = s[i] + delta * dir[i];
      sm[i] = s[i] - delta * dir[i];
      tp[i] = t[i] + delta * dir[i] * 0.7L;
      tm[i] = t[i] - delta * dir[i] * 0.7L;
    }
    return (weyl_sum(d, W, sp, tp) + weyl_sum(d, W, sm, tm)) / 2.0L;
  };
  const long double delta = 4e-3L;
  LComplex a1 = averaged(delta), a2 = averaged(delta / 2), a3 = averaged(delta / 4);
  LComplex r1 = (4.0L * a2 - a1) / 3.0L, v = (4.0L * a3 - a2) / 3.0L;
  double err = static_cast<double>(std::abs(v - r1));
  if (!(err <= options.max_error * std::max(1.0L, std::abs(v))))
    throw Undecided("X is ill-conditioned near a reflection wall (error estimate " + std::to_string(err) + ")");
  return {Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())), XMethod::Perturbed, err};
}

}  // namespace invtrace
