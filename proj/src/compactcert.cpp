#include "invtrace/compactcert.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "invtrace/errors.hpp"

namespace invtrace {

namespace {

std::string render(AlgebraicReal& x, int digits) {
  if (x.is_exact()) return x.lo().get_str();
  return x.decimal(digits);
}

std::string render(const Cyclotomic& c, int digits) {
  if (c.is_rational()) return c.rational().get_str();
  std::complex<double> z = c.to_complex();
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return out.str();
}

Json cyclotomic_to_json(const Cyclotomic& c, int digits) {
  if (c.is_rational()) return to_pq(c.rational());
  Json poly = Json::array();
  for (const auto& q : c.poly().coeffs()) poly.push_back(to_pq(q));
  return Json{{"order", c.order()}, {"zeta_poly", poly}, {"approx", render(c, digits)}};
}

// Objective at the corner, real part, when every coordinate is known.
std::optional<AlgebraicReal> corner_objective(const Polynomial& objective,
                                              const std::vector<std::optional<Cyclotomic>>& coords) {
  int order = 1;
  for (const auto& c : coords) {
    if (!c) return std::nullopt;
    order = std::lcm(order, c->order());
  }
  std::vector<Cyclotomic> lifted;
  for (const auto& c : coords) lifted.push_back(c->lift(order));
  Cyclotomic v = objective.evaluate_in<Cyclotomic>(
      lifted, [&](const Q& q) { return Cyclotomic(order, q); },
      [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; },
      [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; }, Cyclotomic(order, Q(0)));
  return v.real_part();
}

bool point_is_corner(AlgebraicPoint& x, const CornerValue& c) {
  for (int i = 0; i < x.nvars(); ++i) {
    const auto& v = c.coordinates[i];
    if (!v || !v->is_real()) return false;
    AlgebraicReal re = v->real_part();
    if (AlgebraicReal::compare(x.coordinate(i), re) != 0) return false;
  }
  return true;
}

}  // namespace

Ideal critical_ideal(const DerivationMatrix& m, const Polynomial& objective) {
  const int r = m.rank();
  if (objective.nvars() != r) throw InvalidInput("objective has the wrong number of variables");
  std::vector<Polynomial> grad;
  for (int j = 0; j < r; ++j) grad.push_back(objective.derivative(j));
  Ideal out{r, {}, MonomialOrder::DegRevLex};
  for (int i = 0; i < r; ++i) {
    Polynomial g(r);
    for (int j = 0; j < r; ++j)
      if (!grad[j].is_zero()) g += m.M[i][j] * grad[j];
    out.gens.push_back(std::move(g));
  }
  return out;
}

bool sigma_reality(const DerivationMatrix& m, AlgebraicPoint& x) {
  for (int i = 0; i < m.rank(); ++i) {
    int j = m.sigma[i];
    if (j <= i) continue;
    Polynomial diff = Polynomial::variable(m.rank(), i) - Polynomial::variable(m.rank(), j);
    if (sign_of(diff, x) != 0) return false;
  }
  return true;
}

namespace {

// Laplace expansion along rows, memoized on the set of columns still free.
template <class T, class Mul, class Add, class Sub>
T laplace(const std::vector<std::vector<T>>& a, const T& zero, const T& one, Mul mul, Add add, Sub sub) {
  const std::size_t k = a.size();
  std::map<unsigned, T> memo;
  std::function<T(std::size_t, unsigned)> det = [&](std::size_t row, unsigned cols) -> T {
    if (row == k) return one;
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    T sum = zero;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(cols & (1u << c))) continue;
      T term = mul(a[row][c], det(row + 1, cols & ~(1u << c)));
      sum = sign > 0 ? add(sum, term) : sub(sum, term);
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return det(0, (1u << k) - 1);
}

UPoly exact_minor(const std::vector<std::vector<UPoly>>& reduced, const std::vector<int>& rows,
                  const AlgebraicPoint& x) {
  std::vector<std::vector<UPoly>> a;
  for (int i : rows) {
    std::vector<UPoly> r;
    for (int j : rows) r.push_back(reduced[i][j]);
    a.push_back(std::move(r));
  }
  return laplace<UPoly>(
      a, UPoly(), UPoly::constant(Q(1)), [&](const UPoly& u, const UPoly& v) { return x.mulmod(u, v); },
      [](const UPoly& u, const UPoly& v) { return u + v; },
      [](const UPoly& u, const UPoly& v) { return u - v; });
}

Interval interval_minor(const std::vector<std::vector<Interval>>& entries, const std::vector<int>& rows) {
  std::vector<std::vector<Interval>> a;
  for (int i : rows) {
    std::vector<Interval> r;
    for (int j : rows) r.push_back(entries[i][j]);
    a.push_back(std::move(r));
  }
  auto mul = [](const Interval& u, const Interval& v) {
    Q c[4] = {u.lo * v.lo, u.lo * v.hi, u.hi * v.lo, u.hi * v.hi};
    return Interval{*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
  };
  return laplace<Interval>(
      a, Interval{0, 0}, Interval{1, 1}, mul, [](const Interval& u, const Interval& v) { return Interval{u.lo + v.lo, u.hi + v.hi}; },
      [](const Interval& u, const Interval& v) { return Interval{u.lo - v.hi, u.hi - v.lo}; });
}

}  // namespace

UPoly principal_minor(const PolyMatrix& M, const std::vector<int>& rows, const AlgebraicPoint& x) {
  std::vector<std::vector<UPoly>> reduced(M.size(), std::vector<UPoly>(M.size()));
  for (int i : rows)
    for (int j : rows) reduced[i][j] = x.reduce(M[i][j]);
  return exact_minor(reduced, rows, x);
}

bool is_compact_point(const PolyMatrix& msigma, AlgebraicPoint& x) {
  const int r = static_cast<int>(msigma.size());
  if (r > 16) throw Infeasible("principal minor enumeration is limited to rank 16");
  PolyMatrix neg = msigma;
  for (auto& row : neg)
    for (auto& p : row) p = -p;
  std::vector<unsigned> subsets((1u << r) - 1);
  std::iota(subsets.begin(), subsets.end(), 1u);
  std::stable_sort(subsets.begin(), subsets.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });

  // Interval enclosures settle most signs; the exact sign in Q[theta]/(h)
  // is the fallback for minors near or equal to zero.
  std::vector<std::vector<Interval>> entries;
  int bits = 0;
  auto sharpen = [&](int b) {
    bits = b;
    x.refine_to(frac(1, Z(1) << b));
    auto xi = x.coordinate_intervals();
    entries.assign(r, std::vector<Interval>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) entries[i][j] = evaluate_interval(neg[i][j], xi);
  };
  std::vector<std::vector<UPoly>> reduced;
  for (unsigned s : subsets) {
    std::vector<int> rows;
    for (int i = 0; i < r; ++i)
      if (s & (1u << i)) rows.push_back(i);
    int sign = 0;
    for (int b : {48, 160}) {
      if (bits < b) sharpen(b);
      Interval d = interval_minor(entries, rows);
      if (d.lo > 0) sign = 1;
      else if (d.hi < 0) sign = -1;
      if (sign) break;
    }
    if (!sign) {
      if (reduced.empty()) {
        reduced.assign(r, std::vector<UPoly>(r));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j) reduced[i][j] = x.reduce(neg[i][j]);
      }
      sign = x.sign(exact_minor(reduced, rows, x));
    }
    if (sign < 0) return false;
  }
  return true;
}

bool is_true_character(const DatumPtr& datum, const Polynomial& p) {
  if (p.is_zero() || !p.has_integer_coefficients()) return false;
  auto parts = decompose_irreducibles(from_fundamental_polynomial(datum, p));
  for (const auto& [lambda, k] : parts)
    if (k < 0) return false;
  return true;
}

const char* to_string(Inclusion v) {
  switch (v) {
    case Inclusion::OutsideWindow: return "outside-window";
    case Inclusion::NotSigmaReal: return "not-sigma-real";
    case Inclusion::NotCompact: return "not-compact";
    case Inclusion::Certified: return "certified";
  }
  return "?";
}

ExtremumReport extremum(const DatumPtr& datum, const Polynomial& objective,
                        const ExtremumOptions& options) {
  const int r = datum->rank();
  if (objective.nvars() != r) throw InvalidInput("objective has the wrong number of variables");
  ExtremumReport rep;
  rep.datum = datum;
  rep.objective = objective;

  for (const auto& c : corners(datum, std::nullopt, options.orbit_cap)) {
    CornerValue cv;
    cv.index = c.index;
    cv.kac = c.kac;
    cv.coordinates = c.values;
    cv.value = corner_objective(objective, c.values);
    rep.corners.push_back(std::move(cv));
  }
  if (!rep.corners[0].value) throw Infeasible("objective could not be evaluated at the identity");

  std::optional<AlgebraicReal> cmin, cmax;
  for (std::size_t i = 0; i < rep.corners.size(); ++i) {
    auto& v = rep.corners[i].value;
    if (!v) continue;
    if (!cmin || AlgebraicReal::compare(*v, *cmin) < 0) {
      cmin = *v;
      rep.minimum = {*v, {true, static_cast<int>(i)}};
    }
    if (!cmax || AlgebraicReal::compare(*v, *cmax) > 0) {
      cmax = *v;
      rep.maximum = {*v, {true, static_cast<int>(i)}};
    }
  }

  rep.true_character = is_true_character(datum, objective);
  if (rep.true_character) rep.window_bound = rep.corners[0].value->lo();
  if (objective.is_constant()) return rep;

  DerivationMatrix dm = derivation_matrix(datum, options.invder);
  const PolyMatrix msigma = dm.sigma_matrix();
  auto solutions = solve_zero_dim(critical_ideal(dm, objective), options.solve);

  for (auto& x : solutions) {
    bool corner = false;
    for (const auto& c : rep.corners)
      if (point_is_corner(x, c)) {
        corner = true;
        break;
      }
    if (corner) continue;
    CriticalPointReport pr{x, value_of(objective, x), std::nullopt, std::nullopt,
                           Inclusion::OutsideWindow};
    bool in_window = true;
    if (rep.window_bound) {
      const Q& d = *rep.window_bound;
      bool below = AlgebraicReal::compare(pr.value, *cmin) < 0 && AlgebraicReal::compare(pr.value, Q(-d)) >= 0;
      bool above = AlgebraicReal::compare(pr.value, *cmax) > 0 && AlgebraicReal::compare(pr.value, d) <= 0;
      in_window = below || above;
    }
    if (in_window || options.certify_all) {
      pr.sigma_real = sigma_reality(dm, pr.point);
      if (*pr.sigma_real) pr.compact = is_compact_point(msigma, pr.point);
      if (in_window)
        pr.inclusion = !*pr.sigma_real ? Inclusion::NotSigmaReal
                       : !*pr.compact  ? Inclusion::NotCompact
                                       : Inclusion::Certified;
    }
    rep.points.push_back(std::move(pr));
  }

  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    auto& p = rep.points[i];
    if (p.inclusion != Inclusion::Certified) continue;
    if (AlgebraicReal::compare(p.value, rep.minimum.value) < 0)
      rep.minimum = {p.value, {false, static_cast<int>(i)}};
    if (AlgebraicReal::compare(p.value, rep.maximum.value) > 0)
      rep.maximum = {p.value, {false, static_cast<int>(i)}};
  }
  return rep;
}

std::string ExtremumReport::witness_coordinates(const Witness& w, int digits) {
  std::string out = "(";
  if (w.corner) {
    const auto& c = corners[w.index].coordinates;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ", ";
      out += c[i] ? render(*c[i], digits) : "?";
    }
  } else {
    auto& x = points[w.index].point;
    for (int i = 0; i < x.nvars(); ++i) {
      if (i) out += ", ";
      out += render(x.coordinate(i), digits);
    }
  }
  return out + ")";
}

Json ExtremumReport::to_json(int digits) {
  Json j;
  j["schema"] = "invtrace.extremum/1";
  j["datum"] = datum->name();
  j["objective"] = objective.to_string("f");
  j["true_character"] = true_character;
  j["window_bound"] = window_bound ? Json(to_pq(*window_bound)) : Json(nullptr);
  Json cs = Json::array();
  for (auto& c : corners) {
    Json coords = Json::array();
    for (const auto& v : c.coordinates) coords.push_back(v ? cyclotomic_to_json(*v, digits) : Json(nullptr));
    cs.push_back(Json{{"index", c.index},
                      {"kac", c.kac},
                      {"coordinates", coords},
                      {"value", c.value ? algebraic_real_to_json(*c.value, digits) : Json(nullptr)}});
  }
  j["corners"] = cs;
  Json ps = Json::array();
  for (auto& p : points) {
    Json e = p.point.to_json(digits);
    e["value"] = algebraic_real_to_json(p.value, digits);
    e["sigma_real"] = p.sigma_real ? Json(*p.sigma_real) : Json(nullptr);
    e["compact"] = p.compact ? Json(*p.compact) : Json(nullptr);
    e["inclusion"] = to_string(p.inclusion);
    ps.push_back(e);
  }
  j["critical_points"] = ps;
  auto ext = [&](Extremum& e) {
    return Json{{"value", algebraic_real_to_json(e.value, digits)},
                {"witness", Json{{"kind", e.witness.corner ? "corner" : "critical"},
                                 {"index", e.witness.index},
                                 {"coordinates", witness_coordinates(e.witness, digits)}}}};
  };
  j["minimum"] = ext(minimum);
  j["maximum"] = ext(maximum);
  return j;
}

std::string ExtremumReport::to_text(int digits) {
  std::ostringstream out;
  out << datum->name() << " objective " << objective.to_string("f") << "\n";
  for (auto& c : corners) {
    out << "corner " << c.index << " " << witness_coordinates({true, c.index}, digits) << ": "
        << (c.value ? render(*c.value, digits) : "?") << "\n";
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto& p = points[i];
    out << "critical " << witness_coordinates({false, static_cast<int>(i)}, digits) << ": "
        << render(p.value, digits) << " [" << to_string(p.inclusion) << "]\n";
  }
  auto line = [&](const char* name, Extremum& e) {
    out << name << " = " << render(e.value, digits) << " at "
        << (e.witness.corner ? "corner " : "critical point ") << witness_coordinates(e.witness, digits)
        << "\n";
  };
  line("min", minimum);
  line("max", maximum);
  return out.str();
}

}  // namespace invtrace
