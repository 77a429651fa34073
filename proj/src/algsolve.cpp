#include "invtrace/algsolve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "invtrace/errors.hpp"
#include "invtrace/linalg.hpp"

namespace invtrace {

bool monomial_less(const Monomial& a, const Monomial& b, int nvars, MonomialOrder order) {
  if (order == MonomialOrder::Lex) {
    for (int i = 0; i < nvars; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  int da = 0, db = 0;
  for (int i = 0; i < nvars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  for (int i = nvars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Monomial leading_monomial(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw InvalidInput("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (!best || monomial_less(*best, m, p.nvars(), order)) best = &m;
  return *best;
}

namespace {

struct Term {
  Monomial m;
  Q c;
};

// Terms in descending order; leading coefficient 1 once normalized.
struct GPoly {
  std::vector<Term> terms;
  int sugar = 0;
  const Monomial& lm() const { return terms.front().m; }
};

struct Greater {
  int n;
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return monomial_less(b, a, n, order); }
};

int degree_of(const Monomial& m, int n) {
  int d = 0;
  for (int i = 0; i < n; ++i) d += m[i];
  return d;
}

GPoly to_gpoly(const Polynomial& p, const Greater& cmp) {
  GPoly g;
  for (const auto& [m, c] : p.terms()) g.terms.push_back({m, c});
  std::sort(g.terms.begin(), g.terms.end(), [&](const Term& a, const Term& b) { return cmp(a.m, b.m); });
  for (const auto& t : g.terms) g.sugar = std::max(g.sugar, degree_of(t.m, cmp.n));
  return g;
}

Polynomial from_gpoly(const GPoly& g, int n) {
  Polynomial p(n);
  for (const auto& t : g.terms) p.add_term(t.m, t.c);
  return p;
}

void make_monic(GPoly& g) {
  if (g.terms.empty()) return;
  Q lc = g.terms.front().c;
  if (lc == 1) return;
  for (auto& t : g.terms) t.c /= lc;
}

class Reducer {
 public:
  Reducer(const Greater& cmp, const std::vector<GPoly>& polys) : cmp_(cmp), polys_(polys) {}

  // Full reduction of p by the polynomials with indices in `active`.
  GPoly reduce(const GPoly& p, const std::vector<int>& active, bool monic = true) const {
    std::map<Monomial, Q, Greater> work(cmp_);
    for (const auto& t : p.terms) work.emplace(t.m, t.c);
    GPoly out;
    out.sugar = p.sugar;
    while (!work.empty()) {
      auto it = work.begin();
      const GPoly* div = nullptr;
      for (int k : active)
        if (divides(polys_[k].lm(), it->first)) {
          div = &polys_[k];
          break;
        }
      if (!div) {
        out.terms.push_back({it->first, it->second});
        work.erase(it);
        continue;
      }
      Monomial q = quotient(it->first, div->lm());
      Q coef = it->second;
      out.sugar = std::max(out.sugar, degree_of(q, cmp_.n) + div->sugar);
      work.erase(it);
      for (std::size_t j = 1; j < div->terms.size(); ++j) {
        Monomial m = q * div->terms[j].m;
        auto [pos, inserted] = work.emplace(m, Q(0));
        pos->second -= coef * div->terms[j].c;
        if (pos->second == 0) work.erase(pos);
      }
    }
    if (monic) make_monic(out);
    return out;
  }

 private:
  Greater cmp_;
  const std::vector<GPoly>& polys_;
};

struct Pair {
  int i, j;
  Monomial lcm;
  int sugar;
};

GPoly spoly(const GPoly& a, const GPoly& b, const Monomial& l, const Greater& cmp) {
  Monomial qa = quotient(l, a.lm()), qb = quotient(l, b.lm());
  std::map<Monomial, Q, Greater> work(cmp);
  for (std::size_t k = 1; k < a.terms.size(); ++k) work[qa * a.terms[k].m] += a.terms[k].c;
  for (std::size_t k = 1; k < b.terms.size(); ++k) work[qb * b.terms[k].m] -= b.terms[k].c;
  GPoly s;
  for (auto& [m, c] : work)
    if (c != 0) s.terms.push_back({m, c});
  s.sugar = std::max(a.sugar + degree_of(qa, cmp.n), b.sugar + degree_of(qb, cmp.n));
  return s;
}

}  // namespace

Ideal groebner(const Ideal& ideal, const GroebnerOptions& options) {
  const int n = ideal.nvars;
  const Greater cmp{n, ideal.order};
  std::vector<GPoly> polys;
  std::vector<int> active;
  std::vector<Pair> pairs;
  Reducer reducer(cmp, polys);

  auto pair_key = [&](const Pair& p) { return std::make_tuple(p.sugar, degree_of(p.lcm, n)); };
  auto insert = [&](GPoly h) {
    int hi = static_cast<int>(polys.size());
    polys.push_back(std::move(h));
    const Monomial& lh = polys[hi].lm();
    // Gebauer-Moeller update.
    std::vector<Pair> cand;
    for (int g : active) {
      Monomial l = lcm(lh, polys[g].lm());
      int sugar = std::max(polys[hi].sugar + degree_of(quotient(l, lh), n),
                           polys[g].sugar + degree_of(quotient(l, polys[g].lm()), n));
      cand.push_back({g, hi, l, sugar});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool coprime_lm = coprime(lh, polys[cand[a].i].lm());
      bool dominated = false;
      if (!coprime_lm) {
        for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
          if (a == b || !divides(cand[b].lcm, cand[a].lcm)) continue;
          // Strict divisibility, or equal lcm with the earlier index kept.
          if (cand[b].lcm != cand[a].lcm || b < a) dominated = true;
        }
      }
      if (!dominated) kept.push_back(cand[a]);
    }
    std::vector<Pair> survivors;
    for (const auto& p : pairs) {
      bool drop = divides(lh, p.lcm) && lcm(polys[p.i].lm(), lh) != p.lcm &&
                  lcm(polys[p.j].lm(), lh) != p.lcm;
      if (!drop) survivors.push_back(p);
    }
    for (const auto& p : kept)
      if (!coprime(polys[p.i].lm(), polys[p.j].lm())) survivors.push_back(p);
    pairs = std::move(survivors);
    std::vector<int> next;
    for (int g : active)
      if (!divides(lh, polys[g].lm())) next.push_back(g);
    next.push_back(hi);
    active = std::move(next);
  };

  // Seed with inter-reduced inputs in increasing leading-monomial order.
  std::vector<GPoly> inputs;
  for (const auto& g : ideal.gens) {
    if (g.nvars() != n) throw InvalidInput("generator has the wrong number of variables");
    if (g.is_zero()) continue;
    GPoly p = to_gpoly(g, cmp);
    make_monic(p);
    inputs.push_back(std::move(p));
  }
  std::sort(inputs.begin(), inputs.end(),
            [&](const GPoly& a, const GPoly& b) { return cmp(b.lm(), a.lm()); });
  for (auto& p : inputs) {
    GPoly r = reducer.reduce(p, active);
    if (!r.terms.empty()) insert(std::move(r));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > options.pair_cap)
      throw Infeasible("Groebner basis refused: more than " + std::to_string(options.pair_cap) +
                       " S-pairs");
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      auto ka = pair_key(a), kb = pair_key(b);
      if (ka != kb) return ka < kb;
      if (a.lcm != b.lcm) return cmp(b.lcm, a.lcm);
      return std::make_pair(a.i, a.j) < std::make_pair(b.i, b.j);
    });
    Pair p = *best;
    pairs.erase(best);
    GPoly s = spoly(polys[p.i], polys[p.j], p.lcm, cmp);
    if (s.terms.empty()) continue;
    GPoly r = reducer.reduce(s, active);
    if (r.terms.empty()) continue;
    if (r.lm().is_one()) {
      Ideal unit{n, {Polynomial::constant(n, Q(1))}, ideal.order};
      return unit;
    }
    insert(std::move(r));
  }

  // Minimal basis, then inter-reduce.
  std::vector<int> minimal;
  for (int g : active) {
    bool redundant = false;
    for (int h : active)
      if (h != g && divides(polys[h].lm(), polys[g].lm()) &&
          (polys[h].lm() != polys[g].lm() || h < g))
        redundant = true;
    if (!redundant) minimal.push_back(g);
  }
  std::vector<GPoly> reduced;
  for (int g : minimal) {
    std::vector<int> others;
    for (int h : minimal)
      if (h != g) others.push_back(h);
    GPoly tail;
    tail.terms.assign(polys[g].terms.begin() + 1, polys[g].terms.end());
    tail.sugar = polys[g].sugar;
    GPoly full;
    full.terms.push_back(polys[g].terms.front());
    for (auto& t : reducer.reduce(tail, others, false).terms) full.terms.push_back(t);
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const GPoly& a, const GPoly& b) { return cmp(b.lm(), a.lm()); });
  Ideal out{n, {}, ideal.order};
  for (const auto& g : reduced) out.gens.push_back(from_gpoly(g, n));
  return out;
}

Polynomial normal_form(const Polynomial& p, const Ideal& basis) {
  const Greater cmp{basis.nvars, basis.order};
  std::vector<GPoly> polys;
  std::vector<int> active;
  for (const auto& g : basis.gens) {
    polys.push_back(to_gpoly(g, cmp));
    make_monic(polys.back());
    active.push_back(static_cast<int>(polys.size()) - 1);
  }
  std::map<Monomial, Q, Greater> work(cmp);
  for (const auto& [m, c] : p.terms()) work.emplace(m, c);
  Polynomial out(basis.nvars);
  while (!work.empty()) {
    auto it = work.begin();
    const GPoly* div = nullptr;
    for (const auto& g : polys)
      if (divides(g.lm(), it->first)) {
        div = &g;
        break;
      }
    if (!div) {
      out.add_term(it->first, it->second);
      work.erase(it);
      continue;
    }
    Monomial q = quotient(it->first, div->lm());
    Q coef = it->second;
    work.erase(it);
    for (std::size_t j = 1; j < div->terms.size(); ++j) {
      auto [pos, ins] = work.emplace(q * div->terms[j].m, Q(0));
      pos->second -= coef * div->terms[j].c;
      if (pos->second == 0) work.erase(pos);
    }
  }
  return out;
}

bool is_zero_dimensional(const Ideal& basis) {
  const int n = basis.nvars;
  std::vector<bool> pure(n, false);
  for (const auto& g : basis.gens) {
    if (g.is_zero()) continue;
    Monomial lm = leading_monomial(g, basis.order);
    if (lm.is_one()) return true;
    int nz = -1, count = 0;
    for (int i = 0; i < n; ++i)
      if (lm[i] != 0) {
        nz = i;
        ++count;
      }
    if (count == 1) pure[nz] = true;
  }
  return std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
}

namespace {

// Quotient algebra Q[x]/I for a zero-dimensional reduced basis: standard
// monomials and the multiplication matrices of the variables.
struct QuotientAlgebra {
  int n = 0;
  std::vector<Monomial> basis;
  std::vector<QMatrix> X;  // X[i] column j = coordinates of x_i * basis[j]

  std::size_t dim() const { return basis.size(); }

  QVector apply(const std::vector<Q>& u, const QVector& v) const {
    QVector out(dim(), Q(0));
    for (int i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t r = 0; r < dim(); ++r) {
        Q s = 0;
        for (std::size_t c = 0; c < dim(); ++c)
          if (v[c] != 0 && X[i][r][c] != 0) s += X[i][r][c] * v[c];
        out[r] += u[i] * s;
      }
    }
    return out;
  }

  QVector unit() const {
    QVector e(dim(), Q(0));
    e[0] = 1;
    return e;
  }
};

QuotientAlgebra build_quotient(const Ideal& G) {
  QuotientAlgebra A;
  A.n = G.nvars;
  std::vector<Monomial> lms;
  for (const auto& g : G.gens) lms.push_back(leading_monomial(g, G.order));
  auto standard = [&](const Monomial& m) {
    for (const auto& l : lms)
      if (divides(l, m)) return false;
    return true;
  };
  std::set<Monomial> seen{Monomial{}};
  std::vector<Monomial> queue{Monomial{}};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (int i = 0; i < A.n; ++i) {
      Monomial m = queue[q];
      m[i] += 1;
      if (seen.count(m) || !standard(m)) continue;
      seen.insert(m);
      queue.push_back(m);
    }
  std::sort(queue.begin(), queue.end(),
            [&](const Monomial& a, const Monomial& b) { return monomial_less(a, b, A.n, G.order); });
  A.basis = queue;
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < A.basis.size(); ++k) index[A.basis[k]] = k;
  const std::size_t D = A.basis.size();
  A.X.assign(A.n, QMatrix(D, QVector(D, Q(0))));
  for (int i = 0; i < A.n; ++i)
    for (std::size_t j = 0; j < D; ++j) {
      Monomial m = A.basis[j];
      m[i] += 1;
      Polynomial nf = index.count(m) ? Polynomial::monomial(A.n, m, Q(1))
                                     : normal_form(Polynomial::monomial(A.n, m, Q(1)), G);
      for (const auto& [mm, c] : nf.terms()) A.X[i][index.at(mm)][j] = c;
    }
  return A;
}

UPoly minpoly_of(const QuotientAlgebra& A, const std::vector<Q>& u) {
  return krylov_minpoly([&](const QVector& v) { return A.apply(u, v); }, A.unit(), A.dim());
}

std::vector<Q> unit_direction(int n, int i) {
  std::vector<Q> u(n, Q(0));
  u[i] = 1;
  return u;
}

// Interval [lo, hi] widened outward to dyadic endpoints with denominator 2^k.
// Isolating intervals made pairwise disjoint, with rational roots of
// moderate height collapsed to points.
std::vector<Interval> eliminant_root_intervals(const UPoly& p) {
  std::vector<Interval> out;
  for (const auto& iv : isolate_real_roots(p)) {
    if (iv.lo == iv.hi) {
      out.push_back(iv);
      continue;
    }
    AlgebraicReal r(p, iv.lo, iv.hi);
    r.refine_below(frac(1, Z(1) << 64));
    Q q = simplest_rational(r.lo(), r.hi());
    if (p(q) == 0) out.push_back({q, q});
    else out.push_back(r.interval());
  }
  return out;
}

}  // namespace

AlgebraicPoint::AlgebraicPoint(std::shared_ptr<const Rur> rur, AlgebraicReal theta)
    : rur_(std::move(rur)), theta_(std::move(theta)) {
  const int n = rur_->nvars;
  if (static_cast<int>(rur_->eliminant_roots.size()) != n)
    throw Error("RUR is missing eliminant root intervals");
  for (int i = 0; i < n; ++i) {
    const UPoly& p = rur_->eliminants[i];
    const UPoly& g = rur_->g[i];
    if (g.degree() <= 0) {
      coords_.emplace_back(g.coeff(0));
      continue;
    }
    const auto& roots = rur_->eliminant_roots[i];
    for (int iter = 0;; ++iter) {
      Interval e = enclosure(g);
      const Interval* hit = nullptr;
      int hits = 0;
      for (const auto& r : roots)
        if (!(r.hi < e.lo || e.hi < r.lo)) {
          hit = &r;
          ++hits;
        }
      if (hits == 0) throw Error("coordinate matches no eliminant root; internal error");
      if (hits == 1) {
        if (hit->lo == hit->hi) coords_.emplace_back(hit->lo);
        else coords_.emplace_back(p, hit->lo, hit->hi);
        break;
      }
      if (iter > 200) throw Undecided("could not separate a coordinate of a solution point");
      theta_.refine_below(theta_.interval().width() / 16);
    }
  }
  for (int i = 0; i < n; ++i) {
    const UPoly& rep = rur_->repeated_factors.empty() ? UPoly() : rur_->repeated_factors[i];
    if (rep.degree() < 1) continue;
    UPoly c = UPoly::gcd(rep, coords_[i].poly());
    if (c.degree() >= 1 &&
        sturm_count_closed(sturm_sequence(c), coords_[i].lo(), coords_[i].hi()) > 0)
      multiple_ = true;
  }
}

AlgebraicPoint AlgebraicPoint::rational(const std::vector<Q>& coords) {
  auto rur = std::make_shared<Rur>();
  rur->nvars = static_cast<int>(coords.size());
  rur->h = UPoly::x();
  for (const auto& c : coords) {
    rur->g.push_back(UPoly::constant(c));
    rur->eliminants.push_back(UPoly(std::vector<Q>{-c, 1}));
    rur->eliminant_roots.push_back({{c, c}});
  }
  return AlgebraicPoint(rur, AlgebraicReal(Q(0)));
}

bool AlgebraicPoint::rational_coordinates(std::vector<Q>& out) {
  out.clear();
  for (auto& c : coords_) {
    Q v;
    if (!c.try_rational(v)) return false;
    out.push_back(v);
  }
  return true;
}

UPoly AlgebraicPoint::mulmod(const UPoly& a, const UPoly& b) const { return (a * b) % rur_->h; }

UPoly AlgebraicPoint::reduce(const Polynomial& p) const {
  if (p.nvars() != rur_->nvars) throw InvalidInput("polynomial and point have different variable counts");
  const UPoly& h = rur_->h;
  auto& cache = *rur_->reductions;
  std::lock_guard<std::mutex> lock(cache.mutex);
  std::function<const UPoly&(const Monomial&)> monomial = [&](const Monomial& m) -> const UPoly& {
    auto it = cache.monomials.find(m);
    if (it != cache.monomials.end()) return it->second;
    UPoly v;
    if (m.is_one()) {
      v = UPoly::constant(Q(1));
    } else {
      int i = 0;
      while (m[i] == 0) ++i;
      if (m[i] < 0) throw InvalidInput("negative exponent at an algebraic point");
      Monomial rest = m;
      rest[i] -= 1;
      v = (monomial(rest) * rur_->g[i]) % h;
    }
    return cache.monomials.emplace(m, std::move(v)).first->second;
  };
  UPoly acc;
  for (const auto& [m, c] : p.terms()) {
    for (int i = 0; i < rur_->nvars; ++i)
      if (m[i] < 0) throw InvalidInput("negative exponent at an algebraic point");
    acc = acc + monomial(m) * UPoly::constant(c);
  }
  return acc;
}

Interval AlgebraicPoint::enclosure(const UPoly& element) {
  if (theta_.is_exact()) {
    Q v = element(theta_.lo());
    return {v, v};
  }
  return element(theta_.interval());
}

int AlgebraicPoint::sign(const UPoly& element_in) {
  UPoly element = element_in % rur_->h;
  if (element.is_zero()) return 0;
  if (element.degree() == 0) return element.coeff(0) > 0 ? 1 : -1;
  if (theta_.is_exact()) {
    Q v = element(theta_.lo());
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  UPoly c = UPoly::gcd(element, rur_->h);
  if (c.degree() >= 1 && sturm_count_closed(sturm_sequence(c), theta_.lo(), theta_.hi()) > 0)
    return 0;
  for (int steps = 0; steps < budget_; steps += 4) {
    Interval e = element(theta_.interval());
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    theta_.refine_below(theta_.interval().width() / 16);
    if (theta_.is_exact()) return sign(element);
  }
  throw Undecided("sign could not be certified within the refinement budget");
}

AlgebraicReal AlgebraicPoint::value(const UPoly& element_in) {
  UPoly element = element_in % rur_->h;
  if (element.degree() <= 0) return AlgebraicReal(element.coeff(0));
  if (theta_.is_exact()) return AlgebraicReal(element(theta_.lo()));
  const std::size_t D = static_cast<std::size_t>(rur_->h.degree());
  auto to_vec = [&](const UPoly& p) {
    QVector v(D, Q(0));
    for (int k = 0; k <= p.degree(); ++k) v[k] = p.coeff(k);
    return v;
  };
  auto& cache = *rur_->reductions;
  std::unique_lock lock(cache.mutex);
  auto it = cache.values.find(element.coeffs());
  if (it == cache.values.end()) {
    lock.unlock();
    auto apply = [&](const QVector& v) { return to_vec(mulmod(UPoly(v), element)); };
    UPoly q = krylov_minpoly(apply, to_vec(UPoly::constant(1)), D).squarefree().primitive();
    auto roots = eliminant_root_intervals(q);
    lock.lock();
    it = cache.values.try_emplace(element.coeffs(), std::move(q), std::move(roots)).first;
  }
  const UPoly q = it->second.first;
  const std::vector<Interval> roots = it->second.second;
  lock.unlock();
  for (int steps = 0; steps < budget_; steps += 4) {
    Interval e = enclosure(element);
    const Interval* hit = nullptr;
    int hits = 0;
    for (const auto& r : roots)
      if (!(r.hi < e.lo || e.hi < r.lo)) {
        hit = &r;
        ++hits;
      }
    if (hits == 1) return hit->lo == hit->hi ? AlgebraicReal(hit->lo) : AlgebraicReal(q, hit->lo, hit->hi);
    theta_.refine_below(theta_.interval().width() / 16);
  }
  throw Undecided("value could not be isolated within the refinement budget");
}

std::vector<Interval> AlgebraicPoint::coordinate_intervals() {
  std::vector<Interval> out;
  for (auto& c : coords_) out.push_back(c.interval());
  return out;
}

void AlgebraicPoint::refine_to(const Q& width) {
  theta_.refine_below(width);
  for (auto& c : coords_) c.refine_below(width);
}

Json algebraic_real_to_json(AlgebraicReal& x, int digits) {
  Json poly = Json::array();
  for (const auto& c : x.poly().coeffs()) poly.push_back(c.get_num().get_str());
  return Json{{"poly", poly},
              {"interval", Json::array({to_dyadic(x.lo()), to_dyadic(x.hi())})},
              {"decimal", x.decimal(digits)}};
}

Json AlgebraicPoint::to_json(int digits) {
  Json coords = Json::array();
  for (auto& c : coords_) coords.push_back(algebraic_real_to_json(c, digits));
  return Json{{"coordinates", coords}, {"multiple", multiple_}};
}

int sign_of(const Polynomial& p, AlgebraicPoint& x) { return x.sign(x.reduce(p)); }

AlgebraicReal value_of(const Polynomial& p, AlgebraicPoint& x) {
  if (p.terms().size() == 1) {
    const auto& [m, c] = *p.terms().begin();
    for (int i = 0; i < x.nvars(); ++i)
      if (c == 1 && m == Monomial::var(i)) return x.coordinate(i);
  }
  return x.value(x.reduce(p));
}

namespace {

Interval imul(const Interval& a, const Interval& b) {
  Q c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace

Interval evaluate_interval(const Polynomial& p, const std::vector<Interval>& x) {
  Interval acc{0, 0};
  for (const auto& [m, c] : p.terms()) {
    Interval t{c, c};
    for (int i = 0; i < p.nvars(); ++i)
      for (int k = 0; k < m[i]; ++k) t = imul(t, x[i]);
    acc = {acc.lo + t.lo, acc.hi + t.hi};
  }
  return acc;
}

int compare_points(AlgebraicPoint& a, AlgebraicPoint& b) {
  for (int i = 0; i < a.nvars(); ++i) {
    int c = AlgebraicReal::compare(a.coordinate(i), b.coordinate(i));
    if (c != 0) return c;
  }
  return 0;
}

std::vector<AlgebraicPoint> solve_zero_dim(const Ideal& ideal, const SolveOptions& options) {
  const int n = ideal.nvars;
  if (n < 1) throw InvalidInput("ideal has no variables");
  Ideal in = ideal;
  in.order = MonomialOrder::DegRevLex;
  Ideal G = groebner(in, options.groebner);
  if (G.gens.size() == 1 && G.gens[0].is_constant()) return {};
  if (G.gens.empty() || !is_zero_dimensional(G))
    throw InvalidInput("ideal is not zero-dimensional");

  QuotientAlgebra A = build_quotient(G);
  auto rur = std::make_shared<Rur>();
  rur->nvars = n;
  std::vector<UPoly> raw(n);
  bool radical = true;
  for (int i = 0; i < n; ++i) {
    raw[i] = minpoly_of(A, unit_direction(n, i));
    UPoly sq = raw[i].squarefree().primitive();
    if (sq.degree() != raw[i].degree()) radical = false;
    rur->eliminants.push_back(sq);
    UPoly rep = UPoly::gcd(raw[i], raw[i].derivative());
    rur->repeated_factors.push_back(rep);
  }
  if (!radical) {
    Ideal J = G;
    for (int i = 0; i < n; ++i) {
      Polynomial e(n);
      const UPoly& sq = rur->eliminants[i];
      for (int k = 0; k <= sq.degree(); ++k) e.add_term(Monomial::var(i, k), sq.coeff(k));
      J.gens.push_back(e);
    }
    G = groebner(J, options.groebner);
    A = build_quotient(G);
  }

  // Separating linear form u = sum k^i x_i.
  const std::size_t D = A.dim();
  std::vector<Q> u;
  UPoly h;
  for (int k = 0; k < 200 && u.empty(); ++k) {
    std::vector<Q> cand(n, Q(0));
    if (k < n) cand[k] = 1;
    else {
      Z c = 1;
      for (int i = 0; i < n; ++i, c *= (k - n + 2)) cand[i] = Q(c);
    }
    UPoly m = minpoly_of(A, cand);
    if (static_cast<std::size_t>(m.degree()) == D) {
      u = cand;
      h = m;
    }
  }
  if (u.empty()) throw Undecided("no separating linear form found");

  Echelon ech(D);
  QVector v = A.unit();
  for (std::size_t k = 0; k < D; ++k) {
    if (ech.add(v)) throw Error("Krylov basis is degenerate; internal error");
    v = A.apply(u, v);
  }
  rur->h = h.primitive();
  for (int i = 0; i < n; ++i) {
    QVector xi = A.apply(unit_direction(n, i), A.unit());
    auto coeffs = ech.express(xi);
    if (!coeffs) throw Error("coordinate is not in the Krylov span; internal error");
    rur->g.push_back(UPoly(*coeffs));
  }

  for (const auto& p : rur->eliminants) rur->eliminant_roots.push_back(eliminant_root_intervals(p));

  std::vector<AlgebraicPoint> points;
  for (const auto& iv : isolate_real_roots(rur->h)) {
    points.emplace_back(rur, AlgebraicReal(rur->h, iv.lo, iv.hi));
    points.back().set_refinement_budget(options.max_refinements);
  }
  std::sort(points.begin(), points.end(),
            [](AlgebraicPoint& a, AlgebraicPoint& b) { return compare_points(a, b) < 0; });
  return points;
}

}  // namespace invtrace
