#include "invtrace/charring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <nlohmann/json.hpp>
#include <unordered_map>
#include <unordered_set>

#include "invtrace/errors.hpp"

namespace invtrace {

namespace {

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : w) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Infeasible("character coefficient overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Infeasible("character coefficient overflow");
  return r;
}

long long narrow(__int128 x) {
  if (x > static_cast<__int128>(INT64_MAX) || x < static_cast<__int128>(INT64_MIN))
    throw Infeasible("character coefficient overflow");
  return static_cast<long long>(x);
}

void make_dominant(const IntMatrix& cartan, Weight& w) {
  const int r = static_cast<int>(w.size());
  for (;;) {
    int i = 0;
    while (i < r && w[i] >= 0) ++i;
    if (i == r) return;
    int c = w[i];
    const auto& row = cartan[i];
    for (int j = 0; j < r; ++j) w[j] -= c * row[j];
  }
}

void check_same_datum(const CharacterElement& a, const CharacterElement& b) {
  if (a.datum() != b.datum() && a.datum()->name() != b.datum()->name())
    throw InvalidInput("characters belong to different root data");
}

void require_dominant(const RootDatum& d, const Weight& w) {
  if (static_cast<int>(w.size()) != d.rank() || !RootDatum::is_dominant(w))
    throw InvalidInput("weight is not dominant for " + d.name());
}

// a * (fully expanded b).
CharacterElement multiply_expanded(const CharacterElement& a, const std::vector<WeightTerm>& b) {
  const auto& d = *a.datum();
  std::unordered_map<Weight, __int128, WeightHash> acc;
  Weight w(d.rank());
  for (const auto& [lambda, ca] : a.terms()) {
    __int128 scale = static_cast<__int128>(ca) * static_cast<__int128>(d.orbit_size(lambda));
    for (const auto& [mu, cb] : b) {
      for (int i = 0; i < d.rank(); ++i) w[i] = lambda[i] + mu[i];
      make_dominant(d.cartan(), w);
      acc[w] += scale * cb;
    }
  }
  CharacterElement out(a.datum());
  for (auto& [nu, total] : acc) {
    if (total == 0) continue;
    __int128 o = d.orbit_size(nu);
    if (total % o != 0) throw Error("product is not W-invariant; internal error");
    out.add(nu, narrow(total / o));
  }
  return out;
}

const Weight& max_height_weight(const RootDatum& d, const CharacterElement::Terms& terms) {
  const Weight* best = nullptr;
  long long best_h = 0;
  for (const auto& [w, c] : terms) {
    long long h = d.scaled_height(w);
    if (!best || h > best_h || (h == best_h && *best < w)) {
      best = &w;
      best_h = h;
    }
  }
  return *best;
}

std::mutex irreducible_mutex;
std::map<std::pair<std::string, Weight>, CharacterElement::Terms> irreducible_cache;

// Dominant weights of V(lambda): closure under subtracting positive roots
// while staying dominant.
std::vector<Weight> dominant_weights_below(const RootDatum& d, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::vector<Weight> queue{lambda};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Weight mu = queue[q];
    for (const auto& alpha : d.positive_roots()) {
      Weight nu(d.rank());
      for (int i = 0; i < d.rank(); ++i) nu[i] = mu[i] - alpha[i];
      if (!RootDatum::is_dominant(nu)) continue;
      if (seen.insert(nu).second) queue.push_back(nu);
    }
  }
  return queue;
}

}  // namespace

CharacterElement::CharacterElement(DatumPtr datum, Terms terms) : datum_(std::move(datum)) {
  for (auto& [w, c] : terms) add(w, c);
}

long long CharacterElement::coeff(const Weight& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

void CharacterElement::add(const Weight& lambda, long long c) {
  if (c == 0) return;
  require_dominant(*datum_, lambda);
  auto [it, inserted] = terms_.emplace(lambda, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Z CharacterElement::dimension() const {
  Z total = 0;
  for (const auto& [w, c] : terms_) {
    Z o;
    mpz_set_ui(o.get_mpz_t(), datum_->orbit_size(w));
    total += Z(static_cast<long>(c)) * o;
  }
  return total;
}

std::uint64_t CharacterElement::expanded_size() const {
  std::uint64_t n = 0;
  for (const auto& [w, c] : terms_) n += datum_->orbit_size(w);
  return n;
}

CharacterElement& CharacterElement::operator+=(const CharacterElement& o) {
  check_same_datum(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

CharacterElement& CharacterElement::operator-=(const CharacterElement& o) {
  check_same_datum(*this, o);
  for (const auto& [w, c] : o.terms_) add(w, checked_mul(c, -1));
  return *this;
}

CharacterElement& CharacterElement::operator*=(long long s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c = checked_mul(c, s);
  return *this;
}

std::string CharacterElement::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "invtrace.character/1";
  j["datum"] = datum_->name();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : terms_) terms.push_back({w, c});
  j["terms"] = terms;
  return j.dump();
}

std::vector<WeightTerm> expand_orbits(const CharacterElement& c, std::uint64_t cap) {
  std::uint64_t n = c.expanded_size();
  if (n > cap)
    throw Infeasible("orbit expansion refused: " + std::to_string(n) + " weights exceed the cap " +
                     std::to_string(cap));
  std::vector<WeightTerm> out;
  out.reserve(n);
  for (const auto& [w, m] : c.terms())
    for (auto& x : c.datum()->orbit(w)) out.push_back({std::move(x), m});
  return out;
}

CharacterElement trivial_character(const DatumPtr& datum) {
  CharacterElement c(datum);
  c.add(Weight(datum->rank(), 0), 1);
  return c;
}

CharacterElement orbit_sum(const DatumPtr& datum, const Weight& lambda) {
  CharacterElement c(datum);
  c.add(lambda, 1);
  return c;
}

Q weyl_dimension(const RootDatum& d, const Weight& lambda) {
  Weight lr(d.rank());
  for (int i = 0; i < d.rank(); ++i) lr[i] = lambda[i] + 1;
  Q dim = 1;
  for (const auto& alpha : d.positive_roots()) dim *= frac(Z(static_cast<long>(d.A(lr, alpha))), Z(static_cast<long>(d.A(d.rho(), alpha))));
  return dim;
}

CharacterElement irreducible_character(const DatumPtr& datum, const Weight& lambda) {
  const auto& d = *datum;
  require_dominant(d, lambda);
  auto key = std::make_pair(d.name(), lambda);
  {
    std::lock_guard<std::mutex> lock(irreducible_mutex);
    auto it = irreducible_cache.find(key);
    if (it != irreducible_cache.end()) return CharacterElement(datum, it->second);
  }

  // Freudenthal: ((lambda+rho)^2 - (mu+rho)^2) m(mu)
  //   = 2 sum_{alpha>0} sum_{k>=1} (mu + k alpha, alpha) m(mu + k alpha).
  std::vector<Weight> weights = dominant_weights_below(d, lambda);
  std::sort(weights.begin(), weights.end(), [&](const Weight& a, const Weight& b) {
    long long ha = d.scaled_height(a), hb = d.scaled_height(b);
    return ha != hb ? ha > hb : a > b;
  });
  std::unordered_map<Weight, long long, WeightHash> mult;
  Weight lr(d.rank());
  for (int i = 0; i < d.rank(); ++i) lr[i] = lambda[i] + 1;
  const long long top = d.A(lr, lr);
  std::vector<long long> alpha_sq;
  for (const auto& alpha : d.positive_roots()) alpha_sq.push_back(d.A(alpha, alpha));

  mult[lambda] = 1;
  Weight probe(d.rank());
  for (std::size_t q = 1; q < weights.size(); ++q) {
    const Weight& mu = weights[q];
    __int128 num = 0;
    for (std::size_t a = 0; a < d.positive_roots().size(); ++a) {
      const auto& alpha = d.positive_roots()[a];
      long long base = d.A(mu, alpha);
      for (long long k = 1;; ++k) {
        for (int i = 0; i < d.rank(); ++i) probe[i] = mu[i] + static_cast<int>(k) * alpha[i];
        make_dominant(d.cartan(), probe);
        auto it = mult.find(probe);
        if (it == mult.end()) break;
        num += static_cast<__int128>(it->second) * (base + k * alpha_sq[a]);
      }
    }
    Weight mr(d.rank());
    for (int i = 0; i < d.rank(); ++i) mr[i] = mu[i] + 1;
    long long den = top - d.A(mr, mr);
    if (den <= 0 || (2 * num) % den != 0) throw Error("Freudenthal recursion failed; internal error");
    long long m = narrow(2 * num / den);
    if (m != 0) mult[mu] = m;
  }

  CharacterElement out(datum);
  for (const auto& [w, m] : mult) out.add(w, m);
  Q expected = weyl_dimension(d, lambda);
  if (Q(out.dimension()) != expected)
    throw Error("Freudenthal dimension disagrees with the Weyl dimension formula");
  std::lock_guard<std::mutex> lock(irreducible_mutex);
  irreducible_cache.emplace(key, out.terms());
  return out;
}

CharacterElement fundamental_character(const DatumPtr& datum, int i) {
  if (i < 0 || i >= datum->rank()) throw InvalidInput("fundamental index out of range");
  return irreducible_character(datum, datum->fundamental_weight(i));
}

CharacterElement adjoint_character(const DatumPtr& datum) {
  CharacterElement c(datum);
  c.add(datum->highest_root(), 1);
  if (!datum->simply_laced()) c.add(datum->highest_short_root(), 1);
  c.add(Weight(datum->rank(), 0), datum->rank());
  return c;
}

CharacterElement multiply(const CharacterElement& a, const CharacterElement& b, std::uint64_t cap) {
  check_same_datum(a, b);
  if (a.is_zero() || b.is_zero()) return CharacterElement(a.datum());
  bool expand_b = b.expanded_size() <= a.expanded_size();
  const CharacterElement& dom = expand_b ? a : b;
  const CharacterElement& full = expand_b ? b : a;
  return multiply_expanded(dom, expand_orbits(full, cap));
}

const CharacterElement& MonomialCache::monomial(const Monomial& m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  const int r = datum_->rank();
  if (m.is_one()) return cache_.emplace(m, trivial_character(datum_)).first->second;

  int pick = -1;
  std::uint64_t best = 0;
  for (int k = 0; k < r; ++k) {
    if (m[k] < 0) throw InvalidInput("negative exponent in fundamental monomial");
    if (m[k] == 0) continue;
    auto fe = fundamental_expansions_.find(k);
    std::uint64_t size = fe != fundamental_expansions_.end()
                             ? fe->second.size()
                             : fundamental_character(datum_, k).expanded_size();
    if (pick < 0 || size < best) {
      pick = k;
      best = size;
    }
  }
  auto fe = fundamental_expansions_.find(pick);
  if (fe == fundamental_expansions_.end())
    fe = fundamental_expansions_
             .emplace(pick, expand_orbits(fundamental_character(datum_, pick)))
             .first;
  Monomial prev = m;
  prev[pick] -= 1;
  const CharacterElement& base = monomial(prev);
  CharacterElement product = multiply_expanded(base, fe->second);
  return cache_.emplace(m, std::move(product)).first->second;
}

Polynomial to_fundamental_polynomial(const CharacterElement& c, MonomialCache* cache) {
  const auto& d = *c.datum();
  std::unique_ptr<MonomialCache> own;
  if (!cache) {
    own = std::make_unique<MonomialCache>(c.datum());
    cache = own.get();
  }
  Polynomial out(d.rank());
  CharacterElement rest = c;
  while (!rest.is_zero()) {
    Weight lambda = max_height_weight(d, rest.terms());
    long long coef = rest.coeff(lambda);
    Monomial m;
    for (int i = 0; i < d.rank(); ++i) m[i] = lambda[i];
    rest -= cache->monomial(m) * coef;
    out.add_term(m, Q(static_cast<long>(coef)));
  }
  return out;
}

CharacterElement from_fundamental_polynomial(const DatumPtr& datum, const Polynomial& p,
                                             MonomialCache* cache) {
  if (p.nvars() != datum->rank()) throw InvalidInput("polynomial has the wrong number of variables");
  std::unique_ptr<MonomialCache> own;
  if (!cache) {
    own = std::make_unique<MonomialCache>(datum);
    cache = own.get();
  }
  CharacterElement out(datum);
  for (const auto& [m, q] : p.terms()) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p())
      throw InvalidInput("only integer polynomials expand to characters");
    out += cache->monomial(m) * q.get_num().get_si();
  }
  return out;
}

std::map<Weight, long long> decompose_irreducibles(const CharacterElement& c) {
  const auto& d = *c.datum();
  std::map<Weight, long long> out;
  CharacterElement rest = c;
  while (!rest.is_zero()) {
    Weight lambda = max_height_weight(d, rest.terms());
    long long coef = rest.coeff(lambda);
    rest -= irreducible_character(c.datum(), lambda) * coef;
    out[lambda] = coef;
  }
  return out;
}

CharacterElement compose_irreducibles(const DatumPtr& datum,
                                      const std::map<Weight, long long>& coeffs) {
  CharacterElement out(datum);
  for (const auto& [w, c] : coeffs) out += irreducible_character(datum, w) * c;
  return out;
}

namespace {

// Exponent map mu -> m <mu, v> mod m, as integers per fundamental weight
// over a common denominator.
struct TorsionPairing {
  std::vector<Z> num;
  Z den;
  int m;

  TorsionPairing(const RootDatum& d, const std::vector<Q>& v, int order) : m(order) {
    if (static_cast<int>(v.size()) != d.rank()) throw InvalidInput("cocharacter has the wrong length");
    if (order < 1) throw InvalidInput("torsion order must be positive");
    std::vector<Q> q(d.rank());
    den = 1;
    for (int j = 0; j < d.rank(); ++j) {
      Q s = 0;
      for (int i = 0; i < d.rank(); ++i) s += v[i] * d.cartan_inverse()[j][i];
      q[j] = s * order;
      q[j].canonicalize();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q[j].get_den_mpz_t());
    }
    for (int j = 0; j < d.rank(); ++j) num.push_back(Z(q[j] * den));
  }

  int exponent(const Weight& mu) const {
    Z e = 0;
    for (std::size_t j = 0; j < num.size(); ++j) e += num[j] * mu[j];
    if (e % den != 0) throw InvalidInput("torsion point does not pair integrally with the weights");
    e /= den;
    Z r = e % m;
    if (r < 0) r += m;
    return static_cast<int>(r.get_si());
  }
};

Cyclotomic evaluate_expanded(const std::vector<WeightTerm>& weights, const TorsionPairing& pairing) {
  std::vector<Z> counts(pairing.m, 0);
  for (const auto& [mu, mult] : weights) counts[pairing.exponent(mu)] += static_cast<long>(mult);
  return Cyclotomic::from_power_counts(pairing.m, counts);
}

}  // namespace

Cyclotomic evaluate_at_torsion(const CharacterElement& c, const std::vector<Q>& v, int m,
                               std::uint64_t cap) {
  TorsionPairing pairing(*c.datum(), v, m);
  return evaluate_expanded(expand_orbits(c, cap), pairing);
}

std::vector<CornerClass> corners(const DatumPtr& datum, std::optional<std::vector<int>> only,
                                 std::uint64_t cap) {
  const int r = datum->rank();
  std::vector<int> which;
  if (only) which = *only;
  else
    for (int j = 0; j < r; ++j) which.push_back(j);
  auto classes = corner_classes(*datum);
  for (auto& cls : classes) cls.values.assign(r, std::nullopt);
  for (int j : which) {
    if (j < 0 || j >= r) throw InvalidInput("fundamental index out of range");
    CharacterElement f = fundamental_character(datum, j);
    if (f.expanded_size() > cap) continue;
    auto weights = expand_orbits(f, cap);
    for (auto& cls : classes)
      cls.values[j] = evaluate_expanded(weights, TorsionPairing(*datum, cls.cocharacter, cls.order_bound));
  }
  return classes;
}

Polynomial chebyshev_rewrite(const Polynomial& laurent) {
  const int n = laurent.nvars();
  // V_k(t) = s^k + s^-k: V_0 = 2, V_1 = t, V_k = t V_{k-1} - V_{k-2}.
  std::vector<UPoly> V{UPoly::constant(2), UPoly::x()};
  Polynomial cur = laurent;
  for (int var = 0; var < n; ++var) {
    Polynomial next(n);
    for (const auto& [m, c] : cur.terms()) {
      int k = m[var];
      Monomial mirror = m;
      mirror[var] = -k;
      if (cur.coeff(mirror) != c)
        throw InvalidInput("Laurent polynomial is not symmetric under s -> 1/s");
      if (k < 0) continue;
      if (k == 0) {
        next.add_term(m, c);
        continue;
      }
      while (static_cast<int>(V.size()) <= k) V.push_back(UPoly::x() * V.back() - V[V.size() - 2]);
      const auto& vk = V[k];
      for (int p = 0; p <= vk.degree(); ++p) {
        if (vk.coeff(p) == 0) continue;
        Monomial t = m;
        t[var] = p;
        next.add_term(t, c * vk.coeff(p));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Polynomial restrict_to_A1n(const CharacterElement& c, const std::vector<Weight>& roots,
                           std::uint64_t cap) {
  const auto& d = *c.datum();
  const int n = static_cast<int>(roots.size());
  if (n == 0 || n > kMaxVars) throw InvalidInput("need between 1 and 12 roots");
  std::set<Weight> all(d.positive_roots().begin(), d.positive_roots().end());
  for (const auto& beta : roots) {
    Weight neg(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) neg[i] = -beta[i];
    if (beta.size() != static_cast<std::size_t>(d.rank()) || (!all.count(beta) && !all.count(neg)))
      throw InvalidInput("restriction vector is not a root of " + d.name());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.A(roots[i], roots[j]) != 0) throw InvalidInput("restriction roots are not orthogonal");

  Polynomial laurent(n);
  for (const auto& [mu, mult] : expand_orbits(c, cap)) {
    Monomial e;
    for (int i = 0; i < n; ++i) e[i] = d.coroot_pairing(mu, roots[i]);
    laurent.add_term(e, Q(static_cast<long>(mult)));
  }
  return chebyshev_rewrite(laurent);
}

std::vector<Weight> orthogonal_roots(const RootDatum& d) {
  const auto& roots = d.positive_roots();
  const auto& is_long = d.positive_root_is_long();
  const int total = static_cast<int>(roots.size());
  std::vector<int> order(total);
  for (int i = 0; i < total; ++i) order[i] = i;
  // Positive roots are sorted by height; try long roots first, highest first.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (is_long[a] != is_long[b]) return static_cast<bool>(is_long[a]);
    return a > b;
  });
  std::vector<std::vector<char>> orth(total, std::vector<char>(total));
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) orth[a][b] = d.A(roots[a], roots[b]) == 0;

  const int target = d.rank();
  std::vector<int> chosen, best;
  long long budget = 2000000;
  std::function<bool(int)> dfs = [&](int from) -> bool {
    if (chosen.size() > best.size()) best = chosen;
    if (static_cast<int>(chosen.size()) == target) return true;
    if (--budget < 0) return false;
    if (static_cast<int>(chosen.size() + (order.size() - from)) <= static_cast<int>(best.size()))
      return false;
    for (int p = from; p < total; ++p) {
      int cand = order[p];
      bool ok = true;
      for (int c : chosen)
        if (!orth[c][cand]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(cand);
      if (dfs(p + 1)) return true;
      chosen.pop_back();
      if (budget < 0) return false;
    }
    return false;
  };
  dfs(0);
  std::sort(best.begin(), best.end(), [&](int a, int b) {
    if (is_long[a] != is_long[b]) return !is_long[a];
    return a < b;
  });
  std::vector<Weight> out;
  for (int i : best) out.push_back(roots[i]);
  return out;
}

}  // namespace invtrace
