#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invtrace/cyclotomic.hpp"
#include "invtrace/polynomial.hpp"
#include "invtrace/rootdata.hpp"

namespace invtrace {

constexpr std::uint64_t kDefaultOrbitCap = 10000000;

// W-invariant element of Z[P]: coefficient of the orbit sum m_lambda for each
// dominant lambda. Weight multiplicities of a character are exactly these
// coefficients.
class CharacterElement {
 public:
  using Terms = std::map<Weight, long long>;

  explicit CharacterElement(DatumPtr datum) : datum_(std::move(datum)) {}
  CharacterElement(DatumPtr datum, Terms terms);

  const DatumPtr& datum() const { return datum_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const Weight& lambda) const;
  void add(const Weight& dominant_lambda, long long c);

  // Sum of coefficient times orbit size.
  Z dimension() const;
  std::uint64_t expanded_size() const;

  CharacterElement& operator+=(const CharacterElement& o);
  CharacterElement& operator-=(const CharacterElement& o);
  CharacterElement& operator*=(long long c);
  friend CharacterElement operator+(CharacterElement a, const CharacterElement& b) { return a += b; }
  friend CharacterElement operator-(CharacterElement a, const CharacterElement& b) { return a -= b; }
  friend CharacterElement operator*(CharacterElement a, long long c) { return a *= c; }
  friend bool operator==(const CharacterElement& a, const CharacterElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_json() const;

 private:
  DatumPtr datum_;
  Terms terms_;
};

struct WeightTerm {
  Weight weight;
  long long mult;
};

// Every weight with its coefficient; refuses above `cap` weights.
std::vector<WeightTerm> expand_orbits(const CharacterElement& c,
                                      std::uint64_t cap = kDefaultOrbitCap);

CharacterElement trivial_character(const DatumPtr& datum);
CharacterElement orbit_sum(const DatumPtr& datum, const Weight& dominant_lambda);
CharacterElement irreducible_character(const DatumPtr& datum, const Weight& lambda);
CharacterElement fundamental_character(const DatumPtr& datum, int i);
// Built directly from the root list: m_theta (+ m_theta_short) + r * m_0.
CharacterElement adjoint_character(const DatumPtr& datum);
Q weyl_dimension(const RootDatum& datum, const Weight& lambda);

CharacterElement multiply(const CharacterElement& a, const CharacterElement& b,
                          std::uint64_t cap = kDefaultOrbitCap);

// Products of fundamental characters, memoized per datum. Not thread-safe;
// use one per task.
class MonomialCache {
 public:
  explicit MonomialCache(DatumPtr datum) : datum_(std::move(datum)) {}
  const CharacterElement& monomial(const Monomial& m);
  const DatumPtr& datum() const { return datum_; }

 private:
  DatumPtr datum_;
  std::map<Monomial, CharacterElement> cache_;
  std::map<int, std::vector<WeightTerm>> fundamental_expansions_;
};

Polynomial to_fundamental_polynomial(const CharacterElement& c, MonomialCache* cache = nullptr);
CharacterElement from_fundamental_polynomial(const DatumPtr& datum, const Polynomial& p,
                                             MonomialCache* cache = nullptr);

// Coefficients of irreducible characters, by repeated subtraction of the
// highest term.
std::map<Weight, long long> decompose_irreducibles(const CharacterElement& c);
CharacterElement compose_irreducibles(const DatumPtr& datum,
                                      const std::map<Weight, long long>& coeffs);

// sum over weights mu of mult(mu) * zeta_m^(m <mu, v>), v in the
// fundamental-coweight basis.
Cyclotomic evaluate_at_torsion(const CharacterElement& c, const std::vector<Q>& v, int m,
                               std::uint64_t cap = kDefaultOrbitCap);

// Corner classes with the fundamental character values filled in. Indices in
// `only` (zero-based) restrict which characters are evaluated; characters
// whose expansion exceeds the cap are left empty.
std::vector<CornerClass> corners(const DatumPtr& datum, std::optional<std::vector<int>> only = {},
                                 std::uint64_t cap = kDefaultOrbitCap);

// Restriction to the torus of prod SL2 attached to pairwise A-orthogonal roots,
// rewritten in t_i = s_i + 1/s_i. Integer coefficients.
Polynomial restrict_to_A1n(const CharacterElement& c, const std::vector<Weight>& roots,
                           std::uint64_t cap = kDefaultOrbitCap);

// Largest set (at most rank) of pairwise orthogonal positive roots found by
// backtracking with long roots tried first; ordered short roots first, then
// by height.
std::vector<Weight> orthogonal_roots(const RootDatum& datum);

// Laurent polynomial in s_1..s_n, symmetric under each s_i -> 1/s_i,
// rewritten in t_i = s_i + 1/s_i.
Polynomial chebyshev_rewrite(const Polynomial& laurent);

}  // namespace invtrace
