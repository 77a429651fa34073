#include <gtest/gtest.h>

#include <random>

#include "invtrace/charring.hpp"

using namespace invtrace;

namespace {

Polynomial random_fundamental_polynomial(int rank, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), var(0, rank - 1), len(0, 2), terms(1, 3);
  Polynomial p(rank);
  int n = terms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    int l = len(rng);
    for (int j = 0; j < l; ++j) m[var(rng)] += 1;
    p.add_term(m, Q(coef(rng)));
  }
  return p;
}

}  // namespace

TEST(CharRing, RoundTripThroughFundamentalPolynomials) {
  std::mt19937 rng(11);
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "C3", "B4", "F4"}) {
    SCOPED_TRACE(name);
    auto d = build_root_datum(name);
    MonomialCache cache(d);
    for (int trial = 0; trial < 6; ++trial) {
      Polynomial p = random_fundamental_polynomial(d->rank(), rng);
      CharacterElement c = from_fundamental_polynomial(d, p, &cache);
      EXPECT_EQ(to_fundamental_polynomial(c, &cache), p) << p.to_string();
    }
  }
}

TEST(CharRing, ProductOfFundamentalsRoundTrip) {
  auto d = build_root_datum("B3");
  auto c = multiply(multiply(fundamental_character(d, 0), fundamental_character(d, 1)),
                    fundamental_character(d, 2));
  Polynomial expect = Polynomial::monomial(3, Monomial::var(0) * Monomial::var(1) * Monomial::var(2), Q(1));
  EXPECT_EQ(to_fundamental_polynomial(c), expect);
}

TEST(CharRing, DimensionsMatchWeylFormula) {
  for (const char* name : {"A2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    SCOPED_TRACE(name);
    auto d = build_root_datum(name);
    EXPECT_EQ(adjoint_character(d), irreducible_character(d, d->highest_root()));
    EXPECT_EQ(adjoint_character(d).dimension(), Z(d->dimension()));
    for (int i = 0; i < d->rank(); ++i) {
      auto w = d->fundamental_weight(i);
      EXPECT_EQ(Q(irreducible_character(d, w).dimension()), weyl_dimension(*d, w));
    }
  }
}

TEST(CharRing, ProductDimensionIsMultiplicative) {
  auto d = build_root_datum("G2");
  Weight a{1, 1}, b{2, 0};
  auto p = multiply(irreducible_character(d, a), irreducible_character(d, b));
  EXPECT_EQ(p.dimension(), irreducible_character(d, a).dimension() * irreducible_character(d, b).dimension());
}

TEST(CharRing, DecomposeComposeRoundTrip) {
  auto d = build_root_datum("A2");
  auto c = multiply(fundamental_character(d, 0), fundamental_character(d, 1));
  auto coeffs = decompose_irreducibles(c);
  // omega1 x omega2 = adjoint + trivial.
  EXPECT_EQ(coeffs.size(), 2u);
  EXPECT_EQ(coeffs.at(Weight{1, 1}), 1);
  EXPECT_EQ(coeffs.at(Weight{0, 0}), 1);
  EXPECT_EQ(compose_irreducibles(d, coeffs), c);
}

TEST(CharRing, TorsionEvaluation) {
  auto d = build_root_datum("A1");
  // f1 at exp(2 pi i omega^vee / 2) = diag(i, -i) is 0.
  auto v = evaluate_at_torsion(fundamental_character(d, 0), {Q(1, 2)}, 4);
  EXPECT_TRUE(v.is_zero());
  auto adj = evaluate_at_torsion(adjoint_character(d), {Q(1, 2)}, 4);
  EXPECT_EQ(adj.rational(), Q(-1));
}

TEST(CharRing, CornersStartWithDimensions) {
  for (const char* name : {"A2", "B2", "G2", "C3"}) {
    auto d = build_root_datum(name);
    auto cs = corners(d);
    for (int i = 0; i < d->rank(); ++i)
      EXPECT_EQ(cs[0].values[i]->rational(), Q(fundamental_character(d, i).dimension()));
  }
}

TEST(CharRing, G2CornerValues) {
  auto cs = corners(build_root_datum("G2"));
  std::set<std::pair<Q, Q>> got;
  for (const auto& c : cs) got.insert({c.values[0]->rational(), c.values[1]->rational()});
  EXPECT_EQ(got, (std::set<std::pair<Q, Q>>{{7, 14}, {-2, 5}, {-1, -2}}));
}

TEST(CharRing, RestrictionToA1nAtIdentityIsDimension) {
  for (const char* name : {"G2", "F4", "B3", "C3"}) {
    SCOPED_TRACE(name);
    auto d = build_root_datum(name);
    auto roots = orthogonal_roots(*d);
    auto f = restrict_to_A1n(adjoint_character(d), roots);
    std::vector<Q> twos(f.nvars(), Q(2));
    EXPECT_EQ(f.evaluate(twos), Q(d->dimension()));
  }
}
