#include <gtest/gtest.h>

#include "invtrace/compactcert.hpp"

using namespace invtrace;

namespace {

Polynomial poly(const std::string& s, int n) { return parse_polynomial(s, n, "f"); }

const DerivationMatrix& matrix(const std::string& name) {
  static std::map<std::string, DerivationMatrix> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, derivation_matrix(build_root_datum(name))).first;
  return it->second;
}

bool compact_at(const std::string& name, std::vector<Q> x) {
  auto p = AlgebraicPoint::rational(x);
  return is_compact_point(matrix(name).sigma_matrix(), p);
}

}  // namespace

TEST(CompactCert, CriticalIdealOfFundamentalIsColumn) {
  const auto& m = matrix("G2");
  for (int i = 0; i < 2; ++i) {
    auto I = critical_ideal(m, Polynomial::variable(2, i));
    ASSERT_EQ(I.gens.size(), 2u);
    for (int k = 0; k < 2; ++k) EXPECT_EQ(I.gens[k], m.M[k][i]);
  }
  auto zero = critical_ideal(m, Polynomial::constant(2, Q(5)));
  for (const auto& g : zero.gens) EXPECT_TRUE(g.is_zero());
}

TEST(CompactCert, G2ShortRootCriticalLocusIsCorners) {
  auto pts = solve_zero_dim(critical_ideal(matrix("G2"), Polynomial::variable(2, 0)));
  std::set<std::vector<Q>> got;
  for (auto& p : pts) {
    std::vector<Q> c;
    ASSERT_TRUE(p.rational_coordinates(c));
    got.insert(c);
  }
  EXPECT_EQ(got, (std::set<std::vector<Q>>{{7, 14}, {-2, 5}, {-1, -2}}));
}

TEST(CompactCert, G2AdjointCriticalLocus) {
  auto pts = solve_zero_dim(critical_ideal(matrix("G2"), Polynomial::variable(2, 1)));
  std::set<std::vector<Q>> got;
  for (auto& p : pts) {
    std::vector<Q> c;
    ASSERT_TRUE(p.rational_coordinates(c));
    got.insert(c);
  }
  EXPECT_EQ(got, (std::set<std::vector<Q>>{{7, 14}, {-2, 5}, {-1, -2}, {Q(7, 9), Q(10, 27)}}));
}

TEST(CompactCert, SigmaReality) {
  auto a = AlgebraicPoint::rational({3, 3}), b = AlgebraicPoint::rational({3, 4});
  EXPECT_TRUE(sigma_reality(matrix("A2"), a));
  EXPECT_FALSE(sigma_reality(matrix("A2"), b));
  auto g = AlgebraicPoint::rational({Q(1, 3), Q(-5)});
  EXPECT_TRUE(sigma_reality(matrix("G2"), g));
}

TEST(CompactCert, A1Region) {
  for (int t : {-2, -1, 0, 1, 2}) EXPECT_TRUE(compact_at("A1", {Q(t)})) << t;
  EXPECT_FALSE(compact_at("A1", {Q(-3)}));
  EXPECT_FALSE(compact_at("A1", {Q(5, 2)}));
  EXPECT_FALSE(compact_at("A1", {Q(201, 100)}));
}

TEST(CompactCert, G2Points) {
  EXPECT_TRUE(compact_at("G2", {Q(7, 9), Q(10, 27)}));
  EXPECT_TRUE(compact_at("G2", {7, 14}));
  // f1 = 10 exceeds the bound |f1| <= 7 on the compact form.
  EXPECT_FALSE(compact_at("G2", {10, 0}));
}

TEST(CompactCert, PrincipalMinorAtRationalPoint) {
  const auto& m = matrix("G2");
  auto p = AlgebraicPoint::rational({Q(7, 9), Q(10, 27)});
  auto minor = principal_minor(m.sigma_matrix(), {0}, p);
  EXPECT_EQ(minor.coeff(0), Q(-3200, 81));
  EXPECT_TRUE(principal_minor(m.sigma_matrix(), {0, 1}, p).is_zero());
}

TEST(CompactCert, TrueCharacters) {
  auto g2 = build_root_datum("G2");
  EXPECT_TRUE(is_true_character(g2, poly("f1", 2)));
  EXPECT_TRUE(is_true_character(g2, poly("f1^2 + 2*f2", 2)));
  EXPECT_FALSE(is_true_character(g2, poly("f1 - f2", 2)));
  EXPECT_FALSE(is_true_character(g2, poly("-f2", 2)));
}

TEST(CompactCert, G2Extrema) {
  auto g2 = build_root_datum("G2");
  auto adj = extremum(g2, poly("f2", 2));
  EXPECT_EQ(AlgebraicReal::compare(adj.minimum.value, Q(-2)), 0);
  EXPECT_TRUE(adj.minimum.witness.corner);
  EXPECT_EQ(AlgebraicReal::compare(adj.maximum.value, Q(14)), 0);
  ASSERT_EQ(adj.points.size(), 1u);
  EXPECT_EQ(adj.points[0].inclusion, Inclusion::OutsideWindow);

  auto short_root = extremum(g2, poly("f1", 2));
  EXPECT_EQ(AlgebraicReal::compare(short_root.minimum.value, Q(-2)), 0);
  EXPECT_EQ(AlgebraicReal::compare(short_root.maximum.value, Q(7)), 0);
}

TEST(CompactCert, CertifyAllMarksExtraPointCompact) {
  ExtremumOptions o;
  o.certify_all = true;
  auto r = extremum(build_root_datum("G2"), poly("f2", 2), o);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(r.points[0].inclusion, Inclusion::OutsideWindow);
  ASSERT_TRUE(r.points[0].compact.has_value());
  EXPECT_TRUE(*r.points[0].compact);
  EXPECT_EQ(AlgebraicReal::compare(r.minimum.value, Q(-2)), 0);
}

TEST(CompactCert, NonCharacterObjectiveDisablesWindow) {
  auto r = extremum(build_root_datum("G2"), poly("-f2", 2));
  EXPECT_FALSE(r.window_bound.has_value());
  EXPECT_EQ(AlgebraicReal::compare(r.minimum.value, Q(-14)), 0);
  // -10/27 at the extra point is certified but not extreme.
  EXPECT_EQ(AlgebraicReal::compare(r.maximum.value, Q(2)), 0);
  EXPECT_EQ(r.points[0].inclusion, Inclusion::Certified);
}

TEST(CompactCert, AdjointMinimumMatchesWeylGroup) {
  for (const char* name : {"A2", "B2", "G2", "C3"}) {
    SCOPED_TRACE(name);
    auto d = build_root_datum(name);
    auto r = extremum(d, to_fundamental_polynomial(adjoint_character(d)));
    EXPECT_EQ(AlgebraicReal::compare(r.minimum.value, Q(static_cast<long>(weyl_min_trace(*d)))), 0);
    EXPECT_EQ(AlgebraicReal::compare(r.maximum.value, Q(d->dimension())), 0);
  }
}

TEST(CompactCert, FundamentalMaximumIsDimension) {
  for (const char* name : {"A2", "B2"}) {
    auto d = build_root_datum(name);
    for (int i = 0; i < d->rank(); ++i) {
      auto r = extremum(d, Polynomial::variable(d->rank(), i));
      EXPECT_EQ(AlgebraicReal::compare(r.maximum.value, Q(fundamental_character(d, i).dimension())), 0);
      EXPECT_TRUE(r.maximum.witness.corner);
      EXPECT_EQ(r.maximum.witness.index, 0);
    }
  }
}

TEST(CompactCert, ScalingChangesNoVerdict) {
  auto g2 = build_root_datum("G2");
  ExtremumOptions base, scaled;
  base.certify_all = scaled.certify_all = true;
  scaled.invder.scale = 2;
  auto a = extremum(g2, poly("f2", 2), base), b = extremum(g2, poly("f2", 2), scaled);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());

  InvderOptions o;
  o.scale = 5;
  auto m5 = derivation_matrix(build_root_datum("A1"), o);
  for (int t : {-3, -2, 0, 2, 3}) {
    auto p = AlgebraicPoint::rational({Q(t)});
    auto q = AlgebraicPoint::rational({Q(t)});
    EXPECT_EQ(is_compact_point(m5.sigma_matrix(), p), is_compact_point(matrix("A1").sigma_matrix(), q));
  }
}

TEST(CompactCert, ReportsAreByteIdentical) {
  auto b2 = build_root_datum("B2");
  auto obj = to_fundamental_polynomial(adjoint_character(b2));
  auto a = extremum(b2, obj), b = extremum(b2, obj);
  EXPECT_EQ(a.to_json(8).dump(), b.to_json(8).dump());
  EXPECT_EQ(a.to_text(8), b.to_text(8));
}
