#include <gtest/gtest.h>

#include "invtrace/branch.hpp"
#include "invtrace/charring.hpp"

using namespace invtrace;

namespace {

Polynomial tpoly(const std::string& s, int n) { return parse_polynomial(s, n, "t"); }

Polynomial adjoint_restriction(const std::string& name) {
  auto d = build_root_datum(name);
  return restrict_to_A1n(adjoint_character(d), orthogonal_roots(*d));
}

}  // namespace

TEST(Branch, CriticalIdealOfSquare) {
  auto I = branch_critical_ideal({tpoly("t1^2", 1), {}});
  ASSERT_EQ(I.gens.size(), 1u);
  EXPECT_EQ(I.gens[0], tpoly("2*t1^3 - 8*t1", 1));
  auto pts = solve_zero_dim(I);
  ASSERT_EQ(pts.size(), 3u);
}

TEST(Branch, ConstantHasZeroIdeal) {
  auto I = branch_critical_ideal({tpoly("3", 2), {}});
  for (const auto& g : I.gens) EXPECT_TRUE(g.is_zero());
  auto r = branch_minimize({tpoly("3", 2), {}});
  EXPECT_EQ(AlgebraicReal::compare(r.minimum, Q(3)), 0);
}

TEST(Branch, PinnedVariablesAreSubstituted) {
  auto I = branch_critical_ideal({tpoly("t1^2 + t1*t2", 2), {{0, 2}}});
  ASSERT_EQ(I.gens.size(), 1u);
  EXPECT_EQ(I.gens[0].nvars(), 1);
}

TEST(Branch, ExceptionalMinima) {
  auto g2 = branch_minimize({adjoint_restriction("G2"), {}});
  EXPECT_EQ(AlgebraicReal::compare(g2.minimum, Q(-2)), 0);
  auto f4 = branch_minimize({adjoint_restriction("F4"), {}});
  EXPECT_EQ(AlgebraicReal::compare(f4.minimum, Q(-4)), 0);
  EXPECT_EQ(f4.witness.size(), 4u);
}

TEST(Branch, ShortRootG2) {
  auto r = branch_minimize({tpoly("t1^2 + t1*t2 - 1", 2), {}});
  EXPECT_EQ(AlgebraicReal::compare(r.minimum, Q(-2)), 0);
}

TEST(Branch, WitnessAttainsMinimum) {
  auto f = adjoint_restriction("G2");
  auto r = branch_minimize({f, {}});
  std::vector<Q> w;
  for (auto& x : r.witness) {
    Q q;
    ASSERT_TRUE(x.try_rational(q));
    EXPECT_LE(q * q, 4);
    w.push_back(q);
  }
  EXPECT_EQ(AlgebraicReal::compare(r.minimum, f.evaluate(w)), 0);
}

TEST(Branch, PinningNeverLowersTheMinimum) {
  auto f = adjoint_restriction("F4");
  auto free_min = branch_minimize({f, {}}).minimum;
  for (int v = 0; v < 4; ++v)
    for (int s : {-2, 2}) {
      auto pinned = branch_minimize({f, {{v, s}}}).minimum;
      EXPECT_GE(AlgebraicReal::compare(pinned, free_min), 0);
    }
}

TEST(Branch, RestrictionConsistency) {
  auto f = adjoint_restriction("F4");
  EXPECT_EQ(f.evaluate(std::vector<Q>(4, Q(2))), Q(52));
  Q at_minus = f.evaluate(std::vector<Q>(4, Q(-2)));
  EXPECT_EQ(at_minus.get_den(), 1);
  EXPECT_GE(at_minus, -4);
}
