#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "invtrace/algsolve.hpp"
#include "invtrace/errors.hpp"

using namespace invtrace;

namespace {

Polynomial poly(const std::string& s, int n) { return parse_polynomial(s, n, "x"); }

Ideal ideal(int n, std::vector<std::string> gens, MonomialOrder order = MonomialOrder::DegRevLex) {
  Ideal I;
  I.nvars = n;
  I.order = order;
  for (const auto& g : gens) I.gens.push_back(poly(g, n));
  return I;
}

// Real solutions by Newton iteration from a grid, deduplicated.
std::vector<std::vector<double>> newton_solutions(const std::vector<Polynomial>& f, double radius) {
  const int n = f[0].nvars();
  std::vector<std::vector<Polynomial>> jac(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jac[i][j] = f[i].derivative(j);
  std::vector<std::vector<double>> found;
  const int steps = n == 2 ? 40 : 12;
  std::vector<int> idx(n, 0);
  for (;;) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = -radius + 2 * radius * (idx[i] + 0.5) / steps;
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      std::vector<double> v(n);
      std::vector<std::vector<double>> J(n, std::vector<double>(n + 1));
      for (int i = 0; i < n; ++i) {
        v[i] = f[i].evaluate(x);
        for (int j = 0; j < n; ++j) J[i][j] = jac[i][j].evaluate(x);
        J[i][n] = -v[i];
      }
      // Gaussian elimination with partial pivoting.
      bool singular = false;
      for (int c = 0; c < n && !singular; ++c) {
        int p = c;
        for (int r = c + 1; r < n; ++r)
          if (std::abs(J[r][c]) > std::abs(J[p][c])) p = r;
        if (std::abs(J[p][c]) < 1e-14) singular = true;
        std::swap(J[p], J[c]);
        for (int r = c + 1; r < n && !singular; ++r) {
          double m = J[r][c] / J[c][c];
          for (int k = c; k <= n; ++k) J[r][k] -= m * J[c][k];
        }
      }
      if (singular) break;
      std::vector<double> dx(n);
      for (int r = n - 1; r >= 0; --r) {
        double s = J[r][n];
        for (int k = r + 1; k < n; ++k) s -= J[r][k] * dx[k];
        dx[r] = s / J[r][r];
      }
      double norm = 0;
      for (int i = 0; i < n; ++i) {
        x[i] += dx[i];
        norm = std::max(norm, std::abs(dx[i]));
      }
      if (norm < 1e-13) {
        ok = true;
        break;
      }
    }
    if (ok) {
      bool fresh = true;
      for (const auto& y : found) {
        double d = 0;
        for (int i = 0; i < n; ++i) d = std::max(d, std::abs(y[i] - x[i]));
        if (d < 1e-7) fresh = false;
      }
      if (fresh) found.push_back(x);
    }
    int k = 0;
    while (k < n && ++idx[k] == steps) idx[k++] = 0;
    if (k == n) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

TEST(Groebner, SmallBases) {
  auto g = groebner(ideal(1, {"x1^2 - 1", "x1 - 1"}, MonomialOrder::Lex));
  ASSERT_EQ(g.gens.size(), 1u);
  EXPECT_EQ(g.gens[0], poly("x1 - 1", 1));

  auto h = groebner(ideal(1, {"x1^2 - 2"}));
  ASSERT_EQ(h.gens.size(), 1u);
  EXPECT_EQ(h.gens[0], poly("x1^2 - 2", 1));
}

TEST(Groebner, GeneratorsReduceToZero) {
  auto I = ideal(3, {"x1^2 + x2*x3 - 1", "x2^2 - x1*x3 + 2", "x3^2 + x1 - x2"});
  auto g = groebner(I);
  EXPECT_TRUE(is_zero_dimensional(g));
  for (const auto& p : I.gens) EXPECT_TRUE(normal_form(p, g).is_zero());
}

TEST(Groebner, PairCapFailsLoudly) {
  GroebnerOptions o;
  o.pair_cap = 2;
  EXPECT_THROW(groebner(ideal(3, {"x1*x2 - x3", "x1^2*x3 + x2 - 1", "x2^2*x3 - x1 + 2"}), o), Infeasible);
}

TEST(Solve, LinearSystem) {
  auto pts = solve_zero_dim(ideal(2, {"x1 + 2", "x2 - 5"}));
  ASSERT_EQ(pts.size(), 1u);
  std::vector<Q> c;
  ASSERT_TRUE(pts[0].rational_coordinates(c));
  EXPECT_EQ(c, (std::vector<Q>{-2, 5}));
}

TEST(Solve, CubicFromE8Example) {
  auto pts = solve_zero_dim(ideal(1, {"27*x1^3 + 10*x1^2 - 151*x1 - 49"}));
  ASSERT_EQ(pts.size(), 3u);
  bool seen = false;
  for (auto& p : pts) seen = seen || std::abs(p.coordinate(0).approx() + 0.323628) < 1e-6;
  EXPECT_TRUE(seen);
}

TEST(Solve, PositiveDimensionalIsAnError) {
  EXPECT_THROW(solve_zero_dim(ideal(2, {"x1*x2"})), InvalidInput);
}

TEST(Solve, SignAndValue) {
  auto pts = solve_zero_dim(ideal(1, {"x1 - 2"}));
  EXPECT_EQ(sign_of(poly("x1^2 - 4", 1), pts[0]), 0);

  auto q = AlgebraicPoint::rational({Q(7, 9), Q(10, 27)});
  EXPECT_EQ(sign_of(poly("x2 - 7/10", 2), q), -1);

  // (98/27)(1 - 2 sqrt 7) + 14 < 0, with sqrt 7 as the positive root of x^2 - 7.
  auto r = solve_zero_dim(ideal(1, {"x1^2 - 7"}));
  auto& root = r.back();
  ASSERT_GT(root.coordinate(0).approx(), 0);
  EXPECT_EQ(sign_of(poly("98/27 - 196/27*x1 + 14", 1), root), -1);
}

TEST(Solve, PointsSatisfyGeneratorsAndAreSorted) {
  auto I = ideal(2, {"x1^2 + x2^2 - 5", "x1*x2 - 2"});
  auto pts = solve_zero_dim(I);
  ASSERT_EQ(pts.size(), 4u);
  for (auto& p : pts)
    for (const auto& g : I.gens) {
      EXPECT_TRUE(evaluate_interval(g, p.coordinate_intervals()).contains_zero());
      EXPECT_EQ(sign_of(g, p), 0);
    }
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LT(compare_points(pts[i - 1], pts[i]), 0);
}

TEST(Solve, Deterministic) {
  auto I = ideal(2, {"x1^3 - 3*x1*x2 + 1", "x2^2 + x1 - 3"});
  auto a = solve_zero_dim(I), b = solve_zero_dim(I);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json().dump(), b[i].to_json().dump());
  EXPECT_EQ(groebner(I).gens, groebner(I).gens);
}

TEST(Solve, AgreesWithNewtonOracle) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = trial < 8 ? 2 : 3;
    SCOPED_TRACE("trial " + std::to_string(trial));
    // A sphere keeps every real solution inside a known box.
    Polynomial sphere = Polynomial::constant(n, Q(-9));
    for (int i = 0; i < n; ++i) sphere += Polynomial::variable(n, i).pow(2);
    std::vector<Polynomial> f{sphere};
    for (int k = 1; k < n; ++k) {
      Polynomial g(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          g += Polynomial::variable(n, i) * Polynomial::variable(n, j) * Q(coef(rng));
      for (int i = 0; i < n; ++i) g += Polynomial::variable(n, i) * Q(coef(rng));
      g += Polynomial::constant(n, Q(coef(rng)));
      f.push_back(g);
    }
    Ideal I;
    I.nvars = n;
    I.gens = f;
    std::vector<AlgebraicPoint> exact;
    try {
      exact = solve_zero_dim(I);
    } catch (const InvalidInput&) {
      continue;  // degenerate draw
    }
    auto numeric = newton_solutions(f, 3.5);
    ASSERT_EQ(exact.size(), numeric.size());
    for (std::size_t i = 0; i < exact.size(); ++i)
      for (int k = 0; k < n; ++k) EXPECT_NEAR(exact[i].coordinate(k).approx(), numeric[i][k], 1e-8);
  }
}
