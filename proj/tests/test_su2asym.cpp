#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "invtrace/charring.hpp"
#include "invtrace/su2asym.hpp"

using namespace invtrace;

namespace {

constexpr double kTol = 1e-9;

Complex pairing(const RootDatum& d, const ComplexVector& x, const ComplexVector& y) {
  Complex s = 0;
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j) s += static_cast<double>(d.form_A()[i][j]) * x[i] * y[j];
  return s;
}

ComplexVector real_vector(const std::vector<double>& v) { return ComplexVector(v.begin(), v.end()); }

// chi_lambda(e^{it}) / chi_lambda(1) from the weight multiplicities.
Complex normalized_character(const DatumPtr& d, const Weight& lambda, const ComplexVector& t) {
  auto c = irreducible_character(d, lambda);
  Complex sum = 0;
  double dim = 0;
  for (const auto& [mu, mult] : expand_orbits(c)) {
    ComplexVector m(mu.begin(), mu.end());
    sum += static_cast<double>(mult) * std::exp(Complex(0, 1) * pairing(*d, m, t));
    dim += static_cast<double>(mult);
  }
  return sum / dim;
}

// Regular vector: away from every wall by a margin.
std::vector<double> random_regular(const RootDatum& d, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (;;) {
    std::vector<double> v(d.rank());
    for (auto& x : v) x = u(rng);
    bool ok = true;
    for (const auto& r : d.positive_roots()) {
      ComplexVector rv(r.begin(), r.end());
      if (std::abs(pairing(d, rv, real_vector(v))) < 0.05) ok = false;
    }
    if (ok) return v;
  }
}

ComplexVector times(const ComplexVector& v, Complex u) {
  ComplexVector out;
  for (const auto& x : v) out.push_back(u * x);
  return out;
}

}  // namespace

TEST(Su2, ChebyshevCharacters) {
  EXPECT_EQ(chebyshev_character(0), UPoly::from_integers({1}));
  EXPECT_EQ(chebyshev_character(2), UPoly::from_integers({-1, 0, 1}));
  EXPECT_EQ(chebyshev_character(3), UPoly::from_integers({0, -2, 0, 1}));
  for (int d = 0; d <= 30; ++d) {
    auto p = chebyshev_character(d);
    EXPECT_EQ(p(Q(2)), Q(d + 1));
    EXPECT_EQ(p(Q(-2)), Q(d % 2 ? -(d + 1) : d + 1));
  }
}

TEST(Su2, ChebyshevZeros) {
  for (int d = 1; d <= 30; ++d) {
    auto roots = isolate_real_roots(chebyshev_character(d));
    ASSERT_EQ(static_cast<int>(roots.size()), d);
    std::vector<double> expect;
    for (int k = 1; k <= d; ++k) expect.push_back(2 * std::cos(M_PI * k / (d + 1)));
    std::sort(expect.begin(), expect.end());
    for (int k = 0; k < d; ++k) {
      AlgebraicReal r(chebyshev_character(d).squarefree(), roots[k].lo, roots[k].hi);
      r.refine_below(Q(1, 1l << 50));
      EXPECT_NEAR(r.approx(), expect[k], 1e-10) << "d=" << d << " k=" << k;
    }
  }
}

TEST(Su2, Minima) {
  auto two = su2_min(2);
  EXPECT_EQ(AlgebraicReal::compare(two.value, Q(-1)), 0);
  for (int d = 1; d <= 21; d += 2) {
    auto m = su2_min(d);
    EXPECT_EQ(AlgebraicReal::compare(m.value, Q(-(d + 1))), 0);
  }
  auto six = su2_min(6);
  EXPECT_NEAR(six.value.approx(), -7.0 / 27 * (1 + 2 * std::sqrt(7.0)), 1e-9);
  EXPECT_EQ(six.argmin.size(), 2u);
  for (auto& t : six.argmin) EXPECT_NEAR(std::abs(t.approx()), std::sqrt((5 + std::sqrt(7.0)) / 3), 1e-9);
}

TEST(Su2, RatiosApproachTheLimitConstant) {
  auto lc = limit_constant();
  EXPECT_NEAR(lc.c, 0.2172, 1e-4);
  EXPECT_NEAR(lc.theta0, 4.493, 1e-3);
  EXPECT_NEAR(std::tan(lc.theta0), lc.theta0, 1e-8);
  for (int d = 1; d <= 50; ++d) {
    double ratio = su2_min(d).value.approx() / (d + 1);
    EXPECT_GE(ratio, -1 - 1e-12);
    if (d % 2 == 0 && d >= 30) EXPECT_LE(ratio, -lc.c + 0.02) << d;
  }
}

TEST(XFunction, Origin) {
  auto a2 = build_root_datum("A2");
  EXPECT_NEAR(std::abs(eval_X(*a2, {0, 0}, {0, 0}).value - 1.0), 0, kTol);
  EXPECT_NEAR(std::abs(eval_X(*a2, {1, 1}, {0, 0}).value - 1.0), 0, kTol);
  EXPECT_NEAR(std::abs(eval_X(*a2, {0, 0}, {Complex(0, 2), 1}).value - 1.0), 0, kTol);
  auto r = eval_X(*a2, {1, 1}, {1e-9, 2e-9});
  EXPECT_NEAR(std::abs(r.value - 1.0), 0, 1e-6);
}

TEST(XFunction, A1IsSinc) {
  auto a1 = build_root_datum("A1");
  for (double t : {0.3, 1.0, 2.0, 4.0, 7.5}) {
    auto x = eval_X(*a1, {1}, {Complex(0, t)});
    EXPECT_NEAR(x.value.real(), std::sin(t) / t, kTol);
    EXPECT_NEAR(x.value.imag(), 0, kTol);
  }
}

class XIdentities : public ::testing::TestWithParam<const char*> {};

TEST_P(XIdentities, SymmetriesHold) {
  auto d = build_root_datum(GetParam());
  auto W = weyl_elements(*d);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = real_vector(random_regular(*d, rng));
    auto t = times(real_vector(random_regular(*d, rng)), Complex(0, 1));
    Complex base = eval_X(*d, s, t).value;

    EXPECT_NEAR(std::abs(base - eval_X(*d, t, s).value), 0, kTol * std::max(1.0, std::abs(base)));

    Complex scale(u(rng), u(rng));
    if (std::abs(scale) < 0.2) scale += 0.5;
    Complex lhs = eval_X(*d, s, times(t, scale)).value, rhs = eval_X(*d, times(s, scale), t).value;
    EXPECT_NEAR(std::abs(lhs - rhs), 0, kTol * std::max(1.0, std::abs(lhs)));

    const auto& w = W[pick(rng)].matrix;
    ComplexVector wt(d->rank());
    for (int i = 0; i < d->rank(); ++i)
      for (int j = 0; j < d->rank(); ++j) wt[i] += static_cast<double>(w[i][j]) * t[j];
    EXPECT_NEAR(std::abs(base - eval_X(*d, s, wt).value), 0, kTol * std::max(1.0, std::abs(base)));
  }
}

TEST_P(XIdentities, DominantWeightIdentity) {
  auto d = build_root_datum(GetParam());
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(0, 5);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    Weight lambda(d->rank());
    for (auto& x : lambda) x = coef(rng);
    std::vector<double> tv(d->rank());
    for (auto& x : tv) x = u(rng);
    auto it = times(real_vector(tv), Complex(0, 1));
    ComplexVector lr, rho;
    for (int i = 0; i < d->rank(); ++i) {
      lr.emplace_back(lambda[i] + 1.0);
      rho.emplace_back(1.0);
    }
    Complex x_ratio = eval_X(*d, lr, it).value / eval_X(*d, rho, it).value;
    Complex chi = normalized_character(d, lambda, real_vector(tv));
    EXPECT_NEAR(std::abs(x_ratio - chi), 0, kTol) << "trial " << trial;
  }
}

INSTANTIATE_TEST_SUITE_P(Types, XIdentities, ::testing::Values("A1", "A2", "B2"));

TEST(XFunction, LargeDegreeLimit) {
  // chi_d(e^{it/d}) / chi_d(1) against X(omega, it) = sin(t)/t at d = 200.
  auto a1 = build_root_datum("A1");
  const int d = 200;
  auto chi = chebyshev_character(d);
  for (double t : {1.0, 2.0, 4.0}) {
    Q x(2 * std::cos(t / d));
    double ratio = to_double(chi(x)) / (d + 1);
    double limit = eval_X(*a1, {1}, {Complex(0, t)}).value.real();
    EXPECT_NEAR(ratio, limit, 1e-2) << t;
    EXPECT_NEAR(limit, std::sin(t) / t, kTol);
  }
}

TEST(XFunction, NearWallFallback) {
  auto b2 = build_root_datum("B2");
  ComplexVector s{1, 0};  // on a wall
  auto t = ComplexVector{Complex(0, 0.7), Complex(0, -0.3)};
  auto x = eval_X(*b2, s, t);
  EXPECT_EQ(x.method, XMethod::Perturbed);
  EXPECT_LT(x.error, 1e-7);
  // Continuity from a nearby regular point.
  auto near = eval_X(*b2, {1, 1e-3}, t);
  EXPECT_NEAR(std::abs(x.value - near.value), 0, 1e-2);
}
