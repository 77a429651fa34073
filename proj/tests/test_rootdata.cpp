#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "invtrace/errors.hpp"
#include "invtrace/rootdata.hpp"

using namespace invtrace;

namespace {

struct Classification {
  std::string name;
  int dim;
  std::uint64_t weyl;
  int fundamental_group;
};

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<Classification> classification() {
  std::vector<Classification> out;
  for (int n = 1; n <= 7; ++n) out.push_back({"A" + std::to_string(n), n * n + 2 * n, factorial(n + 1), n + 1});
  for (int n = 2; n <= 7; ++n) {
    out.push_back({"B" + std::to_string(n), 2 * n * n + n, (1ull << n) * factorial(n), 2});
    out.push_back({"C" + std::to_string(n), 2 * n * n + n, (1ull << n) * factorial(n), 2});
  }
  for (int n = 4; n <= 7; ++n)
    out.push_back({"D" + std::to_string(n), 2 * n * n - n, (1ull << (n - 1)) * factorial(n), 4});
  out.push_back({"E6", 78, 51840, 3});
  out.push_back({"E7", 133, 2903040, 2});
  out.push_back({"E8", 248, 696729600, 1});
  out.push_back({"F4", 52, 1152, 1});
  out.push_back({"G2", 14, 12, 1});
  return out;
}

// Leading principal minors of an integer matrix, by fraction-free elimination.
std::vector<Q> leading_minors(const IntMatrix& m) {
  std::vector<Q> out;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<std::vector<Q>> a(k, std::vector<Q>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) a[i][j] = m[i][j];
    Q det = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && a[p][c] == 0) ++p;
      if (p == k) {
        det = 0;
        break;
      }
      if (p != c) {
        std::swap(a[p], a[c]);
        det = -det;
      }
      det *= a[c][c];
      for (std::size_t r = c + 1; r < k; ++r) {
        Q f = a[r][c] / a[c][c];
        for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      }
    }
    out.push_back(det);
  }
  return out;
}

}  // namespace

TEST(RootData, MatchesClassification) {
  for (const auto& c : classification()) {
    SCOPED_TRACE(c.name);
    auto d = build_root_datum(c.name);
    EXPECT_EQ(d->dimension(), c.dim);
    EXPECT_EQ(static_cast<int>(d->positive_roots().size()), (c.dim - d->rank()) / 2);
    EXPECT_EQ(d->weyl_order(), c.weyl);
    EXPECT_EQ(d->fundamental_group_order(), c.fundamental_group);
  }
}

TEST(RootData, CartanAndFormInvariants) {
  for (const auto& c : classification()) {
    SCOPED_TRACE(c.name);
    auto d = build_root_datum(c.name);
    const int r = d->rank();
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) EXPECT_EQ(d->cartan()[i][j], 2);
        else EXPECT_LE(d->cartan()[i][j], 0);
        EXPECT_EQ(d->form_A()[i][j], d->form_A()[j][i]);
        EXPECT_EQ(Q(d->form_A()[i][j]), d->form_B()[i][j] * d->fundamental_group_order());
      }
    for (const auto& m : leading_minors(d->form_A())) EXPECT_GT(m, 0);

    // Short roots have A-length 2|P/Q|; rho pairs to 1 with every simple coroot.
    for (std::size_t k = 0; k < d->positive_roots().size(); ++k) {
      long long len = d->A(d->positive_roots()[k], d->positive_roots()[k]);
      if (!d->positive_root_is_long()[k] || d->simply_laced())
        EXPECT_EQ(len, 2 * d->fundamental_group_order());
    }
    for (int j = 0; j < r; ++j) EXPECT_EQ(d->coroot_pairing(d->rho(), d->simple_root(j)), 1);
  }
}

TEST(RootData, MinusW0IsInvolution) {
  for (const auto& c : classification()) {
    SCOPED_TRACE(c.name);
    auto d = build_root_datum(c.name);
    const auto& p = d->minus_w0();
    bool identity = true;
    for (int i = 0; i < d->rank(); ++i) {
      EXPECT_EQ(p[p[i]], i);
      identity = identity && p[i] == i;
    }
    EXPECT_EQ(identity, d->minus_one_in_weyl());
  }
}

TEST(RootData, FormIsWeylInvariant) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (const char* name : {"A3", "B3", "C4", "D4", "G2", "F4", "E6"}) {
    SCOPED_TRACE(name);
    auto d = build_root_datum(name);
    for (int trial = 0; trial < 20; ++trial) {
      Weight a(d->rank()), b(d->rank());
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      for (int i = 0; i < d->rank(); ++i) EXPECT_EQ(d->A(d->reflect(a, i), d->reflect(b, i)), d->A(a, b));
    }
  }
}

TEST(RootData, Orbits) {
  auto a1 = build_root_datum("A1");
  auto orbit = a1->orbit({1});
  EXPECT_EQ(std::set<Weight>(orbit.begin(), orbit.end()), (std::set<Weight>{{1}, {-1}}));

  auto g2 = build_root_datum("G2");
  EXPECT_EQ(g2->orbit({0, 0}).size(), 1u);
  auto long_roots = g2->orbit(g2->highest_root());
  EXPECT_EQ(long_roots.size(), 6u);
  for (const auto& w : long_roots) EXPECT_EQ(g2->A(w, w), g2->A(g2->highest_root(), g2->highest_root()));

  // Closed under reflections with exactly one dominant member.
  auto f4 = build_root_datum("F4");
  for (int i = 0; i < 4; ++i) {
    auto o = f4->orbit(f4->fundamental_weight(i));
    std::set<Weight> s(o.begin(), o.end());
    int dominant = 0;
    for (const auto& w : o) {
      for (int j = 0; j < 4; ++j) EXPECT_TRUE(s.count(f4->reflect(w, j)));
      dominant += RootDatum::is_dominant(w);
    }
    EXPECT_EQ(dominant, 1);
    EXPECT_EQ(o.size(), f4->orbit_size(f4->fundamental_weight(i)));
  }
}

TEST(RootData, InvalidTypesRejected) {
  EXPECT_THROW(build_root_datum('B', 1), InvalidInput);
  EXPECT_THROW(build_root_datum('D', 3), InvalidInput);
  EXPECT_THROW(build_root_datum('E', 5), InvalidInput);
  EXPECT_THROW(build_root_datum('G', 3), InvalidInput);
  EXPECT_THROW(build_root_datum('X', 2), InvalidInput);
}

TEST(RootData, CornerClasses) {
  for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "E6"}) {
    SCOPED_TRACE(name);
    auto d = build_root_datum(name);
    auto cs = corner_classes(*d);
    ASSERT_EQ(static_cast<int>(cs.size()), d->rank() + 1);
    for (const auto& c : cs) {
      EXPECT_EQ(std::count(c.kac.begin(), c.kac.end(), 1), 1);
      EXPECT_EQ(std::count(c.kac.begin(), c.kac.end(), 0), d->rank());
      if (c.index == 0) continue;
      // The element exp(2 pi i v) has order lcm of the denominators of <omega_j, v>.
      Z order = 1;
      for (int j = 0; j < d->rank(); ++j) {
        Q pairing = 0;
        auto coords = d->to_root_coordinates(d->fundamental_weight(j));
        for (int k = 0; k < d->rank(); ++k) pairing += coords[k] * c.cocharacter[k];
        mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), pairing.get_den_mpz_t());
      }
      EXPECT_TRUE(Z(c.order_bound) % order == 0) << "corner " << c.index;
    }
  }
}

TEST(RootData, WeylMinTrace) {
  EXPECT_EQ(weyl_min_trace(*build_root_datum("G2")), -2);
  EXPECT_EQ(weyl_min_trace(*build_root_datum("A2")), -1);
  EXPECT_EQ(weyl_min_trace(*build_root_datum("F4")), -4);
  EXPECT_EQ(weyl_min_trace(*build_root_datum("D5")), -3);
  EXPECT_THROW(weyl_min_trace(*build_root_datum("E6"), 1000), Infeasible);
}

TEST(RootData, WeylElementsHaveUniqueMatrices) {
  auto d = build_root_datum("B3");
  auto ws = weyl_elements(*d);
  std::set<IntMatrix> distinct;
  for (const auto& w : ws) distinct.insert(w.matrix);
  EXPECT_EQ(distinct.size(), d->weyl_order());
}
