#include <gtest/gtest.h>

#include <random>

#include "invtrace/closedform.hpp"
#include "invtrace/errors.hpp"

using namespace invtrace;

namespace {

// Minimum of sum_{i<j} t_i t_j on [-1, 1]^n. Each coordinate is fixed at -1
// or +1 or left free; free coordinates at a stationary point all equal
// S = sum t, which gives S = (sum of fixed) / (1 - #free).
Q brute_force_quadratic_min(int n) {
  Q best = 0;
  std::vector<int> state(n, 0);  // 0 free, 1 -> -1, 2 -> +1
  for (;;) {
    Q fixed = 0;
    int free = 0;
    for (int s : state) {
      if (s == 0) ++free;
      else fixed += s == 1 ? -1 : 1;
    }
    std::vector<Q> t;
    bool ok = true;
    if (free == 1 && fixed != 0) ok = false;
    Q S = free == 1 ? Q(0) : fixed / (1 - free);
    if (free > 0 && abs(S) > 1) ok = false;
    if (ok) {
      for (int s : state) t.push_back(s == 0 ? S : Q(s == 1 ? -1 : 1));
      Q sum = 0, sq = 0;
      for (const auto& x : t) {
        sum += x;
        sq += x * x;
      }
      Q q = (sum * sum - sq) / 2;
      if (q < best) best = q;
    }
    int k = 0;
    while (k < n && ++state[k] == 3) state[k++] = 0;
    if (k == n) break;
  }
  return best;
}

}  // namespace

TEST(ClosedForm, QuadraticBoxMatchesBruteForce) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(min_quadratic_box(n), brute_force_quadratic_min(n)) << n;
  EXPECT_EQ(min_quadratic_box(2), Q(-1));
  EXPECT_EQ(min_quadratic_box(3), Q(-1));
  EXPECT_EQ(min_quadratic_box(1), Q(0));
}

TEST(ClosedForm, QuadraticBoxLinksToTypeD) {
  for (int n = 4; n <= 10; ++n) {
    Q m = 4 * min_quadratic_box(n) + n;
    if (n % 2 == 0) EXPECT_EQ(m, Q(trace_bounds('D', n, 1).min));
    else EXPECT_EQ(m, Q(2 - n));
  }
}

TEST(ClosedForm, BoundEntryInvariants) {
  for (char ty : std::string("ABCDEFG"))
    for (int r = 1; r <= 8; ++r) {
      std::vector<int> orders;
      try {
        orders = outer_orders(ty, r);
      } catch (const InvalidInput&) {
        continue;
      }
      for (int s : orders) {
        auto e = trace_bounds(ty, r, s);
        Z dim = simple_dimension(ty, r);
        EXPECT_LE(-dim, e.min);
        EXPECT_LE(e.min, e.max);
        EXPECT_LE(e.max, dim);
        if (acts_as_minus_one(ty, r, s)) EXPECT_EQ(e.min, -r);
      }
    }
}

TEST(ClosedForm, OuterReductionAgrees) {
  for (char ty : std::string("ADE"))
    for (int r = 2; r <= 8; ++r) {
      std::vector<int> orders;
      try {
        orders = outer_orders(ty, r);
      } catch (const InvalidInput&) {
        continue;
      }
      for (int s : orders) {
        if (s == 1) continue;
        auto a = trace_bounds(ty, r, s), b = outer_reduction(ty, r, s);
        EXPECT_EQ(a.min, b.min) << ty << r << " s=" << s;
        EXPECT_EQ(a.max, b.max) << ty << r << " s=" << s;
      }
    }
}

TEST(ClosedForm, InvalidRequests) {
  EXPECT_THROW(trace_bounds('B', 3, 2), InvalidInput);
  EXPECT_THROW(outer_reduction('G', 2, 2), InvalidInput);
  EXPECT_THROW(short_root_min('E', 6), InvalidInput);
}

TEST(ClosedForm, ToralTraces) {
  for (int n = 2; n <= 6; ++n) {
    if (n >= 4) EXPECT_EQ(toral_trace('D', n, ToralRep::Adjoint, std::vector<Q>(n, Q(2))), Q(2 * n * n - n));
    EXPECT_EQ(toral_trace('B', n, ToralRep::ShortRoot, std::vector<Q>(n, Q(-2))), Q(1 - 2 * n));
    EXPECT_EQ(toral_trace('B', n, ToralRep::Adjoint, std::vector<Q>(n, Q(2))), Q(2 * n * n + n));
    EXPECT_EQ(toral_trace('C', n, ToralRep::Adjoint, std::vector<Q>(n, Q(2))), Q(2 * n * n + n));
    EXPECT_EQ(toral_trace('C', n, ToralRep::ShortRoot, std::vector<Q>(n, Q(2))), Q(2 * n * n - n - 1));
  }
}

TEST(ClosedForm, ShortRootCTypeIsAttainedAndBounded) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-8, 8);
  for (int n = 2; n <= 7; ++n) {
    Z table = short_root_min('C', n).min;
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<Q> t;
      for (int i = 0; i < n; ++i) t.push_back(Q(num(rng), 4));
      EXPECT_GE(toral_trace('C', n, ToralRep::ShortRoot, t), Q(table));
    }
    // Half the coordinates at +2, half at -2, with one at 0 when n is odd.
    std::vector<Q> w;
    for (int i = 0; i < n / 2; ++i) {
      w.push_back(2);
      w.push_back(-2);
    }
    if (n % 2) w.push_back(0);
    EXPECT_EQ(toral_trace('C', n, ToralRep::ShortRoot, w), Q(table));
  }
}
