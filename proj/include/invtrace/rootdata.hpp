#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invtrace/cyclotomic.hpp"
#include "invtrace/rational.hpp"

namespace invtrace {

// Integer coordinates in the fundamental-weight basis.
using Weight = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Q>>;

class RootDatum {
 public:
  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  // cartan()[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in the
  // fundamental-weight basis.
  const IntMatrix& cartan() const { return cartan_; }
  const Weight& simple_root(int i) const { return cartan_[i]; }

  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  // Same roots in simple-root coordinates.
  const std::vector<std::vector<int>>& positive_roots_alpha() const { return positive_alpha_; }
  const std::vector<bool>& positive_root_is_long() const { return root_is_long_; }
  Weight fundamental_weight(int i) const;
  Weight rho() const { return Weight(rank_, 1); }
  const std::vector<int>& highest_root_coefficients() const { return highest_coeffs_; }
  const Weight& highest_root() const { return highest_root_; }
  // Highest short root; equals the highest root when simply laced.
  const Weight& highest_short_root() const { return highest_short_root_; }
  bool simply_laced() const { return simply_laced_; }

  int fundamental_group_order() const { return fundamental_group_order_; }
  // Exponent of P/Q, i.e. of the centre of the simply connected group.
  int center_exponent() const { return center_exponent_; }
  const RatMatrix& form_B() const { return form_B_; }
  // A = |P/Q| * B, integral on the weight lattice.
  const IntMatrix& form_A() const { return form_A_; }
  const RatMatrix& cartan_inverse() const { return cartan_inv_; }

  // Zero-based permutation i -> i* with -w0(omega_i) = omega_{i*}.
  const std::vector<int>& minus_w0() const { return minus_w0_; }
  bool minus_one_in_weyl() const;

  std::uint64_t weyl_order() const { return weyl_order_; }
  int dimension() const { return rank_ + 2 * static_cast<int>(positive_roots_.size()); }

  long long A(const Weight& a, const Weight& b) const;
  // <lambda, beta^vee> for a root beta, = 2 A(lambda, beta) / A(beta, beta).
  int coroot_pairing(const Weight& lambda, const Weight& beta) const;
  // Coordinates of lambda in the simple-root basis.
  std::vector<Q> to_root_coordinates(const Weight& lambda) const;
  // |P/Q| * <lambda, rho^vee>, integral for every weight.
  long long scaled_height(const Weight& lambda) const;

  Weight reflect(const Weight& lambda, int i) const;
  // Dominant representative; `length` (if given) receives the number of
  // reflections used.
  Weight dominant(const Weight& lambda, int* length = nullptr) const;
  static bool is_dominant(const Weight& lambda);
  std::vector<Weight> orbit(const Weight& lambda) const;
  // |W lambda| for dominant lambda, via the stabilizer parabolic subgroup.
  std::uint64_t orbit_size(const Weight& dominant_lambda) const;

  // Diagram automorphisms of the Dynkin diagram (as node permutations).
  std::vector<std::vector<int>> diagram_automorphisms() const;

  // Canonical JSON (schema-versioned) used for hashing and the CLI.
  std::string to_json() const;
  std::string hash() const;

  friend std::shared_ptr<const RootDatum> build_root_datum(char type, int rank);

 private:
  RootDatum() = default;
  void build(char type, int rank);

  char type_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_;
  RatMatrix cartan_inv_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<int>> positive_alpha_;
  std::vector<bool> root_is_long_;
  std::vector<int> highest_coeffs_;
  Weight highest_root_, highest_short_root_;
  bool simply_laced_ = true;
  std::vector<int> half_lengths_;  // (alpha_i, alpha_i)/2 with short roots = 1
  int fundamental_group_order_ = 1;
  int center_exponent_ = 1;
  RatMatrix form_B_;
  IntMatrix form_A_;
  std::vector<int> minus_w0_;
  std::uint64_t weyl_order_ = 1;
};

using DatumPtr = std::shared_ptr<const RootDatum>;

// Valid pairs: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6-8, F4, G2.
DatumPtr build_root_datum(char type, int rank);
// Parses "G2", "F4", "A3", ...
DatumPtr build_root_datum(const std::string& name);

struct CornerClass {
  int index = 0;                 // 0 is the identity class
  std::vector<int> kac;          // r+1 entries, a single 1
  int order_bound = 1;           // a_i * exponent of the centre
  std::vector<Q> cocharacter;    // omega_i^vee / a_i in the fundamental-coweight basis
  // Fundamental character values f_1..f_r at the class, filled by
  // charring's corners(); empty where the orbit cap refused expansion.
  std::vector<std::optional<Cyclotomic>> values;
};

std::vector<CornerClass> corner_classes(const RootDatum& datum);

struct WeylElement {
  IntMatrix matrix;  // acts on weight column vectors
  int length = 0;
};

// Visits every Weyl group element exactly once (no visited set), carrying
// the matrix along a canonical spanning tree of the group.
void for_each_weyl_element(const RootDatum& datum,
                           const std::function<void(const IntMatrix&, int length)>& visit,
                           std::uint64_t cap);
std::vector<WeylElement> weyl_elements(const RootDatum& datum, std::uint64_t cap = 100000);

constexpr std::uint64_t kDefaultWeylCap = 3000000;  // covers E7

// Minimum trace of a Weyl group element on the reflection representation.
long long weyl_min_trace(const RootDatum& datum, std::uint64_t cap = kDefaultWeylCap);

}  // namespace invtrace
