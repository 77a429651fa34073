#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invtrace/algsolve.hpp"
#include "invtrace/invder.hpp"

namespace invtrace {

// g_i = sum_j M[i][j] d(objective)/df_j.
Ideal critical_ideal(const DerivationMatrix& m, const Polynomial& objective);

// f_{i*}(x) = f_i(x) for every i.
bool sigma_reality(const DerivationMatrix& m, AlgebraicPoint& x);

// Exact test that -Msigma(x) is positive semidefinite: every principal minor,
// smallest first, has sign >= 0.
bool is_compact_point(const PolyMatrix& msigma, AlgebraicPoint& x);

// Principal minor of M(x) on `rows` as an element of Q[theta]/(h).
UPoly principal_minor(const PolyMatrix& M, const std::vector<int>& rows, const AlgebraicPoint& x);

// True when the integer polynomial expands to a non-zero character with
// non-negative irreducible multiplicities.
bool is_true_character(const DatumPtr& datum, const Polynomial& p);

enum class Inclusion { OutsideWindow, NotSigmaReal, NotCompact, Certified };
const char* to_string(Inclusion v);

struct CornerValue {
  int index = 0;
  std::vector<int> kac;
  std::vector<std::optional<Cyclotomic>> coordinates;
  std::optional<AlgebraicReal> value;  // real part of the objective; empty above the orbit cap
};

struct CriticalPointReport {
  AlgebraicPoint point;
  AlgebraicReal value;
  std::optional<bool> sigma_real;
  std::optional<bool> compact;
  Inclusion inclusion = Inclusion::OutsideWindow;
};

struct Witness {
  bool corner = true;
  int index = 0;  // into corners or points
};

struct Extremum {
  AlgebraicReal value;
  Witness witness;
};

struct ExtremumReport {
  DatumPtr datum;
  Polynomial objective;
  bool true_character = false;
  std::optional<Q> window_bound;  // objective(1) when the window filter applies
  std::vector<CornerValue> corners;
  std::vector<CriticalPointReport> points;  // critical points other than corners
  Extremum minimum, maximum;

  Json to_json(int digits = 6);
  std::string to_text(int digits = 6);
  // Witness coordinates rendered as "(a, b, ...)".
  std::string witness_coordinates(const Witness& w, int digits = 6);
};

struct ExtremumOptions {
  InvderOptions invder;
  SolveOptions solve;
  std::uint64_t orbit_cap = kDefaultOrbitCap;
  bool certify_all = false;  // also certify critical points outside the window
};

ExtremumReport extremum(const DatumPtr& datum, const Polynomial& objective,
                        const ExtremumOptions& options = {});

}  // namespace invtrace
