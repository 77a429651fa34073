#pragma once

#include <string>
#include <vector>

#include "invtrace/rational.hpp"

namespace invtrace {

enum class Provenance { TheoremCase, TableRow, ReductionComputed };
const char* to_string(Provenance p);

// Extremes of Tr Ad over the component of Aut(G) indexed by an outer
// automorphism class of order s.
struct BoundEntry {
  char type = 'A';
  int rank = 1;
  int s = 1;
  Z min, max;
  Provenance provenance = Provenance::TheoremCase;
};

// Orders of the outer automorphism classes of the simple type.
std::vector<int> outer_orders(char type, int rank);
// Whether the class of order s acts as -1 on the root system.
bool acts_as_minus_one(char type, int rank, int s);
Z simple_dimension(char type, int rank);

BoundEntry trace_bounds(char type, int rank, int s);
// Derived from the fixed-point subquotient H: m(s) = m_H(1) + correction.
BoundEntry outer_reduction(char type, int rank, int s);

struct SubquotientRow {
  char h_type;     // 'A' with h_copies > 1 means A1 x ... x A1
  int h_rank;
  int h_copies;
  int correction;  // Tr(Ad(w)|t) - rank H
};
SubquotientRow subquotient(char type, int rank, int s);

struct ShortRootEntry {
  Z min;
  Z dim;
};
ShortRootEntry short_root_min(char type, int rank);

// min of sum_{i<j} t_i t_j over [-1, 1]^n.
Q min_quadratic_box(int n);

enum class ToralRep { Adjoint, ShortRoot };
// Trace on a torus element of a classical group in the coordinates
// t_i = s_i + 1/s_i.
Q toral_trace(char type, int rank, ToralRep rep, const std::vector<Q>& t);

}  // namespace invtrace
