#include "invtrace/closedform.hpp"

#include "invtrace/errors.hpp"

namespace invtrace {

namespace {

void check_type(char type, int rank) {
  bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) || (type == 'C' && rank >= 2) ||
            (type == 'D' && rank >= 4) || (type == 'E' && rank >= 6 && rank <= 8) ||
            (type == 'F' && rank == 4) || (type == 'G' && rank == 2);
  if (!ok) throw InvalidInput(std::string("invalid simple type ") + type + std::to_string(rank));
}

Z z(long n) { return Z(n); }

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::TheoremCase: return "theorem-case";
    case Provenance::TableRow: return "table-row";
    case Provenance::ReductionComputed: return "reduction-computed";
  }
  return "?";
}

std::vector<int> outer_orders(char type, int rank) {
  check_type(type, rank);
  if (type == 'A' && rank >= 2) return {1, 2};
  if (type == 'D' && rank == 4) return {1, 2, 3};
  if (type == 'D' || (type == 'E' && rank == 6)) return {1, 2};
  return {1};
}

bool acts_as_minus_one(char type, int rank, int s) {
  check_type(type, rank);
  // -w0 is a non-trivial diagram automorphism exactly for A_n (n >= 2),
  // D_n (n odd) and E6.
  bool minus_w0_nontrivial = (type == 'A' && rank >= 2) || (type == 'D' && rank % 2 == 1) ||
                             (type == 'E' && rank == 6);
  return minus_w0_nontrivial ? s == 2 : s == 1;
}

Z simple_dimension(char type, int rank) {
  check_type(type, rank);
  long n = rank;
  switch (type) {
    case 'A': return z(n * n + 2 * n);
    case 'B':
    case 'C': return z(2 * n * n + n);
    case 'D': return z(2 * n * n - n);
    case 'E': return z(rank == 6 ? 78 : rank == 7 ? 133 : 248);
    case 'F': return z(52);
    default: return z(14);
  }
}

BoundEntry trace_bounds(char type, int rank, int s) {
  check_type(type, rank);
  bool valid = false;
  for (int o : outer_orders(type, rank)) valid = valid || o == s;
  if (!valid)
    throw InvalidInput("no outer automorphism class of order " + std::to_string(s) + " for " +
                       std::string(1, type) + std::to_string(rank));
  const long n = rank;
  BoundEntry e{type, rank, s, z(0), z(0), Provenance::TableRow};
  if (s == 1) e.max = simple_dimension(type, rank);
  if (acts_as_minus_one(type, rank, s)) {
    e.min = z(-n);
    e.provenance = Provenance::TheoremCase;
  }
  if (type == 'A' && s == 1 && rank >= 2) e.min = z(-1);
  if (type == 'A' && s == 2) e.max = z(n % 2 == 0 ? n : n + 2);
  if (type == 'D' && n % 2 == 0 && s == 2) {
    e.min = z(2 - n);
    e.max = z(2 * n * n - 5 * n + 2);
  }
  if (type == 'D' && s == 3) {
    e.min = z(-2);
    e.max = z(7);
  }
  if (type == 'D' && n % 2 == 1 && s == 1) e.min = z(2 - n);
  if (type == 'D' && n % 2 == 1 && s == 2) e.max = z(2 * n * n - 5 * n + 2);
  if (type == 'E' && rank == 6 && s == 1) e.min = z(-3);
  if (type == 'E' && rank == 6 && s == 2) e.max = z(26);
  // Remaining s = 1 rows: -1 lies in W, maximum is dim G.
  return e;
}

SubquotientRow subquotient(char type, int rank, int s) {
  check_type(type, rank);
  if (type == 'A' && s == 2 && rank >= 2) {
    int m = rank % 2 == 0 ? rank / 2 : (rank + 1) / 2;
    return {'A', 1, m, rank % 2 == 0 ? -m : 1 - m};
  }
  if (type == 'D' && s == 2) return {'D', rank - 1, 1, -1};
  if (type == 'D' && rank == 4 && s == 3) return {'A', 2, 1, -1};
  if (type == 'E' && rank == 6 && s == 2) return {'D', 4, 1, -2};
  throw InvalidInput("no fixed-point subquotient recorded for " + std::string(1, type) +
                     std::to_string(rank) + " with s of order " + std::to_string(s));
}

BoundEntry outer_reduction(char type, int rank, int s) {
  if (s == 1) throw InvalidInput("outer reduction needs a non-trivial class");
  SubquotientRow h = subquotient(type, rank, s);
  Z hmin, hmax;
  if (h.h_copies > 1) {
    // Each A1 factor contributes Tr Ad in [-1, 3].
    hmin = z(-h.h_copies);
    hmax = z(3 * h.h_copies);
  } else {
    char t = h.h_type;
    int r = h.h_rank;
    if (t == 'D' && r == 3) t = 'A';  // D3 = A3
    BoundEntry b = trace_bounds(t, r, 1);
    hmin = b.min;
    hmax = b.max;
  }
  return {type, rank, s, hmin + h.correction, hmax + h.correction, Provenance::ReductionComputed};
}

ShortRootEntry short_root_min(char type, int rank) {
  check_type(type, rank);
  const long n = rank;
  switch (type) {
    case 'B': return {z(1 - 2 * n), z(2 * n + 1)};
    case 'C': return {z(n % 2 == 1 ? 1 - n : -1 - n), z(2 * n * n - n - 1)};
    case 'F': return {z(-6), z(26)};
    case 'G': return {z(-2), z(7)};
    default: throw InvalidInput("simply laced types have a single root length");
  }
}

Q min_quadratic_box(int n) {
  if (n < 1) throw InvalidInput("min_quadratic_box needs n >= 1");
  return n % 2 == 0 ? frac(-n, 2) : frac(1 - n, 2);
}

Q toral_trace(char type, int rank, ToralRep rep, const std::vector<Q>& t) {
  check_type(type, rank);
  if (static_cast<int>(t.size()) != rank) throw InvalidInput("toral_trace needs one t per rank");
  Q sum = 0, sq = 0;
  for (const auto& x : t) {
    sum += x;
    sq += x * x;
  }
  const Q pairs = (sum * sum - sq) / 2;
  const Q n(rank);
  if (rep == ToralRep::Adjoint) {
    if (type == 'D') return n + pairs;
    if (type == 'C') return -n + sq + pairs;
    if (type == 'B') return n + sum + pairs;
  } else {
    if (type == 'C') return pairs + n - 1;
    if (type == 'B') return 1 + sum;
  }
  throw InvalidInput(std::string("no toral trace formula for type ") + type);
}

}  // namespace invtrace
