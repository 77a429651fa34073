#pragma once

#include <string>
#include <vector>

#include "invtrace/charring.hpp"
#include "invtrace/cyclotomic.hpp"
#include "invtrace/polynomial.hpp"
#include "invtrace/serialize.hpp"

namespace invtrace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// e^mu -> scale * A(mu, mu) e^mu, applied orbit-wise.
CharacterElement apply_DA(const CharacterElement& c, long long scale = 1);
// chi_lambda -> scale * (A(lambda+rho, lambda+rho) - A(rho, rho)) chi_lambda.
CharacterElement apply_CA(const CharacterElement& c, long long scale = 1);

// D(fg) - f D(g) - D(f) g with D = D_A, as a polynomial in f_1..f_r.
Polynomial biderivation(const CharacterElement& f, const CharacterElement& g,
                        MonomialCache* cache = nullptr, long long scale = 1);
// Same pairing built from C_A; used to cross-check the D_A path.
Polynomial biderivation_casimir(const CharacterElement& f, const CharacterElement& g,
                                MonomialCache* cache = nullptr, long long scale = 1);

struct InvderOptions {
  long long scale = 1;        // A is replaced by scale * A
  std::string cache_dir;      // empty disables the disk cache
  int rank_cap = 6;
  bool long_running = false;  // lifts rank_cap
};

struct DerivationMatrix {
  DatumPtr datum;
  long long scale = 1;
  PolyMatrix M;            // M[i][j] = M_A(f_i, f_j)
  std::vector<int> sigma;  // zero-based -w0 permutation
  std::string hash;        // content hash of the entries
  bool cache_hit = false;

  int rank() const { return static_cast<int>(M.size()); }
  // Rows permuted by -w0: Msigma[i][j] = M[i*][j].
  PolyMatrix sigma_matrix() const;
  Json to_json() const;
};

DerivationMatrix derivation_matrix(const DatumPtr& datum, const InvderOptions& options = {});
PolyMatrix sigma_matrix(const DerivationMatrix& m);

// Exact rank at a rational or cyclotomic point.
int rank_at(const PolyMatrix& M, const std::vector<Q>& point);
int rank_at(const PolyMatrix& M, const std::vector<Cyclotomic>& point);

PolyMatrix evaluate_matrix(const PolyMatrix& M, const std::vector<Q>& point);

// GL2 with torus coordinates z1, z2, f1 = z1 + z2, f2 = z1 z2 and the identity
// pairing, computed directly as J^T A J on the torus. Entries are Laurent
// polynomials in f1, f2 (f2 may carry negative exponents).
struct Gl2Fixture {
  PolyMatrix M;
  PolyMatrix Msigma;  // Msigma[i][j] = M_A(sigma f_i, f_j), sigma f(z) = f(1/z)
};
Gl2Fixture gl2_fixture();

}  // namespace invtrace
