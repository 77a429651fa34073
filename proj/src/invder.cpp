#include "invtrace/invder.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <numeric>

#include "invtrace/errors.hpp"
#include "invtrace/linalg.hpp"

namespace invtrace {

namespace {

constexpr const char* kCacheSchema = "invtrace.matrix/1";

Q to_q(long long x) { return Q(Z(static_cast<long>(x))); }

template <class F>
int field_rank(std::vector<std::vector<F>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    F inv = m[rank][c].inverse();
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      F factor = m[r][c] * inv;
      for (int k = c; k < cols; ++k) m[r][k] = m[r][k] - factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::string cache_key(const RootDatum& d, long long scale) {
  return content_hash(d.to_json() + "|scale=" + std::to_string(scale) + "|" + kCacheSchema);
}

Json entries_json(const PolyMatrix& M) {
  Json rows = Json::array();
  for (const auto& row : M) {
    Json r = Json::array();
    for (const auto& p : row) r.push_back(polynomial_to_json(p));
    rows.push_back(r);
  }
  return rows;
}

bool load_cached(const std::filesystem::path& file, const RootDatum& d, long long scale,
                 PolyMatrix& M) {
  std::ifstream in(file);
  if (!in) return false;
  try {
    Json j = Json::parse(in);
    if (j.at("schema") != kCacheSchema || j.at("datum_hash") != d.hash() ||
        j.at("scale").get<long long>() != scale)
      return false;
    const Json& entries = j.at("entries");
    if (content_hash(entries.dump()) != j.at("content_hash").get<std::string>()) return false;
    PolyMatrix out;
    for (const auto& row : entries) {
      std::vector<Polynomial> r;
      for (const auto& p : row) r.push_back(polynomial_from_json(p));
      out.push_back(std::move(r));
    }
    if (static_cast<int>(out.size()) != d.rank()) return false;
    M = std::move(out);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void store_cached(const std::filesystem::path& file, const DerivationMatrix& dm) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << dm.to_json().dump(1) << "\n";
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace

CharacterElement apply_DA(const CharacterElement& c, long long scale) {
  const auto& d = *c.datum();
  CharacterElement out(c.datum());
  for (const auto& [mu, m] : c.terms()) out.add(mu, m * d.A(mu, mu) * scale);
  return out;
}

CharacterElement apply_CA(const CharacterElement& c, long long scale) {
  const auto& d = *c.datum();
  const Weight rho = d.rho();
  const long long rr = d.A(rho, rho);
  std::map<Weight, long long> parts = decompose_irreducibles(c);
  for (auto& [lambda, k] : parts) {
    Weight lr = lambda;
    for (int i = 0; i < d.rank(); ++i) lr[i] += 1;
    k *= (d.A(lr, lr) - rr) * scale;
  }
  return compose_irreducibles(c.datum(), parts);
}

Polynomial biderivation(const CharacterElement& f, const CharacterElement& g, MonomialCache* cache,
                        long long scale) {
  CharacterElement fg = multiply(f, g);
  CharacterElement r = apply_DA(fg, scale) - multiply(f, apply_DA(g, scale)) -
                       multiply(apply_DA(f, scale), g);
  return to_fundamental_polynomial(r, cache);
}

Polynomial biderivation_casimir(const CharacterElement& f, const CharacterElement& g,
                                MonomialCache* cache, long long scale) {
  CharacterElement fg = multiply(f, g);
  CharacterElement r = apply_CA(fg, scale) - multiply(f, apply_CA(g, scale)) -
                       multiply(apply_CA(f, scale), g);
  return to_fundamental_polynomial(r, cache);
}

PolyMatrix DerivationMatrix::sigma_matrix() const {
  PolyMatrix out(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) out[i] = M[sigma[i]];
  return out;
}

PolyMatrix sigma_matrix(const DerivationMatrix& m) { return m.sigma_matrix(); }

Json DerivationMatrix::to_json() const {
  Json entries = entries_json(M);
  Json j;
  j["schema"] = kCacheSchema;
  j["datum"] = datum->name();
  j["datum_hash"] = datum->hash();
  j["scale"] = scale;
  Json form = Json::array();
  for (const auto& row : datum->form_A()) {
    Json r = Json::array();
    for (int x : row) r.push_back(to_pq(to_q(static_cast<long long>(x) * scale)));
    form.push_back(r);
  }
  j["form_A"] = form;
  j["sigma"] = sigma;
  j["content_hash"] = content_hash(entries.dump());
  j["entries"] = entries;
  return j;
}

DerivationMatrix derivation_matrix(const DatumPtr& datum, const InvderOptions& options) {
  const auto& d = *datum;
  if (options.scale <= 0) throw InvalidInput("form scale must be positive");
  if (d.rank() > options.rank_cap && !options.long_running)
    throw Infeasible("derivation matrix for " + d.name() + " exceeds the rank cap " +
                     std::to_string(options.rank_cap) + "; pass the long-running flag to proceed");
  DerivationMatrix dm;
  dm.datum = datum;
  dm.scale = options.scale;
  dm.sigma = d.minus_w0();

  std::filesystem::path file;
  if (!options.cache_dir.empty()) {
    file = std::filesystem::path(options.cache_dir) /
           ("M-" + d.name() + "-" + cache_key(d, options.scale) + ".json");
    if (load_cached(file, d, options.scale, dm.M)) {
      dm.cache_hit = true;
      dm.hash = content_hash(entries_json(dm.M).dump());
      return dm;
    }
  }

  const int r = d.rank();
  MonomialCache cache(datum);
  std::vector<CharacterElement> f;
  for (int i = 0; i < r; ++i) f.push_back(fundamental_character(datum, i));
  dm.M.assign(r, std::vector<Polynomial>(r, Polynomial(r)));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      dm.M[i][j] = biderivation(f[i], f[j], &cache, options.scale);
      dm.M[j][i] = dm.M[i][j];
    }
  dm.hash = content_hash(entries_json(dm.M).dump());
  if (!file.empty()) store_cached(file, dm);
  return dm;
}

PolyMatrix evaluate_matrix(const PolyMatrix& M, const std::vector<Q>& point) {
  PolyMatrix out;
  for (const auto& row : M) {
    std::vector<Polynomial> r;
    for (const auto& p : row) r.push_back(Polynomial::constant(0, p.evaluate(point)));
    out.push_back(std::move(r));
  }
  return out;
}

int rank_at(const PolyMatrix& M, const std::vector<Q>& point) {
  QMatrix m;
  for (const auto& row : M) {
    QVector r;
    for (const auto& p : row) r.push_back(p.evaluate(point));
    m.push_back(std::move(r));
  }
  return static_cast<int>(matrix_rank(m));
}

int rank_at(const PolyMatrix& M, const std::vector<Cyclotomic>& point) {
  int order = 1;
  for (const auto& x : point) order = std::lcm(order, x.order());
  std::vector<Cyclotomic> lifted;
  for (const auto& x : point) lifted.push_back(x.lift(order));
  std::vector<std::vector<Cyclotomic>> m;
  for (const auto& row : M) {
    std::vector<Cyclotomic> r;
    for (const auto& p : row)
      r.push_back(p.evaluate_in<Cyclotomic>(
          lifted, [&](const Q& c) { return Cyclotomic(order, c); },
          [](const Cyclotomic& a, const Cyclotomic& b) { return a * b; },
          [](const Cyclotomic& a, const Cyclotomic& b) { return a + b; }, Cyclotomic(order, Q(0))));
    m.push_back(std::move(r));
  }
  return field_rank(m);
}

namespace {

// Symmetric Laurent polynomial in z1, z2 as a Laurent polynomial in
// f1 = z1 + z2 and f2 = z1 z2.
Polynomial gl2_symmetric_reduce(const Polynomial& p) {
  int shift = 0;
  for (const auto& [m, c] : p.terms()) shift = std::max({shift, -m[0], -m[1]});
  Polynomial rest = p * Polynomial::monomial(2, Monomial::var(0, shift) * Monomial::var(1, shift), Q(1));
  const Polynomial e1 = Polynomial::variable(2, 0) + Polynomial::variable(2, 1);
  const Polynomial e2 = Polynomial::monomial(2, Monomial::var(0) * Monomial::var(1), Q(1));
  Polynomial out(2);
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().rbegin();
    int a = m[0], b = m[1];
    if (a < b) throw Error("GL2 reduction: input is not symmetric");
    Q coef = c;
    out.add_term(Monomial::var(0, a - b) * Monomial::var(1, b - shift), coef);
    rest -= e1.pow(a - b) * e2.pow(b) * coef;
  }
  return out;
}

}  // namespace

Gl2Fixture gl2_fixture() {
  const Polynomial z1 = Polynomial::variable(2, 0), z2 = Polynomial::variable(2, 1);
  const Polynomial f[2] = {z1 + z2, Polynomial::monomial(2, Monomial::var(0) * Monomial::var(1), Q(1))};
  const Polynomial sf[2] = {
      Polynomial::monomial(2, Monomial::var(0, -1), Q(1)) +
          Polynomial::monomial(2, Monomial::var(1, -1), Q(1)),
      Polynomial::monomial(2, Monomial::var(0, -1) * Monomial::var(1, -1), Q(1))};
  auto pairing = [](const Polynomial& a, const Polynomial& b) {
    Polynomial s(2);
    for (int k = 0; k < 2; ++k) s += a.euler_derivative(k) * b.euler_derivative(k);
    return s;
  };
  Gl2Fixture out;
  out.M.assign(2, std::vector<Polynomial>(2));
  out.Msigma.assign(2, std::vector<Polynomial>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      out.M[i][j] = gl2_symmetric_reduce(pairing(f[i], f[j]));
      out.Msigma[i][j] = gl2_symmetric_reduce(pairing(sf[i], f[j]));
    }
  return out;
}

}  // namespace invtrace
