#include "invtrace/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "invtrace/errors.hpp"

namespace invtrace {

namespace {

struct Diagram {
  std::vector<std::pair<int, int>> edges;  // zero-based
  std::vector<int> half_lengths;           // short = 1
};

Diagram dynkin(char type, int n) {
  Diagram d;
  d.half_lengths.assign(n, 1);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.half_lengths[i] = 2;
      break;
    case 'C':
      chain(n);
      d.half_lengths[n - 1] = 2;
      break;
    case 'D':
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      d.half_lengths = {2, 2, 1, 1};
      break;
    case 'G':
      // alpha_1 short, so omega_1 is the highest short root.
      chain(2);
      d.half_lengths = {1, 3};
      break;
  }
  return d;
}

void validate(char type, int rank) {
  bool ok = false;
  switch (type) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw InvalidInput("not a simple type: " + std::string(1, type) + std::to_string(rank) +
                       " (expected A_n n>=1, B_n/C_n n>=2, D_n n>=4, E6, E7, E8, F4 or G2)");
  if (rank > 24) throw InvalidInput("rank above 24 is not supported");
}

RatMatrix invert(const IntMatrix& m) {
  int n = static_cast<int>(m.size());
  RatMatrix a(n, std::vector<Q>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Q inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Q f = a[r][c];
      for (int j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  RatMatrix out(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

long long int_determinant(const IntMatrix& m) {
  RatMatrix a(m.size(), std::vector<Q>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a[i][j] = m[i][j];
  Q det = 1;
  std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Q f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det.get_num().get_si();
}

}  // namespace

void RootDatum::build(char type, int rank) {
  validate(type, rank);
  type_ = type;
  rank_ = rank;
  Diagram d = dynkin(type, rank);
  half_lengths_ = d.half_lengths;
  cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) cartan_[i][i] = 2;
  for (auto [i, j] : d.edges) {
    int li = half_lengths_[i], lj = half_lengths_[j];
    cartan_[i][j] = -std::max(1, li / lj);
    cartan_[j][i] = -std::max(1, lj / li);
  }
  simply_laced_ = std::all_of(half_lengths_.begin(), half_lengths_.end(),
                              [](int x) { return x == 1; });

  cartan_inv_ = invert(cartan_);
  fundamental_group_order_ = static_cast<int>(int_determinant(cartan_));
  Z e = 1;
  for (const auto& row : cartan_inv_)
    for (const auto& x : row) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), x.get_den_mpz_t());
  center_exponent_ = static_cast<int>(e.get_si());

  // B(omega_i, omega_j) = Cinv[i][j] * (alpha_j, alpha_j)/2.
  form_B_.assign(rank, std::vector<Q>(rank));
  form_A_.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) form_B_[i][j] = cartan_inv_[i][j] * half_lengths_[j];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (form_B_[i][j] != form_B_[j][i]) throw Error("form B is not symmetric");
      Q a = form_B_[i][j] * fundamental_group_order_;
      if (a.get_den() != 1) throw Error("form A is not integral");
      form_A_[i][j] = static_cast<int>(a.get_num().get_si());
    }

  // Positive roots by alpha-strings, in simple-root coordinates.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> b(rank, 0);
    b[i] = 1;
    roots.push_back(b);
    seen.insert(b);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<int> beta = roots[k];
    for (int i = 0; i < rank; ++i) {
      int pairing = 0;  // <beta, alpha_i^vee>
      for (int j = 0; j < rank; ++j) pairing += beta[j] * cartan_[j][i];
      int p = 0;
      std::vector<int> down = beta;
      for (;;) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.insert(up).second) roots.push_back(up);
      }
    }
  }
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  positive_alpha_ = roots;
  positive_roots_.clear();
  for (const auto& beta : roots) {
    Weight w(rank, 0);
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) w[k] += beta[j] * cartan_[j][k];
    positive_roots_.push_back(w);
  }
  long long max_len = 0;
  for (const auto& w : positive_roots_) max_len = std::max(max_len, A(w, w));
  root_is_long_.clear();
  for (const auto& w : positive_roots_) root_is_long_.push_back(A(w, w) == max_len);

  highest_coeffs_ = positive_alpha_.back();
  highest_root_ = positive_roots_.back();
  for (std::size_t k = positive_roots_.size(); k-- > 0;)
    if (!root_is_long_[k] || simply_laced_) {
      highest_short_root_ = positive_roots_[k];
      break;
    }

  // |W| = prod over positive roots of (ht + 1) / ht.
  Q order = 1;
  for (const auto& beta : positive_alpha_) {
    int h = std::accumulate(beta.begin(), beta.end(), 0);
    order *= frac(h + 1, h);
  }
  order.canonicalize();
  weyl_order_ = order.get_num().get_ui();

  minus_w0_.assign(rank, 0);
  for (int i = 0; i < rank; ++i) {
    Weight neg(rank, 0);
    neg[i] = -1;
    Weight dom = dominant(neg);
    for (int j = 0; j < rank; ++j)
      if (dom[j] == 1) minus_w0_[i] = j;
  }
}

bool RootDatum::minus_one_in_weyl() const {
  for (int i = 0; i < rank_; ++i)
    if (minus_w0_[i] != i) return false;
  return true;
}

Weight RootDatum::fundamental_weight(int i) const {
  Weight w(rank_, 0);
  w[i] = 1;
  return w;
}

long long RootDatum::A(const Weight& a, const Weight& b) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < rank_; ++j) row += static_cast<long long>(form_A_[i][j]) * b[j];
    s += a[i] * row;
  }
  return s;
}

int RootDatum::coroot_pairing(const Weight& lambda, const Weight& beta) const {
  long long num = 2 * A(lambda, beta), den = A(beta, beta);
  if (num % den) throw Error("coroot pairing is not integral; is beta a root?");
  return static_cast<int>(num / den);
}

std::vector<Q> RootDatum::to_root_coordinates(const Weight& lambda) const {
  std::vector<Q> c(rank_);
  for (int k = 0; k < rank_; ++k)
    for (int i = 0; i < rank_; ++i)
      if (lambda[i]) c[k] += cartan_inv_[i][k] * lambda[i];
  return c;
}

long long RootDatum::scaled_height(const Weight& lambda) const {
  Q h = 0;
  for (const auto& c : to_root_coordinates(lambda)) h += c;
  h *= fundamental_group_order_;
  return h.get_num().get_si();
}

Weight RootDatum::reflect(const Weight& lambda, int i) const {
  Weight out = lambda;
  int c = lambda[i];
  if (c == 0) return out;
  for (int j = 0; j < rank_; ++j) out[j] -= c * cartan_[i][j];
  return out;
}

Weight RootDatum::dominant(const Weight& lambda, int* length) const {
  Weight w = lambda;
  int steps = 0;
  for (;;) {
    int i = 0;
    while (i < rank_ && w[i] >= 0) ++i;
    if (i == rank_) break;
    int c = w[i];
    for (int j = 0; j < rank_; ++j) w[j] -= c * cartan_[i][j];
    ++steps;
  }
  if (length) *length = steps;
  return w;
}

bool RootDatum::is_dominant(const Weight& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x >= 0; });
}

std::vector<Weight> RootDatum::orbit(const Weight& lambda) const {
  std::set<Weight> seen{lambda};
  std::vector<Weight> out{lambda};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      if (out[k][i] == 0) continue;
      Weight r = reflect(out[k], i);
      if (seen.insert(r).second) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t RootDatum::orbit_size(const Weight& lambda) const {
  Q stab = 1;
  for (const auto& beta : positive_alpha_) {
    bool inside = true;
    int h = 0;
    for (int j = 0; j < rank_; ++j) {
      if (beta[j] && lambda[j] != 0) inside = false;
      h += beta[j];
    }
    if (inside) stab *= frac(h + 1, h);
  }
  stab.canonicalize();
  return weyl_order_ / stab.get_num().get_ui();
}

std::vector<std::vector<int>> RootDatum::diagram_automorphisms() const {
  std::vector<std::vector<int>> out;
  std::vector<int> perm(rank_, -1);
  std::vector<bool> used(rank_, false);
  std::function<void(int)> extend = [&](int i) {
    if (i == rank_) {
      out.push_back(perm);
      return;
    }
    for (int c = 0; c < rank_; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k) {
        int pk = k == i ? c : perm[k];
        if (cartan_[i][k] != cartan_[c][pk] || cartan_[k][i] != cartan_[pk][c]) ok = false;
      }
      if (!ok) continue;
      perm[i] = c;
      used[c] = true;
      extend(i + 1);
      used[c] = false;
    }
  };
  extend(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string RootDatum::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "invtrace.datum/1";
  j["type"] = std::string(1, type_);
  j["rank"] = rank_;
  j["cartan"] = cartan_;
  j["positive_roots"] = positive_roots_;
  j["highest_root_coefficients"] = highest_coeffs_;
  j["fundamental_group_order"] = fundamental_group_order_;
  j["center_exponent"] = center_exponent_;
  auto rat = [](const RatMatrix& m) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& row : m) {
      nlohmann::ordered_json r = nlohmann::ordered_json::array();
      for (const auto& x : row) r.push_back(to_pq(x));
      a.push_back(r);
    }
    return a;
  };
  j["form_B"] = rat(form_B_);
  RatMatrix a(rank_, std::vector<Q>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) a[i][k] = form_A_[i][k];
  j["form_A"] = rat(a);
  std::vector<int> perm1;
  for (int x : minus_w0_) perm1.push_back(x + 1);
  j["minus_w0"] = perm1;
  j["weyl_order"] = weyl_order_;
  j["dimension"] = dimension();
  return j.dump();
}

std::string RootDatum::hash() const { return content_hash(to_json()); }

DatumPtr build_root_datum(char type, int rank) {
  type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
  static std::mutex mu;
  static std::map<std::pair<char, int>, DatumPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->build(type, rank);
  cache.emplace(key, d);
  return d;
}

DatumPtr build_root_datum(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw InvalidInput("bad type name '" + name + "' (expected e.g. G2, F4, A3)");
  int rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw InvalidInput("bad type name '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
    if (rank > 1000) throw InvalidInput("bad type name '" + name + "'");
  }
  return build_root_datum(name[0], rank);
}

std::vector<CornerClass> corner_classes(const RootDatum& datum) {
  int r = datum.rank();
  std::vector<CornerClass> out;
  CornerClass id;
  id.index = 0;
  id.kac.assign(r + 1, 0);
  id.kac[0] = 1;
  id.order_bound = 1;
  id.cocharacter.assign(r, Q(0));
  out.push_back(id);
  for (int i = 0; i < r; ++i) {
    CornerClass c;
    c.index = i + 1;
    c.kac.assign(r + 1, 0);
    c.kac[i + 1] = 1;
    int a = datum.highest_root_coefficients()[i];
    c.order_bound = a * datum.center_exponent();
    c.cocharacter.assign(r, Q(0));
    c.cocharacter[i] = frac(1, a);
    out.push_back(c);
  }
  return out;
}

void for_each_weyl_element(const RootDatum& datum,
                           const std::function<void(const IntMatrix&, int)>& visit,
                           std::uint64_t cap) {
  if (datum.weyl_order() > cap)
    throw Infeasible("Weyl group enumeration refused: |W(" + datum.name() +
                     ")| = " + std::to_string(datum.weyl_order()) + " exceeds the cap " +
                     std::to_string(cap));
  int r = datum.rank();
  struct Frame {
    IntMatrix m;
    Weight v;  // w(rho)
    int next_child;
  };
  IntMatrix id(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) id[i][i] = 1;
  std::vector<Frame> stack;
  stack.push_back({id, datum.rho(), 0});
  visit(id, 0);
  const auto& C = datum.cartan();
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_child == r) {
      stack.pop_back();
      continue;
    }
    int i = f.next_child++;
    if (f.v[i] <= 0) continue;
    Weight u = datum.reflect(f.v, i);
    bool canonical = true;
    for (int j = 0; j < i; ++j)
      if (u[j] < 0) {
        canonical = false;
        break;
      }
    if (!canonical) continue;
    // s_i * W: subtract alpha_i (column) times row i of W.
    IntMatrix m = f.m;
    for (int row = 0; row < r; ++row) {
      int a = C[i][row];
      if (a == 0) continue;
      for (int col = 0; col < r; ++col) m[row][col] -= a * f.m[i][col];
    }
    int len = static_cast<int>(stack.size());
    visit(m, len);
    stack.push_back({std::move(m), std::move(u), 0});
  }
}

std::vector<WeylElement> weyl_elements(const RootDatum& datum, std::uint64_t cap) {
  std::vector<WeylElement> out;
  out.reserve(datum.weyl_order() <= cap ? datum.weyl_order() : 0);
  for_each_weyl_element(
      datum, [&](const IntMatrix& m, int len) { out.push_back({m, len}); }, cap);
  return out;
}

long long weyl_min_trace(const RootDatum& datum, std::uint64_t cap) {
  long long best = datum.rank();
  for_each_weyl_element(
      datum,
      [&](const IntMatrix& m, int) {
        long long t = 0;
        for (int i = 0; i < datum.rank(); ++i) t += m[i][i];
        best = std::min(best, t);
      },
      cap);
  return best;
}

}  // namespace invtrace
