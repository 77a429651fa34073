#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "invtrace/rational.hpp"

namespace invtrace {

constexpr int kMaxVars = 12;

// Exponent vector. Entries may be negative so the same type serves Laurent
// monomials in torus coordinates.
struct Monomial {
  std::array<std::int32_t, kMaxVars> e{};

  std::int32_t& operator[](int i) { return e[i]; }
  std::int32_t operator[](int i) const { return e[i]; }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x != 0) return false;
    return true;
  }
  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.e[i] = power;
    return m;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic, variable 0 most significant.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] + b.e[i];
    return m;
  }
};

bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial quotient(const Monomial& a, const Monomial& b);  // a / b
bool coprime(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Q>;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial constant(int nvars, const Q& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, const Monomial& m, const Q& c);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Q constant_term() const;
  Q coeff(const Monomial& m) const;
  int total_degree() const;
  int degree_in(int var) const;
  std::size_t size() const { return terms_.size(); }

  void add_term(const Monomial& m, const Q& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Q& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Q& c) { return a *= c; }
  friend Polynomial operator*(const Q& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(int k) const;
  Polynomial derivative(int var) const;
  // z_i d/dz_i, the Euler operator on Laurent polynomials.
  Polynomial euler_derivative(int var) const;
  Polynomial substitute(int var, const Q& value) const;
  // Drops variable `var` (which must not occur) and renumbers the rest.
  Polynomial remove_variable(int var) const;
  // New variable i is old variable perm[i].
  Polynomial permute(const std::vector<int>& perm) const;
  Polynomial with_nvars(int nvars) const;

  Q evaluate(const std::vector<Q>& x) const;
  double evaluate(const std::vector<double>& x) const;

  // Generic evaluation into a commutative ring R; `lift` maps coefficients.
  template <class R>
  R evaluate_in(const std::vector<R>& x, const std::function<R(const Q&)>& lift,
                const std::function<R(const R&, const R&)>& mul,
                const std::function<R(const R&, const R&)>& add, R zero) const;

  // Scales to a primitive integer polynomial with positive leading
  // (lex-largest) coefficient.
  Polynomial primitive() const;
  bool has_integer_coefficients() const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string(const std::string& stem = "f") const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

template <class R>
R Polynomial::evaluate_in(const std::vector<R>& x, const std::function<R(const Q&)>& lift,
                          const std::function<R(const R&, const R&)>& mul,
                          const std::function<R(const R&, const R&)>& add, R zero) const {
  std::vector<std::vector<R>> powers(nvars_);
  R acc = zero;
  for (const auto& [m, c] : terms_) {
    R term = lift(c);
    for (int i = 0; i < nvars_; ++i) {
      int k = m[i];
      if (k == 0) continue;
      auto& p = powers[i];
      if (p.empty()) p.push_back(x[i]);
      while (static_cast<int>(p.size()) < k) p.push_back(mul(p.back(), x[i]));
      term = mul(term, p[k - 1]);
    }
    acc = add(acc, term);
  }
  return acc;
}

// Parses "2*f1^2 - 3/2*f1*f2 + 7" style expressions over variables
// <stem>1..<stem>n. Only + - * ^ and rational literals are accepted.
Polynomial parse_polynomial(const std::string& text, int nvars, const std::string& stem = "f");

}  // namespace invtrace
