#include "invtrace/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "invtrace/errors.hpp"

namespace invtrace {

bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::max(a.e[i], b.e[i]);
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = a.e[i] - b.e[i];
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

Polynomial Polynomial::constant(int nvars, const Q& c) {
  Polynomial p(nvars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  p.add_term(Monomial::var(i), 1);
  return p;
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Q& c) {
  Polynomial p(nvars);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Q Polynomial::constant_term() const { return coeff(Monomial{}); }

Q Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void Polynomial::add_term(const Monomial& m, const Q& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ < o.nvars_) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ < o.nvars_) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Polynomial Polynomial::euler_derivative(int var) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) r.add_term(m, c * m[var]);
  return r;
}

Polynomial Polynomial::substitute(int var, const Q& value) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    d[var] = 0;
    Q v;
    mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), m[var]);
    mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), m[var]);
    v.canonicalize();
    r.add_term(d, c * v);
  }
  return r;
}

Polynomial Polynomial::remove_variable(int var) const {
  Polynomial r(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[var] != 0) throw Error("remove_variable: variable still occurs");
    Monomial d;
    for (int i = 0, j = 0; i < nvars_; ++i)
      if (i != var) d[j++] = m[i];
    r.add_term(d, c);
  }
  return r;
}

Polynomial Polynomial::permute(const std::vector<int>& perm) const {
  Polynomial r(static_cast<int>(perm.size()));
  for (const auto& [m, c] : terms_) {
    Monomial d;
    for (std::size_t i = 0; i < perm.size(); ++i) d[static_cast<int>(i)] = m[perm[i]];
    r.add_term(d, c);
  }
  return r;
}

Polynomial Polynomial::with_nvars(int nvars) const {
  Polynomial r = *this;
  r.nvars_ = nvars;
  return r;
}

Q Polynomial::evaluate(const std::vector<Q>& x) const {
  return evaluate_in<Q>(
      x, [](const Q& c) { return c; }, [](const Q& a, const Q& b) { return Q(a * b); },
      [](const Q& a, const Q& b) { return Q(a + b); }, Q(0));
}

double Polynomial::evaluate(const std::vector<double>& x) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < nvars_; ++i)
      if (m[i]) t *= std::pow(x[i], m[i]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Z g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Q scale = frac(l, g);
  if (terms_.rbegin()->second < 0) scale = -scale;
  return *this * scale;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then lex descending: reads like hand-written
  // polynomials.
  std::vector<std::pair<Monomial, Q>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return b.first < a.first;
  });
  for (const auto& [m, c] : sorted) {
    Q a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool one = m.is_one();
    if (a != 1 || one) {
      os << a.get_str();
      if (!one) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << names.at(i);
      if (m[i] != 1) os << "^" << m[i];
    }
  }
  return os.str();
}

std::string Polynomial::to_string(const std::string& stem) const {
  std::vector<std::string> names;
  for (int i = 0; i < nvars_; ++i) names.push_back(stem + std::to_string(i + 1));
  return to_string(names);
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, int nvars, const std::string& stem)
      : s_(s), nvars_(nvars), stem_(stem) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw InvalidInput("cannot parse polynomial '" + s_ + "' at offset " + std::to_string(pos_) +
                       ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(nvars_);
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (eat('-'))
        sign = -1;
      else if (eat('+'))
        sign = 1;
      else if (!first)
        break;
      Polynomial t = term();
      if (sign < 0) t = -t;
      acc += t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial t = factor();
    while (eat('*')) t = t * factor();
    return t;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_) fail("expected denominator");
      }
      return Polynomial::constant(nvars_, parse_q(s_.substr(start, pos_ - start)));
    }
    if (s_.compare(pos_, stem_.size(), stem_) == 0) {
      pos_ += stem_.size();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index after '" + stem_ + "'");
      int idx = std::stoi(s_.substr(start, pos_ - start));
      if (idx < 1 || idx > nvars_)
        fail("variable " + stem_ + std::to_string(idx) + " out of range 1.." +
             std::to_string(nvars_));
      return Polynomial::variable(nvars_, idx - 1);
    }
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int nvars_;
  std::string stem_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars, const std::string& stem) {
  if (nvars > kMaxVars) throw InvalidInput("too many variables");
  return Parser(text, nvars, stem).parse();
}

}  // namespace invtrace
