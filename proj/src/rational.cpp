#include "invtrace/rational.hpp"

#include <cstdio>

#include "invtrace/errors.hpp"

namespace invtrace {

std::string to_pq(const Q& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Q parse_q(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) throw InvalidInput("empty rational literal");
  std::string str(s);
  if (str.front() == '+') str.erase(0, 1);
  Q q;
  if (q.set_str(str, 10) != 0) throw InvalidInput("bad rational literal '" + std::string(s) + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::string to_dyadic(const Q& x) {
  const Z& den = x.get_den();
  std::size_t k = mpz_scan1(den.get_mpz_t(), 0);
  Z pow2 = 1;
  pow2 <<= k;
  if (pow2 != den) return to_pq(x);
  return x.get_num().get_str() + "/2^" + std::to_string(k);
}

double to_double(const Q& x) { return x.get_d(); }

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace invtrace
