#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace invtrace {

using Q = mpq_class;
using Z = mpz_class;

// Canonicalized n/d; mpq arithmetic requires canonical operands.
inline Q frac(const Z& n, const Z& d) {
  Q q(n, d);
  q.canonicalize();
  return q;
}

// Always "p/q", including q = 1.
std::string to_pq(const Q& x);
// Accepts "p/q", "p" and surrounding whitespace.
Q parse_q(std::string_view s);

// Dyadic endpoints render as "a/2^k".
std::string to_dyadic(const Q& x);

double to_double(const Q& x);

// 64-bit FNV-1a, hex encoded; stable across runs and platforms.
std::string content_hash(std::string_view bytes);

}  // namespace invtrace
