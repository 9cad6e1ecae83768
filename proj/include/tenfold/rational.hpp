#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tenfold {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; parse() canonicalizes explicitly.
using Rational = mpq_class;
using Integer = mpz_class;
using Vec = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// n/d in canonical form; mpq_class(n, d) alone does not reduce.
inline Rational ratio(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rational& s);
// a += s * b
void axpy(Vec& a, const Rational& s, const Vec& b);
Rational dot(const Vec& a, const Vec& b);

} // namespace tenfold
