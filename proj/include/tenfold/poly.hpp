#pragma once

#include "tenfold/linalg.hpp"
#include "tenfold/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace tenfold {

// Univariate polynomial over Q, coefficients lowest degree first, trimmed so
// the leading coefficient is nonzero (the zero polynomial has no terms).
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(Vec coefficients);
  RatPoly(std::initializer_list<Rational> coefficients);

  static RatPoly constant(const Rational& c);
  static RatPoly x();

  bool is_zero() const { return c_.empty(); }
  // Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Vec& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& t) const;
  RatPoly monic() const;
  RatPoly derivative() const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
  void trim();
  Vec c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rational& s, const RatPoly& a);
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// s, t with s a + t b = gcd(a, b) (monic).
struct Bezout {
  RatPoly g, s, t;
};
Bezout extended_gcd(const RatPoly& a, const RatPoly& b);
// b^{-1} mod m for coprime b, m.
RatPoly inverse_mod(const RatPoly& b, const RatPoly& m);
// h(g(x)) reduced modulo m (m may be zero for no reduction).
RatPoly compose_mod(const RatPoly& h, const RatPoly& g, const RatPoly& m);

std::string to_string(const RatPoly& p, const std::string& var = "x");

// Monic least-degree p with p(m) = 0.
RatPoly minimal_polynomial(const RatMatrix& m);

// Squarefree decomposition (Yun): monic squarefree parts with multiplicities.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

// Complete factorization into monic Q-irreducibles with multiplicities,
// ordered by (degree, coefficients). Throws precision_cap when a squarefree
// part has degree above the configured cap.
std::vector<std::pair<RatPoly, int>> factor_squarefree_rational(const RatPoly& p);
void set_factor_degree_cap(int cap);
int factor_degree_cap();

// Number of distinct real roots of a squarefree polynomial (Sturm).
std::size_t real_root_count(const RatPoly& p);
// Distinct real roots of p in the half-open interval (a, b].
std::size_t real_root_count(const RatPoly& p, const Rational& a, const Rational& b);

// A real algebraic number: a root of squarefree `poly`, the unique one in (lo, hi].
struct RealRoot {
  RatPoly poly;
  Rational lo, hi;
  // Halves the isolating interval until hi - lo <= 2^-bits.
  void refine(long bits);
  long precision_bits() const;
};

std::vector<RealRoot> isolate_real_roots(const RatPoly& squarefree);

// Certified sign of q at the root. Refines the isolating interval until q
// has no root in it; throws precision_cap if that needs more than `cap_bits`.
// q(root) = 0 is detected exactly via gcd and reported as 0.
int sign_at(const RatPoly& q, RealRoot& root, long cap_bits);

} // namespace tenfold
