#include "tenfold/poly.hpp"

#include "tenfold/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tenfold {

RatPoly::RatPoly(Vec coefficients) : c_(std::move(coefficients)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(Vec{c}); }

RatPoly RatPoly::x() { return RatPoly(Vec{Rational(0), Rational(1)}); }

void RatPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RatPoly::operator()(const Rational& t) const {
  Rational r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= t;
    r += c_[i];
  }
  return r;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return RatPoly(scale(c_, Rational(1 / leading())));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  Vec d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  Vec r(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  Vec r(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) - b.coefficient(i);
  return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  Vec r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (sgn(y[j]) != 0) r[i + j] += x[i] * y[j];
  }
  return RatPoly(std::move(r));
}

RatPoly operator*(const Rational& s, const RatPoly& a) { return RatPoly(scale(a.coefficients(), s)); }

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw invalid_input("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  Vec r = a.coefficients();
  const auto& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  Vec q(r.size() - db);
  const Rational inv = 1 / Rational(b.leading());
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational f = r[k + db] * inv;
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      if (sgn(d[j]) != 0) r[k + j] -= f * d[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }

RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Bezout extended_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b;
  RatPoly s0 = RatPoly::constant(1), s1{};
  RatPoly t0{}, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    RatPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / Rational(r0.leading());
  return {inv * r0, inv * s0, inv * t0};
}

RatPoly inverse_mod(const RatPoly& b, const RatPoly& m) {
  Bezout e = extended_gcd(b % m, m);
  if (e.g.degree() != 0) throw internal_error("inverse_mod: arguments are not coprime");
  return e.s % m;
}

RatPoly compose_mod(const RatPoly& h, const RatPoly& g, const RatPoly& m) {
  RatPoly r;
  const auto& c = h.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = r * g + RatPoly::constant(c[i]);
    if (!m.is_zero()) r = r % m;
  }
  return r;
}

std::string to_string(const RatPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (sgn(c[i]) == 0) continue;
    Rational a = abs(c[i]);
    if (first) {
      if (sgn(c[i]) < 0) os << "-";
    } else {
      os << (sgn(c[i]) < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

RatPoly minimal_polynomial(const RatMatrix& m) {
  if (!m.square()) throw invalid_input("minimal_polynomial: matrix must be square");
  const std::size_t n = m.rows();
  auto flatten = [&](const RatMatrix& a) {
    Vec v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    return v;
  };
  SpanReducer span(n * n);
  RatMatrix power = RatMatrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec v = flatten(power);
    if (!span.insert(v)) {
      Vec c = *span.coordinates(v);
      Vec coeffs(k + 1);
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -c[i];
      coeffs[k] = 1;
      return RatPoly(std::move(coeffs));
    }
    power = power * m;
  }
  throw internal_error("minimal_polynomial: Cayley-Hamilton bound exceeded");
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw invalid_input("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<RatPoly, int>> out;
  RatPoly f = p.monic();
  if (f.degree() == 0) return out;
  RatPoly fp = f.derivative();
  RatPoly a = gcd(f, fp);
  RatPoly b = f / a;
  RatPoly c = fp / a;
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    RatPoly ai = gcd(b, d);
    RatPoly bn = b / ai;
    RatPoly cn = d / ai;
    d = cn - bn.derivative();
    if (ai.degree() > 0) out.emplace_back(ai.monic(), i);
    b = bn;
  }
  return out;
}

namespace {

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> s{p, p.derivative()};
  while (!s.back().is_zero()) {
    RatPoly r = s[s.size() - 2] % s.back();
    s.push_back(Rational(-1) * r);
  }
  s.pop_back();
  return s;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t variations_at(const std::vector<RatPoly>& seq, const Rational& t) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& q : seq) s.push_back(sgn(q(t)));
  return variations(s);
}

std::size_t variations_at_infinity(const std::vector<RatPoly>& seq, bool positive) {
  std::vector<int> s;
  for (const auto& q : seq) {
    int sg = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

Rational cauchy_bound(const RatPoly& p) {
  Rational m = 0;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Rational(abs(c[i] / p.leading())));
  return m + 1;
}

// A point in (lo, hi) where p does not vanish, near the midpoint.
Rational split_point(const RatPoly& p, const Rational& lo, const Rational& hi) {
  Rational mid = (lo + hi) / 2;
  for (long k = 3; sgn(p(mid)) == 0; ++k) mid = lo + (hi - lo) * Rational(k - 1, 2 * k - 1);
  return mid;
}

} // namespace

std::size_t real_root_count(const RatPoly& p) {
  if (p.degree() <= 0) return 0;
  auto seq = sturm_sequence(p);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

std::size_t real_root_count(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.degree() <= 0 || a >= b) return 0;
  auto seq = sturm_sequence(p);
  return variations_at(seq, a) - variations_at(seq, b);
}

void RealRoot::refine(long bits) {
  Rational width(1);
  if (bits >= 0)
    width /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(bits));
  else
    width *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-bits));
  const int slo = sgn(poly(lo));
  while (hi - lo > width) {
    Rational mid = split_point(poly, lo, hi);
    if (sgn(poly(mid)) == slo)
      lo = mid;
    else
      hi = mid;
  }
}

long RealRoot::precision_bits() const {
  Rational w = hi - lo;
  long bits = 0;
  while (w < 1) {
    w *= 2;
    ++bits;
  }
  return bits;
}

std::vector<RealRoot> isolate_real_roots(const RatPoly& squarefree) {
  std::vector<RealRoot> out;
  if (squarefree.degree() <= 0) return out;
  const RatPoly p = squarefree.monic();
  auto seq = sturm_sequence(p);
  Rational m = cauchy_bound(p);
  struct Span {
    Rational lo, hi;
  };
  std::vector<Span> work{{-m, m}};
  while (!work.empty()) {
    Span s = work.back();
    work.pop_back();
    const std::size_t n = variations_at(seq, s.lo) - variations_at(seq, s.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back({p, s.lo, s.hi});
      continue;
    }
    Rational mid = split_point(p, s.lo, s.hi);
    work.push_back({mid, s.hi});
    work.push_back({s.lo, mid});
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return out;
}

int sign_at(const RatPoly& q, RealRoot& root, long cap_bits) {
  if (q.is_zero()) return 0;
  if (q.degree() == 0) return sgn(q.leading());
  const RatPoly g = gcd(q, root.poly);
  if (g.degree() > 0 && real_root_count(g, root.lo, root.hi) == 1) return 0;
  RatPoly qs = q.monic();
  {
    auto parts = squarefree_decomposition(q);
    qs = RatPoly::constant(1);
    for (const auto& [f, mult] : parts) qs = qs * f;
  }
  long bits = std::max(root.precision_bits(), 8L);
  for (;;) {
    if (real_root_count(qs, root.lo, root.hi) == 0 && sgn(q(root.hi)) != 0) return sgn(q(root.hi));
    if (bits > cap_bits)
      throw precision_cap("sign certification needs more than " + std::to_string(cap_bits) + " bits");
    bits *= 2;
    root.refine(std::min(bits, cap_bits + 1));
  }
}

} // namespace tenfold
