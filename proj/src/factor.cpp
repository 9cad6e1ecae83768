// Factorization over Q: Yun squarefree split, then Zassenhaus (Berlekamp mod
// a small prime, linear Hensel lifting, subset recombination).
#include "tenfold/errors.hpp"
#include "tenfold/poly.hpp"

#include <algorithm>
#include <atomic>

namespace tenfold {

namespace {

std::atomic<int> g_degree_cap{16};

using ZPoly = std::vector<Integer>;

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = mod(c, m);
  trim(a);
  return a;
}

ZPoly sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Integer x = i < a.size() ? a[i] : Integer(0);
    Integer y = i < b.size() ? b[i] : Integer(0);
    r[i] = x - y;
  }
  return reduce(std::move(r), m);
}

ZPoly add(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    Integer x = i < a.size() ? a[i] : Integer(0);
    Integer y = i < b.size() ? b[i] : Integer(0);
    r[i] = x + y;
  }
  return reduce(std::move(r), m);
}

ZPoly mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(std::move(r), m);
}

ZPoly scale(const ZPoly& a, const Integer& s, const Integer& m) {
  ZPoly r = a;
  for (auto& c : r) c *= s;
  return reduce(std::move(r), m);
}

Integer inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw internal_error("factor: non-invertible leading coefficient");
  return r;
}

// Division by b, whose leading coefficient must be a unit mod m.
std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b, const Integer& m) {
  a = reduce(std::move(a), m);
  if (deg(a) < deg(b)) return {ZPoly{}, a};
  const Integer inv = inverse(b.back(), m);
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer f = mod(a[k + db] * inv, m);
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k + j] = mod(a[k + j] - f * b[j], m);
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

ZPoly monic(const ZPoly& a, const Integer& p) { return scale(a, inverse(a.back(), p), p); }

ZPoly gcd(ZPoly a, ZPoly b, const Integer& p) {
  while (!b.empty()) {
    ZPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a, p);
}

ZPoly derivative(const ZPoly& a, const Integer& m) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  return reduce(std::move(r), m);
}

ZPoly powmod(ZPoly base, Integer e, const ZPoly& f, const Integer& p) {
  ZPoly r{Integer(1)};
  base = divmod(base, f, p).second;
  while (e > 0) {
    if (e % 2 == 1) r = divmod(mul(r, base, p), f, p).second;
    base = divmod(mul(base, base, p), f, p).second;
    e /= 2;
  }
  return r;
}

// Kernel of a square matrix over F_p, returned as row vectors.
std::vector<std::vector<Integer>> kernel_mod(std::vector<std::vector<Integer>> a, const Integer& p) {
  const std::size_t n = a.size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    Integer inv = inverse(a[row][col], p);
    for (auto& x : a[row]) x = mod(x * inv, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Integer f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = mod(a[r][c] - f * a[row][c], p);
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Integer>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Integer> v(n, Integer(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = mod(-a[r][free], p);
    out.push_back(std::move(v));
  }
  return out;
}

// Monic irreducible factors of a monic squarefree f over F_p.
std::vector<ZPoly> berlekamp(const ZPoly& f, const Integer& p) {
  const std::size_t n = static_cast<std::size_t>(deg(f));
  if (n <= 1) return {f};
  // Column i of Q holds x^{ip} mod f; the kernel of Q - I gives the
  // Berlekamp subalgebra.
  std::vector<std::vector<Integer>> q(n, std::vector<Integer>(n, Integer(0)));
  ZPoly xp = powmod(ZPoly{Integer(0), Integer(1)}, p, f, p);
  ZPoly cur{Integer(1)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < cur.size(); ++k) q[k][i] = cur[k];
    cur = divmod(mul(cur, xp, p), f, p).second;
  }
  for (std::size_t i = 0; i < n; ++i) q[i][i] = mod(q[i][i] - 1, p);
  auto basis = kernel_mod(q, p);
  const std::size_t r = basis.size();
  std::vector<ZPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    ZPoly g(v.begin(), v.end());
    trim(g);
    if (deg(g) <= 0) continue;
    for (Integer s = 0; s < p && factors.size() < r; ++s) {
      ZPoly gs = sub(g, ZPoly{s}, p);
      std::vector<ZPoly> next;
      std::size_t total = factors.size();
      for (const auto& h : factors) {
        if (deg(h) <= 1 || total >= r) {
          next.push_back(h);
          continue;
        }
        ZPoly d = gcd(h, gs, p);
        if (!d.empty() && deg(d) > 0 && deg(d) < deg(h)) {
          next.push_back(d);
          next.push_back(divmod(h, d, p).first);
          ++total;
        } else {
          next.push_back(h);
        }
      }
      factors = std::move(next);
    }
  }
  if (factors.size() != r) throw internal_error("berlekamp: incomplete split");
  for (auto& h : factors) h = monic(h, p);
  return factors;
}

// Lifts a ≡ g h (mod p), g and h monic and coprime mod p, to mod p^k.
void hensel_pair(const ZPoly& a, ZPoly& g, ZPoly& h, const Integer& p, unsigned k) {
  // s g + t h = 1 mod p
  ZPoly r0 = g, r1 = h, s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [qq, rr] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(rr);
    ZPoly s2 = sub(s0, mul(qq, s1, p), p);
    ZPoly t2 = sub(t0, mul(qq, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw internal_error("hensel: factors not coprime");
  Integer inv = inverse(r0[0], p);
  ZPoly s = scale(s0, inv, p), t = scale(t0, inv, p);
  Integer pj = p;
  for (unsigned j = 1; j < k; ++j) {
    Integer next = pj * p;
    ZPoly e = sub(reduce(a, next), mul(g, h, next), next);
    for (auto& c : e) c /= pj;
    trim(e);
    ZPoly dg = divmod(mul(t, e, p), g, p).second;
    ZPoly dh = divmod(mul(s, e, p), h, p).second;
    g = add(g, scale(dg, pj, next), next);
    h = add(h, scale(dh, pj, next), next);
    pj = next;
  }
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    c = mod(c, m);
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g != 0)
    for (auto& c : a) c /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

ZPoly to_integer(const RatPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) l = lcm(l, Integer(c.get_den()));
  ZPoly r;
  for (const auto& c : f.coefficients()) r.push_back(Integer(c * l));
  return primitive(std::move(r));
}

RatPoly to_rational(const ZPoly& a) {
  Vec v;
  for (const auto& c : a) v.emplace_back(c);
  return RatPoly(std::move(v)).monic();
}

bool divides(const ZPoly& d, const ZPoly& f, ZPoly& quotient) {
  Vec vd, vf;
  for (const auto& c : d) vd.emplace_back(c);
  for (const auto& c : f) vf.emplace_back(c);
  auto [q, r] = divmod(RatPoly(vf), RatPoly(vd));
  if (!r.is_zero()) return false;
  ZPoly out;
  for (const auto& c : q.coefficients()) {
    if (c.get_den() != 1) return false;
    out.push_back(c.get_num());
  }
  quotient = std::move(out);
  return true;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<RatPoly> zassenhaus(const RatPoly& squarefree) {
  ZPoly f = to_integer(squarefree);
  const int n = deg(f);
  if (n <= 1) return {squarefree.monic()};

  Integer p = 2;
  for (;;) {
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    if (f.back() % p == 0) continue;
    ZPoly fp = reduce(f, p);
    if (deg(gcd(fp, derivative(fp, p), p)) == 0) break;
  }
  std::vector<ZPoly> local = berlekamp(monic(reduce(f, p), p), p);
  if (local.size() == 1) return {squarefree.monic()};

  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = Integer(2) * (Integer(1) << static_cast<unsigned>(n)) * (n + 1) * maxc * abs(f.back());
  unsigned k = 1;
  Integer modulus = p;
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }

  // Lift the monic target lc^{-1} f one factor at a time.
  ZPoly target = scale(f, inverse(f.back(), modulus), modulus);
  std::vector<ZPoly> lifted;
  ZPoly rest = target;
  for (std::size_t i = 0; i + 1 < local.size(); ++i) {
    ZPoly g = local[i];
    ZPoly h{Integer(1)};
    for (std::size_t j = i + 1; j < local.size(); ++j) h = mul(h, local[j], p);
    hensel_pair(rest, g, h, p, k);
    lifted.push_back(g);
    rest = h;
  }
  lifted.push_back(rest);

  std::vector<RatPoly> out;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::vector<std::size_t>> choices;
    std::vector<std::size_t> cur;
    subsets(pool.size(), size, 0, cur, choices);
    for (const auto& choice : choices) {
      ZPoly cand{mod(f.back(), modulus)};
      for (auto i : choice) cand = mul(cand, pool[i], modulus);
      cand = primitive(symmetric(cand, modulus));
      ZPoly quotient;
      if (deg(cand) > 0 && divides(cand, f, quotient)) {
        out.push_back(to_rational(cand));
        f = primitive(quotient);
        std::vector<ZPoly> keep;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(choice.begin(), choice.end(), i) == choice.end()) keep.push_back(pool[i]);
        pool = std::move(keep);
        found = true;
        break;
      }
    }
    if (!found) ++size;
  }
  if (deg(f) > 0) out.push_back(to_rational(f));
  return out;
}

} // namespace

void set_factor_degree_cap(int cap) { g_degree_cap = cap; }

int factor_degree_cap() { return g_degree_cap; }

std::vector<std::pair<RatPoly, int>> factor_squarefree_rational(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    if (part.degree() > g_degree_cap)
      throw precision_cap("factorization degree " + std::to_string(part.degree()) + " exceeds cap " +
                          std::to_string(g_degree_cap.load()));
    for (auto& f : zassenhaus(part)) out.emplace_back(std::move(f), mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    const auto& x = a.first.coefficients();
    const auto& y = b.first.coefficients();
    for (std::size_t i = x.size(); i-- > 0;)
      if (x[i] != y[i]) return x[i] < y[i];
    return a.second < b.second;
  });
  return out;
}

} // namespace tenfold
