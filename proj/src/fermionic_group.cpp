#include "tenfold/fermionic_group.hpp"

#include "tenfold/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace tenfold {

namespace {

std::optional<std::string> group_diagnostic(const CayleyTable& t, std::size_t identity) {
  const std::size_t n = t.size();
  if (n == 0) return "group is empty";
  for (const auto& row : t) {
    if (row.size() != n) return "Cayley table is not square";
    for (auto x : row)
      if (x >= n) return "Cayley table entry out of range";
  }
  if (identity >= n) return "identity index out of range";
  for (std::size_t g = 0; g < n; ++g)
    if (t[identity][g] != g || t[g][identity] != g) return "identity axiom fails at element " + std::to_string(g);
  for (std::size_t g = 0; g < n; ++g) {
    const auto& row = t[g];
    if (std::find(row.begin(), row.end(), identity) == row.end())
      return "element " + std::to_string(g) + " has no inverse";
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]])
          return "associativity fails on (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                 std::to_string(c) + ")";
  return std::nullopt;
}

std::optional<std::string> homomorphism_diagnostic(const CayleyTable& t, const std::vector<int>& f,
                                                   const std::string& name) {
  if (f.size() != t.size()) return name + " has wrong length";
  for (int x : f)
    if (x != 0 && x != 1) return name + " entries must be 0 or 1";
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (f[t[a][b]] != (f[a] ^ f[b]))
        return name + " is not a homomorphism at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
  return std::nullopt;
}

std::vector<std::size_t> element_orders(const FermionicGroup& g) {
  std::vector<std::size_t> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t k = 1;
    for (std::size_t y = x; y != g.identity; y = g.mul(y, x)) ++k;
    out[x] = k;
  }
  return out;
}

std::vector<std::size_t> generating_set(const FermionicGroup& g) {
  std::vector<std::size_t> gens;
  std::vector<bool> reached(g.order(), false);
  reached[g.identity] = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    // closure of the subgroup generated so far
    std::vector<std::size_t> members;
    for (std::size_t y = 0; y < g.order(); ++y)
      if (reached[y]) members.push_back(y);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (auto s : gens) {
        std::size_t z = g.mul(members[i], s);
        if (!reached[z]) {
          reached[z] = true;
          members.push_back(z);
        }
      }
  }
  return gens;
}

CayleyTable xor_table(std::size_t n) {
  CayleyTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = a ^ b;
  return t;
}

} // namespace

std::optional<std::string> validate(const FermionicGroup& g) {
  if (auto d = group_diagnostic(g.table, g.identity)) return d;
  const std::size_t n = g.order();
  if (g.fermion_parity >= n) return "fermion_parity index out of range";
  const std::size_t f = g.fermion_parity;
  if (g.mul(f, f) != g.identity) return "fermion_parity does not square to the identity";
  for (std::size_t x = 0; x < n; ++x)
    if (g.mul(f, x) != g.mul(x, f)) return "fermion_parity is not central";
  if (g.theta.size() != n) return "theta has wrong length";
  if (g.theta[f] != 0) return "theta(fermion_parity) \xE2\x89\xA0 0";
  return homomorphism_diagnostic(g.table, g.theta, "theta");
}

FermionicGroup opposite_group(const FermionicGroup& g) {
  if (auto d = validate(g)) throw invalid_input("opposite_group: " + *d);
  FermionicGroup out = g;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (g.theta[a] && g.theta[b]) out.table[a][b] = g.mul(g.fermion_parity, g.mul(a, b));
  out.label = g.label.empty() ? "" : "(" + g.label + ")^op";
  return out;
}

bool isomorphic(const FermionicGroup& a, const FermionicGroup& b) {
  if (a.order() != b.order()) return false;
  const auto oa = element_orders(a), ob = element_orders(b);
  {
    auto sa = oa, sb = ob;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  const auto gens = generating_set(a);
  const std::size_t n = a.order();
  std::vector<std::size_t> images(gens.size());

  auto extend = [&]() -> bool {
    std::vector<std::size_t> map(n, n);
    map[a.identity] = b.identity;
    std::vector<std::size_t> queue{a.identity};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        std::size_t y = a.mul(queue[i], gens[s]);
        std::size_t img = b.mul(map[queue[i]], images[s]);
        if (map[y] == n) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          return false;
        }
      }
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      if (map[x] == n || hit[map[x]]) return false;
      hit[map[x]] = true;
      if (a.theta[x] != b.theta[map[x]]) return false;
    }
    if (map[a.fermion_parity] != b.fermion_parity) return false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t s) -> bool {
    if (s == gens.size()) return extend();
    for (std::size_t y = 0; y < n; ++y) {
      if (ob[y] != oa[gens[s]] || b.theta[y] != a.theta[gens[s]]) continue;
      images[s] = y;
      if (search(s + 1)) return true;
    }
    return false;
  };
  return search(0);
}

GradedAlgebra fermionic_group_algebra(const FermionicGroup& g) {
  if (auto d = validate(g)) throw invalid_input("fermionic group: " + *d);
  if (g.fermion_parity == g.identity)
    throw invalid_input("bosonic group: (-1)^F = 1, so the fermionic group algebra is zero");
  const std::size_t n = g.order();
  std::vector<std::size_t> reps;
  std::vector<std::size_t> index(n);
  for (std::size_t x = 0; x < n; ++x)
    if (x < g.mul(g.fermion_parity, x)) reps.push_back(x);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    index[reps[i]] = i;
    index[g.mul(g.fermion_parity, reps[i])] = i;
  }
  auto is_rep = [&](std::size_t x) { return x < g.mul(g.fermion_parity, x); };
  const std::size_t m = reps.size();
  std::vector<int> parity(m);
  GradedAlgebra::Table mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    parity[i] = g.theta[reps[i]];
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t x = g.mul(reps[i], reps[j]);
      mul[i * m + j] = {{static_cast<std::uint32_t>(index[x]), Rational(is_rep(x) ? 1 : -1)}};
    }
  }
  Vec unit(m);
  unit[index[g.identity]] = 1;
  std::string label = g.label.empty() ? "" : "C*_f(" + g.label + ")";
  return GradedAlgebra(std::move(parity), std::move(mul), std::move(unit), std::move(label), true);
}

FermionicGroup clifford_monomial_group(std::size_t p, std::size_t q) {
  const GradedAlgebra cl = clifford(p, q);
  const std::size_t masks = cl.dim(), n = 2 * masks;
  FermionicGroup g;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < masks; ++a)
    for (std::size_t b = 0; b < masks; ++b) {
      const Term& t = cl.product(a, b).front();
      const std::size_t neg = sgn(t.value) < 0 ? 1 : 0;
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t r = 0; r < 2; ++r) g.table[2 * a + s][2 * b + r] = 2 * t.k + (neg ^ s ^ r);
    }
  g.identity = 0;
  g.fermion_parity = 1;
  g.theta.resize(n);
  for (std::size_t x = 0; x < n; ++x) g.theta[x] = std::popcount(x / 2) % 2;
  g.label = "Mon(" + cl.label() + ")";
  return g;
}

FermionicGroup z4_tf() {
  FermionicGroup g;
  g.table.assign(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) g.table[a][b] = (a + b) % 4;
  g.identity = 0;
  g.fermion_parity = 2;
  g.theta = {0, 1, 0, 1};
  g.label = "Z4^{TF}";
  return g;
}

FermionicGroup z2f_z2t() {
  FermionicGroup g;
  g.table = xor_table(4);
  g.identity = 0;
  g.fermion_parity = 2;
  g.theta = {0, 1, 0, 1};
  g.label = "Z2^F x Z2^T";
  return g;
}

FermionicGroup quaternion_group(int theta_i, int theta_j) {
  const GradedAlgebra h = quaternions();
  FermionicGroup g;
  g.table.assign(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const Term& t = h.product(a, b).front();
      const std::size_t neg = sgn(t.value) < 0 ? 1 : 0;
      for (std::size_t s = 0; s < 2; ++s)
        for (std::size_t r = 0; r < 2; ++r) g.table[2 * a + s][2 * b + r] = 2 * t.k + (neg ^ s ^ r);
    }
  g.identity = 0;
  g.fermion_parity = 1;
  const int th[4] = {0, theta_i, theta_j, theta_i ^ theta_j};
  g.theta.resize(8);
  for (std::size_t x = 0; x < 8; ++x) g.theta[x] = th[x / 2];
  g.label = "Q8";
  return g;
}

FermionicGroup bosonic_klein_group() {
  FermionicGroup g;
  g.table = xor_table(4);
  g.identity = 0;
  g.fermion_parity = 0;
  g.theta = {0, 1, 0, 1};
  g.label = "Z2 x Z2";
  return g;
}

std::string CTGroupSpec::code() const {
  if (ct_only) return "S";
  auto c = [](int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; };
  return std::string{c(sign_C), c(sign_T)};
}

std::vector<CTGroupSpec> ct_enumerate() {
  return {
      {0, 0, false, "A"},   {0, 0, true, "AIII"},  {0, 1, false, "D"},   {1, 1, false, "BDI"},
      {1, 0, false, "AI"},  {1, -1, false, "CI"},  {0, -1, false, "C"},  {-1, -1, false, "CII"},
      {-1, 0, false, "AII"}, {-1, 1, false, "DIII"},
  };
}

namespace {

GradedAlgebra coefficient_algebra(Coefficient c) {
  switch (c) {
  case Coefficient::real: return real_field();
  case Coefficient::complex: return complex_clifford(0);
  default: return quaternions();
  }
}

std::size_t coefficient_dim(Coefficient c) {
  return c == Coefficient::real ? 1 : c == Coefficient::complex ? 2 : 4;
}

RatMatrix action_matrix(const TwistedData& d, std::size_t g) {
  switch (d.coefficient) {
  case Coefficient::real: return RatMatrix::identity(1);
  case Coefficient::complex: {
    RatMatrix m = RatMatrix::identity(2);
    if (d.phi[g]) m(1, 1) = -1;
    return m;
  }
  default: return d.action[g];
  }
}

} // namespace

void check_twisted_data(const TwistedData& d) {
  if (auto e = group_diagnostic(d.table, d.identity)) throw invalid_input("twisted data: " + *e);
  if (auto e = homomorphism_diagnostic(d.table, d.theta, "theta")) throw invalid_input("twisted data: " + *e);
  const std::size_t n = d.table.size(), m = coefficient_dim(d.coefficient);
  const GradedAlgebra k = coefficient_algebra(d.coefficient);
  if (d.coefficient == Coefficient::complex)
    if (auto e = homomorphism_diagnostic(d.table, d.phi, "phi")) throw invalid_input("twisted data: " + *e);
  if (d.coefficient == Coefficient::quaternion) {
    if (d.action.size() != n) throw invalid_input("twisted data: action needs one matrix per element");
    for (std::size_t g = 0; g < n; ++g) {
      const RatMatrix& a = d.action[g];
      if (a.rows() != 4 || a.cols() != 4) throw invalid_input("twisted data: action matrices must be 4x4");
      if (a.column(0) != k.unit()) throw invalid_input("twisted data: alpha_g(1) != 1");
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
          if (a * k.multiply(k.basis_vector(x), k.basis_vector(y)) != k.multiply(a.column(x), a.column(y)))
            throw invalid_input("twisted data: alpha_" + std::to_string(g) + " is not an algebra automorphism");
    }
  }
  if (d.cocycle.size() != n) throw invalid_input("twisted data: cocycle table has wrong size");
  for (std::size_t g = 0; g < n; ++g) {
    if (d.cocycle[g].size() != n) throw invalid_input("twisted data: cocycle table has wrong size");
    for (std::size_t h = 0; h < n; ++h) {
      const Vec& t = d.cocycle[g][h];
      if (t.size() != m) throw invalid_input("twisted data: cocycle value has wrong length");
      if (d.coefficient == Coefficient::quaternion) {
        if (dot(t, t) != 1) throw invalid_input("twisted data: cocycle value is not a unit quaternion");
      } else {
        std::size_t nonzero = 0;
        for (const auto& x : t)
          if (sgn(x) != 0) {
            ++nonzero;
            if (abs(x) != 1) nonzero += 2;
          }
        if (nonzero != 1)
          throw invalid_input("twisted data: cocycle values must be fourth roots of unity; general cyclotomic "
                              "values are not supported");
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g)
    if (d.cocycle[d.identity][g] != k.unit() || d.cocycle[g][d.identity] != k.unit())
      throw invalid_input("twisted data: cocycle is not normalized");
  std::vector<RatMatrix> alpha;
  for (std::size_t g = 0; g < n; ++g) alpha.push_back(action_matrix(d, g));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t gh = d.table[g][h];
      const Vec& tgh = d.cocycle[g][h];
      for (std::size_t x = 0; x < m; ++x) {
        Vec lhs = k.multiply(alpha[g] * (alpha[h] * k.basis_vector(x)), tgh);
        Vec rhs = k.multiply(tgh, alpha[gh] * k.basis_vector(x));
        if (lhs != rhs)
          throw invalid_input("twisted data: alpha_g alpha_h != Ad(tau(g,h)) alpha_gh at (" + std::to_string(g) +
                              ", " + std::to_string(h) + ")");
      }
      for (std::size_t l = 0; l < n; ++l) {
        Vec lhs = k.multiply(alpha[g] * d.cocycle[h][l], d.cocycle[g][d.table[h][l]]);
        Vec rhs = k.multiply(tgh, d.cocycle[gh][l]);
        if (lhs != rhs)
          throw invalid_input("twisted data: cocycle condition fails at (" + std::to_string(g) + ", " +
                              std::to_string(h) + ", " + std::to_string(l) + ")");
      }
    }
}

GradedAlgebra twisted_group_algebra(const TwistedData& d, const std::vector<int>& parity, std::string label) {
  check_twisted_data(d);
  const std::size_t n = d.table.size(), m = coefficient_dim(d.coefficient), dim = n * m;
  if (parity.size() != n) throw invalid_input("twisted group algebra: parity has wrong length");
  const GradedAlgebra k = coefficient_algebra(d.coefficient);
  std::vector<RatMatrix> alpha;
  for (std::size_t g = 0; g < n; ++g) alpha.push_back(action_matrix(d, g));
  std::vector<int> par(dim);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t a = 0; a < m; ++a) par[g * m + a] = parity[g];
  GradedAlgebra::Table mul(dim * dim);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t h = 0; h < n; ++h)
        for (std::size_t b = 0; b < m; ++b) {
          // c_a j(g) c_b j(h) = c_a alpha_g(c_b) tau(g,h) j(gh)
          Vec x = k.multiply(k.multiply(k.basis_vector(a), alpha[g].column(b)), d.cocycle[g][h]);
          const std::size_t gh = d.table[g][h];
          auto& row = mul[(g * m + a) * dim + h * m + b];
          for (std::size_t c = 0; c < m; ++c)
            if (sgn(x[c]) != 0) row.push_back({static_cast<std::uint32_t>(gh * m + c), x[c]});
        }
  Vec unit(dim);
  unit[d.identity * m] = 1;
  return GradedAlgebra(std::move(par), std::move(mul), std::move(unit), std::move(label), true);
}

TwistedData ct_twisted_data(const CTGroupSpec& spec) {
  TwistedData d;
  d.coefficient = Coefficient::complex;
  const Vec one{Rational(1), Rational(0)};
  if (spec.ct_only) {
    d.table = xor_table(2);
    d.theta = {0, 1};
    d.phi = {0, 0};
    d.cocycle.assign(2, std::vector<Vec>(2, one));
    return d;
  }
  // element C^a T^b at index a * nt + b
  const std::size_t nc = spec.has_C() ? 2 : 1, nt = spec.has_T() ? 2 : 1, n = nc * nt;
  d.table.assign(n, std::vector<std::size_t>(n));
  d.theta.resize(n);
  d.phi.resize(n);
  d.cocycle.assign(n, std::vector<Vec>(n));
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t a = g / nt, b = g % nt;
    d.theta[g] = static_cast<int>(b);
    d.phi[g] = static_cast<int>(a ^ b);
    for (std::size_t h = 0; h < n; ++h) {
      const std::size_t a2 = h / nt, b2 = h % nt;
      d.table[g][h] = ((a ^ a2) * nt) + (b ^ b2);
      int tau = 1;
      if (a && a2) tau *= spec.sign_C;
      if (b && b2) tau *= spec.sign_T;
      d.cocycle[g][h] = Vec{Rational(tau), Rational(0)};
    }
  }
  return d;
}

GradedAlgebra unit_charge_algebra(const TwistedData& d, Grading grading) {
  if (d.coefficient != Coefficient::complex) throw invalid_input("unit-charge algebra needs complex coefficients");
  std::vector<int> parity = d.theta;
  if (grading == Grading::c)
    for (std::size_t g = 0; g < parity.size(); ++g) parity[g] ^= d.phi[g];
  return twisted_group_algebra(d, parity);
}

GradedAlgebra unit_charge_algebra(const CTGroupSpec& spec, Grading grading) {
  GradedAlgebra a = unit_charge_algebra(ct_twisted_data(spec), grading);
  a.set_label("C*_uc(" + spec.label + (grading == Grading::c ? ", c)" : ")"));
  return a;
}

GradedAlgebra spin_half_algebra(const TwistedData& d) {
  if (d.coefficient != Coefficient::quaternion) throw invalid_input("spin-1/2 algebra needs quaternion coefficients");
  return twisted_group_algebra(d, d.theta, "C*_{s=1/2}");
}

TwistedData spin_half_z2(const RatMatrix& alpha_t, const Vec& tau_tt) {
  TwistedData d;
  d.coefficient = Coefficient::quaternion;
  d.table = xor_table(2);
  d.theta = {0, 1};
  d.action = {RatMatrix::identity(4), alpha_t};
  const Vec one{Rational(1), Rational(0), Rational(0), Rational(0)};
  d.cocycle = {{one, one}, {one, tau_tt}};
  return d;
}

} // namespace tenfold
