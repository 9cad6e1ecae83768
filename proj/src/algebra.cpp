#include "tenfold/algebra.hpp"

#include "tenfold/errors.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>

namespace tenfold {

namespace {

std::atomic<std::size_t> g_clifford_cap{8};

void normalize_row(std::vector<Term>& row) {
  std::map<std::uint32_t, Rational> acc;
  for (auto& t : row) acc[t.k] += t.value;
  row.clear();
  for (auto& [k, v] : acc)
    if (sgn(v) != 0) row.push_back({k, v});
}

// Sparse product of two coordinate vectors.
Vec sparse_product(const GradedAlgebra& a, const Vec& x, const Vec& y) {
  Vec r(a.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (const auto& t : a.product(i, j)) r[t.k] += xy * t.value;
    }
  }
  return r;
}

Vec flatten(const RatMatrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

} // namespace

GradedAlgebra::GradedAlgebra(std::vector<int> parity, Table mul, Vec unit, std::string label,
                             bool check_associativity)
    : parity_(std::move(parity)), mul_(std::move(mul)), unit_(std::move(unit)), label_(std::move(label)) {
  const std::size_t n = parity_.size();
  if (n == 0) throw invalid_input("algebra must have positive dimension");
  for (int p : parity_)
    if (p != 0 && p != 1) throw invalid_input("parity entries must be 0 or 1");
  if (mul_.size() != n * n) throw invalid_input("multiplication table must have dim^2 rows");
  if (unit_.size() != n) throw invalid_input("unit must have dim coordinates");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto& row = mul_[i * n + j];
      for (const auto& t : row)
        if (t.k >= n) throw invalid_input("structure constant index out of range");
      normalize_row(row);
      for (const auto& t : row)
        if (parity_[t.k] != (parity_[i] ^ parity_[j]))
          throw invalid_input("grading violated: b" + std::to_string(i) + " b" + std::to_string(j) +
                              " has a component of the wrong parity");
    }
  for (std::size_t i = 0; i < n; ++i)
    if (parity_[i] == 1 && sgn(unit_[i]) != 0) throw invalid_input("unit is not even");
  for (std::size_t j = 0; j < n; ++j) {
    Vec e = basis_vector(j);
    if (multiply(unit_, e) != e || multiply(e, unit_) != e)
      throw invalid_input("unit is not a two-sided identity (fails on b" + std::to_string(j) + ")");
  }
  if (!check_associativity) return;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& ij = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs(n), rhs(n);
        for (const auto& t : ij)
          for (const auto& u : product(t.k, k)) lhs[u.k] += t.value * u.value;
        for (const auto& t : product(j, k))
          for (const auto& u : product(i, t.k)) rhs[u.k] += t.value * u.value;
        if (lhs != rhs)
          throw invalid_input("associativity violated on (b" + std::to_string(i) + ", b" + std::to_string(j) +
                              ", b" + std::to_string(k) + ")");
      }
    }
}

std::size_t GradedAlgebra::even_dim() const {
  return static_cast<std::size_t>(std::count(parity_.begin(), parity_.end(), 0));
}

Vec GradedAlgebra::basis_vector(std::size_t i) const {
  Vec v(dim());
  v[i] = 1;
  return v;
}

Vec GradedAlgebra::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) throw invalid_input("coordinate vector has wrong length");
  return sparse_product(*this, x, y);
}

RatMatrix GradedAlgebra::left_matrix(const Vec& x) const {
  RatMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : product(i, j)) m(t.k, j) += x[i] * t.value;
  }
  return m;
}

RatMatrix GradedAlgebra::right_matrix(const Vec& x) const {
  RatMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& t : product(j, i)) m(t.k, j) += x[i] * t.value;
  }
  return m;
}

bool GradedAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      const auto& a = product(i, j);
      const auto& b = product(j, i);
      if (a.size() != b.size()) return false;
      for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t].k != b[t].k || a[t].value != b[t].value) return false;
    }
  return true;
}

int GradedAlgebra::homogeneous_parity(const Vec& x) const {
  bool even = false, odd = false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) (parity_[i] ? odd : even) = true;
  if (even && odd) return -1;
  return odd ? 1 : 0;
}

Element::Element(const GradedAlgebra& algebra, Vec coords) : algebra_(&algebra), coords_(std::move(coords)) {
  if (coords_.size() != algebra.dim()) throw invalid_input("element has wrong number of coordinates");
}

Element multiply(const Element& x, const Element& y) {
  if (&x.algebra() != &y.algebra()) throw invalid_input("cannot multiply elements of different algebras");
  return Element(x.algebra(), x.algebra().multiply(x.coords(), y.coords()));
}

void set_clifford_cap(std::size_t cap) { g_clifford_cap = cap; }

std::size_t clifford_cap() { return g_clifford_cap; }

GradedAlgebra real_field() { return clifford(0, 0); }

namespace {

// Sign of e_A e_B = sign * e_{A xor B}: one factor -1 per transposition
// needed to sort, times the squares of the shared generators.
int clifford_sign(std::uint32_t a, std::uint32_t b, const std::vector<int>& squares) {
  int s = 1;
  for (std::uint32_t rest = a; rest; rest &= rest - 1) {
    const unsigned g = static_cast<unsigned>(std::countr_zero(rest));
    // generators of b smaller than g must move past g
    if (std::popcount(b & ((1u << g) - 1)) % 2) s = -s;
  }
  for (std::uint32_t both = a & b; both; both &= both - 1)
    s *= squares[static_cast<unsigned>(std::countr_zero(both))];
  return s;
}

std::string clifford_label(std::size_t p, std::size_t q) {
  return "Cl_{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

} // namespace

GradedAlgebra clifford(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  if (n > g_clifford_cap) throw invalid_input("clifford: p + q = " + std::to_string(n) + " exceeds cap " +
                                              std::to_string(g_clifford_cap.load()));
  std::vector<int> squares(n, 1);
  for (std::size_t g = p; g < n; ++g) squares[g] = -1;
  const std::uint32_t dim = 1u << n;
  std::vector<int> parity(dim);
  for (std::uint32_t m = 0; m < dim; ++m) parity[m] = std::popcount(m) % 2;
  GradedAlgebra::Table mul(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t a = 0; a < dim; ++a)
    for (std::uint32_t b = 0; b < dim; ++b)
      mul[static_cast<std::size_t>(a) * dim + b] = {{a ^ b, Rational(clifford_sign(a, b, squares))}};
  Vec unit(dim);
  unit[0] = 1;
  return GradedAlgebra(std::move(parity), std::move(mul), std::move(unit), clifford_label(p, q), false);
}

GradedAlgebra complex_clifford(std::size_t n) {
  if (n > g_clifford_cap) throw invalid_input("complex_clifford: n exceeds cap");
  std::vector<int> squares(n, 1);
  const std::uint32_t masks = 1u << n;
  const std::size_t dim = 2 * static_cast<std::size_t>(masks);
  std::vector<int> parity(dim);
  for (std::uint32_t m = 0; m < masks; ++m) parity[2 * m] = parity[2 * m + 1] = std::popcount(m) % 2;
  GradedAlgebra::Table mul(dim * dim);
  for (std::uint32_t a = 0; a < masks; ++a)
    for (std::uint32_t r = 0; r < 2; ++r)
      for (std::uint32_t b = 0; b < masks; ++b)
        for (std::uint32_t s = 0; s < 2; ++s) {
          int sign = clifford_sign(a, b, squares);
          if (r + s == 2) sign = -sign;
          const std::uint32_t k = 2 * (a ^ b) + ((r + s) % 2);
          mul[(2 * a + r) * dim + 2 * b + s] = {{k, Rational(sign)}};
        }
  Vec unit(dim);
  unit[0] = 1;
  return GradedAlgebra(std::move(parity), std::move(mul), std::move(unit),
                       n == 0 ? "C" : "CCl_" + std::to_string(n), false);
}

GradedAlgebra quaternions() {
  // i^2 = j^2 = k^2 = ijk = -1
  static const int table[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  GradedAlgebra::Table mul(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      mul[i * 4 + j] = {{static_cast<std::uint32_t>(table[i][j][0]), Rational(table[i][j][1])}};
  return GradedAlgebra({0, 0, 0, 0}, std::move(mul), Vec{1, 0, 0, 0}, "H", false);
}

GradedAlgebra graded_tensor(const GradedAlgebra& a, const GradedAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<int> parity(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) parity[i * nb + j] = a.parity(i) ^ b.parity(j);
  GradedAlgebra::Table mul(n * n);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          const int sign = (b.parity(j1) & a.parity(i2)) ? -1 : 1;
          auto& row = mul[(i1 * nb + j1) * n + i2 * nb + j2];
          for (const auto& s : a.product(i1, i2))
            for (const auto& t : b.product(j1, j2))
              row.push_back({static_cast<std::uint32_t>(s.k * nb + t.k), sign * s.value * t.value});
        }
  Vec unit(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  std::string label = a.label().empty() || b.label().empty() ? "" : a.label() + " (x) " + b.label();
  return GradedAlgebra(std::move(parity), std::move(mul), std::move(unit), std::move(label), false);
}

GradedAlgebra opposite(const GradedAlgebra& a) {
  const std::size_t n = a.dim();
  GradedAlgebra::Table mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto row = a.product(j, i);
      if (a.parity(i) & a.parity(j))
        for (auto& t : row) t.value = -t.value;
      mul[i * n + j] = std::move(row);
    }
  std::string label = a.label().empty() ? "" : "(" + a.label() + ")^op";
  return GradedAlgebra(a.parities(), std::move(mul), a.unit(), std::move(label), false);
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<int> parity(a.parities());
  parity.insert(parity.end(), b.parities().begin(), b.parities().end());
  GradedAlgebra::Table mul(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) mul[i * n + j] = a.product(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      auto row = b.product(i, j);
      for (auto& t : row) t.k += static_cast<std::uint32_t>(na);
      mul[(na + i) * n + na + j] = std::move(row);
    }
  Vec unit(a.unit());
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  std::string label = a.label().empty() || b.label().empty() ? "" : a.label() + " + " + b.label();
  return GradedAlgebra(std::move(parity), std::move(mul), std::move(unit), std::move(label), false);
}

GradedAlgebra matrix_algebra(const GradedAlgebra& a, std::size_t p, std::size_t q) {
  if (p + q == 0) throw invalid_input("matrix_algebra: p + q must be positive");
  const std::size_t m = p + q, d = a.dim(), n = m * m * d;
  auto bp = [p](std::size_t r) { return r < p ? 0 : 1; };
  auto index = [&](std::size_t r, std::size_t s, std::size_t x) { return (r * m + s) * d + x; };
  std::vector<int> parity(n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t x = 0; x < d; ++x) parity[index(r, s, x)] = bp(r) ^ bp(s) ^ a.parity(x);
  GradedAlgebra::Table mul(n * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t u = 0; u < m; ++u)
          for (std::size_t y = 0; y < d; ++y) {
            auto& row = mul[index(r, s, x) * n + index(s, u, y)];
            for (const auto& t : a.product(x, y))
              row.push_back({static_cast<std::uint32_t>(index(r, u, t.k)), t.value});
          }
  Vec unit(n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t x = 0; x < d; ++x) unit[index(r, r, x)] = a.unit()[x];
  std::string label = a.label().empty() ? "" : "M_{" + std::to_string(p) + "|" + std::to_string(q) + "}(" +
                                                   a.label() + ")";
  return GradedAlgebra(std::move(parity), std::move(mul), std::move(unit), std::move(label), false);
}

GradedAlgebra division_algebra(MoritaClass c) {
  GradedAlgebra out = [&] {
    if (!c.is_real()) return complex_clifford(static_cast<std::size_t>(c.index));
    switch (c.index) {
    case 0: return clifford(0, 0);
    case 1: return clifford(1, 0);
    case 2: return clifford(2, 0);
    case 3: return clifford(3, 0);
    case 4: return quaternions();
    case 5: return clifford(0, 3);
    case 6: return clifford(0, 2);
    default: return clifford(0, 1);
    }
  }();
  out.set_label(c.name());
  return out;
}

std::vector<Vec> center(const GradedAlgebra& a) {
  KernelBuilder kb(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vec e = a.basis_vector(i);
    RatMatrix c = a.right_matrix(e) - a.left_matrix(e);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < c.rows(); ++r) {
      Vec row = c.row(r);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
    kb.add_constraints(rows);
    if (kb.dimension() == 1) break;
  }
  return kb.basis();
}

RatMatrix grading_involution(const GradedAlgebra& a) {
  RatMatrix m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) = a.parity(i) ? -1 : 1;
  return m;
}

namespace {

template <typename Product>
GradedAlgebra span_algebra(const std::vector<Vec>& basis, const std::vector<int>& parity, const Vec& unit,
                           Product product, std::string label) {
  if (basis.empty()) throw invalid_input("subalgebra basis is empty");
  SpanReducer span(basis[0].size());
  for (const auto& v : basis)
    if (!span.insert(v)) throw invalid_input("subalgebra basis is linearly dependent");
  const std::size_t n = basis.size();
  GradedAlgebra::Table mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = span.coordinates(product(basis[i], basis[j]));
      if (!c) throw invalid_input("subspace is not closed under multiplication");
      auto& row = mul[i * n + j];
      for (std::size_t k = 0; k < n; ++k)
        if (sgn((*c)[k]) != 0) row.push_back({static_cast<std::uint32_t>(k), (*c)[k]});
    }
  auto u = span.coordinates(unit);
  if (!u) throw invalid_input("unit does not lie in the subspace");
  return GradedAlgebra(parity, std::move(mul), std::move(*u), std::move(label), false);
}

} // namespace

GradedAlgebra subalgebra(const GradedAlgebra& a, const std::vector<Vec>& basis, const Vec& unit,
                         std::string label, bool ungraded) {
  std::vector<int> parity;
  for (const auto& v : basis) {
    int p = ungraded ? 0 : a.homogeneous_parity(v);
    if (p < 0) throw invalid_input("subalgebra basis element is not homogeneous");
    parity.push_back(p);
  }
  return span_algebra(basis, parity, unit, [&](const Vec& x, const Vec& y) { return a.multiply(x, y); },
                      std::move(label));
}

GradedAlgebra matrix_span_algebra(const std::vector<RatMatrix>& basis, const std::vector<int>& parity,
                                  std::string label) {
  if (basis.empty()) throw invalid_input("matrix span is empty");
  if (parity.size() != basis.size()) throw invalid_input("matrix span parity length mismatch");
  const std::size_t n = basis[0].rows();
  std::vector<Vec> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  auto product = [&](const Vec& x, const Vec& y) {
    RatMatrix a(n, n), b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = x[i * n + j];
        b(i, j) = y[i * n + j];
      }
    return flatten(a * b);
  };
  return span_algebra(flat, parity, flatten(RatMatrix::identity(n)), product, std::move(label));
}

} // namespace tenfold
