#include "tenfold/classify.hpp"

#include "tenfold/errors.hpp"
#include "tenfold/poly.hpp"

#include <cmath>
#include <random>

namespace tenfold {

namespace {

// Exactly one positive direction of the trace form singles out R, C and H
// among semisimple algebras.
bool is_real_division(const GradedAlgebra& c) {
  Vec tr(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k)
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (const auto& t : c.product(k, j))
        if (t.k == j) tr[k] += t.value;
  RatMatrix form(c.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < c.dim(); ++j)
      for (const auto& t : c.product(i, j)) form(i, j) += t.value * tr[t.k];
  Inertia in = inertia(form);
  return in.positive == 1 && in.zero == 0;
}

// A nontrivial idempotent of c (ungraded), from the minimal polynomial of
// some element; c's coordinates, or nullopt.
std::optional<Vec> split_idempotent(const GradedAlgebra& c, const Vec& x) {
  RatPoly m = minimal_polynomial(c.left_matrix(x));
  auto factors = factor_squarefree_rational(m);
  if (factors.size() < 2) return std::nullopt;
  // (t - a)^k g(t) with coprime parts: idempotent for the first primary part
  RatPoly first = RatPoly::constant(1);
  for (int i = 0; i < factors[0].second; ++i) first = first * factors[0].first;
  const RatPoly rest = m / first;
  const RatPoly q = (rest * inverse_mod(rest, first)) % m;
  Vec r(c.dim());
  const auto& coeffs = q.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    r = c.multiply(r, x);
    axpy(r, coeffs[i], c.unit());
  }
  return r;
}

std::vector<Vec> independent(const std::vector<Vec>& candidates, SpanReducer& span) {
  std::vector<Vec> out;
  for (const auto& v : candidates)
    if (!is_zero(v) && span.insert(v)) out.push_back(v);
  return out;
}

BlockClassification sized(MoritaClass m, std::size_t dim, std::size_t even_dim) {
  BlockClassification out;
  out.morita = m;
  out.division_dim = m.division_dim();
  const std::size_t dd = static_cast<std::size_t>(out.division_dim);
  if (dim % dd != 0) throw internal_error("block dimension is not a multiple of the division dimension");
  const std::size_t n2 = dim / dd;
  const std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n2))));
  if (n * n != n2) throw internal_error("block dimension is not n^2 times the division dimension");
  if (m.purely_even()) {
    // p + q = n and p^2 + q^2 = even_dim / dd
    const long s2 = 2 * static_cast<long>(even_dim / dd) - static_cast<long>(n2);
    const long s = std::lround(std::sqrt(static_cast<double>(std::max(s2, 0L))));
    if (s * s != s2 || (static_cast<long>(n) + s) % 2 != 0) throw internal_error("inconsistent even dimension");
    out.p = (n + static_cast<std::size_t>(s)) / 2;
    out.q = n - out.p;
    out.split_size = true;
  } else {
    out.p = n;
    out.q = 0;
    out.split_size = false;
  }
  return out;
}

MoritaClass swap_class(int piece_division_dim) {
  switch (piece_division_dim) {
  case 1: return MoritaClass::real(1);
  case 2: return MoritaClass::complex(1);
  case 4: return MoritaClass::real(5);
  default: throw internal_error("ungraded piece has no division type");
  }
}

// Coordinate of x along the unit if x is a scalar multiple of it.
std::optional<Rational> scalar_of(const GradedAlgebra& d, const Vec& x) {
  std::size_t u = d.dim();
  for (std::size_t i = 0; i < d.dim(); ++i)
    if (sgn(d.unit()[i]) != 0) {
      u = i;
      break;
    }
  const Rational lambda = x[u] / d.unit()[u];
  if (scale(d.unit(), lambda) != x) return std::nullopt;
  return lambda;
}

} // namespace

std::string BlockClassification::size_string() const {
  return split_size ? std::to_string(p) + "|" + std::to_string(q) : std::to_string(p + q);
}

GradedModule minimal_graded_ideal(const GradedAlgebra& block, std::uint64_t seed) {
  const std::size_t n = block.dim();
  std::vector<std::size_t> even_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (block.parity(i) == 0) even_idx.push_back(i);
  std::mt19937_64 rng(seed);
  Vec f = block.unit();
  for (;;) {
    // C = f B_ev f, as an ungraded algebra with unit f
    SpanReducer span(n);
    std::vector<Vec> cands;
    for (auto i : even_idx) cands.push_back(block.multiply(block.multiply(f, block.basis_vector(i)), f));
    const std::vector<Vec> cbasis = independent(cands, span);
    const GradedAlgebra c = subalgebra(block, cbasis, f, {}, true);
    if (is_real_division(c)) break;

    std::optional<Vec> g;
    const std::size_t m = c.dim();
    for (std::size_t i = 0; i < m && !g; ++i) g = split_idempotent(c, c.basis_vector(i));
    for (std::size_t i = 0; i < m && !g; ++i)
      for (std::size_t j = i + 1; j < m && !g; ++j) {
        g = split_idempotent(c, add(c.basis_vector(i), c.basis_vector(j)));
        if (!g) g = split_idempotent(c, sub(c.basis_vector(i), c.basis_vector(j)));
      }
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int attempt = 0; attempt < 256 && !g; ++attempt) {
      Vec x(m);
      for (auto& v : x) v = coef(rng);
      if (!is_zero(x)) g = split_idempotent(c, x);
    }
    if (!g) throw precision_cap("no rational idempotent splits f B_ev f; the module route is unavailable");
    // keep the smaller of g and f - g
    const Vec gc = *g;
    const Vec hc = sub(c.unit(), gc);
    auto corner_dim = [&](const Vec& e) {
      SpanReducer s(m);
      std::size_t d = 0;
      for (std::size_t i = 0; i < m; ++i) {
        Vec v = c.multiply(c.multiply(e, c.basis_vector(i)), e);
        if (!is_zero(v) && s.insert(v)) ++d;
      }
      return d;
    };
    const Vec& pick = corner_dim(gc) <= corner_dim(hc) ? gc : hc;
    Vec next(n);
    for (std::size_t i = 0; i < m; ++i)
      if (sgn(pick[i]) != 0) axpy(next, pick[i], cbasis[i]);
    f = std::move(next);
  }

  // M = B f with a homogeneous basis
  SpanReducer span(n);
  std::vector<Vec> cands;
  for (std::size_t i = 0; i < n; ++i) cands.push_back(block.multiply(block.basis_vector(i), f));
  const std::vector<Vec> mbasis = independent(cands, span);
  GradedModule mod;
  for (const auto& v : mbasis) mod.parity.push_back(block.homogeneous_parity(v));
  const std::size_t d = mbasis.size();
  for (std::size_t k = 0; k < n; ++k) {
    RatMatrix rho(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      auto col = span.coordinates(block.multiply(block.basis_vector(k), mbasis[j]));
      if (!col) throw internal_error("B f is not a left ideal");
      for (std::size_t i = 0; i < d; ++i) rho(i, j) = (*col)[i];
    }
    mod.action.push_back(std::move(rho));
  }
  return mod;
}

GradedAlgebra graded_commutant(const GradedAlgebra& block, const GradedModule& module) {
  const std::size_t d = module.dim();
  std::vector<RatMatrix> basis;
  std::vector<int> parity;
  for (int tp = 0; tp < 2; ++tp) {
    // unknowns: entries (r, c) with parity(r) + parity(c) = tp
    std::vector<std::pair<std::size_t, std::size_t>> entries;
    std::vector<std::vector<long>> index(d, std::vector<long>(d, -1));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if ((module.parity[r] ^ module.parity[c]) == tp) {
          index[r][c] = static_cast<long>(entries.size());
          entries.emplace_back(r, c);
        }
    if (entries.empty()) continue;
    KernelBuilder kb(entries.size());
    for (std::size_t k = 0; k < block.dim() && kb.dimension() > 0; ++k) {
      const RatMatrix& rho = module.action[k];
      const int sign = (tp && block.parity(k)) ? -1 : 1;
      std::vector<Vec> rows;
      // (T rho - sign rho T)_{rc} = 0
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
          Vec row(entries.size());
          for (std::size_t s = 0; s < d; ++s) {
            if (index[r][s] >= 0 && sgn(rho(s, c)) != 0) row[static_cast<std::size_t>(index[r][s])] += rho(s, c);
            if (index[s][c] >= 0 && sgn(rho(r, s)) != 0)
              row[static_cast<std::size_t>(index[s][c])] -= sign * rho(r, s);
          }
          if (!is_zero(row)) rows.push_back(std::move(row));
        }
      kb.add_constraints(rows);
    }
    for (const auto& v : kb.basis()) {
      RatMatrix t(d, d);
      for (std::size_t e = 0; e < entries.size(); ++e) t(entries[e].first, entries[e].second) = v[e];
      basis.push_back(std::move(t));
      parity.push_back(tp);
    }
  }
  return matrix_span_algebra(basis, parity, "commutant");
}

MoritaClass identify_division(const GradedAlgebra& d) {
  const std::size_t n = d.dim(), odd = d.odd_dim();
  auto fail = [&](const std::string& why) {
    return internal_error("not a graded division algebra (dim " + std::to_string(n) + ", odd part " +
                          std::to_string(odd) + "): " + why);
  };
  std::vector<std::size_t> odd_idx;
  for (std::size_t i = 0; i < n; ++i)
    if (d.parity(i)) odd_idx.push_back(i);
  auto square_sign = [&](const Vec& e) {
    auto lambda = scalar_of(d, d.multiply(e, e));
    if (!lambda || sgn(*lambda) == 0) throw fail("odd element squares to a non-scalar or zero");
    return sgn(*lambda);
  };
  // graded division: the even part is a division algebra and, if there is
  // an odd part, some odd element is invertible
  {
    std::vector<Vec> even;
    for (std::size_t i = 0; i < n; ++i)
      if (!d.parity(i)) even.push_back(d.basis_vector(i));
    if (!is_real_division(subalgebra(d, even, d.unit(), {}, true))) throw fail("even part is not a division algebra");
    if (odd > 0 && determinant(d.left_matrix(d.basis_vector(odd_idx[0]))) == 0) {
      bool invertible = false;
      for (auto i : odd_idx)
        if (determinant(d.left_matrix(d.basis_vector(i))) != 0) invertible = true;
      if (!invertible) throw fail("no invertible odd basis element");
    }
  }
  if (n == 1) return MoritaClass::real(0);
  if (n == 2 && odd == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec x = d.basis_vector(i);
      if (scalar_of(d, x)) continue;
      RatPoly m = minimal_polynomial(d.left_matrix(x));
      if (m.degree() != 2 || real_root_count(m) != 0) throw fail("even part is not C");
      return MoritaClass::complex(0);
    }
    throw fail("no non-scalar element");
  }
  if (n == 2 && odd == 1) return square_sign(d.basis_vector(odd_idx[0])) > 0 ? MoritaClass::real(1) : MoritaClass::real(7);
  if (n == 4 && odd == 0) {
    Vec tr(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : d.product(k, j))
          if (t.k == j) tr[k] += t.value;
    RatMatrix form(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& t : d.product(i, j)) form(i, j) += t.value * tr[t.k];
    Inertia in = inertia(form);
    if (in.positive != 1 || in.negative != 3) throw fail("purely even part is not H");
    return MoritaClass::real(4);
  }
  if (n == 4 && odd == 2) {
    if (d.is_commutative()) return MoritaClass::complex(1);
    return square_sign(d.basis_vector(odd_idx[0])) > 0 ? MoritaClass::real(2) : MoritaClass::real(6);
  }
  if (n == 8 && odd == 4) {
    for (const auto& z : center(d)) {
      Vec w(n);
      for (auto i : odd_idx) w[i] = z[i];
      if (is_zero(w)) continue;
      return square_sign(w) > 0 ? MoritaClass::real(5) : MoritaClass::real(3);
    }
    throw fail("no odd central element");
  }
  throw fail("dimensions match none of the ten");
}

BlockClassification classify_invariants(const BlockInvariants& inv) {
  MoritaClass m;
  if (inv.kind == BlockKind::swap) {
    m = inv.piece_sig > 0 ? MoritaClass::real(1) : inv.piece_sig < 0 ? MoritaClass::real(5) : MoritaClass::complex(1);
  } else if (inv.sig_full != 0) {
    if (inv.sig_even != 0)
      m = inv.sig_full > 0 ? MoritaClass::real(0) : MoritaClass::real(4);
    else
      m = inv.sig_full > 0 ? MoritaClass::real(2) : MoritaClass::real(6);
  } else if (inv.odd_center_dim == 0) {
    m = MoritaClass::complex(0);
  } else {
    m = inv.sig_even > 0 ? MoritaClass::real(7) : MoritaClass::real(3);
  }
  BlockClassification out = sized(m, inv.dim, inv.even_dim);
  out.certified_only = true;
  return out;
}

BlockClassification classify_block(const GradedBlock& block, std::uint64_t seed) {
  if (block.certified_only || !block.algebra) return classify_invariants(block.invariants);
  const GradedAlgebra& b = *block.algebra;
  MoritaClass m;
  if (block.kind == BlockKind::fixed) {
    const GradedModule mod = minimal_graded_ideal(b, seed);
    m = opposite_class(identify_division(graded_commutant(b, mod)));
  } else {
    std::vector<Vec> piece;
    SpanReducer span(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) {
      Vec v = b.multiply(block.piece_idempotent, b.basis_vector(i));
      if (!is_zero(v) && span.insert(v)) piece.push_back(std::move(v));
    }
    const GradedAlgebra ungraded = subalgebra(b, piece, block.piece_idempotent, {}, true);
    const GradedModule mod = minimal_graded_ideal(ungraded, seed);
    m = swap_class(static_cast<int>(graded_commutant(ungraded, mod).dim()));
  }
  BlockClassification out = sized(m, b.dim(), b.even_dim());
  BlockClassification check = classify_invariants(block.invariants);
  if (check.morita != out.morita || check.p != out.p || check.q != out.q)
    throw internal_error("module route (" + out.morita.name() + ") and invariant route (" + check.morita.name() +
                         ") disagree");
  return out;
}

std::vector<BlockClassification> classify_algebra(const GradedAlgebra& a, std::uint64_t seed) {
  const DecompositionReport report = graded_blocks(a);
  std::vector<BlockClassification> out;
  for (const auto& b : report.blocks) out.push_back(classify_block(b, seed));
  return out;
}

std::vector<MoritaClass> tensor_classes(MoritaClass a, MoritaClass b) {
  if (a.is_real() && b.is_real()) return {MoritaClass::real(a.index + b.index)};
  if (!a.is_real() && !b.is_real()) {
    MoritaClass c = MoritaClass::complex(a.index + b.index);
    return {c, c};
  }
  return {MoritaClass::complex(a.index + b.index)};
}

} // namespace tenfold
