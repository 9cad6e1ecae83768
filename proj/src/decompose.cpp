#include "tenfold/decompose.hpp"

#include "tenfold/errors.hpp"
#include "tenfold/poly.hpp"

#include <atomic>
#include <cstdlib>

namespace tenfold {

namespace {

long initial_cap() {
  if (const char* env = std::getenv("TENFOLD_PRECISION_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1024;
}

std::atomic<long> g_cap_bits{initial_cap()};

// tr(L_{b_k}) for each basis element.
Vec trace_vector(const GradedAlgebra& a) {
  Vec t(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (const auto& term : a.product(k, j))
        if (term.k == j) t[k] += term.value;
  return t;
}

RatMatrix trace_form(const GradedAlgebra& a, const Vec& tr) {
  const std::size_t n = a.dim();
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& term : a.product(i, j)) t(i, j) += term.value * tr[term.k];
  return t;
}

RatMatrix restrict(const RatMatrix& m, const std::vector<std::size_t>& idx) {
  RatMatrix r(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = m(idx[i], idx[j]);
  return r;
}

std::size_t nonzero_count(const Vec& v) {
  std::size_t n = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) ++n;
  return n;
}

// The center as an algebra, a generating element z and its minimal
// polynomial, factored over Q.
struct CenterData {
  std::vector<Vec> basis; // parent coordinates
  std::optional<GradedAlgebra> algebra;
  Vec z; // center coordinates
  RatPoly minpoly;
  std::vector<RatPoly> factors;
  std::vector<Vec> powers; // z^k in parent coordinates, k < deg
  RatPoly h;               // alpha(z) = h(z)
  std::size_t attempts = 0;
};

Vec to_parent(const CenterData& c, const Vec& zc) {
  Vec v(c.basis[0].size());
  for (std::size_t i = 0; i < zc.size(); ++i)
    if (sgn(zc[i]) != 0) axpy(v, zc[i], c.basis[i]);
  return v;
}

Vec eval_at_z(const CenterData& c, const RatPoly& p) {
  const GradedAlgebra& z = *c.algebra;
  Vec r(z.dim());
  const auto& coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    r = z.multiply(r, c.z);
    axpy(r, coeffs[i], z.unit());
  }
  return r;
}

CenterData analyze_center(const GradedAlgebra& a) {
  if (!is_semisimple(a)) throw not_semisimple("algebra is not semisimple: the trace form tr(L_x L_y) is degenerate");
  CenterData c;
  c.basis = center(a);
  SpanReducer in_center(a.dim());
  for (const auto& v : c.basis) in_center.insert(v);
  c.algebra.emplace(subalgebra(a, c.basis, a.unit(), "center", true));
  const GradedAlgebra& z = *c.algebra;
  const std::size_t m = z.dim();
  for (std::size_t t = 0;; ++t) {
    if (t == 256) throw internal_error("no generating central element found");
    Vec x(m);
    for (std::size_t i = 0; i < m; ++i) {
      const long k = static_cast<long>(i + 1);
      const long s = static_cast<long>(t);
      x[i] = ((k * (s + 2) + k * k * (s + 1) + s * s) % 11) - 5;
    }
    if (is_zero(x)) continue;
    RatPoly mp = minimal_polynomial(z.left_matrix(x));
    c.attempts = t + 1;
    if (static_cast<std::size_t>(mp.degree()) == m) {
      c.z = std::move(x);
      c.minpoly = std::move(mp);
      break;
    }
  }
  for (const auto& [f, mult] : factor_squarefree_rational(c.minpoly)) {
    if (mult != 1) throw not_semisimple("center is not reduced");
    c.factors.push_back(f);
  }
  // powers of z and the polynomial h with alpha(z) = h(z)
  SpanReducer pow_span(m);
  Vec p = z.unit();
  for (std::size_t k = 0; k < m; ++k) {
    pow_span.insert(p);
    c.powers.push_back(to_parent(c, p));
    p = z.multiply(p, c.z);
  }
  const RatMatrix alpha = grading_involution(a);
  auto az = in_center.coordinates(alpha * to_parent(c, c.z));
  if (!az) throw internal_error("grading involution does not preserve the center");
  auto hc = pow_span.coordinates(*az);
  if (!hc) throw internal_error("center is not generated by z");
  c.h = RatPoly(*hc);
  return c;
}

bool exact_factor(const RatPoly& f) {
  return f.degree() == 1 || (f.degree() == 2 && real_root_count(f) == 0);
}

Vec crt_idempotent(const CenterData& c, std::size_t j) {
  const RatPoly mj = c.minpoly / c.factors[j];
  const RatPoly q = (mj * inverse_mod(mj, c.factors[j])) % c.minpoly;
  return to_parent(c, eval_at_z(c, q));
}

// Arithmetic in K = Q[t]/(p).
struct Field {
  RatPoly p;
  RatPoly reduce(const RatPoly& x) const { return x % p; }
  RatPoly mul(const RatPoly& x, const RatPoly& y) const { return (x * y) % p; }
  RatPoly inv(const RatPoly& x) const { return inverse_mod(x, p); }
};

struct Signature {
  std::size_t rank = 0;
  long sig = 0;
};

// Symmetric elimination over K; pivot signs certified at the root.
Signature inertia_at(std::vector<std::vector<RatPoly>> g, const Field& k, RealRoot& root, long cap) {
  const std::size_t n = g.size();
  Signature out;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t piv = n;
    for (std::size_t i = s; i < n && piv == n; ++i)
      if (!g[i][i].is_zero()) piv = i;
    if (piv == n) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = s; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!g[i][j].is_zero()) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) g[pi][c] = g[pi][c] + g[pj][c];
      for (std::size_t r = 0; r < n; ++r) g[r][pi] = g[r][pi] + g[r][pj];
      piv = pi;
    }
    std::swap(g[s], g[piv]);
    for (auto& row : g) std::swap(row[s], row[piv]);
    const RatPoly d = g[s][s];
    const RatPoly dinv = k.inv(d);
    for (std::size_t r = s + 1; r < n; ++r) {
      if (g[r][s].is_zero()) continue;
      const RatPoly f = k.mul(g[r][s], dinv);
      for (std::size_t c = s; c < n; ++c) g[r][c] = k.reduce(g[r][c] - f * g[s][c]);
    }
    for (std::size_t c = s + 1; c < n; ++c) g[s][c] = RatPoly{};
    for (std::size_t r = s + 1; r < n; ++r) g[r][s] = RatPoly{};
    ++out.rank;
    out.sig += sign_at(d, root, cap);
  }
  return out;
}

// Real-root splitting of one rational central idempotent.
struct RootData {
  std::size_t factor;
  RealRoot root;
  std::vector<RatPoly> idempotent; // e_sigma, K-valued parent coordinates
  std::size_t dim = 0, even_dim = 0;
  Signature full, even;
};

std::size_t constant_value(const RatPoly& x, const char* what) {
  if (x.degree() > 0 || sgn(x.coefficient(0)) < 0 || x.coefficient(0).get_den() != 1)
    throw internal_error(std::string("certified ") + what + " is not a non-negative integer");
  return x.coefficient(0).get_num().get_ui();
}

std::vector<RootData> split_real(const GradedAlgebra& a, const CenterData& c, std::size_t j, const Vec& tr,
                                 const RatMatrix& tform, bool fixed, long cap) {
  const RatPoly& p = c.factors[j];
  if (real_root_count(p) != static_cast<std::size_t>(p.degree()))
    throw precision_cap("center factor " + to_string(p, "t") +
                        " has real and non-real roots; only real splittings are certified");
  const Field k{p};
  const RatPoly t = RatPoly::x();
  // m(x) / (x - sigma) with coefficients in K, then divided by m'(sigma)
  const auto& mc = c.minpoly.coefficients();
  const std::size_t deg = mc.size() - 1;
  std::vector<RatPoly> q(deg);
  q[deg - 1] = RatPoly::constant(mc[deg]);
  for (std::size_t i = deg - 1; i-- > 0;) q[i] = k.reduce(RatPoly::constant(mc[i + 1]) + t * q[i + 1]);
  const RatPoly scale_inv = k.inv(compose_mod(c.minpoly.derivative(), t, p));
  std::vector<RatPoly> e(a.dim());
  for (std::size_t i = 0; i < deg; ++i) {
    const RatPoly qi = k.mul(q[i], scale_inv);
    for (std::size_t l = 0; l < a.dim(); ++l)
      if (sgn(c.powers[i][l]) != 0) e[l] = e[l] + c.powers[i][l] * qi;
  }
  for (auto& x : e) x = k.reduce(x);

  RatPoly dim_k, even_k;
  for (std::size_t l = 0; l < a.dim(); ++l) {
    dim_k = dim_k + tr[l] * e[l];
    Rational even_tr = 0;
    for (std::size_t m = 0; m < a.dim(); ++m)
      if (a.parity(m) == 0)
        for (const auto& term : a.product(l, m))
          if (term.k == m) even_tr += term.value;
    even_k = even_k + even_tr * e[l];
  }
  // f_l = tr(L_{e b_l}); Gram G_ij = f(b_i b_j)
  std::vector<RatPoly> f(a.dim());
  for (std::size_t l = 0; l < a.dim(); ++l)
    for (std::size_t kk = 0; kk < a.dim(); ++kk)
      if (sgn(tform(kk, l)) != 0) f[l] = f[l] + tform(kk, l) * e[kk];
  std::vector<std::vector<RatPoly>> g(a.dim(), std::vector<RatPoly>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t m = 0; m < a.dim(); ++m)
      for (const auto& term : a.product(i, m)) g[i][m] = g[i][m] + term.value * f[term.k];
  std::vector<std::size_t> even_idx;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.parity(i) == 0) even_idx.push_back(i);
  std::vector<std::vector<RatPoly>> ge(even_idx.size(), std::vector<RatPoly>(even_idx.size()));
  for (std::size_t i = 0; i < even_idx.size(); ++i)
    for (std::size_t m = 0; m < even_idx.size(); ++m) ge[i][m] = g[even_idx[i]][even_idx[m]];

  std::vector<RootData> out;
  for (auto& root : isolate_real_roots(p)) {
    // e_sigma is even only when sigma is fixed by the grading
    RootData r{j, root, e, constant_value(dim_k, "block dimension"), 0, {}, {}};
    r.full = inertia_at(g, k, r.root, cap);
    if (fixed) {
      r.even_dim = constant_value(even_k, "even dimension");
      r.even = inertia_at(ge, k, r.root, cap);
    }
    if (r.full.rank != r.dim) throw internal_error("certified trace form rank differs from the block dimension");
    out.push_back(std::move(r));
  }
  return out;
}

std::string describe_root(const RatPoly& p, const RealRoot& r) {
  return to_string(p, "t") + " at the root in (" + r.lo.get_str() + ", " + r.hi.get_str() + "]";
}

} // namespace

void set_precision_cap_bits(long bits) { g_cap_bits = bits; }

long precision_cap_bits() { return g_cap_bits; }

bool is_semisimple(const GradedAlgebra& a) { return rank(trace_form(a, trace_vector(a))) == a.dim(); }

CentralIdempotents central_idempotents(const GradedAlgebra& a) {
  const CenterData c = analyze_center(a);
  CentralIdempotents out;
  for (std::size_t j = 0; j < c.factors.size(); ++j) {
    out.idempotents.push_back(crt_idempotent(c, j));
    out.factors.push_back(to_string(c.factors[j], "t"));
    if (!exact_factor(c.factors[j])) out.primitive_over_r = false;
  }
  return out;
}

BlockInvariants block_invariants(const GradedAlgebra& block, BlockKind kind, const Vec& piece_idempotent) {
  BlockInvariants inv;
  inv.kind = kind;
  inv.dim = block.dim();
  inv.even_dim = block.even_dim();
  const Vec tr = trace_vector(block);
  const RatMatrix t = trace_form(block, tr);
  inv.sig_full = inertia(t).signature();
  std::vector<std::size_t> even_idx, odd_idx;
  for (std::size_t i = 0; i < block.dim(); ++i) (block.parity(i) ? odd_idx : even_idx).push_back(i);
  inv.sig_even = inertia(restrict(t, even_idx)).signature();
  std::vector<Vec> odd_parts;
  for (const auto& zc : center(block)) {
    Vec o(odd_idx.size());
    for (std::size_t i = 0; i < odd_idx.size(); ++i) o[i] = zc[odd_idx[i]];
    if (!is_zero(o)) odd_parts.push_back(std::move(o));
  }
  inv.odd_center_dim = odd_parts.empty() ? 0 : rank(RatMatrix::from_rows(odd_parts, odd_idx.size()));
  if (kind == BlockKind::swap) {
    SpanReducer span(block.dim());
    std::vector<Vec> piece;
    for (std::size_t i = 0; i < block.dim(); ++i) {
      Vec v = block.multiply(piece_idempotent, block.basis_vector(i));
      if (!is_zero(v) && span.insert(v)) piece.push_back(std::move(v));
    }
    RatMatrix g(piece.size(), piece.size());
    for (std::size_t i = 0; i < piece.size(); ++i)
      for (std::size_t j = 0; j < piece.size(); ++j) g(i, j) = dot(tr, block.multiply(piece[i], piece[j]));
    inv.piece_sig = inertia(g).signature();
  }
  return inv;
}

DecompositionReport graded_blocks(const GradedAlgebra& a) {
  const CenterData c = analyze_center(a);
  const long cap = precision_cap_bits();
  const RatMatrix alpha = grading_involution(a);
  const std::size_t n = a.dim();
  DecompositionReport report;
  report.generic_attempts = c.attempts;

  std::vector<Vec> idem;
  for (std::size_t j = 0; j < c.factors.size(); ++j) idem.push_back(crt_idempotent(c, j));
  {
    Vec sum(n);
    for (const auto& e : idem) sum = add(sum, e);
    report.residual += nonzero_count(sub(sum, a.unit()));
    for (std::size_t i = 0; i < idem.size(); ++i)
      for (std::size_t j = 0; j < idem.size(); ++j) {
        Vec prod = a.multiply(idem[i], idem[j]);
        report.residual += nonzero_count(i == j ? sub(prod, idem[i]) : prod);
      }
  }

  std::optional<Vec> tr;
  std::optional<RatMatrix> tform;
  std::vector<std::vector<RootData>> roots(c.factors.size());
  std::vector<bool> done(c.factors.size(), false);

  for (std::size_t j = 0; j < c.factors.size(); ++j) {
    if (done[j]) continue;
    const RatPoly& pj = c.factors[j];
    if (exact_factor(pj)) {
      const Vec ae = alpha * idem[j];
      std::size_t partner = j;
      if (ae != idem[j]) {
        partner = c.factors.size();
        for (std::size_t k = 0; k < idem.size(); ++k)
          if (idem[k] == ae) partner = k;
        if (partner == c.factors.size()) throw internal_error("grading involution does not permute the idempotents");
      }
      GradedBlock b;
      b.kind = partner == j ? BlockKind::fixed : BlockKind::swap;
      b.ungraded_pieces = partner == j ? 1 : 2;
      b.projection = partner == j ? idem[j] : add(idem[j], idem[partner]);
      b.origin = to_string(pj, "t") + (partner == j ? "" : " and " + to_string(c.factors[partner], "t"));
      SpanReducer span(n);
      for (std::size_t i = 0; i < n; ++i) {
        Vec v = a.multiply(b.projection, a.basis_vector(i));
        if (!is_zero(v) && span.insert(v)) b.embedding.push_back(std::move(v));
      }
      std::string label = a.label().empty() ? "" : a.label() + " [block " + std::to_string(report.blocks.size()) + "]";
      b.algebra.emplace(subalgebra(a, b.embedding, b.projection, label));
      if (b.kind == BlockKind::swap) {
        b.piece_idempotent = *span.coordinates(idem[j]);
        b.odd_unit = *span.coordinates(sub(idem[j], idem[partner]));
        const GradedAlgebra& blk = *b.algebra;
        report.residual += nonzero_count(sub(blk.multiply(b.odd_unit, b.odd_unit), blk.unit()));
        report.residual += nonzero_count(sub(blk.multiply(b.piece_idempotent, b.piece_idempotent), b.piece_idempotent));
        if (blk.homogeneous_parity(b.odd_unit) != 1) ++report.residual;
      }
      b.invariants = block_invariants(*b.algebra, b.kind, b.piece_idempotent);
      done[j] = done[partner] = true;
      report.blocks.push_back(std::move(b));
      continue;
    }

    // Irrational real roots: certified invariants only.
    report.exact_path = false;
    if (!tr) {
      tr = trace_vector(a);
      tform = trace_form(a, *tr);
    }
    const bool fixed = ((c.h - RatPoly::x()) % pj).is_zero();
    std::vector<std::size_t> group{j};
    if (!fixed)
      for (std::size_t k = 0; k < c.factors.size(); ++k)
        if (k != j && !done[k] && compose_mod(c.factors[k], c.h, pj).is_zero()) group.push_back(k);
    for (auto k : group)
      if (roots[k].empty()) roots[k] = split_real(a, c, k, *tr, *tform, fixed, cap);
    if (fixed) {
      for (auto& r : roots[j]) {
        GradedBlock b;
        b.kind = BlockKind::fixed;
        b.certified_only = true;
        b.origin = describe_root(pj, r.root);
        b.invariants = {BlockKind::fixed, r.dim, r.even_dim, r.full.sig, r.even.sig, 0, 0};
        report.blocks.push_back(std::move(b));
      }
      done[j] = true;
      continue;
    }
    // pair every root sigma of p_j with the root h(sigma)
    for (auto& r : roots[j]) {
      bool matched = false;
      for (auto k : group) {
        for (auto& s : roots[k]) {
          if (&s == &r) continue;
          if (sign_at(c.h - RatPoly::constant(s.root.lo), r.root, cap) > 0 &&
              sign_at(c.h - RatPoly::constant(s.root.hi), r.root, cap) <= 0) {
            matched = true;
            // emit each pair once, from its first member
            if (k < j || (k == j && s.root.lo < r.root.lo)) break;
            GradedBlock b;
            b.kind = BlockKind::swap;
            b.ungraded_pieces = 2;
            b.certified_only = true;
            b.origin = describe_root(pj, r.root) + " and " + describe_root(c.factors[k], s.root);
            b.invariants = {BlockKind::swap, 2 * r.dim, r.dim, 2 * r.full.sig, r.full.sig, 1, r.full.sig};
            report.blocks.push_back(std::move(b));
            break;
          }
        }
        if (matched) break;
      }
      if (!matched) throw internal_error("grading involution partner root not found");
    }
    for (auto k : group) done[k] = true;
  }
  return report;
}

} // namespace tenfold
