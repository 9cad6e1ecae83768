#include "tenfold/linalg.hpp"

#include "tenfold/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace tenfold {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw invalid_input("empty rational");
  s = s.substr(b, e - b + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw invalid_input("malformed rational '" + std::string(text) + "'");
  Rational q;
  if (q.set_str(s, 10) != 0) throw invalid_input("malformed rational '" + std::string(text) + "'");
  if (sgn(q.get_den()) == 0) throw invalid_input("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& a, const Rational& s, const Vec& b) {
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

Rational dot(const Vec& a, const Vec& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) r += a[i] * b[i];
  return r;
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : init) {
    if (r.size() != cols_) throw invalid_input("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

Vec RatMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec RatMatrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw invalid_input("matrix product dimension mismatch");
  RatMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw invalid_input("matrix sum dimension mismatch");
  RatMatrix r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw invalid_input("matrix difference dimension mismatch");
  RatMatrix r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r(a);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= s;
  return r;
}

Vec operator*(const RatMatrix& a, const Vec& v) {
  if (a.cols() != v.size()) throw invalid_input("matrix-vector dimension mismatch");
  Vec r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) r[i] += a(i, j) * v[j];
  return r;
}

RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators row by row; row scaling changes neither rank nor kernel.
std::vector<IntRow> integer_rows(const RatMatrix& m, std::vector<Integer>* scales = nullptr) {
  std::vector<IntRow> rows(m.rows(), IntRow(m.cols()));
  if (scales) scales->assign(m.rows(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& d = m(r, c).get_den();
      if (d != 1) l = lcm(l, d);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (sgn(x) != 0) rows[r][c] = x.get_num() * (l / x.get_den());
    }
    if (scales) (*scales)[r] = l;
  }
  return rows;
}

struct Echelon {
  std::vector<IntRow> a;
  std::vector<std::size_t> pivots;
  int swap_sign = 1;
};

// Fraction-free forward elimination. After step k every entry below the
// pivots is a (k+1)-minor of the input, so the division by the previous
// pivot is exact.
Echelon bareiss(std::vector<IntRow> a, std::size_t cols) {
  Echelon e;
  const std::size_t rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.swap_sign = -e.swap_sign;
    }
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (sgn(f) == 0 && sgn(a[i][j]) == 0) continue;
        Integer t = piv * a[i][j];
        if (sgn(f) != 0 && sgn(a[r][j]) != 0) t -= f * a[r][j];
        if (prev != 1) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(t);
      }
      a[i][c] = 0;
    }
    // Rows that did not need elimination still carry the previous scale.
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  e.a = std::move(a);
  return e;
}

// Back substitution in the echelon rows with the given free assignment.
Vec back_substitute(const Echelon& e, std::size_t cols, Vec x) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t p = e.pivots[k];
    Rational s = 0;
    for (std::size_t j = p + 1; j < cols; ++j)
      if (sgn(e.a[k][j]) != 0 && sgn(x[j]) != 0) s += Rational(e.a[k][j]) * x[j];
    x[p] = -s / Rational(e.a[k][p]);
  }
  return x;
}

} // namespace

std::size_t rank(const RatMatrix& m) { return bareiss(integer_rows(m), m.cols()).pivots.size(); }

std::vector<Vec> kernel_basis(const RatMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = bareiss(integer_rows(m), n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec x(n);
    x[f] = 1;
    basis.push_back(back_substitute(e, n, std::move(x)));
  }
  return basis;
}

std::optional<Vec> solve(const RatMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw invalid_input("solve: right-hand side has wrong length");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  Echelon e = bareiss(integer_rows(aug), n + 1);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vec x(n + 1);
  x[n] = -1; // moves b to the left-hand side: [m | b] (x, -1) = 0
  x = back_substitute(e, n + 1, std::move(x));
  x.pop_back();
  return x;
}

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw invalid_input("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<Integer> scales;
  Echelon e = bareiss(integer_rows(m, &scales), n);
  if (e.pivots.size() < n) return 0;
  Rational d(e.a[n - 1][n - 1]);
  d *= e.swap_sign;
  for (const auto& s : scales) d /= Rational(s);
  return d;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw invalid_input("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec e(n);
    e[c] = 1;
    auto x = solve(m, e);
    if (!x) return std::nullopt;
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = (*x)[r];
  }
  return inv;
}

bool is_skew_symmetric(const RatMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

Rational pfaffian(const RatMatrix& m) {
  if (!m.square() || m.rows() % 2 != 0) throw invalid_input("pfaffian: matrix must be square of even size");
  if (!is_skew_symmetric(m)) throw invalid_input("pfaffian: matrix is not skew-symmetric");
  RatMatrix a(m);
  const std::size_t n = a.rows();
  Rational pf = 1;
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t j = k + 1;
    while (j < n && sgn(a(k, j)) == 0) ++j;
    if (j == n) return 0;
    if (j != k + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(j, c), a(k + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(a(r, j), a(r, k + 1));
      pf = -pf;
    }
    const Rational p = a(k, k + 1);
    pf *= p;
    // Schur complement of the leading 2x2 block; unit-triangular congruence
    // leaves the Pfaffian of the trailing block unchanged.
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t l = k + 2; l < n; ++l) {
        Rational t = a(k + 1, i) * a(k, l) - a(k, i) * a(k + 1, l);
        if (sgn(t) != 0) a(i, l) += t / p;
      }
  }
  return pf;
}

Inertia inertia(const RatMatrix& symmetric) {
  if (!symmetric.square()) throw invalid_input("inertia of a non-square matrix");
  RatMatrix a(symmetric);
  const std::size_t n = a.rows();
  std::vector<std::size_t> active(n);
  for (std::size_t i = 0; i < n; ++i) active[i] = i;
  Inertia in;
  while (!active.empty()) {
    auto it = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return sgn(a(i, i)) != 0; });
    if (it == active.end()) {
      bool found = false;
      for (std::size_t x = 0; x < active.size() && !found; ++x)
        for (std::size_t y = x + 1; y < active.size() && !found; ++y) {
          const std::size_t i = active[x], j = active[y];
          if (sgn(a(i, j)) == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a(i, c) += a(j, c);
          for (std::size_t r = 0; r < n; ++r) a(r, i) += a(r, j);
          it = active.begin() + static_cast<long>(x);
          found = true;
        }
      if (!found) {
        in.zero += active.size();
        break;
      }
    }
    const std::size_t i = *it;
    const Rational d = a(i, i);
    (sgn(d) > 0 ? in.positive : in.negative) += 1;
    active.erase(it);
    for (std::size_t r : active) {
      if (sgn(a(r, i)) == 0) continue;
      const Rational f = a(r, i) / d;
      for (std::size_t c : active)
        if (sgn(a(i, c)) != 0) a(r, c) -= f * a(i, c);
    }
  }
  return in;
}

KernelBuilder::KernelBuilder(std::size_t unknowns) : n_(unknowns) {
  basis_.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Vec e(n_);
    e[i] = 1;
    basis_.push_back(std::move(e));
  }
}

void KernelBuilder::add_constraints(const std::vector<Vec>& rows) {
  if (basis_.empty() || rows.empty()) return;
  const std::size_t k = basis_.size();
  std::vector<Vec> projected;
  projected.reserve(rows.size());
  for (const auto& row : rows) {
    Vec p(k);
    bool nonzero = false;
    for (std::size_t b = 0; b < k; ++b) {
      p[b] = dot(row, basis_[b]);
      nonzero = nonzero || sgn(p[b]) != 0;
    }
    if (nonzero) projected.push_back(std::move(p));
  }
  if (projected.empty()) return;
  const auto kern = kernel_basis(RatMatrix::from_rows(projected, k));
  std::vector<Vec> next;
  next.reserve(kern.size());
  for (const auto& kv : kern) {
    Vec v(n_);
    for (std::size_t b = 0; b < k; ++b) axpy(v, kv[b], basis_[b]);
    next.push_back(std::move(v));
  }
  basis_ = std::move(next);
}

Vec SpanReducer::reduce(Vec& v) const {
  Vec combo(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (sgn(f) == 0) continue;
    axpy(v, -f, rows_[r]);
    const Vec& cr = combos_[r];
    for (std::size_t s = 0; s < cr.size(); ++s)
      if (sgn(cr[s]) != 0) combo[s] += f * cr[s];
  }
  return combo;
}

bool SpanReducer::insert(const Vec& v) {
  if (v.size() != length_) throw invalid_input("SpanReducer: vector has wrong length");
  Vec residual(v);
  Vec subtracted = reduce(residual);
  auto it = std::find_if(residual.begin(), residual.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == residual.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(it - residual.begin());
  const Rational inv = 1 / Rational(residual[pivot]);
  for (auto& x : residual) x *= inv;
  Vec combo(rows_.size() + 1);
  for (std::size_t s = 0; s < subtracted.size(); ++s) combo[s] = -subtracted[s] * inv;
  combo[rows_.size()] = inv;
  rows_.push_back(std::move(residual));
  pivots_.push_back(pivot);
  combos_.push_back(std::move(combo));
  return true;
}

std::optional<Vec> SpanReducer::coordinates(const Vec& v) const {
  if (v.size() != length_) throw invalid_input("SpanReducer: vector has wrong length");
  Vec residual(v);
  Vec c = reduce(residual);
  if (!tenfold::is_zero(residual)) return std::nullopt;
  return c;
}

} // namespace tenfold
