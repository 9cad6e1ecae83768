#include "tenfold/karoubi.hpp"

#include "tenfold/errors.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace tenfold {

namespace {

int sign_bit(const Rational& x) {
  if (sgn(x) == 0) throw invalid_input("singular matrix in an invariant");
  return sgn(x) < 0 ? 1 : 0;
}

// Best rational approximation of x with denominator at most max_den.
Rational rationalize(double x, double tol, long max_den = 1000000) {
  const bool neg = x < 0;
  double r = std::fabs(x);
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int i = 0; i < 64; ++i) {
    const double a = std::floor(r);
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::fabs(std::fabs(x) - static_cast<double>(h1) / static_cast<double>(k1)) < tol) break;
    const double frac = r - a;
    if (frac < 1e-300) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return 0;
  return ratio(neg ? -h1 : h1, k1);
}

} // namespace

Polarization make_polarization(const RatMatrix& j) {
  if (!j.square() || j.rows() % 2 != 0) throw invalid_input("polarization must be square of even size");
  if (!is_skew_symmetric(j)) throw invalid_input("polarization is not skew-symmetric");
  if (j * j != Rational(-1) * RatMatrix::identity(j.rows())) throw invalid_input("polarization does not square to -1");
  return {j.rows() / 2, j};
}

Polarization standard_polarization(std::size_t n) {
  RatMatrix j(2 * n, 2 * n);
  for (std::size_t b = 0; b < n; ++b) {
    j(2 * b, 2 * b + 1) = -1;
    j(2 * b + 1, 2 * b) = 1;
  }
  return {n, j};
}

KaroubiPair make_pair(const RatMatrix& j1, const RatMatrix& j2) {
  if (j1.rows() != j2.rows()) throw invalid_input("polarizations of a pair must have equal size");
  return {make_polarization(j1), make_polarization(j2)};
}

GradingPair make_grading_pair(const RatMatrix& a1, const RatMatrix& a2) {
  if (!a1.square() || !a2.square() || a1.rows() != a2.rows())
    throw invalid_input("grading pair needs two square matrices of equal size");
  if (sgn(determinant(a1)) == 0 || sgn(determinant(a2)) == 0) throw invalid_input("grading matrix is singular");
  return {a1, a2};
}

RatMatrix grading_matrix(const RatMatrix& a) {
  auto inv = inverse(a);
  if (!inv) throw invalid_input("grading matrix is singular");
  const std::size_t p = a.rows();
  RatMatrix g(2 * p, 2 * p);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) {
      g(r, p + c) = a(r, c);
      g(p + r, c) = (*inv)(r, c);
    }
  return g;
}

int class_d_invariant(const KaroubiPair& pair) {
  if (pair.first.n != pair.second.n) throw invalid_input("polarizations of a pair must have equal size");
  return sign_bit(pfaffian(pair.first.j)) ^ sign_bit(pfaffian(pair.second.j));
}

int grading_pair_invariant(const GradingPair& g) {
  return sign_bit(determinant(g.a1)) ^ sign_bit(determinant(g.a2));
}

KaroubiPair stack(const KaroubiPair& x, const KaroubiPair& y) {
  return {{x.first.n + y.first.n, block_diagonal(x.first.j, y.first.j)},
          {x.second.n + y.second.n, block_diagonal(x.second.j, y.second.j)}};
}

GradingPair stack(const GradingPair& x, const GradingPair& y) {
  return {block_diagonal(x.a1, y.a1), block_diagonal(x.a2, y.a2)};
}

RatMatrix householder(const Vec& u) {
  const Rational uu = dot(u, u);
  if (sgn(uu) == 0) throw invalid_input("householder vector is zero");
  const std::size_t n = u.size();
  RatMatrix h = RatMatrix::identity(n);
  const Rational c = Rational(2) / uu;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      if (sgn(u[r]) != 0 && sgn(u[s]) != 0) h(r, s) -= c * u[r] * u[s];
  return h;
}

Conjugator conjugator(const Polarization& j1, const Polarization& j2) {
  if (j1.n != j2.n) throw invalid_input("polarizations of a pair must have equal size");
  const std::size_t m = 2 * j1.n;
  // Invariant: cur = R J2 R^T; each step makes cur agree with J1 on one
  // more complex line {y, J1 y} without disturbing earlier lines.
  RatMatrix r = RatMatrix::identity(m);
  RatMatrix cur = j2.j;
  std::vector<Vec> done; // orthogonal basis of the processed span
  int det = 1;
  for (std::size_t i = 0; i < m && done.size() < m; ++i) {
    Vec y(m);
    y[i] = 1;
    for (const auto& p : done) axpy(y, -dot(y, p) / dot(p, p), p);
    if (is_zero(y)) continue;
    const Vec u = sub(cur * y, j1.j * y);
    if (!is_zero(u)) {
      const RatMatrix h = householder(u);
      r = h * r;
      cur = h * cur * h;
      det = -det;
    }
    done.push_back(y);
    done.push_back(j1.j * y);
  }
  if (cur != j1.j) throw internal_error("conjugator construction failed");
  return {r, det};
}

std::optional<RatMatrix> homotopy_witness(const KaroubiPair& pair) {
  Conjugator c = conjugator(pair.first, pair.second);
  if (c.det != 1) return std::nullopt;
  return c.o;
}

RatMatrix random_orthogonal(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> count(1, n + 1);
  RatMatrix o = RatMatrix::identity(n);
  const std::size_t k = count(rng);
  for (std::size_t f = 0; f < k; ++f) {
    Vec u(n);
    while (is_zero(u))
      for (auto& x : u) x = coef(rng);
    o = householder(u) * o;
  }
  return o;
}

Polarization random_polarization(std::size_t n, std::mt19937_64& rng) {
  const RatMatrix o = random_orthogonal(2 * n, rng);
  return {n, o.transpose() * standard_polarization(n).j * o};
}

FlattenResult flatten(const RealMatrix& h, double tol, int max_iterations) {
  const std::size_t n = h.size();
  if (n == 0 || n % 2 != 0) throw invalid_input("flatten needs a square matrix of even size");
  Eigen::MatrixXd x(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (h[r].size() != n) throw invalid_input("flatten needs a square matrix");
    for (std::size_t c = 0; c < n; ++c) x(r, c) = h[r][c];
  }
  const double scale = std::max(1.0, x.cwiseAbs().maxCoeff());
  if ((x + x.transpose()).cwiseAbs().maxCoeff() > tol * scale) throw invalid_input("flatten: matrix is not skew-symmetric");
  Eigen::FullPivLU<Eigen::MatrixXd> lu(x);
  if (!lu.isInvertible()) throw invalid_input("flatten: matrix is singular");

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  FlattenResult out;
  bool converged = false;
  for (int it = 0; it <= max_iterations; ++it) {
    if ((x * x + id).cwiseAbs().maxCoeff() < tol && (x.transpose() * x - id).cwiseAbs().maxCoeff() < tol) {
      converged = true;
      out.iterations = it;
      break;
    }
    x = 0.5 * (x + x.transpose().inverse());
  }
  if (!converged) throw precision_cap("flatten: Newton iteration did not converge");
  out.approx.assign(n, std::vector<double>(n));
  RatMatrix j(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      out.approx[r][c] = x(r, c);
      j(r, c) = rationalize(x(r, c), 1e3 * tol);
    }
  try {
    out.polarization = make_polarization(j);
    out.exact = true;
  } catch (const Error&) {
    out.exact = false;
  }
  return out;
}

} // namespace tenfold
