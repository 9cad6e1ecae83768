#include "doctest.h"

#include "tenfold/errors.hpp"
#include "tenfold/karoubi.hpp"

#include <cmath>

using namespace tenfold;

namespace {

RealMatrix to_real(const RatMatrix& m) {
  RealMatrix out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_d();
  return out;
}

double max_diff(const RealMatrix& a, const RealMatrix& b) {
  double d = 0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a.size(); ++c) d = std::max(d, std::fabs(a[r][c] - b[r][c]));
  return d;
}

bool is_orthogonal(const RatMatrix& o) { return o.transpose() * o == RatMatrix::identity(o.rows()); }

} // namespace

TEST_CASE("flatten examples") {
  auto r = flatten({{0, -2}, {2, 0}});
  REQUIRE(r.exact);
  CHECK(r.polarization->j == RatMatrix{{0, -1}, {1, 0}});

  auto fixed = flatten({{0, -1}, {1, 0}});
  CHECK(fixed.iterations == 0);

  auto blocks = flatten({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 3}, {0, 0, -3, 0}});
  REQUIRE(blocks.exact);
  CHECK(blocks.polarization->j == RatMatrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});

  CHECK_THROWS_AS(flatten({{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(flatten({{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(flatten({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}), Error);
}

TEST_CASE("flatten commutes with conjugation") {
  std::mt19937_64 rng(7);
  const RealMatrix h = {{0, -2, 1, 0}, {2, 0, 0.5, 1}, {-1, -0.5, 0, -3}, {0, -1, 3, 0}};
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix o = random_orthogonal(4, rng);
    RealMatrix od = to_real(o), ot = to_real(o.transpose());
    auto mul = [](const RealMatrix& a, const RealMatrix& b) {
      RealMatrix c(a.size(), std::vector<double>(a.size()));
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
          for (std::size_t k = 0; k < a.size(); ++k) c[i][j] += a[i][k] * b[k][j];
      return c;
    };
    auto lhs = flatten(mul(mul(ot, h), od)).approx;
    auto rhs = mul(mul(ot, flatten(h).approx), od);
    CHECK(max_diff(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("polarization checks") {
  CHECK_NOTHROW(make_polarization(RatMatrix{{0, -1}, {1, 0}}));
  CHECK_THROWS_AS(make_polarization(RatMatrix{{0, -2}, {2, 0}}), Error);
  CHECK_THROWS_AS(make_polarization(RatMatrix{{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(make_pair(standard_polarization(1).j, standard_polarization(2).j), Error);
}

TEST_CASE("class D invariant examples") {
  const RatMatrix j = standard_polarization(1).j;
  CHECK(class_d_invariant(make_pair(j, j)) == 0);
  CHECK(class_d_invariant(make_pair(j, j.transpose())) == 1);
  auto x = make_pair(j, j.transpose());
  auto trivial = make_pair(j, j);
  CHECK(stack(x, x).module_dim() == 4);
  CHECK(class_d_invariant(stack(x, x)) == 0);
  CHECK(class_d_invariant(stack(x, trivial)) == 1);
}

TEST_CASE("class D properties on random pairs") {
  std::mt19937_64 rng(0x5EED);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      auto p1 = random_polarization(n, rng), p2 = random_polarization(n, rng), p3 = random_polarization(n, rng);
      const KaroubiPair a{p1, p2}, b{p2, p3}, c{p1, p3};
      CHECK((class_d_invariant(a) ^ class_d_invariant(b)) == class_d_invariant(c));
      CHECK(class_d_invariant(stack(a, b)) == (class_d_invariant(a) ^ class_d_invariant(b)));

      const RatMatrix o = random_orthogonal(2 * n, rng);
      const KaroubiPair conj{{n, o.transpose() * p1.j * o}, {n, o.transpose() * p2.j * o}};
      CHECK(class_d_invariant(conj) == class_d_invariant(a));

      auto w = homotopy_witness(a);
      auto any = conjugator(p1, p2);
      CHECK(is_orthogonal(any.o));
      CHECK(any.o.transpose() * p1.j * any.o == p2.j);
      CHECK(any.det == (sgn(determinant(any.o)) > 0 ? 1 : -1));
      CHECK(w.has_value() == (class_d_invariant(a) == 0));
      if (w) {
        CHECK(is_orthogonal(*w));
        CHECK(determinant(*w) == 1);
        CHECK(w->transpose() * p1.j * *w == p2.j);
      }
    }
}

TEST_CASE("grading pairs realize Z2") {
  const RatMatrix id = RatMatrix::identity(3);
  RatMatrix flip = id;
  flip(0, 0) = -1;
  CHECK(grading_pair_invariant(make_grading_pair(id, id)) == 0);
  CHECK(grading_pair_invariant(make_grading_pair(id, flip)) == 1);
  auto g = make_grading_pair(id, flip);
  CHECK(grading_pair_invariant(stack(g, g)) == 0);
  CHECK(grading_pair_invariant(stack(g, make_grading_pair(id, id))) == 1);
  CHECK_THROWS_AS(make_grading_pair(id, RatMatrix(3, 3)), Error);

  // [[0, A], [A^-1, 0]] is a grading: it squares to 1
  RatMatrix a{{2, 1}, {1, 1}};
  const RatMatrix gm = grading_matrix(a);
  CHECK(gm * gm == RatMatrix::identity(4));
}
