#include "doctest.h"

#include "tenfold/algebra.hpp"
#include "tenfold/errors.hpp"

using namespace tenfold;

namespace {

Vec e(const GradedAlgebra& a, std::size_t i) { return a.basis_vector(i); }

// Rebuilds the algebra through the checking constructor.
void check_axioms(const GradedAlgebra& a) {
  CHECK_NOTHROW(GradedAlgebra(a.parities(), a.table(), a.unit(), a.label(), true));
}

} // namespace

TEST_CASE("clifford generators") {
  auto cl1 = clifford(1, 0);
  CHECK(cl1.dim() == 2);
  CHECK(cl1.parity(1) == 1);
  CHECK(cl1.multiply(e(cl1, 1), e(cl1, 1)) == e(cl1, 0));
  auto clm1 = clifford(0, 1);
  CHECK(clm1.multiply(e(clm1, 1), e(clm1, 1)) == scale(e(clm1, 0), Rational(-1)));

  auto c = clifford(2, 1);
  CHECK(c.dim() == 8);
  // e1 e2 = -e2 e1, both stored at mask 3
  CHECK(c.multiply(e(c, 1), e(c, 2)) == e(c, 3));
  CHECK(c.multiply(e(c, 2), e(c, 1)) == scale(e(c, 3), Rational(-1)));
  CHECK(c.multiply(e(c, 4), e(c, 4)) == scale(e(c, 0), Rational(-1)));
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; p + q <= 4; ++q) check_axioms(clifford(p, q));
  CHECK_THROWS_AS(clifford(5, 4), Error);
}

TEST_CASE("quaternion table") {
  auto h = quaternions();
  CHECK(h.multiply(e(h, 1), e(h, 2)) == e(h, 3));
  CHECK(h.multiply(e(h, 2), e(h, 1)) == scale(e(h, 3), Rational(-1)));
  check_axioms(h);
  CHECK(center(h).size() == 1);
}

TEST_CASE("complex clifford") {
  auto c0 = complex_clifford(0);
  CHECK(c0.dim() == 2);
  CHECK(c0.is_commutative());
  CHECK(c0.purely_even());
  auto c1 = complex_clifford(1);
  CHECK(c1.dim() == 4);
  CHECK(c1.is_commutative());
  CHECK(c1.odd_dim() == 2);
  // e at index 2, ie at index 3
  CHECK(c1.multiply(e(c1, 2), e(c1, 2)) == e(c1, 0));
  CHECK(c1.multiply(e(c1, 3), e(c1, 3)) == scale(e(c1, 0), Rational(-1)));
  check_axioms(c1);
  check_axioms(complex_clifford(2));
}

TEST_CASE("graded tensor Koszul sign") {
  auto t = graded_tensor(clifford(1, 0), clifford(1, 0));
  // e(x)1 at index 2, 1(x)e at index 1, e(x)e at index 3
  CHECK(t.multiply(e(t, 2), e(t, 1)) == e(t, 3));
  CHECK(t.multiply(e(t, 1), e(t, 2)) == scale(e(t, 3), Rational(-1)));
  check_axioms(t);
  check_axioms(graded_tensor(clifford(1, 1), quaternions()));
  check_axioms(graded_tensor(complex_clifford(1), clifford(0, 2)));
  auto r = graded_tensor(clifford(0, 2), real_field());
  CHECK(r.table().size() == clifford(0, 2).table().size());
}

TEST_CASE("graded tensor is associative up to reindexing") {
  std::vector<GradedAlgebra> small{clifford(1, 0), clifford(0, 1), complex_clifford(1)};
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        auto left = graded_tensor(graded_tensor(a, b), c);
        auto right = graded_tensor(a, graded_tensor(b, c));
        // both use index (i * nb + j) * nc + k
        CHECK(left.table().size() == right.table().size());
        bool same = true;
        for (std::size_t x = 0; x < left.table().size(); ++x) {
          const auto& l = left.table()[x];
          const auto& r = right.table()[x];
          if (l.size() != r.size()) same = false;
          for (std::size_t y = 0; same && y < l.size(); ++y)
            if (l[y].k != r[y].k || l[y].value != r[y].value) same = false;
        }
        CHECK(same);
      }
}

TEST_CASE("opposite") {
  auto op = opposite(clifford(1, 0));
  CHECK(op.multiply(e(op, 1), e(op, 1)) == scale(e(op, 0), Rational(-1)));
  auto r = opposite(real_field());
  CHECK(r.multiply(e(r, 0), e(r, 0)) == e(r, 0));
  // opposite(opposite(A)) -> A via b_i -> (-1)^{|b_i|} b_i
  for (const auto& a : {clifford(2, 1), graded_tensor(quaternions(), clifford(1, 0)), complex_clifford(1)}) {
    auto oo = opposite(opposite(a));
    RatMatrix s = grading_involution(a);
    bool hom = true;
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec lhs = s * a.multiply(e(a, i), e(a, j));
        Vec rhs = oo.multiply(s * e(a, i), s * e(a, j));
        if (lhs != rhs) hom = false;
      }
    CHECK(hom);
    check_axioms(opposite(a));
  }
}

TEST_CASE("direct sum") {
  auto rr = direct_sum(real_field(), real_field());
  CHECK(rr.dim() == 2);
  CHECK(center(rr).size() == 2);
  CHECK(rr.purely_even());
  CHECK(direct_sum(clifford(0, 1), quaternions()).dim() == 6);
  check_axioms(direct_sum(clifford(0, 1), quaternions()));
}

TEST_CASE("matrix algebras") {
  auto m11 = matrix_algebra(real_field(), 1, 1);
  CHECK(m11.dim() == 4);
  // E_01 and E_10 are odd
  CHECK(m11.parity(1) == 1);
  CHECK(m11.parity(2) == 1);
  CHECK(m11.parity(3) == 0);
  CHECK(matrix_algebra(real_field(), 2, 0).purely_even());
  CHECK_THROWS_AS(matrix_algebra(real_field(), 0, 0), Error);
  for (const auto& a : {clifford(1, 0), quaternions(), clifford(0, 3)})
    for (std::size_t p = 0; p <= 2; ++p)
      for (std::size_t q = 0; p + q <= 2; ++q) {
        if (p + q == 0) continue;
        auto m = matrix_algebra(a, p, q);
        CHECK(m.dim() == (p + q) * (p + q) * a.dim());
        CHECK(m.even_dim() == (p * p + q * q) * a.even_dim() + 2 * p * q * a.odd_dim());
        check_axioms(m);
      }
}

TEST_CASE("center") {
  CHECK(center(clifford(0, 1)).size() == 2);
  CHECK(center(matrix_algebra(real_field(), 2, 0)).size() == 1);
  CHECK(center(clifford(0, 3)).size() == 2);
}

TEST_CASE("grading involution") {
  auto cl1 = clifford(1, 0);
  auto a = grading_involution(cl1);
  CHECK(a * e(cl1, 1) == scale(e(cl1, 1), Rational(-1)));
  CHECK(grading_involution(real_field()) == RatMatrix::identity(1));
  auto c = clifford(2, 1);
  auto g = grading_involution(c);
  CHECK(g * g == RatMatrix::identity(c.dim()));
}

TEST_CASE("constructor validation") {
  GradedAlgebra::Table bad_grading{{{0, Rational(1)}}, {{1, Rational(1)}}, {{1, Rational(1)}}, {{1, Rational(1)}}};
  CHECK_THROWS_AS(GradedAlgebra({0, 1}, bad_grading, Vec{1, 0}), Error);
  // dual numbers R[x]/x^2 pass all checks
  GradedAlgebra::Table dual{{{0, Rational(1)}}, {{1, Rational(1)}}, {{1, Rational(1)}}, {}};
  CHECK_NOTHROW(GradedAlgebra({0, 0}, dual, Vec{1, 0}));
  // non-associative: b1 b1 = b0 but with unit mismatch on b1 b0
  GradedAlgebra::Table no_unit{{{0, Rational(1)}}, {{1, Rational(2)}}, {{1, Rational(1)}}, {}};
  CHECK_THROWS_AS(GradedAlgebra({0, 0}, no_unit, Vec{1, 0}), Error);
  CHECK_THROWS_AS(GradedAlgebra({0, 1}, clifford(1, 0).table(), Vec{0, 1}), Error);
  // basis 1, x, y with x y = x and all other products of x, y zero: (x y) y = x but x (y y) = 0
  GradedAlgebra::Table nonassoc{{{0, Rational(1)}}, {{1, Rational(1)}}, {{2, Rational(1)}},
                                {{1, Rational(1)}}, {},                  {{1, Rational(1)}},
                                {{2, Rational(1)}}, {},                  {}};
  CHECK_THROWS_AS(GradedAlgebra({0, 0, 0}, nonassoc, Vec{1, 0, 0}), Error);
}

TEST_CASE("element multiply") {
  auto h = quaternions();
  auto h2 = quaternions();
  Element i(h, e(h, 1)), j(h, e(h, 2));
  CHECK(multiply(i, j).coords() == e(h, 3));
  CHECK_THROWS_AS(multiply(i, Element(h2, e(h2, 2))), Error);
}

TEST_CASE("subalgebra and matrix span") {
  auto m2 = matrix_algebra(real_field(), 2, 0);
  // corner E_00 M E_00 is R
  auto corner = subalgebra(m2, {e(m2, 0)}, e(m2, 0));
  CHECK(corner.dim() == 1);
  auto cl = matrix_span_algebra({RatMatrix::identity(2), RatMatrix{{0, 1}, {1, 0}}}, {0, 1});
  CHECK(cl.multiply(e(cl, 1), e(cl, 1)) == e(cl, 0));
}
