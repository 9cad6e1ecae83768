#include "doctest.h"

#include "tenfold/errors.hpp"
#include "tenfold/poly.hpp"

using namespace tenfold;

namespace {

RatPoly from_ints(std::initializer_list<long> c) {
  Vec v;
  for (long x : c) v.emplace_back(x);
  return RatPoly(std::move(v));
}

RatPoly product(const std::vector<std::pair<RatPoly, int>>& fs) {
  RatPoly r = RatPoly::constant(1);
  for (const auto& [f, m] : fs)
    for (int i = 0; i < m; ++i) r = r * f;
  return r;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
  RatPoly a = from_ints({-1, 0, 1});
  RatPoly b = from_ints({1, 1});
  auto [q, r] = divmod(a, b);
  CHECK(q == from_ints({-1, 1}));
  CHECK(r.is_zero());
  CHECK(gcd(a, from_ints({-1, 1})) == from_ints({-1, 1}));
  CHECK(to_string(from_ints({2, 0, -3, 1})) == "x^3 - 3x^2 + 2");
  RatPoly m = from_ints({1, 0, 1});
  CHECK((inverse_mod(b, m) * b) % m == RatPoly::constant(1));
}

TEST_CASE("minimal polynomial") {
  CHECK(minimal_polynomial(RatMatrix::identity(3)) == from_ints({-1, 1}));
  CHECK(minimal_polynomial(RatMatrix{{0, -1}, {1, 0}}) == from_ints({1, 0, 1}));
  CHECK(minimal_polynomial(RatMatrix{{1, 0}, {0, 2}}) == from_ints({2, -3, 1}));
  // Jordan block: (x-1)^2 (x-2), which is the characteristic polynomial.
  CHECK(minimal_polynomial(RatMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}) == from_ints({-2, 5, -4, 1}));
}

TEST_CASE("factorization over Q") {
  auto f = factor_squarefree_rational(from_ints({1, 0, 1}));
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == from_ints({1, 0, 1}));

  f = factor_squarefree_rational(from_ints({-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == from_ints({-1, 1}));
  CHECK(f[1].first == from_ints({1, 1}));

  CHECK(factor_squarefree_rational(from_ints({-2, 0, 1})).size() == 1);
  CHECK(factor_squarefree_rational(from_ints({1, 0, 0, 0, 1})).size() == 1);
  CHECK(factor_squarefree_rational(from_ints({-1, -1, 0, 0, 0, 1})).size() == 1);
  CHECK(factor_squarefree_rational(from_ints({1, 0, -10, 0, 1})).size() == 1);

  // Expected factor counts frozen from a computer-algebra oracle.
  struct Case {
    RatPoly p;
    std::size_t count;
  };
  std::vector<Case> cases{
      {from_ints({6, 0, -5, 0, 1}), 2},        // (x^2-2)(x^2-3)
      {from_ints({-1, 0, 0, 0, 0, 0, 1}), 4},  // x^6 - 1
      {from_ints({6, 5, -38, 5, 6}), 4},       // (x-2)(x+3)(2x-1)(3x+1)
      {from_ints({-16, 0, 0, 0, 0, 0, 0, 0, 1}), 4},
  };
  for (const auto& c : cases) {
    auto fs = factor_squarefree_rational(c.p);
    CHECK(fs.size() == c.count);
    CHECK(product(fs) == c.p.monic());
  }

  RatPoly mixed = from_ints({-2, 0, 0, 1}) * from_ints({1, 1, 1}) * from_ints({-3, 2});
  auto fs = factor_squarefree_rational(mixed * from_ints({1, 1}) * from_ints({1, 1}));
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].first == RatPoly{Rational(-3, 2), Rational(1)});
  CHECK(fs[1].first == from_ints({1, 1}));
  CHECK(fs[1].second == 2);
  CHECK(fs[2].first == from_ints({1, 1, 1}));
  CHECK(fs[3].first == from_ints({-2, 0, 0, 1}));
}

TEST_CASE("factor degree cap") {
  set_factor_degree_cap(3);
  CHECK_THROWS_AS(factor_squarefree_rational(from_ints({1, 0, 0, 0, 1})), Error);
  set_factor_degree_cap(16);
}

TEST_CASE("squarefree decomposition") {
  RatPoly p = from_ints({-1, 1}) * from_ints({-1, 1}) * from_ints({1, 0, 1});
  auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == from_ints({1, 0, 1}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == from_ints({-1, 1}));
  CHECK(parts[1].second == 2);
}

TEST_CASE("real root counting") {
  CHECK(real_root_count(from_ints({1, 0, 1})) == 0);
  CHECK(real_root_count(from_ints({-2, 0, 1})) == 2);
  CHECK(real_root_count(from_ints({0, -1, 0, 1})) == 3);
  CHECK(real_root_count(from_ints({1, 0, 0, 0, 1})) == 0);
  CHECK(real_root_count(from_ints({-1, -1, 0, 0, 0, 1})) == 1);
  CHECK(real_root_count(from_ints({0, -1, 0, 1}), Rational(0), Rational(2)) == 1);
}

TEST_CASE("root isolation and certified signs") {
  RatPoly p = from_ints({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi <= roots[1].lo);
  roots[1].refine(40);
  CHECK(roots[1].hi - roots[1].lo <= Rational(1, 1L << 40));
  CHECK(roots[1].lo < Rational(1415, 1000));
  CHECK(roots[1].hi > Rational(1414, 1000));
  // sign of x - 7/5 at +sqrt2 and -sqrt2
  RatPoly q{Rational(-7, 5), Rational(1)};
  CHECK(sign_at(q, roots[1], 1024) == 1);
  CHECK(sign_at(q, roots[0], 1024) == -1);
  CHECK(sign_at(from_ints({-2, 0, 1}) * from_ints({3, 1}), roots[0], 1024) == 0);
  CHECK(sign_at(from_ints({0, 1}) * from_ints({0, 1}) - RatPoly::constant(2), roots[1], 1024) == 0);
  // 99/70 is a very close rational approximation of sqrt2
  RatPoly close{Rational(-99, 70), Rational(1)};
  CHECK(sign_at(close, roots[1], 1024) == -1);
  auto fresh = isolate_real_roots(p);
  CHECK_THROWS_AS(sign_at(close, fresh[1], 4), Error);
}
