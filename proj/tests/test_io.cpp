#include "doctest.h"

#include "tenfold/errors.hpp"
#include "tenfold/io.hpp"

using namespace tenfold;

TEST_CASE("algebra json round trip") {
  for (const auto& a : {clifford(2, 1), quaternions(), complex_clifford(1), matrix_algebra(clifford(0, 1), 1, 1),
                        fermionic_group_algebra(quaternion_group())}) {
    const Json j = algebra_to_json(a);
    const GradedAlgebra b = algebra_from_json(Json::parse(j.dump()));
    CHECK(b.parities() == a.parities());
    CHECK(b.unit() == a.unit());
    CHECK(b.label() == a.label());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t k = 0; k < a.dim(); ++k)
        CHECK(b.multiply(b.basis_vector(i), b.basis_vector(k)) == a.multiply(a.basis_vector(i), a.basis_vector(k)));
    CHECK(algebra_to_json(b) == j);
  }
}

TEST_CASE("algebra json errors") {
  auto base = algebra_to_json(clifford(1, 0));
  auto broken = base;
  broken.erase("unit");
  CHECK_THROWS_AS(algebra_from_json(broken), Error);
  broken = base;
  broken["parity"] = {0, 2};
  CHECK_THROWS_AS(algebra_from_json(broken), Error);
  broken = base;
  broken["products"].push_back({0, 5, 0, "1"});
  CHECK_THROWS_AS(algebra_from_json(broken), Error);
  broken = base;
  broken["schema_version"] = 2;
  CHECK_THROWS_AS(algebra_from_json(broken), Error);
  broken = base;
  broken["products"][0][3] = "1/0";
  CHECK_THROWS_AS(algebra_from_json(broken), Error);
  broken = base;
  broken["products"][0][3] = 0.5;
  CHECK_THROWS_AS(algebra_from_json(broken), Error);
}

TEST_CASE("group and CT json") {
  auto g = z4_tf();
  auto back = group_from_json(group_to_json(g));
  CHECK(back.table == g.table);
  CHECK(back.fermion_parity == g.fermion_parity);
  CHECK(back.theta == g.theta);
  auto bad = group_to_json(g);
  bad["theta"] = {0, 1, 1, 1};
  CHECK_THROWS_AS(group_from_json(bad), Error);

  for (const auto& s : ct_enumerate()) CHECK(ct_from_json(ct_to_json(s)).label == s.label);
  CHECK(ct_from_json(Json::parse(R"({"T":"+1","C":"absent","CT_only":false})")).label == "AI");
  CHECK(ct_from_json(Json::parse(R"({"CT_only":true})")).label == "AIII");
  CHECK_THROWS_AS(ct_from_json(Json::parse(R"({"T":"+2"})")), Error);
  CHECK_THROWS_AS(ct_from_json(Json::parse(R"({"T":"+1","CT_only":true})")), Error);
}

TEST_CASE("kind detection") {
  CHECK(detect_kind(algebra_to_json(quaternions())) == InputKind::algebra);
  auto g = group_to_json(z4_tf());
  g.erase("kind");
  CHECK(detect_kind(g) == InputKind::group);
  CHECK(detect_kind(Json::parse(R"({"C":"-1"})")) == InputKind::ct);
  CHECK_THROWS_AS(detect_kind(Json::parse(R"({"x":1})")), Error);
  CHECK_THROWS_AS(detect_kind(Json::parse("[1,2]")), Error);
}

TEST_CASE("matrices") {
  auto m = matrix_from_json(Json::parse(R"([["1/2", 3], ["-4", "0"]])"));
  CHECK(m == RatMatrix{{ratio(1, 2), 3}, {-4, 0}});
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1, 2], [3]])")), Error);
  auto r = real_matrix_from_json(Json::parse(R"([[0, -2.5], ["2.5", "1/4"]])"));
  CHECK(r[0][1] == -2.5);
  CHECK(r[1][1] == 0.25);
}
