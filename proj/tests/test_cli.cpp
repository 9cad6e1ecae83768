#include "doctest.h"

#include "tenfold/cli.hpp"
#include "tenfold/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tenfold;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tenfold");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TENFOLD_TEST_DIR) + "/data/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("tenfold_test_" + name)).string();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

} // namespace

TEST_CASE("cli classify examples") {
  auto z4 = run({"classify", data("z4tf.json"), "--dim", "0"});
  CHECK(z4.code == 0);
  CHECK(contains(z4.out, "block: Cl_{-1}"));
  CHECK(contains(z4.out, "SPT_0 = 0"));
  CHECK(contains(z4.out, "seed=0x5EED"));

  auto bdi = run({"classify", data("ct_bdi.json"), "--dims", "0..3"});
  CHECK(bdi.code == 0);
  CHECK(contains(bdi.out, "SPT_1 = Z\n"));

  auto d = run({"classify", data("ct_d.json"), "--grading", "c"});
  CHECK(contains(d.out, "block: Cl_{+2}"));
}

TEST_CASE("cli exit codes") {
  CHECK(run({"classify", data("dual_numbers.json")}).code == 3);
  auto bad = run({"classify", data("bad_unit.json")});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "unit"));
  CHECK(run({"classify", data("does_not_exist.json")}).code == 2);
  CHECK(run({"classify", data("z4tf.json"), "--mode", "sideways"}).code == 2);
  CHECK(run({"classify", data("z4tf.json"), "--dims", "3..1"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"classify", data("close_roots.json"), "--precision-bits", "2"}).code == 4);
  CHECK(run({"classify", data("close_roots.json")}).code == 0);
  CHECK(run({"clifford", "9", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli golden table") {
  auto t = run({"table", "--dims", "0..7"});
  CHECK(t.code == 0);
  CHECK(t.out == slurp(std::string(TENFOLD_TEST_DIR) + "/golden/table_0_7.txt"));
  auto ct = run({"ct-groups"});
  CHECK(ct.out == slurp(std::string(TENFOLD_TEST_DIR) + "/golden/ct_groups.txt"));
  CHECK(contains(ct.out, "count: 10"));

  auto j = Json::parse(run({"table", "--dims", "0..1", "--format", "json"}).out);
  CHECK(j["rows"].size() == 10);
  CHECK(j["rows"][2]["class"] == "D");
  CHECK(j["rows"][2]["algebra"] == "R");
  CHECK(j["rows"][2]["groups"]["0"] == "Z2");
}

TEST_CASE("cli clifford and round trip") {
  CHECK(contains(run({"clifford", "1", "1"}).out, "class 0 (R)"));
  CHECK(contains(run({"clifford", "0", "3"}).out, "class 5 (Cl_{-3})"));
  CHECK(contains(run({"clifford", "4", "4"}).out, "class 0 (R)"));

  const std::string path = temp_path("cl21.json");
  auto w = run({"clifford", "2", "1", "--out", path});
  REQUIRE(w.code == 0);
  auto back = run({"classify", path});
  CHECK(back.code == 0);
  CHECK(contains(back.out, "block: Cl_{+1}"));

  const std::string gpath = temp_path("q8_algebra.json");
  REQUIRE(run({"group-algebra", data("q8.json"), "--out", gpath}).code == 0);
  auto direct = run({"classify", data("q8.json")});
  auto via = run({"classify", gpath});
  CHECK(contains(via.out, "block: H; size 1|0"));
  CHECK(contains(direct.out, "block: H; size 1|0"));
  std::filesystem::remove(path);
  std::filesystem::remove(gpath);
}

TEST_CASE("cli output is deterministic and seed-independent") {
  const std::vector<std::string> args = {"classify", data("q8.json"), data("ct_cii.json"), data("pin_1_1.json"),
                                         "--dims", "0..3", "--jobs", "3"};
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto seeded = args;
  seeded.insert(seeded.begin(), {"--seed", "17"});
  auto c = run(seeded);
  CHECK(contains(c.out, "seed=0x11"));
  CHECK(a.out.substr(a.out.find('\n')) == c.out.substr(c.out.find('\n')));
}

TEST_CASE("cli karoubi") {
  CHECK(run({"karoubi", "invariant", data("pair_opposite.json")}).out == "1\n");
  CHECK(run({"karoubi", "invariant", data("pair_same.json")}).out == "0\n");
  CHECK(run({"karoubi", "flatten", data("flatten.json")}).out == "[[0,-1],[1,0]]\n");
  CHECK(run({"karoubi", "grading", data("grading_flip.json")}).out == "1\n");
  CHECK(run({"karoubi", "invariant", data("flatten.json")}).code == 2);
}
