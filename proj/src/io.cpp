#include "tenfold/io.hpp"

#include "tenfold/errors.hpp"

#include <fstream>
#include <sstream>

namespace tenfold {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw invalid_input(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw invalid_input(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<int> bits_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
      throw invalid_input(std::string(what) + " entries must be 0 or 1");
    out.push_back(x.get<int>());
  }
  return out;
}

void check_version(const Json& j) {
  if (j.contains("schema_version") && j.at("schema_version") != kSchemaVersion)
    throw invalid_input("unsupported schema_version " + j.at("schema_version").dump());
}

int sign_from_json(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const Json& v = j.at(key);
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "+1" || s == "+" || s == "1") return 1;
    if (s == "-1" || s == "-") return -1;
    if (s == "absent" || s == "0") return 0;
  } else if (v.is_number_integer()) {
    const int x = v.get<int>();
    if (x == 1 || x == -1 || x == 0) return x;
  } else if (v.is_null()) {
    return 0;
  }
  throw invalid_input(std::string("field '") + key + "' must be \"+1\", \"-1\" or \"absent\"");
}

} // namespace

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw invalid_input("'" + path + "' is not valid JSON: " + e.what());
  }
}

InputKind detect_kind(const Json& j) {
  if (!j.is_object()) throw invalid_input("input must be a JSON object");
  if (j.contains("kind")) {
    const auto k = j.at("kind").get<std::string>();
    if (k == "algebra") return InputKind::algebra;
    if (k == "group") return InputKind::group;
    if (k == "ct") return InputKind::ct;
    throw invalid_input("unknown kind '" + k + "'");
  }
  if (j.contains("products")) return InputKind::algebra;
  if (j.contains("table") && j.contains("fermion_parity")) return InputKind::group;
  if (j.contains("T") || j.contains("C") || j.contains("CT_only")) return InputKind::ct;
  throw invalid_input("cannot tell whether the input is an algebra, a group or a CT spec");
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw invalid_input("rational must be a string like \"-3/4\" or an integer, got " + j.dump());
}

Json algebra_to_json(const GradedAlgebra& a) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "algebra";
  j["label"] = a.label();
  j["dim"] = a.dim();
  j["parity"] = a.parities();
  Json unit = Json::array();
  for (const auto& x : a.unit()) unit.push_back(to_string(x));
  j["unit"] = unit;
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (const auto& t : a.product(i, k)) products.push_back(Json::array({i, k, t.k, to_string(t.value)}));
  j["products"] = products;
  return j;
}

GradedAlgebra algebra_from_json(const Json& j) {
  check_version(j);
  const std::vector<int> parity = bits_from_json(field(j, "parity"), "parity");
  const std::size_t n = parity.size();
  if (n == 0) throw invalid_input("algebra must have positive dimension");
  if (j.contains("dim") && index_from_json(j.at("dim"), "dim") != n)
    throw invalid_input("dim does not match the parity vector");
  const Json& ju = field(j, "unit");
  if (!ju.is_array() || ju.size() != n) throw invalid_input("unit must have one entry per basis element");
  Vec unit;
  for (const auto& x : ju) unit.push_back(rational_from_json(x));
  GradedAlgebra::Table mul(n * n);
  const Json& jp = field(j, "products");
  if (!jp.is_array()) throw invalid_input("products must be an array");
  for (const auto& e : jp) {
    if (!e.is_array() || e.size() != 4) throw invalid_input("product entries are [i, j, k, coefficient]");
    const std::size_t a = index_from_json(e[0], "i"), b = index_from_json(e[1], "j"), c = index_from_json(e[2], "k");
    if (a >= n || b >= n || c >= n) throw invalid_input("product index out of range");
    mul[a * n + b].push_back({static_cast<std::uint32_t>(c), rational_from_json(e[3])});
  }
  return GradedAlgebra(parity, mul, unit, j.value("label", std::string{}));
}

Json group_to_json(const FermionicGroup& g) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "group";
  j["label"] = g.label;
  j["order"] = g.order();
  j["table"] = g.table;
  j["identity"] = g.identity;
  j["fermion_parity"] = g.fermion_parity;
  j["theta"] = g.theta;
  return j;
}

FermionicGroup group_from_json(const Json& j) {
  check_version(j);
  FermionicGroup g;
  const Json& t = field(j, "table");
  if (!t.is_array()) throw invalid_input("table must be an array of rows");
  for (const auto& row : t) {
    if (!row.is_array()) throw invalid_input("table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& x : row) r.push_back(index_from_json(x, "table entry"));
    g.table.push_back(std::move(r));
  }
  if (j.contains("order") && index_from_json(j.at("order"), "order") != g.table.size())
    throw invalid_input("order does not match the table");
  g.identity = index_from_json(field(j, "identity"), "identity");
  g.fermion_parity = index_from_json(field(j, "fermion_parity"), "fermion_parity");
  g.theta = bits_from_json(field(j, "theta"), "theta");
  g.label = j.value("label", std::string{});
  if (auto why = validate(g)) throw invalid_input("invalid fermionic group: " + *why);
  return g;
}

Json ct_to_json(const CTGroupSpec& s) {
  auto sign = [](int x) { return x > 0 ? "+1" : x < 0 ? "-1" : "absent"; };
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "ct";
  j["T"] = sign(s.sign_T);
  j["C"] = sign(s.sign_C);
  j["CT_only"] = s.ct_only;
  return j;
}

CTGroupSpec ct_from_json(const Json& j) {
  check_version(j);
  const int t = sign_from_json(j, "T"), c = sign_from_json(j, "C");
  bool ct_only = false;
  if (j.contains("CT_only")) {
    if (!j.at("CT_only").is_boolean()) throw invalid_input("CT_only must be a boolean");
    ct_only = j.at("CT_only").get<bool>();
  }
  if (ct_only && (t != 0 || c != 0)) throw invalid_input("CT_only excludes T and C");
  for (const auto& s : ct_enumerate())
    if (s.sign_T == t && s.sign_C == c && s.ct_only == ct_only) return s;
  throw internal_error("CT spec not in the enumeration");
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw invalid_input("matrix must be a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RatMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw invalid_input("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json matrix_to_json(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    j.push_back(row);
  }
  return j;
}

RealMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw invalid_input("matrix must be a non-empty array of rows");
  RealMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw invalid_input("matrix rows must be arrays");
    std::vector<double> r;
    for (const auto& x : row) {
      if (x.is_number()) {
        r.push_back(x.get<double>());
      } else if (x.is_string()) {
        try {
          std::size_t used = 0;
          const auto s = x.get<std::string>();
          double v = std::stod(s, &used);
          if (used == s.size()) {
            r.push_back(v);
            continue;
          }
        } catch (const std::exception&) {
        }
        r.push_back(rational_from_json(x).get_d());
      } else {
        throw invalid_input("matrix entries must be numbers");
      }
    }
    m.push_back(std::move(r));
  }
  return m;
}

Json to_json(const BlockClassification& b) {
  Json j;
  j["class"] = b.morita.name();
  j["field"] = b.morita.is_real() ? "real" : "complex";
  j["index"] = b.morita.index;
  j["size"] = b.size_string();
  j["division_dim"] = b.division_dim;
  j["certified_only"] = b.certified_only;
  return j;
}

Json to_json(const SPTReport& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["mode"] = r.mode == SptMode::lattice ? "lattice" : r.mode == SptMode::zero_dim ? "zero" : "continuum";
  Json blocks = Json::array();
  for (const auto& [b, g] : r.per_block) blocks.push_back(to_string(g));
  j["per_block"] = blocks;
  j["total"] = to_string(r.total);
  return j;
}

Json to_json(const PeriodicTable& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r;
    r["class"] = row.spec.label;
    r["ct"] = row.spec.code();
    r["algebra"] = row.block.morita.name();
    Json groups = Json::object();
    for (std::size_t i = 0; i < row.groups.size(); ++i)
      groups[std::to_string(t.d_min + static_cast<long>(i))] = to_string(row.groups[i]);
    r["groups"] = groups;
    rows.push_back(r);
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["rows"] = rows;
  return j;
}

} // namespace tenfold
