#include "tenfold/cli.hpp"

#include "tenfold/classify.hpp"
#include "tenfold/errors.hpp"
#include "tenfold/io.hpp"
#include "tenfold/karoubi.hpp"
#include "tenfold/ktheory.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

namespace tenfold {

namespace {

struct Options {
  std::string seed_text = "0x5EED";
  std::uint64_t seed = kDefaultSeed;
  long precision_bits = 0;
  std::string format = "text";

  // classify
  std::vector<std::string> inputs;
  long dim = -1;
  std::string dims;
  std::string mode = "continuum";
  std::string grading = "theta";
  unsigned jobs = 1;

  std::string out_path;
  std::size_t p = 0, q = 0;
  std::string karoubi_op;
  std::string karoubi_input;
  double tol = 1e-12;
};

std::string seed_string(std::uint64_t seed) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << seed;
  return os.str();
}

std::string header(const std::string& command, const Options& o) {
  return "# tenfold " + command + " seed=" + seed_string(o.seed) + "\n";
}

std::pair<long, long> parse_range(const Options& o, long default_lo, long default_hi) {
  if (!o.dims.empty()) {
    const auto dots = o.dims.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        long d = std::stol(o.dims, &used);
        if (used != o.dims.size()) throw std::invalid_argument("");
        return {d, d};
      }
      const std::string a = o.dims.substr(0, dots), b = o.dims.substr(dots + 2);
      long lo = std::stol(a, &used);
      if (used != a.size()) throw std::invalid_argument("");
      long hi = std::stol(b, &used);
      if (used != b.size()) throw std::invalid_argument("");
      if (lo < 0 || hi < lo) throw std::invalid_argument("");
      return {lo, hi};
    } catch (const std::invalid_argument&) {
      throw invalid_input("--dims expects a..b with 0 <= a <= b, got '" + o.dims + "'");
    } catch (const std::out_of_range&) {
      throw invalid_input("--dims out of range");
    }
  }
  if (o.dim >= 0) return {o.dim, o.dim};
  return {default_lo, default_hi};
}

Grading parse_grading(const std::string& s) { return s == "c" ? Grading::c : Grading::theta; }

struct Loaded {
  GradedAlgebra algebra;
  std::string kind;
};

Loaded load_algebra(const std::string& path, Grading grading) {
  const Json j = load_json(path);
  switch (detect_kind(j)) {
  case InputKind::algebra: return {algebra_from_json(j), "algebra"};
  case InputKind::group: return {fermionic_group_algebra(group_from_json(j)), "group"};
  case InputKind::ct: {
    const CTGroupSpec spec = ct_from_json(j);
    return {unit_charge_algebra(spec, grading), "CT spec " + spec.label};
  }
  }
  throw internal_error("unreachable input kind");
}

// One input file, rendered completely so parallel runs print in order.
std::string classify_one(const std::string& path, const Options& o) {
  const Grading grading = parse_grading(o.grading);
  const Loaded in = load_algebra(path, grading);
  const GradedAlgebra& a = in.algebra;
  const DecompositionReport report = graded_blocks(a);
  std::vector<BlockClassification> blocks;
  for (const auto& b : report.blocks) blocks.push_back(classify_block(b, o.seed));

  const SptMode mode = o.mode == "lattice" ? SptMode::lattice : o.mode == "zero" ? SptMode::zero_dim : SptMode::continuum;
  auto [lo, hi] = mode == SptMode::zero_dim ? std::pair<long, long>{0, 0} : parse_range(o, 0, 0);
  std::vector<SPTReport> spt;
  for (long d = lo; d <= hi; ++d) spt.push_back(spt_from_blocks(blocks, d, mode));

  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = seed_string(o.seed);
    j["input"] = path;
    j["input_kind"] = in.kind;
    j["label"] = a.label();
    j["dim"] = a.dim();
    j["even_dim"] = a.even_dim();
    j["grading"] = o.grading;
    j["exact_path"] = report.exact_path;
    Json jb = Json::array();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Json b = to_json(blocks[i]);
      b["kind"] = report.blocks[i].kind == BlockKind::fixed ? "fixed" : "swap";
      b["dim"] = report.blocks[i].invariants.dim;
      jb.push_back(b);
    }
    j["blocks"] = jb;
    Json js = Json::array();
    for (const auto& r : spt) js.push_back(to_json(r));
    j["spt"] = js;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "input: " << path << " (" << in.kind << ")\n";
  os << "algebra: " << (a.label().empty() ? "unlabeled" : a.label()) << "; dim " << a.dim() << " (even "
     << a.even_dim() << ", odd " << a.odd_dim() << ")";
  if (in.kind != "algebra") os << "; grading " << o.grading;
  os << "\n";
  os << "path: " << (report.exact_path ? "exact" : "certified") << "\n";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    os << "block: " << b.morita.name() << "; size " << b.size_string() << "; dim " << report.blocks[i].invariants.dim
       << "; " << (report.blocks[i].kind == BlockKind::fixed ? "fixed" : "swap")
       << (b.certified_only ? "; invariants only" : "") << "\n";
  }
  for (const auto& r : spt) {
    os << "SPT_" << r.dimension << (mode == SptMode::lattice ? " (lattice)" : "") << " = " << to_string(r.total);
    if (r.per_block.size() > 1) {
      os << "  [";
      for (std::size_t i = 0; i < r.per_block.size(); ++i) os << (i ? ", " : "") << to_string(r.per_block[i].second);
      os << "]";
    }
    os << "\n";
  }
  return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw invalid_input("cannot write '" + path + "'");
  f << text;
}

std::string render_matrix(const RatMatrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? "," : "") + to_string(m(r, c));
    s += "]";
  }
  return s + "]";
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.inputs.empty()) throw invalid_input("classify needs at least one input file");
  std::vector<std::string> results(o.inputs.size());
  std::vector<std::optional<Error>> errors(o.inputs.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = classify_one(o.inputs[i], o);
    } catch (const Error& e) {
      errors[i] = e;
    }
  };
  if (o.jobs <= 1 || o.inputs.size() == 1) {
    for (std::size_t i = 0; i < o.inputs.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> pending;
    for (std::size_t i = 0; i < o.inputs.size(); ++i) {
      pending.push_back(std::async(std::launch::async, work, i));
      if (pending.size() >= o.jobs) {
        for (auto& f : pending) f.get();
        pending.clear();
      }
    }
    for (auto& f : pending) f.get();
  }
  int code = 0;
  if (o.format != "json") out << header("classify", o);
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    if (errors[i]) {
      err << "error: " << o.inputs[i] << ": " << errors[i]->what() << "\n";
      if (code == 0) code = errors[i]->exit_code();
      continue;
    }
    out << results[i];
  }
  return code;
}

int cmd_group_algebra(const Options& o, std::ostream& out) {
  if (o.inputs.size() != 1) throw invalid_input("group-algebra takes exactly one input file");
  const Loaded in = load_algebra(o.inputs[0], parse_grading(o.grading));
  write_output(o.out_path, algebra_to_json(in.algebra).dump(2) + "\n", out);
  return 0;
}

int cmd_ct_groups(const Options& o, std::ostream& out) {
  const auto specs = ct_enumerate();
  Json rows = Json::array();
  std::ostringstream os;
  os << header("ct-groups", o) << "count: " << specs.size() << "\n";
  os << std::left << std::setw(6) << "class" << std::setw(5) << "CT" << std::setw(5) << "dim" << std::setw(10)
     << "theta" << std::setw(6) << "size" << "c\n";
  for (const auto& s : specs) {
    const GradedAlgebra at = unit_charge_algebra(s, Grading::theta);
    const auto t = classify_algebra(at, o.seed);
    const auto c = classify_algebra(unit_charge_algebra(s, Grading::c), o.seed);
    if (t.size() != 1 || c.size() != 1) throw internal_error("CT algebra " + s.label + " is not graded simple");
    os << std::setw(6) << s.label << std::setw(5) << s.code() << std::setw(5) << at.dim() << std::setw(10)
       << t[0].morita.name() << std::setw(6) << t[0].size_string() << c[0].morita.name() << "\n";
    Json r;
    r["class"] = s.label;
    r["ct"] = s.code();
    r["spec"] = ct_to_json(s);
    r["dim"] = at.dim();
    r["theta"] = to_json(t[0]);
    r["c"] = to_json(c[0]);
    rows.push_back(r);
  }
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = seed_string(o.seed);
    j["count"] = specs.size();
    j["rows"] = rows;
    out << j.dump(2) << "\n";
  } else {
    out << os.str();
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  auto [lo, hi] = parse_range(o, 0, 7);
  const PeriodicTable t = periodic_table(lo, hi, o.seed);
  if (o.format == "json") {
    Json j = to_json(t);
    j["seed"] = seed_string(o.seed);
    out << j.dump(2) << "\n";
  } else {
    out << header("table", o) << render_text(t);
  }
  return 0;
}

int cmd_clifford(const Options& o, std::ostream& out) {
  const GradedAlgebra a = clifford(o.p, o.q);
  const auto cls = classify_algebra(a, o.seed);
  if (cls.size() != 1) throw internal_error("Clifford algebra is not graded simple");
  const Json aj = algebra_to_json(a);
  if (!o.out_path.empty()) write_output(o.out_path, aj.dump(2) + "\n", out);
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["seed"] = seed_string(o.seed);
    j["classification"] = to_json(cls[0]);
    if (o.out_path.empty()) j["algebra"] = aj;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << header("clifford", o);
  out << a.label() << ": dim " << a.dim() << "; class " << cls[0].morita.index << " (" << cls[0].morita.name()
      << "); size " << cls[0].size_string() << "\n";
  if (!o.out_path.empty()) out << "wrote " << o.out_path << "\n";
  return 0;
}

int cmd_karoubi(const Options& o, std::ostream& out) {
  const Json j = load_json(o.karoubi_input);
  auto get = [&](std::initializer_list<const char*> keys) -> const Json& {
    for (const char* k : keys)
      if (j.contains(k)) return j.at(k);
    throw invalid_input(std::string("missing field '") + *keys.begin() + "'");
  };
  if (o.karoubi_op == "invariant") {
    const KaroubiPair pair = make_pair(matrix_from_json(get({"first", "J1"})), matrix_from_json(get({"second", "J2"})));
    out << class_d_invariant(pair) << "\n";
    return 0;
  }
  if (o.karoubi_op == "grading") {
    const GradingPair g = make_grading_pair(matrix_from_json(get({"A1", "first"})), matrix_from_json(get({"A2", "second"})));
    out << grading_pair_invariant(g) << "\n";
    return 0;
  }
  const FlattenResult r = flatten(real_matrix_from_json(j.is_array() ? j : get({"matrix", "h"})), o.tol);
  if (o.format == "json") {
    Json res;
    res["exact"] = r.exact;
    res["iterations"] = r.iterations;
    if (r.exact)
      res["matrix"] = matrix_to_json(r.polarization->j);
    else
      res["matrix"] = r.approx;
    out << res.dump(2) << "\n";
  } else if (r.exact) {
    out << render_matrix(r.polarization->j) << "\n";
  } else {
    out << Json(r.approx).dump() << "\napproximate\n";
  }
  return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tenfold way toolkit: graded Morita classes and SPT groups of finite-dimensional algebras", "tenfold"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed_text, "Seed for randomized searches (default 0x5EED)");
  app.add_option("--precision-bits", o.precision_bits, "Bit cap for certified root decisions");

  auto* classify_cmd = app.add_subcommand("classify", "Decompose, classify and compute SPT groups");
  classify_cmd->add_option("inputs", o.inputs, "Algebra, group or CT spec JSON files")->required();
  classify_cmd->add_option("--dim", o.dim, "Spatial dimension")->check(CLI::NonNegativeNumber);
  classify_cmd->add_option("--dims", o.dims, "Dimension range a..b");
  classify_cmd->add_option("--mode", o.mode, "continuum, lattice or zero")
      ->check(CLI::IsMember({"continuum", "lattice", "zero"}));
  classify_cmd->add_option("--grading", o.grading, "Grading of CT algebras: theta or c")
      ->check(CLI::IsMember({"theta", "c"}));
  classify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--jobs", o.jobs, "Inputs processed in parallel")->check(CLI::PositiveNumber);

  auto* group_cmd = app.add_subcommand("group-algebra", "Write the graded algebra of a group or CT spec");
  group_cmd->add_option("input", o.inputs)->required();
  group_cmd->add_option("--out", o.out_path, "Output file (default stdout)");
  group_cmd->add_option("--grading", o.grading)->check(CLI::IsMember({"theta", "c"}));

  auto* ct_cmd = app.add_subcommand("ct-groups", "The ten CT groups with their algebras and classes");
  ct_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* table_cmd = app.add_subcommand("table", "Periodic table of continuum SPT groups");
  table_cmd->add_option("--dims", o.dims, "Dimension range a..b (default 0..7)");
  table_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* cliff_cmd = app.add_subcommand("clifford", "Emit Cl_{p,q} and its class");
  cliff_cmd->add_option("p", o.p)->required();
  cliff_cmd->add_option("q", o.q)->required();
  cliff_cmd->add_option("--out", o.out_path, "Write the algebra JSON here");
  cliff_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  auto* kar_cmd = app.add_subcommand("karoubi", "Karoubi pair computations");
  kar_cmd->add_option("operation", o.karoubi_op, "invariant, flatten or grading")
      ->required()
      ->check(CLI::IsMember({"invariant", "flatten", "grading"}));
  kar_cmd->add_option("input", o.karoubi_input)->required();
  kar_cmd->add_option("--tol", o.tol, "Tolerance for flatten");
  kar_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::invalid_input);
  }

  const long saved_cap = precision_cap_bits();
  try {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(o.seed_text, &used, 0);
      if (used != o.seed_text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw invalid_input("--seed expects an integer, got '" + o.seed_text + "'");
    }
    if (o.precision_bits < 0) throw invalid_input("--precision-bits must be positive");
    if (o.precision_bits > 0) set_precision_cap_bits(o.precision_bits);
    int code = 0;
    if (*classify_cmd)
      code = cmd_classify(o, out, err);
    else if (*group_cmd)
      code = cmd_group_algebra(o, out);
    else if (*ct_cmd)
      code = cmd_ct_groups(o, out);
    else if (*table_cmd)
      code = cmd_table(o, out);
    else if (*cliff_cmd)
      code = cmd_clifford(o, out);
    else if (*kar_cmd)
      code = cmd_karoubi(o, out);
    set_precision_cap_bits(saved_cap);
    return code;
  } catch (const Error& e) {
    set_precision_cap_bits(saved_cap);
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    set_precision_cap_bits(saved_cap);
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::internal);
  }
}

} // namespace tenfold
