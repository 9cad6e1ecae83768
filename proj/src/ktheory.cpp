#include "tenfold/ktheory.hpp"

#include "tenfold/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <regex>
#include <sstream>

namespace tenfold {

namespace {

constexpr AbelianGroup kRealBott[8] = {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 1}, {0, 1}};
constexpr AbelianGroup kComplexBott[2] = {{1, 0}, {0, 0}};

long mod(long a, long m) { return ((a % m) + m) % m; }

unsigned binomial(long n, long k) {
  unsigned long r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<unsigned long>(n - k + i) / static_cast<unsigned long>(i);
  return static_cast<unsigned>(r);
}

} // namespace

std::string to_string(const AbelianGroup& g) {
  auto part = [](const char* base, unsigned k) {
    return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
  };
  if (g.free_rank == 0 && g.torsion2 == 0) return "0";
  std::string out;
  if (g.free_rank) out = part("Z", g.free_rank);
  if (g.torsion2) out += (out.empty() ? "" : "+") + part("Z2", g.torsion2);
  return out;
}

AbelianGroup parse_abelian_group(const std::string& s) {
  if (s == "0") return {};
  static const std::regex re(R"((Z(?:\^(\d+))?)?(?:\+?(Z2(?:\^(\d+))?))?)");
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, re) || (m[1].matched && m[3].matched && s.find('+') == std::string::npos))
    throw invalid_input("not an abelian group string: '" + s + "'");
  AbelianGroup g;
  if (m[1].matched) g.free_rank = m[2].matched ? static_cast<unsigned>(std::stoul(m[2])) : 1;
  if (m[3].matched) g.torsion2 = m[4].matched ? static_cast<unsigned>(std::stoul(m[4])) : 1;
  if (to_string(g) != s) throw invalid_input("non-canonical abelian group string: '" + s + "'");
  return g;
}

AbelianGroup kabs(MoritaClass c, long n) {
  return c.is_real() ? kRealBott[mod(c.index - n, 8)] : kComplexBott[mod(c.index - n, 2)];
}

SPTReport spt_from_blocks(const std::vector<BlockClassification>& blocks, long d, SptMode mode) {
  if (d < 0) throw invalid_input("spatial dimension must be non-negative");
  SPTReport r;
  r.mode = mode;
  r.dimension = mode == SptMode::zero_dim ? 0 : d;
  for (const auto& b : blocks) {
    AbelianGroup g;
    if (mode == SptMode::lattice) {
      for (long i = 0; i <= d; ++i) g += binomial(d, i) * kabs(b.morita, 2 - i);
    } else {
      g = kabs(b.morita, 2 - r.dimension);
    }
    r.per_block.emplace_back(b, g);
    r.total += g;
  }
  return r;
}

SPTReport spt_continuum(const GradedAlgebra& a, long d, std::uint64_t seed) {
  return spt_from_blocks(classify_algebra(a, seed), d, SptMode::continuum);
}

SPTReport spt_lattice(const GradedAlgebra& a, long d, std::uint64_t seed) {
  return spt_from_blocks(classify_algebra(a, seed), d, SptMode::lattice);
}

PeriodicTable periodic_table(long d_min, long d_max, std::uint64_t seed) {
  if (d_min > d_max) throw invalid_input("empty dimension range");
  if (d_min < 0) throw invalid_input("spatial dimension must be non-negative");
  PeriodicTable t{d_min, d_max, {}};
  for (const auto& spec : ct_enumerate()) {
    auto blocks = classify_algebra(unit_charge_algebra(spec, Grading::theta), seed);
    if (blocks.size() != 1) throw internal_error("CT algebra " + spec.label + " is not graded simple");
    TableRow row{spec, blocks[0], {}};
    for (long d = d_min; d <= d_max; ++d) row.groups.push_back(spt_from_blocks(blocks, d, SptMode::continuum).total);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_text(const PeriodicTable& t) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "class" << std::setw(5) << "CT" << std::setw(9) << "algebra";
  for (long d = t.d_min; d <= t.d_max; ++d) os << std::setw(8) << ("d=" + std::to_string(d));
  os << '\n';
  for (const auto& row : t.rows) {
    os << std::setw(6) << row.spec.label << std::setw(5) << row.spec.code() << std::setw(9) << row.block.morita.name();
    for (const auto& g : row.groups) os << std::setw(8) << to_string(g);
    os << '\n';
  }
  std::string s = os.str();
  // drop trailing padding
  std::string out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + '\n';
  }
  return out;
}

} // namespace tenfold
