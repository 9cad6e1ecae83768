#pragma once

#include "tenfold/classify.hpp"
#include "tenfold/fermionic_group.hpp"

#include <string>
#include <vector>

namespace tenfold {

// Z^free_rank + Z2^torsion2. Only these occur for the ten classes.
struct AbelianGroup {
  unsigned free_rank = 0;
  unsigned torsion2 = 0;

  static AbelianGroup zero() { return {}; }
  static AbelianGroup z() { return {1, 0}; }
  static AbelianGroup z2() { return {0, 1}; }

  AbelianGroup& operator+=(const AbelianGroup& o) {
    free_rank += o.free_rank;
    torsion2 += o.torsion2;
    return *this;
  }
  friend AbelianGroup operator+(AbelianGroup a, const AbelianGroup& b) { return a += b; }
  friend AbelianGroup operator*(unsigned k, const AbelianGroup& a) { return {k * a.free_rank, k * a.torsion2}; }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// "0", "Z", "Z2", "Z^2", "Z+Z2^3".
std::string to_string(const AbelianGroup& g);
// Inverse of to_string; throws invalid_input.
AbelianGroup parse_abelian_group(const std::string& s);

// K^ABS_n of a graded division algebra: the Bott table at (index - n).
AbelianGroup kabs(MoritaClass c, long n);

enum class SptMode { continuum, lattice, zero_dim };

struct SPTReport {
  std::vector<std::pair<BlockClassification, AbelianGroup>> per_block;
  AbelianGroup total;
  long dimension = 0;
  SptMode mode = SptMode::continuum;
};

// SPT groups of already classified blocks. Continuum: K^ABS_{2-d} per
// block; lattice: sum over i of binom(d, i) copies of K^ABS_{2-i};
// zero_dim is continuum at d = 0.
SPTReport spt_from_blocks(const std::vector<BlockClassification>& blocks, long d, SptMode mode);

SPTReport spt_continuum(const GradedAlgebra& a, long d, std::uint64_t seed = kDefaultSeed);
SPTReport spt_lattice(const GradedAlgebra& a, long d, std::uint64_t seed = kDefaultSeed);

struct TableRow {
  CTGroupSpec spec;
  BlockClassification block; // class of the theta-graded unit-charge algebra
  std::vector<AbelianGroup> groups; // d_min .. d_max
};

struct PeriodicTable {
  long d_min = 0;
  long d_max = 0;
  std::vector<TableRow> rows;
};

// Every row is computed through unit_charge_algebra, graded_blocks and
// classify_block; throws invalid_input if d_min > d_max.
PeriodicTable periodic_table(long d_min, long d_max, std::uint64_t seed = kDefaultSeed);

std::string render_text(const PeriodicTable& t);

} // namespace tenfold
