#pragma once

#include "tenfold/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tenfold {

enum class BlockKind { fixed, swap };

// Integer invariants of a graded-simple block, enough to pin its Morita
// class without an explicit module. Signatures are of the trace form
// (x, y) -> tr(L_{xy}) on the block and on its even part; piece_sig is the
// signature on one ungraded piece of a swap block.
struct BlockInvariants {
  BlockKind kind = BlockKind::fixed;
  std::size_t dim = 0;
  std::size_t even_dim = 0;
  long sig_full = 0;
  long sig_even = 0;
  std::size_t odd_center_dim = 0;
  long piece_sig = 0;

  friend bool operator==(const BlockInvariants&, const BlockInvariants&) = default;
};

struct GradedBlock {
  BlockKind kind = BlockKind::fixed;
  std::size_t ungraded_pieces = 1;
  // Blocks from irrational real roots of the center carry invariants only.
  bool certified_only = false;
  Vec projection;                       // central even idempotent, parent coordinates
  std::optional<GradedAlgebra> algebra; // corner p A, rebased
  std::vector<Vec> embedding;           // block basis in parent coordinates
  Vec odd_unit;                         // swap: odd central eps with eps^2 = 1, block coordinates
  Vec piece_idempotent;                 // swap: e with e + alpha(e) = 1, block coordinates
  BlockInvariants invariants;
  std::string origin;                   // center factor the block came from
};

struct DecompositionReport {
  std::vector<GradedBlock> blocks;
  bool exact_path = true;
  // Nonzero coordinates of sum(p) - 1 and p_i p_j - delta_ij p_i, plus
  // idempotent residuals of the swap data; all zero on success.
  std::size_t residual = 0;
  std::size_t generic_attempts = 0;
};

// Dickson criterion: the trace form tr(L_x L_y) is nondegenerate.
bool is_semisimple(const GradedAlgebra& a);

// Rational central idempotents, one per Q-irreducible factor of the
// minimal polynomial of a generic central element. They are primitive
// over R exactly when every factor is linear or has no real roots
// (`primitive_over_r`); otherwise graded_blocks splits them further with
// certified root isolation.
struct CentralIdempotents {
  std::vector<Vec> idempotents;
  std::vector<std::string> factors;
  bool primitive_over_r = true;
};
CentralIdempotents central_idempotents(const GradedAlgebra& a);

// Groups the central idempotents into orbits of the grading involution:
// fixed points give fixed blocks, 2-orbits give swap blocks. Throws
// not_semisimple, or precision_cap when certification needs more bits than
// allowed (or a center factor of degree > 2 has non-real roots alongside
// the real ones).
DecompositionReport graded_blocks(const GradedAlgebra& a);

// Exact invariants of a rational graded-simple block; piece_idempotent is
// used for swap blocks only.
BlockInvariants block_invariants(const GradedAlgebra& block, BlockKind kind, const Vec& piece_idempotent);

// Bit cap for certified sign decisions (default 1024, or the value of the
// TENFOLD_PRECISION_BITS environment variable).
void set_precision_cap_bits(long bits);
long precision_cap_bits();

} // namespace tenfold
