#pragma once

#include "tenfold/decompose.hpp"
#include "tenfold/morita.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tenfold {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// A block is M_{p|q}(D) for a graded division algebra D. The split p|q
// (with p >= q) is reported only when D is purely even; otherwise the
// size is the total n = p + q, stored in p with q = 0.
struct BlockClassification {
  MoritaClass morita;
  std::size_t p = 1;
  std::size_t q = 0;
  bool split_size = true;
  int division_dim = 1;
  bool certified_only = false; // classified from invariants alone

  std::size_t size() const { return p + q; }
  std::string size_string() const;
  friend bool operator==(const BlockClassification&, const BlockClassification&) = default;
};

// A graded left module: basis parities and one action matrix per basis
// element of the algebra.
struct GradedModule {
  std::vector<int> parity;
  std::vector<RatMatrix> action;
  std::size_t dim() const { return parity.size(); }
};

// Graded-simple left module B f, where f is an even idempotent with
// f B_ev f a division algebra, found by recursively splitting even
// idempotents. Throws precision_cap if no rational splitting turns up.
GradedModule minimal_graded_ideal(const GradedAlgebra& block, std::uint64_t seed = kDefaultSeed);

// All T with T(b m) = (-1)^{|b||T|} b T(m), as an algebra under composition.
GradedAlgebra graded_commutant(const GradedAlgebra& block, const GradedModule& module);

// Which of the ten graded division algebras d is; throws internal_error
// when d is not a graded division algebra.
MoritaClass identify_division(const GradedAlgebra& d);

// Class from trace-form signatures and dimensions only.
BlockClassification classify_invariants(const BlockInvariants& inv);

// Module route for rational blocks, cross-checked against the invariant
// route; certified-only blocks use the invariant route.
BlockClassification classify_block(const GradedBlock& block, std::uint64_t seed = kDefaultSeed);

std::vector<BlockClassification> classify_algebra(const GradedAlgebra& a, std::uint64_t seed = kDefaultSeed);

// Morita classes of the blocks of D1 (x) D2 for graded division algebras:
// one block with the Brauer-Wall sum, except complex (x) complex, which
// splits into two equal blocks.
std::vector<MoritaClass> tensor_classes(MoritaClass a, MoritaClass b);

} // namespace tenfold
