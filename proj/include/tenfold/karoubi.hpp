#pragma once

#include "tenfold/linalg.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tenfold {

// Orthogonal complex structure on Q^{2n}: J^2 = -1, J^T = -J.
struct Polarization {
  std::size_t n = 0;
  RatMatrix j;
};

// Throws invalid_input unless j is an orthogonal complex structure.
Polarization make_polarization(const RatMatrix& j);
// Block diagonal of n copies of [[0, -1], [1, 0]].
Polarization standard_polarization(std::size_t n);

struct KaroubiPair {
  Polarization first;
  Polarization second;
  std::size_t module_dim() const { return 2 * first.n; }
};

KaroubiPair make_pair(const RatMatrix& j1, const RatMatrix& j2);

// Gradings [[0, A], [A^-1, 0]] of a Cl_{+1}-module, recorded by A.
struct GradingPair {
  RatMatrix a1;
  RatMatrix a2;
  std::size_t p() const { return a1.rows(); }
};

GradingPair make_grading_pair(const RatMatrix& a1, const RatMatrix& a2);
RatMatrix grading_matrix(const RatMatrix& a);

// Sign of Pf(J1) Pf(J2) as 0 (equal) or 1 (opposite).
int class_d_invariant(const KaroubiPair& pair);
// Sign of det A1 det A2 as 0 or 1.
int grading_pair_invariant(const GradingPair& g);

KaroubiPair stack(const KaroubiPair& x, const KaroubiPair& y);
GradingPair stack(const GradingPair& x, const GradingPair& y);

// An orthogonal O with O^T J1 O = J2, built from rational Householder
// reflections. All such O share one determinant.
struct Conjugator {
  RatMatrix o;
  int det = 1;
};
Conjugator conjugator(const Polarization& j1, const Polarization& j2);
// A special orthogonal conjugator, which exists iff class_d_invariant is 0.
std::optional<RatMatrix> homotopy_witness(const KaroubiPair& pair);

// I - 2 u u^T / u^T u.
RatMatrix householder(const Vec& u);
// Product of Householder reflections with small integer vectors; the
// number of factors (and so the determinant) is random.
RatMatrix random_orthogonal(std::size_t n, std::mt19937_64& rng);
Polarization random_polarization(std::size_t n, std::mt19937_64& rng);

using RealMatrix = std::vector<std::vector<double>>;

struct FlattenResult {
  // Rationalized and certified J when `exact`; the float iterate always.
  std::optional<Polarization> polarization;
  RealMatrix approx;
  bool exact = false;
  int iterations = 0;
};

// Orthogonal polar factor of a skew invertible h by X <- (X + X^-T) / 2,
// then continued-fraction rounding and an exact check. Throws
// invalid_input for non-skew, odd-sized or singular h, precision_cap if the
// iteration does not converge.
FlattenResult flatten(const RealMatrix& h, double tol = 1e-12, int max_iterations = 100);

} // namespace tenfold
