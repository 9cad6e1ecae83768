#pragma once

#include "tenfold/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tenfold {

using CayleyTable = std::vector<std::vector<std::size_t>>;

// Finite group with a central fermion parity (-1)^F of square one and a
// grading homomorphism theta marking the odd (time-reversing) elements.
struct FermionicGroup {
  CayleyTable table;
  std::size_t identity = 0;
  std::size_t fermion_parity = 0;
  std::vector<int> theta;
  std::string label;

  std::size_t order() const { return table.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
};

// First violated axiom, or nullopt when the group is valid.
std::optional<std::string> validate(const FermionicGroup& g);

// Same elements; odd * odd products pick up a factor (-1)^F.
FermionicGroup opposite_group(const FermionicGroup& g);

// Isomorphism preserving identity, fermion parity and theta.
bool isomorphic(const FermionicGroup& a, const FermionicGroup& b);

// R[G] / ((-1)^F + 1), graded by theta. Basis: the smaller index of each
// coset {g, (-1)^F g}, in increasing order.
GradedAlgebra fermionic_group_algebra(const FermionicGroup& g);

// Signed monomials +-e_S of Cl_{p,q}, element index 2 mask + (sign < 0),
// with (-1)^F = -1 and theta = |S| mod 2. Its fermionic group algebra is
// Cl_{p,q}; (p, q) = (1, 0) is Z2^F x Z2^T and (0, 1) is Z4^{TF}.
FermionicGroup clifford_monomial_group(std::size_t p, std::size_t q);
// Z4 generated by T with (-1)^F = T^2 and theta(T) = 1.
FermionicGroup z4_tf();
// Z2^F x Z2^T; elements F^a T^b at index 2a + b.
FermionicGroup z2f_z2t();
// Quaternion group {+-1, +-i, +-j, +-k} at indices 2u + (sign < 0) with
// u = 0..3 for 1, i, j, k; (-1)^F = -1; theta(i), theta(j) given.
FermionicGroup quaternion_group(int theta_i = 0, int theta_j = 0);
// Bosonic product Z2 x Z2 with fermion parity the identity.
FermionicGroup bosonic_klein_group();

enum class Grading { theta, c };

// A CT-group: which of T and C are present (with the signs of their lifts
// squared), or only the product S = CT.
struct CTGroupSpec {
  int sign_T = 0; // +1, -1, or 0 when absent
  int sign_C = 0;
  bool ct_only = false;
  std::string label; // Altland-Zirnbauer name

  bool has_T() const { return sign_T != 0; }
  bool has_C() const { return sign_C != 0; }
  // Two characters for C then T: '+', '-' or '0'; "S" for the CT-only group.
  std::string code() const;
};

// The ten CT-groups in the order A, AIII, D, BDI, AI, CI, C, CII, AII, DIII.
std::vector<CTGroupSpec> ct_enumerate();

enum class Coefficient { real, complex, quaternion };

// Twisted group algebra data K x_{alpha, tau} H over a finite group H with
// K in {R, C, H}. Coefficients live in the basis 1 / 1,i / 1,i,j,k.
struct TwistedData {
  Coefficient coefficient = Coefficient::complex;
  CayleyTable table; // H, no parity element
  std::size_t identity = 0;
  std::vector<int> theta;
  // Complex coefficients: phi(g) = 1 when g acts by complex conjugation.
  std::vector<int> phi;
  // Quaternion coefficients: alpha_g as a 4x4 matrix on (1, i, j, k).
  std::vector<RatMatrix> action;
  // tau(g, h) as a coefficient vector, indexed [g][h].
  std::vector<std::vector<Vec>> cocycle;
};

// Checks normalization, the cocycle condition
// alpha_g(tau(h,k)) tau(g,hk) = tau(g,h) tau(gh,k), the action being by
// automorphisms with alpha_g alpha_h = Ad(tau(g,h)) alpha_gh, and that
// cocycle values are fourth roots of unity (C) or rational unit
// quaternions (H). Throws invalid_input naming the failure.
void check_twisted_data(const TwistedData& d);

// Basis c_a j(g) at index g * dim K + a, with j(g) c = alpha_g(c) j(g) and
// j(g) j(h) = tau(g,h) j(gh); parity of c_a j(g) is parity[g].
GradedAlgebra twisted_group_algebra(const TwistedData& d, const std::vector<int>& parity, std::string label = {});

// Twisted data of the finite quotient of a CT-group: H generated by the
// present symmetries with commuting lifts, theta(T) = 1, theta(C) = 0,
// phi(T) = phi(C) = 1; for CT-only, S = CT with theta = 1, phi = 0, S^2 = +1.
TwistedData ct_twisted_data(const CTGroupSpec& spec);

// C x H with relations i^2 = -1, j(g) j(h) = tau(g,h) j(gh),
// i j(g) = (-1)^{phi(g)} j(g) i; graded by theta or by c = theta + phi.
GradedAlgebra unit_charge_algebra(const TwistedData& d, Grading grading);
GradedAlgebra unit_charge_algebra(const CTGroupSpec& spec, Grading grading);

// H x H with j(g) q = alpha_g(q) j(g), graded by theta.
GradedAlgebra spin_half_algebra(const TwistedData& d);

// Spin-1/2 data over H = Z2 = {1, T} with T odd: alpha_T given as a 4x4
// automorphism of the quaternions and tau(T, T) = tau_tt (a rational unit
// quaternion).
TwistedData spin_half_z2(const RatMatrix& alpha_t, const Vec& tau_tt);

} // namespace tenfold
