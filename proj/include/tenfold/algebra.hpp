#pragma once

#include "tenfold/linalg.hpp"
#include "tenfold/morita.hpp"
#include "tenfold/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tenfold {

// One nonzero structure constant: b_i b_j has coefficient `value` on b_k.
struct Term {
  std::uint32_t k;
  Rational value;
};

// Finite-dimensional Z2-graded algebra over Q (standing in for R) given by
// structure constants b_i b_j = sum_k c[i][j][k] b_k, stored sparsely.
class GradedAlgebra {
public:
  using Table = std::vector<std::vector<Term>>; // indexed by i * dim + j

  // Validates unit, grading and (unless check_associativity is false)
  // associativity; throws invalid_input naming the violated axiom.
  GradedAlgebra(std::vector<int> parity, Table mul, Vec unit, std::string label = {},
                bool check_associativity = true);

  std::size_t dim() const { return parity_.size(); }
  int parity(std::size_t i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  const Vec& unit() const { return unit_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return mul_[i * dim() + j]; }
  const Table& table() const { return mul_; }

  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }
  bool purely_even() const { return even_dim() == dim(); }

  Vec basis_vector(std::size_t i) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  // Matrix of y -> x y (left) and y -> y x (right) in the basis.
  RatMatrix left_matrix(const Vec& x) const;
  RatMatrix right_matrix(const Vec& x) const;
  bool is_commutative() const;
  // Parity of x if homogeneous, -1 otherwise (0 for x = 0).
  int homogeneous_parity(const Vec& x) const;

private:
  std::vector<int> parity_;
  Table mul_;
  Vec unit_;
  std::string label_;
};

// A vector bound to its algebra.
class Element {
public:
  Element(const GradedAlgebra& algebra, Vec coords);
  const GradedAlgebra& algebra() const { return *algebra_; }
  const Vec& coords() const { return coords_; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.coords_ == b.coords_;
  }

private:
  const GradedAlgebra* algebra_;
  Vec coords_;
};

// Throws invalid_input when x and y live in different algebras.
Element multiply(const Element& x, const Element& y);

void set_clifford_cap(std::size_t cap);
std::size_t clifford_cap();

GradedAlgebra real_field();
// Cl_{p,q}: p odd generators squaring to +1, then q squaring to -1. Basis
// element m is the ordered product of the generators in bitmask m, so the
// basis runs through generator subsets in colexicographic order.
GradedAlgebra clifford(std::size_t p, std::size_t q);
// Complex Clifford algebra on n generators of square +1, realified: basis
// index 2m + r stands for i^r e_m with i central and even.
GradedAlgebra complex_clifford(std::size_t n);
// Purely even quaternions, basis 1, i, j, k.
GradedAlgebra quaternions();

// Basis a_i (x) b_j at index i * b.dim() + j with the Koszul sign
// (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1 b1 (x) a2 b2.
GradedAlgebra graded_tensor(const GradedAlgebra& a, const GradedAlgebra& b);
// Same basis, product x^op y^op = (-1)^{|x||y|} (y x)^op.
GradedAlgebra opposite(const GradedAlgebra& a);
GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);
// (p+q)x(p+q) matrices over a. Basis E_rs (x) x at index (r n + s) dim + x;
// parity of E_rs (x) x is bp(r) + bp(s) + |x| with bp = 1 beyond the first p.
GradedAlgebra matrix_algebra(const GradedAlgebra& a, std::size_t p, std::size_t q);

// The named representative of a Morita class (Cl_{p,q}, H, C or Cl_1 over C).
GradedAlgebra division_algebra(MoritaClass c);

// Basis of the (ungraded) center.
std::vector<Vec> center(const GradedAlgebra& a);
// Diagonal matrix b_i -> (-1)^{|b_i|} b_i.
RatMatrix grading_involution(const GradedAlgebra& a);

// Algebra on a subspace closed under multiplication, e.g. a corner p A p.
// `basis` must be linearly independent with homogeneous elements; `unit`
// is the subalgebra's unit expressed in the ambient coordinates. With
// `ungraded` set, elements need not be homogeneous and all are taken even.
GradedAlgebra subalgebra(const GradedAlgebra& a, const std::vector<Vec>& basis, const Vec& unit,
                         std::string label = {}, bool ungraded = false);

// Algebra spanned by square matrices closed under composition, with the
// given parities; the identity matrix must lie in the span.
GradedAlgebra matrix_span_algebra(const std::vector<RatMatrix>& basis, const std::vector<int>& parity,
                                  std::string label = {});

} // namespace tenfold
