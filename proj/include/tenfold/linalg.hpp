#pragma once

#include "tenfold/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tenfold {

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> init);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<Vec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  RatMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, const RatMatrix& a);
Vec operator*(const RatMatrix& a, const Vec& v);
RatMatrix block_diagonal(const RatMatrix& a, const RatMatrix& b);

// Exact rank over Q by fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

// Basis of {v : m v = 0}; size is cols - rank.
std::vector<Vec> kernel_basis(const RatMatrix& m);

// Exact solution of m x = b; nullopt when the system is inconsistent.
// Throws invalid_input on a dimension mismatch.
std::optional<Vec> solve(const RatMatrix& m, const Vec& b);

Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Pfaffian of a skew-symmetric even-sized matrix by skew-symmetric
// elimination with symmetric row/column swaps.
Rational pfaffian(const RatMatrix& m);

bool is_skew_symmetric(const RatMatrix& m);

// Signature (positives, negatives) of a symmetric rational matrix via
// symmetric elimination.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};
Inertia inertia(const RatMatrix& symmetric);

// Intersects a running null space with new linear constraints, so huge
// stacked systems never have to be materialized.
class KernelBuilder {
public:
  explicit KernelBuilder(std::size_t unknowns);

  // Impose rows * x = 0. Each row has length `unknowns`.
  void add_constraints(const std::vector<Vec>& rows);
  const std::vector<Vec>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

private:
  std::size_t n_;
  std::vector<Vec> basis_;
};

// Incremental row reduction that remembers how each stored row is built from
// the inserted vectors. Used for spans, coordinates and linear dependencies.
class SpanReducer {
public:
  explicit SpanReducer(std::size_t length) : length_(length) {}

  // Adds v if independent and returns true; otherwise returns false.
  bool insert(const Vec& v);
  // Coefficients c (over inserted vectors, in insertion order) with
  // v = sum c_i input_i, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  std::size_t size() const { return rows_.size(); }
  std::size_t length() const { return length_; }

private:
  // Reduces v in place; returns the combination over inputs of what was subtracted.
  Vec reduce(Vec& v) const;

  std::size_t length_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;
};

} // namespace tenfold
