#pragma once

#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fwps/arith.hpp"

namespace fwps {

class WeightSystem;

// A point of Z^n.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords);

  static LatticePoint zero(std::size_t dim) { return LatticePoint(std::vector<Integer>(dim, 0)); }

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords_ == b.coords_; }
  // Lexicographic, shorter points first.
  friend bool operator<(const LatticePoint& a, const LatticePoint& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

// Dense row-major integer matrix.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  // One row per point; all points must share a dimension.
  static IntegerMatrix from_rows(std::span<const LatticePoint> points);
  static IntegerMatrix from_columns(std::span<const LatticePoint> points);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticePoint row(std::size_t r) const;
  LatticePoint column(std::size_t c) const;
  std::vector<LatticePoint> row_points() const;

  IntegerMatrix transpose() const;
  bool is_square() const noexcept { return rows_ == cols_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend LatticePoint operator*(const IntegerMatrix& a, const LatticePoint& v);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) = default;
  // Shape first, then row-major lexicographic entries.
  friend bool operator<(const IntegerMatrix& a, const IntegerMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntegerMatrix& m);

// Solves a x = b over Q for square nonsingular a.
std::vector<Rational> solve_rational(const IntegerMatrix& a, std::span<const Rational> b);

// left * input * right == D where D is zero except D(i,i) = diag[i],
// i < min(rows, cols).
struct SmithDecomposition {
  IntegerMatrix left;
  std::vector<Integer> diag;
  IntegerMatrix right;

  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

// Index of the lattice spanned by the generators in Z^n; nullopt when the
// span is not of full rank (infinite index).
std::optional<Integer> sublattice_index(std::span<const LatticePoint> generators);

// Invariant factors (> 1) of Z^n / span(generators). Throws kNotFullRank.
std::vector<Integer> quotient_invariant_factors(std::span<const LatticePoint> generators);

// The unique primitive positive linear relation sum lambda_i * ray_i = 0 of
// n+1 rays in Z^n, in input order.
WeightSystem positive_relation(std::span<const LatticePoint> rays);

bool is_primitive(const LatticePoint& v);

// Column-style Hermite normal form of a full-column-rank matrix with at
// least as many rows as columns: m * U for unimodular U is lower
// triangular (echelon) with positive pivots, and every entry to the left of
// a pivot lies in [0, pivot). Throws kSingularMatrix on rank deficiency.
IntegerMatrix hermite_reduce(const IntegerMatrix& m);

// Coordinates of each point with respect to a lattice basis given as the
// columns of `basis` (square, nonsingular). Throws kInvalidArgument if a
// point does not lie in the lattice.
std::vector<LatticePoint> coordinates_in_basis(const IntegerMatrix& basis,
                                               std::span<const LatticePoint> points);

}  // namespace fwps
