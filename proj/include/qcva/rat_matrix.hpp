#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcva/rational.hpp"

namespace qcva {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from nested rows; throws std::invalid_argument on ragged input.
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix identity(std::size_t n);
  static RatMatrix scalar(std::size_t n, const Rational& s);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RatMatrix transpose() const;
  RatMatrix pow(unsigned e) const;
  RatVector apply(std::span<const Rational> v) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RankNullspace {
  std::size_t rank = 0;
  std::vector<RatVector> nullspace;
};

/// Reduced row echelon form, computed in place. Returns the pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Rank and a nullspace basis. Basis vector k has a 1 in the k-th free
/// column, zeros in the other free columns, and is read off the reduced
/// echelon form, so the output is deterministic.
RankNullspace rank_nullspace(const RatMatrix& m);

/// Jordan block sizes (descending) of `m` for the given eigenvalue, from the
/// ranks of successive powers of (m - eigenvalue*I). Empty when the value is
/// not an eigenvalue. Throws std::invalid_argument if `m` is not square.
std::vector<std::size_t> jordan_structure(const RatMatrix& m, const Rational& eigenvalue);

}  // namespace qcva
