#pragma once

#include <cstddef>
#include <vector>

#include "cliffrep/rational.hpp"

namespace cliffrep {

/// Dense square matrix of exact rationals, row-major, 0-based.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t dim);

  static RationalMatrix identity(std::size_t dim);
  /// Throws DimensionMismatch for ragged or non-square input.
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const noexcept { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

  bool is_zero() const;
  RationalMatrix transpose() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

/// Exact inverse by fraction-free (Bareiss) elimination. Throws Singular.
RationalMatrix matrix_inverse_exact(const RationalMatrix& m);

/// Exact determinant by the same elimination.
Rational determinant(const RationalMatrix& m);

}  // namespace cliffrep
