#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stereograph/graph.hpp"
#include "stereograph/polynomial.hpp"

namespace stereograph {

/// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}

  static IntMatrix identity(std::size_t dim);
  static IntMatrix all_ones(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix scaled(const BigInt& k) const;

  bool is_symmetric() const;
  BigInt row_sum(std::size_t r) const;

  /// Rows and columns `indices`, in that order.
  IntMatrix principal_submatrix(std::span<const std::size_t> indices) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> entries_;
};

/// Fraction-free (Bareiss) elimination with row pivoting; exact.
BigInt determinant(IntMatrix m);

IntMatrix adjacency_matrix(const Graph& g);

}  // namespace stereograph
