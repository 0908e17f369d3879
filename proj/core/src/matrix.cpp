#include "stereograph/matrix.hpp"

#include <utility>

#include "stereograph/errors.hpp"

namespace stereograph {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::all_ones(std::size_t dim) {
  IntMatrix m(dim);
  for (BigInt& e : m.entries_) e = 1;
  return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (o.dim_ != dim_) raise(ErrorKind::DomainError, "matrix dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += o.entries_[k];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (o.dim_ != dim_) raise(ErrorKind::DomainError, "matrix dimension mismatch");
  IntMatrix out(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= o.entries_[k];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (o.dim_ != dim_) raise(ErrorKind::DomainError, "matrix dimension mismatch");
  IntMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const BigInt& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * o(k, c);
    }
  }
  return out;
}

IntMatrix IntMatrix::scaled(const BigInt& k) const {
  IntMatrix out(*this);
  for (BigInt& e : out.entries_) e *= k;
  return out;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r + 1; c < dim_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

BigInt IntMatrix::row_sum(std::size_t r) const {
  BigInt s = 0;
  for (std::size_t c = 0; c < dim_; ++c) s += (*this)(r, c);
  return s;
}

IntMatrix IntMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  IntMatrix out(indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r) {
    for (std::size_t c = 0; c < indices.size(); ++c) out(r, c) = (*this)(indices[r], indices[c]);
  }
  return out;
}

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees the division is exact.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous_pivot;
      }
      m(i, k) = 0;
    }
    previous_pivot = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

}  // namespace stereograph
