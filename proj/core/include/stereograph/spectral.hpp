#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stereograph/matrix.hpp"
#include "stereograph/polynomial.hpp"
#include "stereograph/stereotype_graph.hpp"

namespace stereograph {

/// det(xI - m), exactly. The determinant is evaluated at x = 0..dim by
/// Bareiss elimination and the coefficients are recovered by Newton
/// interpolation over the integers.
IntPolynomial characteristic_polynomial(const IntMatrix& m);

inline IntPolynomial characteristic_polynomial(const StereotypeGraph& g) {
  return characteristic_polynomial(adjacency_matrix(g.graph()));
}

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CoefficientReport {
  BigInt c0, c1, c2, c3;
  std::size_t triangles = 0;
  std::vector<IdentityCheck> checks;

  bool all_passed() const noexcept;
};

/// c0 = 1, c1 = 0, c2 = -n^2, c3 <= 0, 4 | c3 and c3 = -2 * triangles,
/// where ci is the coefficient of x^(2n-i) in the characteristic polynomial.
/// Requires n >= 2 (DomainError otherwise).
CoefficientReport coefficient_identities(const StereotypeGraph& g);

/// A J = J A = n J for the all-ones matrix J.
bool row_column_sums_identity(const StereotypeGraph& g);

/// A^2 + nA = nJ, entrywise. Requires n >= 2.
bool matrix_criterion(const StereotypeGraph& g);

/// Coefficient c3 of the characteristic polynomial vanishes. Requires n >= 2.
bool characteristic_criterion(const StereotypeGraph& g);

struct SrgParameters {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t p = 0;  // common neighbours of adjacent vertices
  std::size_t q = 0;  // common neighbours of non-adjacent vertices
  bool identity_holds = false;
};

/// (2n, n, 0, n) when adjacent vertices share no neighbour and non-adjacent
/// ones share exactly n; nullopt otherwise. identity_holds records
/// A^2 + (q-p)A = (k-q)I + qJ for the parameters found.
std::optional<SrgParameters> srg_check(const StereotypeGraph& g);

bool srg_identity_holds(const IntMatrix& a, const SrgParameters& params);

/// True iff the 3x3 matrix has zero diagonal and ones everywhere else.
bool is_triangle_minor(const IntMatrix& principal);

/// No 3x3 principal submatrix of A is the triangle pattern. A principal
/// minor of that shape is exactly a triangle in the graph, so this searches
/// triangles rather than all C(2n, 3) index sets.
bool minor_criterion(const StereotypeGraph& g);

/// Principal indices of the first triangle-pattern minor, if any.
std::optional<std::array<std::size_t, 3>> triangle_minor_witness(const StereotypeGraph& g);

}  // namespace stereograph
