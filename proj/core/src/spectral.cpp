#include "stereograph/spectral.hpp"

#include "stereograph/errors.hpp"

namespace stereograph {

namespace {

void require_two_pairs(const StereotypeGraph& g, const char* what) {
  if (g.n() < 2) raise(ErrorKind::DomainError, std::string(what) + " needs at least two pairs");
}

std::string show(const BigInt& v) { return v.str(); }

}  // namespace

IntPolynomial characteristic_polynomial(const IntMatrix& m) {
  const std::size_t dim = m.dim();
  std::vector<BigInt> diffs;
  diffs.reserve(dim + 1);
  for (std::size_t x = 0; x <= dim; ++x) {
    diffs.push_back(determinant(IntMatrix::identity(dim).scaled(BigInt(x)) - m));
  }
  // In-place forward differences: diffs[k] becomes Delta^k f(0).
  for (std::size_t k = 1; k <= dim; ++k) {
    for (std::size_t i = dim; i >= k; --i) diffs[i] -= diffs[i - 1];
  }
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= dim; ++k) {
    if (k > 1) factorial *= k;
    if (diffs[k] % factorial != 0) {
      raise(ErrorKind::InternalInvariant, "non-integral Newton coefficient in characteristic polynomial");
    }
    diffs[k] /= factorial;
  }
  IntPolynomial p = IntPolynomial::from_falling_factorial_basis(diffs);
  if (p.degree() != dim || p.from_top(0) != 1) {
    raise(ErrorKind::InternalInvariant, "characteristic polynomial is not monic of full degree");
  }
  return p;
}

bool CoefficientReport::all_passed() const noexcept {
  for (const IdentityCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

CoefficientReport coefficient_identities(const StereotypeGraph& g) {
  require_two_pairs(g, "coefficient identities");
  IntPolynomial p = characteristic_polynomial(g);
  CoefficientReport r;
  r.c0 = p.from_top(0);
  r.c1 = p.from_top(1);
  r.c2 = p.from_top(2);
  r.c3 = p.from_top(3);
  r.triangles = triangle_count(g.graph());
  const BigInt n = g.n();
  const BigInt tri = r.triangles;
  r.checks = {
      {"c0 = 1", r.c0 == 1, "c0 = " + show(r.c0)},
      {"c1 = 0", r.c1 == 0, "c1 = " + show(r.c1)},
      {"c2 = -n^2", r.c2 == -n * n, "c2 = " + show(r.c2) + ", -n^2 = " + show(-n * n)},
      {"c3 <= 0", r.c3 <= 0, "c3 = " + show(r.c3)},
      {"4 | c3", r.c3 % 4 == 0, "c3 = " + show(r.c3)},
      {"c3 = -2 * triangles", r.c3 == -2 * tri, "c3 = " + show(r.c3) + ", triangles = " + show(tri)},
  };
  return r;
}

bool row_column_sums_identity(const StereotypeGraph& g) {
  IntMatrix a = adjacency_matrix(g.graph());
  IntMatrix j = IntMatrix::all_ones(a.dim());
  IntMatrix nj = j.scaled(g.n());
  return a * j == nj && j * a == nj;
}

bool matrix_criterion(const StereotypeGraph& g) {
  require_two_pairs(g, "matrix criterion");
  IntMatrix a = adjacency_matrix(g.graph());
  const BigInt n = g.n();
  return a * a + a.scaled(n) == IntMatrix::all_ones(a.dim()).scaled(n);
}

bool characteristic_criterion(const StereotypeGraph& g) {
  require_two_pairs(g, "characteristic criterion");
  return characteristic_polynomial(g).from_top(3) == 0;
}

bool srg_identity_holds(const IntMatrix& a, const SrgParameters& s) {
  const std::size_t dim = a.dim();
  const BigInt p = s.p;
  const BigInt q = s.q;
  const BigInt k = s.k;
  IntMatrix lhs = a * a + a.scaled(q - p);
  IntMatrix rhs = IntMatrix::identity(dim).scaled(k - q) + IntMatrix::all_ones(dim).scaled(q);
  return lhs == rhs;
}

std::optional<SrgParameters> srg_check(const StereotypeGraph& g) {
  const Graph& graph = g.graph();
  const auto n = static_cast<std::size_t>(g.n());
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    for (std::size_t v = u + 1; v < graph.vertex_count(); ++v) {
      auto common = static_cast<std::size_t>(std::popcount(graph.neighbors(u) & graph.neighbors(v)));
      if (graph.has_edge(u, v) ? common != 0 : common != n) return std::nullopt;
    }
  }
  SrgParameters params{2 * n, n, 0, n, false};
  params.identity_holds = srg_identity_holds(adjacency_matrix(graph), params);
  return params;
}

bool is_triangle_minor(const IntMatrix& m) {
  if (m.dim() != 3) return false;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      if (m(r, c) != (r == c ? 0 : 1)) return false;
    }
  }
  return true;
}

bool minor_criterion(const StereotypeGraph& g) { return !triangle_minor_witness(g).has_value(); }

std::optional<std::array<std::size_t, 3>> triangle_minor_witness(const StereotypeGraph& g) {
  return find_triangle(g.graph());
}

}  // namespace stereograph
