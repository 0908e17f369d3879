#include <doctest.h>

#include "oracles.hpp"
#include "stereograph/stereograph.hpp"

using namespace stereograph;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  for (long long x : values) out.emplace_back(x);
  return out;
}

std::vector<BigInt> big(const std::vector<std::int64_t>& values) {
  std::vector<BigInt> out;
  for (auto x : values) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("polynomial arithmetic and formatting") {
    const IntPolynomial p(big({1, 0, -4, 0, 0}));
    CHECK(p.degree() == 4);
    CHECK(p.from_top(2) == -4);
    CHECK(p.of_power(2) == -4);
    CHECK(p.of_power(9) == 0);
    CHECK(p.evaluate(2) == 0);
    CHECK(p.evaluate(3) == 45);
    CHECK(p.to_string() == "x^4 - 4x^2");
    CHECK(p.to_coefficient_line() == "1 0 -4 0 0");
    const IntPolynomial q(big({1, -1}));
    CHECK((q * q).coefficients() == big({1, -2, 1}));
    CHECK((q + IntPolynomial(big({2, 0, 1}))).coefficients() == big({2, 1, 0}));
    CHECK(IntPolynomial(big({0, 0, 3})).degree() == 0);
    // x(x-1) in the falling-factorial basis is 0*1 + 0*x + 1*x(x-1).
    CHECK(IntPolynomial::from_falling_factorial_basis(big({0, 0, 1})).coefficients() == big({1, -1, 0}));
    CHECK(IntPolynomial::from_ascending(big({5, 0, 1})).coefficients() == big({1, 0, 5}));
  }

  TEST_CASE("matrix arithmetic and determinant") {
    IntMatrix m(3);
    const long long values[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) m(r, c) = values[r][c];
    }
    CHECK(determinant(m) == 4);
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK(determinant(IntMatrix::all_ones(3)) == 0);
    IntMatrix swap(2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(determinant(swap) == -1);
    CHECK(m.is_symmetric());
    CHECK(m.row_sum(1) == 0);
    CHECK((m * IntMatrix::identity(3)) == m);
    CHECK((m - m) == IntMatrix(3));
    const std::vector<std::size_t> idx{0, 2};
    const IntMatrix sub = m.principal_submatrix(idx);
    CHECK(sub.dim() == 2);
    CHECK(sub(0, 1) == 0);
  }

  TEST_CASE("adjacency matrices") {
    const IntMatrix k22 = adjacency_matrix(StereotypeGraph::from_pattern(2, std::vector<int>{0}).graph());
    CHECK(k22.dim() == 4);
    for (std::size_t r = 0; r < 4; ++r) CHECK(k22.row_sum(r) == 2);
    CHECK(k22.is_symmetric());
    const IntMatrix kl3 = adjacency_matrix(gen_complete_ladder(3).graph());
    for (std::size_t r = 0; r < 6; ++r) CHECK(kl3.row_sum(r) == 3);
  }

  TEST_CASE("characteristic polynomial fixed points") {
    CHECK(characteristic_polynomial(gen_complete_bipartite(2)).coefficients() == big({1, 0, -4, 0, 0}));
    CHECK(characteristic_polynomial(gen_complete_bipartite(3)).coefficients() == big({1, 0, -9, 0, 0, 0, 0}));
    CHECK(characteristic_polynomial(gen_complete_ladder(3)).coefficients() == big({1, 0, -9, -4, 12, 0, 0}));
    CHECK(characteristic_polynomial(gen_complete_ladder(3)).to_string() == "x^6 - 9x^4 - 4x^3 + 12x^2");
  }

  TEST_CASE("characteristic polynomial matches principal-minor sums for all ST_2..ST_4") {
    for (int n = 2; n <= 4; ++n) {
      enumerate_all(n, [](const StereotypeGraph& g) {
        CHECK(characteristic_polynomial(g).coefficients() ==
              big(oracle::characteristic_coefficients(g.graph())));
      });
    }
  }

  TEST_CASE("characteristic polynomial matches principal-minor sums on sampled ST_5") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const StereotypeGraph g = gen_random(5, seed);
      CHECK(characteristic_polynomial(g).coefficients() == big(oracle::characteristic_coefficients(g.graph())));
    }
  }

  TEST_CASE("coefficient identities") {
    const CoefficientReport kl3 = coefficient_identities(gen_complete_ladder(3));
    CHECK(kl3.all_passed());
    CHECK(kl3.c3 == -4);
    CHECK(kl3.triangles == 2);
    CHECK_THROWS_AS(coefficient_identities(gen_complete_bipartite(1)), Error);
  }

  TEST_CASE("matrix and characteristic criteria") {
    CHECK(matrix_criterion(StereotypeGraph::from_pattern(2, std::vector<int>{0})));
    CHECK_FALSE(matrix_criterion(gen_complete_ladder(3)));
    CHECK(characteristic_criterion(gen_complete_bipartite(3)));
    CHECK_FALSE(characteristic_criterion(gen_complete_ladder(3)));
    CHECK(characteristic_criterion(StereotypeGraph::from_pattern(2, std::vector<int>{1})));
    CHECK(row_column_sums_identity(gen_complete_ladder(4)));
  }

  TEST_CASE("strongly regular parameters") {
    const auto k33 = srg_check(gen_complete_bipartite(3));
    REQUIRE(k33.has_value());
    CHECK(k33->v == 6);
    CHECK(k33->k == 3);
    CHECK(k33->p == 0);
    CHECK(k33->q == 3);
    CHECK(k33->identity_holds);
    CHECK_FALSE(srg_check(gen_complete_ladder(3)).has_value());
    const auto k22 = srg_check(gen_complete_bipartite(2));
    REQUIRE(k22.has_value());
    CHECK(k22->v == 4);
    CHECK(k22->k == 2);
    CHECK(k22->q == 2);
  }

  TEST_CASE("triangle minor") {
    CHECK(minor_criterion(gen_complete_bipartite(3)));
    CHECK_FALSE(minor_criterion(gen_complete_ladder(3)));
    const auto witness = triangle_minor_witness(gen_complete_ladder(3));
    REQUIRE(witness.has_value());
    const IntMatrix a = adjacency_matrix(gen_complete_ladder(3).graph());
    CHECK(is_triangle_minor(a.principal_submatrix(*witness)));
    CHECK_FALSE(is_triangle_minor(IntMatrix::all_ones(3)));
  }
}
