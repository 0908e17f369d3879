#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "oracles.hpp"
#include "stereograph/stereograph.hpp"

using namespace stereograph;

namespace {

std::size_t chi(const StereotypeGraph& g) { return chromatic_number(g.graph()).chromatic_number; }
std::size_t chi(const Graph& g) { return chromatic_number(g).chromatic_number; }

bool has_clique(const Graph& g, std::size_t size) { return maximum_clique(g).size() >= size; }

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("splitmix64 reference values") {
    // Output k equals the (k+1)-th value of the sequential SplitMix64 stream.
    SplitMix64 rng(0);
    CHECK(rng.at(0) == 0xE220A8397B1DCDAFULL);
    CHECK(rng.at(1) == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    SplitMix64 bounded(99);
    for (int i = 0; i < 100; ++i) CHECK(bounded.below(7) < 7);
  }

  TEST_CASE("fixed generators") {
    for (int n = 1; n <= 12; ++n) {
      CHECK(validate_structure(n, gen_complete_bipartite(n).graph()).valid());
      CHECK(validate_structure(n, gen_complete_ladder(n).graph()).valid());
    }
    const StereotypeGraph k88 = gen_complete_bipartite(8);
    CHECK(k88.graph().vertex_count() == 16);
    CHECK(k88.graph().edge_count() == 64);
    CHECK(chi(k88) == 2);
    CHECK(gen_complete_bipartite(1).graph().edge_count() == 1);
    const StereotypeGraph kl4 = gen_complete_ladder(4);
    CHECK(kl4.pattern().as_ints() == std::vector<int>(6, 0));
    CHECK(triangle_count(kl4.graph()) == 8);
    CHECK(graph_isomorphic(gen_complete_ladder(2).graph(), gen_complete_bipartite(2).graph()));
    CHECK(chi(gen_complete_ladder(6)) == 6);
  }

  TEST_CASE("random generator is deterministic and valid") {
    CHECK(gen_random(5, 42) == gen_random(5, 42));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      CHECK(validate_structure(3, gen_random(3, seed).graph()).valid());
    }
    std::set<std::vector<int>> seen;
    for (std::uint64_t seed = 0; seed < 64; ++seed) seen.insert(gen_random(4, seed).pattern().as_ints());
    CHECK(seen.size() > 30);
  }

  TEST_CASE("random sampling hits the stable half of ST_3 at the expected rate") {
    // Exactly 4 of the 8 patterns are 2-colourable; 3 sigma of Binomial(10000, 1/2) is 150.
    std::size_t stable = 0;
    for (std::uint64_t seed = 0; seed < 10000; ++seed) {
      if (two_coloring(gen_random(3, seed).graph()).coloring) ++stable;
    }
    CHECK(stable >= 4850);
    CHECK(stable <= 5150);
  }

  TEST_CASE("enumeration") {
    CHECK(enumerate_all(1).size() == 1);
    CHECK(enumerate_all(2).size() == 2);
    CHECK(enumerate_all(3).size() == 8);
    CHECK(enumerate_all(4).size() == 64);
    const auto st3 = enumerate_all(3);
    CHECK(st3.front().pattern().as_ints() == std::vector<int>{0, 0, 0});
    CHECK(st3[1].pattern().as_ints() == std::vector<int>{0, 0, 1});
    CHECK(st3.back().pattern().as_ints() == std::vector<int>{1, 1, 1});
    std::size_t stable = 0;
    for (const auto& g : st3) stable += recognize_complete_bipartite(g) ? 1 : 0;
    CHECK(stable == 4);
    std::set<std::vector<int>> distinct;
    std::size_t count = 0;
    enumerate_all(5, [&](const StereotypeGraph& g) {
      distinct.insert(g.pattern().as_ints());
      ++count;
    });
    CHECK(count == 1024);
    CHECK(distinct.size() == 1024);
    CHECK_THROWS_AS(enumerate_all(7), Error);
    CHECK_THROWS_AS(enumerate_all(4, 3), Error);
    CHECK_THROWS_AS(enumerate_all(0), Error);
  }

  TEST_CASE("enumeration bound from the environment") {
    CHECK(enumeration_bound() == kDefaultEnumerationBound);
    ::setenv("STEREOGRAPH_MAX_N", "3", 1);
    CHECK(enumeration_bound() == 3);
    ::setenv("STEREOGRAPH_MAX_N", "junk", 1);
    CHECK(enumeration_bound() == kDefaultEnumerationBound);
    ::unsetenv("STEREOGRAPH_MAX_N");
  }

  TEST_CASE("census values") {
    const Census c2 = census(2);
    REQUIRE(c2.rows.size() == 1);
    CHECK(c2.rows[0] == CensusRow{2, 2, 2, 1});
    const Census c3 = census(3);
    CHECK(c3.rows == std::vector<CensusRow>{{3, 2, 4, 1}, {3, 3, 4, 1}});
    CHECK(c3.every_index_attained);
    CHECK(c3.extremes_unique);
    const Census c4 = census(4);
    CHECK(c4.rows == std::vector<CensusRow>{{4, 2, 8, 1}, {4, 3, 48, 1}, {4, 4, 8, 1}});
    const Census c5 = census(5);
    CHECK(c5.rows ==
          std::vector<CensusRow>{{5, 2, 16, 1}, {5, 3, 400, 2}, {5, 4, 592, 3}, {5, 5, 16, 1}});
    CHECK(c5.every_index_attained);
    CHECK(c5.extremes_unique);
  }

  TEST_CASE("census isomorphism classes agree with brute force at n=4") {
    std::map<std::size_t, std::vector<Graph>> reps;
    enumerate_all(4, [&](const StereotypeGraph& g) {
      auto& bucket = reps[chi(g)];
      for (const Graph& r : bucket) {
        if (oracle::isomorphic(g.graph(), r)) return;
      }
      bucket.push_back(g.graph());
    });
    for (const CensusRow& row : census(4).rows) CHECK(reps[row.k].size() == row.iso_class_count);
  }

  TEST_CASE("preserving expansion") {
    const StereotypeGraph k22 = StereotypeGraph::from_pattern(2, std::vector<int>{1});
    const StereotypeGraph three = expand_preserving(k22, chromatic_number(k22.graph()).witness);
    CHECK(three.n() == 3);
    CHECK(chi(three) == 2);

    StereotypeGraph g = k22;
    for (int step = 0; step < 4; ++step) g = expand_preserving(g, chromatic_number(g.graph()).witness);
    CHECK(g.n() == 6);
    CHECK(chi(g) == 2);

    const StereotypeGraph kl3 = gen_complete_ladder(3);
    const StereotypeGraph four = expand_preserving(kl3, chromatic_number(kl3.graph()).witness);
    CHECK(four.n() == 4);
    CHECK(chi(four) == 3);
    CHECK(induced_prefix(four, 3) == kl3);
  }

  TEST_CASE("incrementing expansion") {
    const StereotypeGraph k22 = StereotypeGraph::from_pattern(2, std::vector<int>{1});
    const StereotypeGraph three = expand_incrementing(k22, chromatic_number(k22.graph()).witness);
    CHECK(chi(three) == 3);
    CHECK(recognize_complete_ladder(three));
    CHECK(has_clique(three.graph(), 3));

    const StereotypeGraph kl3 = gen_complete_ladder(3);
    const StereotypeGraph four = expand_incrementing(kl3, chromatic_number(kl3.graph()).witness);
    CHECK(chi(four) == 4);
    CHECK(recognize_complete_ladder(four));
  }

  TEST_CASE("expansions from every optimal colouring source in ST_4") {
    enumerate_all(4, [](const StereotypeGraph& g) {
      const ChromaticResult r = chromatic_number(g.graph());
      const StereotypeGraph same = expand_preserving(g, r.witness);
      CHECK(chi(same) == r.chromatic_number);
      CHECK(induced_prefix(same, 4) == g);
      const StereotypeGraph up = expand_incrementing(g, r.witness);
      CHECK(chi(up) == r.chromatic_number + 1);
      CHECK(has_clique(up.graph(), r.chromatic_number + 1));
      CHECK(induced_prefix(up, 4) == g);
    });
  }

  TEST_CASE("expansion rejects bad colourings") {
    const StereotypeGraph kl3 = gen_complete_ladder(3);
    try {
      expand_preserving(kl3, Coloring({1, 2, 1, 2, 1, 2}));
      FAIL("expected InvalidColoring");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidColoring);
    }
    const StereotypeGraph k33 = gen_complete_bipartite(3);
    CHECK_THROWS_AS(expand_preserving(k33, Coloring({1, 2, 3, 4, 1, 2})), Error);
    CHECK_THROWS_AS(expand_incrementing(k33, Coloring({1, 2, 3, 4, 1, 2})), Error);
  }

  TEST_CASE("build_with_csi") {
    const StereotypeGraph g43 = build_with_csi(4, 3);
    CHECK(g43.n() == 4);
    CHECK(chi(g43) == 3);
    for (int n = 2; n <= 7; ++n) {
      CHECK(chi(build_with_csi(n, 2)) == 2);
      const StereotypeGraph top = build_with_csi(n, n);
      CHECK(chi(top) == static_cast<std::size_t>(n));
      CHECK(graph_isomorphic(top.graph(), gen_complete_ladder(n).graph()));
    }
    CHECK_THROWS_AS(build_with_csi(4, 5), Error);
    CHECK_THROWS_AS(build_with_csi(4, 1), Error);
    try {
      build_with_csi(3, 4);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RangeError);
    }
  }

  TEST_CASE("edge deletion") {
    const StereotypeGraph kl3 = gen_complete_ladder(3);
    const std::vector<std::pair<VertexId, VertexId>> one{{VertexId{1, 1}, VertexId{2, 1}}};
    const Graph cut = delete_edges(kl3, one);
    CHECK(cut.edge_count() == 8);
    CHECK(chi(cut) <= 3);

    std::vector<std::pair<VertexId, VertexId>> cross;
    for (const auto& [a, b] : kl3.graph().edges()) {
      if (a / 2 != b / 2) cross.emplace_back(VertexId::from_index(a), VertexId::from_index(b));
    }
    const Graph matching = delete_edges(kl3, cross);
    CHECK(matching.edge_count() == 3);
    CHECK(chi(matching) == 2);

    CHECK(delete_edges(kl3, {}) == kl3.graph());
    const std::vector<std::pair<VertexId, VertexId>> absent{{VertexId{1, 1}, VertexId{2, 2}}};
    try {
      delete_edges(kl3, absent);
      FAIL("expected EdgeAbsent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EdgeAbsent);
    }
  }
}
