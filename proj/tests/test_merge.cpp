#include <doctest.h>

#include <set>

#include "stereograph/stereograph.hpp"

using namespace stereograph;

namespace {

VertexId v(int side, int pair) { return VertexId{pair, side}; }

using Classes = std::vector<VertexId>;

std::set<std::set<std::size_t>> partition_of(const PairedGraph& g) {
  std::set<std::set<std::size_t>> out;
  for (int label : g.pairs()) {
    for (int side = 1; side <= 2; ++side) {
      std::set<std::size_t> cls;
      for (const VertexId& x : g.class_of(label, side)) cls.insert(x.index());
      out.insert(cls);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("merge-engine") {
  TEST_CASE("paired graph mirrors the stereotype graph") {
    const StereotypeGraph g = StereotypeGraph::from_pattern(3, std::vector<int>{1, 0, 1});
    const PairedGraph p(g);
    CHECK(p.original_n() == 3);
    CHECK(p.pair_count() == 3);
    CHECK(p.pairs() == std::vector<int>{1, 2, 3});
    CHECK(p.class_of(2, 1) == Classes{v(1, 2)});
    CHECK(p.graph() == g.graph());
    CHECK(p.adjacent(v(1, 1), v(2, 2)));
    CHECK_THROWS_AS(p.class_of(4, 1), Error);
  }

  TEST_CASE("merging K33 pairs 1,2") {
    const PairedGraph p(gen_complete_bipartite(3));
    const MergeOutcome out = merge_pairs(p, 1, 2);
    REQUIRE(std::holds_alternative<PairedGraph>(out));
    const auto& m = std::get<PairedGraph>(out);
    CHECK(m.pair_count() == 2);
    CHECK(m.pairs() == std::vector<int>{1, 3});
    CHECK(m.class_of(1, 1) == Classes{v(1, 1), v(1, 2)});
    CHECK(m.class_of(1, 2) == Classes{v(2, 1), v(2, 2)});
    // Surviving pairs still span a 4-cycle.
    CHECK(m.graph().edge_count() == 4);
    CHECK(graph_isomorphic(m.graph(), StereotypeGraph::from_pattern(2, std::vector<int>{0}).graph()));
  }

  TEST_CASE("merging KL3 pairs 1,2 then blocking") {
    const PairedGraph p(gen_complete_ladder(3));
    const MergeOutcome out = merge_pairs(p, 1, 2);
    REQUIRE(std::holds_alternative<PairedGraph>(out));
    const auto& m = std::get<PairedGraph>(out);
    CHECK(m.class_of(1, 1) == Classes{v(1, 1), v(2, 2)});
    CHECK(m.class_of(1, 2) == Classes{v(2, 1), v(1, 2)});
    // The merged class touches both vertices of pair 3.
    CHECK(m.adjacent(v(1, 1), v(1, 3)));
    CHECK(m.adjacent(v(1, 1), v(2, 3)));
    const MergeOutcome next = merge_pairs(m, 1, 3);
    REQUIRE(std::holds_alternative<MergeBlocked>(next));
    const auto& t = std::get<MergeBlocked>(next).triangle;
    CHECK(m.adjacent(t[0], t[1]));
    CHECK(m.adjacent(t[1], t[2]));
    CHECK(m.adjacent(t[0], t[2]));
  }

  TEST_CASE("merge preconditions") {
    const PairedGraph p(gen_complete_bipartite(3));
    CHECK_THROWS_AS(merge_pairs(p, 1, 1), Error);
    CHECK_THROWS_AS(merge_pairs(p, 1, 4), Error);
    const auto m = std::get<PairedGraph>(merge_pairs(p, 2, 3));
    CHECK(m.pairs() == std::vector<int>{1, 2});
    try {
      merge_pairs(m, 1, 3);
      FAIL("expected PairAbsent");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PairAbsent);
    }
  }

  TEST_CASE("reduce_to_k2 examples") {
    const StabilityVerdict k33 = reduce_to_k2(gen_complete_bipartite(3));
    CHECK(k33.stable);
    CHECK(k33.steps.size() == 2);
    CHECK(k33.final_graph.class_of(1, 1) == Classes{v(1, 1), v(1, 2), v(1, 3)});
    CHECK(k33.final_graph.class_of(1, 2) == Classes{v(2, 1), v(2, 2), v(2, 3)});
    CHECK_FALSE(k33.blocking.has_value());

    const StabilityVerdict kl3 = reduce_to_k2(gen_complete_ladder(3));
    CHECK_FALSE(kl3.stable);
    REQUIRE(kl3.blocking.has_value());

    const StabilityVerdict single = reduce_to_k2(gen_complete_bipartite(1));
    CHECK(single.stable);
    CHECK(single.steps.empty());
  }

  TEST_CASE("explicit merge orders") {
    const StereotypeGraph g = gen_complete_bipartite(4);
    const StabilityVerdict v1 = reduce_to_k2(g, MergeOrder{{3, 4}, {1, 2}, {1, 3}});
    CHECK(v1.stable);
    CHECK_THROWS_AS(reduce_to_k2(g, MergeOrder{{3, 4}, {3, 4}, {1, 2}}), Error);
    CHECK_THROWS_AS(reduce_to_k2(g, MergeOrder{{1, 2}}), Error);
    try {
      reduce_to_k2(g, MergeOrder{{1, 2}, {2, 3}, {1, 4}});
      FAIL("expected InvalidOrder");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidOrder);
    }
  }

  TEST_CASE("stable final classes are the bipartition and verdict matches 2-colourability") {
    for (int n = 1; n <= 5; ++n) {
      enumerate_all(n, [n](const StereotypeGraph& g) {
        const StabilityVerdict verdict = reduce_to_k2(g);
        const auto two = two_coloring(g.graph());
        CHECK(verdict.stable == two.coloring.has_value());
        if (!verdict.stable) {
          REQUIRE(verdict.blocking.has_value());
          return;
        }
        CHECK(verdict.final_graph.pair_count() == 1);
        for (int side = 1; side <= 2; ++side) {
          const auto& cls = verdict.final_graph.class_of(1, side);
          CHECK(cls.size() == static_cast<std::size_t>(n));
          std::set<int> pairs;
          for (std::size_t a = 0; a < cls.size(); ++a) {
            pairs.insert(cls[a].pair);
            for (std::size_t b = a + 1; b < cls.size(); ++b) CHECK_FALSE(g.has_edge(cls[a], cls[b]));
          }
          CHECK(pairs.size() == static_cast<std::size_t>(n));
        }
      });
    }
  }

  TEST_CASE("adjacent merges commute") {
    for (int n = 3; n <= 4; ++n) {
      enumerate_all(n, [n](const StereotypeGraph& g) {
        const PairedGraph p(g);
        for (int a = 1; a <= n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            for (int c = 1; c <= n; ++c) {
              for (int d = c + 1; d <= n; ++d) {
                if (c == a || c == b || d == a || d == b) continue;
                const auto first = merge_pairs(p, a, b);
                const auto second = merge_pairs(p, c, d);
                if (!std::holds_alternative<PairedGraph>(first) || !std::holds_alternative<PairedGraph>(second)) continue;
                const auto ab_cd = merge_pairs(std::get<PairedGraph>(first), c, d);
                const auto cd_ab = merge_pairs(std::get<PairedGraph>(second), a, b);
                REQUIRE(ab_cd.index() == cd_ab.index());
                if (const auto* x = std::get_if<PairedGraph>(&ab_cd)) {
                  const auto& y = std::get<PairedGraph>(cd_ab);
                  CHECK(*x == y);
                }
              }
            }
          }
        }
      });
    }
  }

  TEST_CASE("order invariance examples and counting") {
    CHECK(merge_order_count(1) == 1);
    CHECK(merge_order_count(3) == 3);
    CHECK(merge_order_count(4) == 18);
    CHECK(check_order_invariance(gen_complete_bipartite(3)));
    CHECK(check_order_invariance(gen_complete_ladder(3)));
    CHECK_THROWS_AS(check_order_invariance(gen_complete_bipartite(6), 1000), Error);
  }

  TEST_CASE("partitions from different orders agree for K44") {
    const StereotypeGraph g = gen_complete_bipartite(4);
    const auto a = reduce_to_k2(g, MergeOrder{{1, 2}, {1, 3}, {1, 4}});
    const auto b = reduce_to_k2(g, MergeOrder{{3, 4}, {2, 3}, {1, 2}});
    CHECK(partition_of(a.final_graph) == partition_of(b.final_graph));
  }
}
