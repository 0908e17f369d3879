#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "stereograph/chromatic.hpp"
#include "stereograph/graph.hpp"
#include "stereograph/stereotype_graph.hpp"

namespace stereograph {

/// Counter-based SplitMix64: the k-th output depends only on (seed, k).
class SplitMix64 {
 public:
  static constexpr std::string_view kName = "splitmix64-ctr-v1";

  explicit SplitMix64(std::uint64_t seed) noexcept : seed_(seed) {}

  std::uint64_t at(std::uint64_t counter) const noexcept;
  std::uint64_t next() noexcept { return at(counter_++); }
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// All-ones pattern: the sides {u1^*} and {u2^*} are the two halves of K_{n,n}.
StereotypeGraph gen_complete_bipartite(int n);

/// All-zeros pattern: {u1^*} and {u2^*} are n-cliques joined by the pair edges.
StereotypeGraph gen_complete_ladder(int n);

/// Each pattern bit is the top bit of SplitMix64(seed) at counter k.
StereotypeGraph gen_random(int n, std::uint64_t seed);

inline constexpr int kDefaultEnumerationBound = 6;

/// Enumeration bound: STEREOGRAPH_MAX_N if set to a positive integer,
/// otherwise kDefaultEnumerationBound.
int enumeration_bound();

/// Visits all 2^C(n,2) patterns in lexicographic order (first bit most
/// significant). Throws TooLarge when n exceeds `max_n`.
void enumerate_all(int n, const std::function<void(const StereotypeGraph&)>& visit,
                   int max_n = enumeration_bound());

std::vector<StereotypeGraph> enumerate_all(int n, int max_n = enumeration_bound());

struct CensusRow {
  int n = 0;
  std::size_t k = 0;
  std::size_t labeled_count = 0;
  std::size_t iso_class_count = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct Census {
  std::vector<CensusRow> rows;  // ascending k, nonzero counts only
  /// labeled_count > 0 for every 2 <= k <= n.
  bool every_index_attained = false;
  /// Every chi = 2 graph is isomorphic to K_{n,n} and every chi = n graph to KL_n.
  bool extremes_unique = false;
};

Census census(int n, int max_n = enumeration_bound());

/// Adds pair n+1 wired so that the given optimal colouring extends with the
/// new pair coloured 1 and 2; chi is unchanged. Uncoloured-by-1-or-2 pairs
/// join in parallel. Throws InvalidColoring for an improper or non-optimal
/// colouring.
StereotypeGraph expand_preserving(const StereotypeGraph& g, const Coloring& coloring);

/// Adds pair n+1 so that u1^(n+1) closes a clique of size chi+1 with a
/// chi-clique of g (one vertex per colour), and u2^(n+1) reuses an existing
/// colour; chi grows by exactly one. Throws InvalidColoring as above and
/// MissingClique if g has no chi-clique across distinct pairs.
StereotypeGraph expand_incrementing(const StereotypeGraph& g, const Coloring& coloring);

/// Starts from K_{2,2}, applies n-k preserving and then k-2 incrementing
/// expansions and verifies chi = k with the exact solver.
StereotypeGraph build_with_csi(int n, int k);

/// Copy of g without the listed edges; no longer a stereotype graph in
/// general. Throws EdgeAbsent for an edge not in g.
Graph delete_edges(const StereotypeGraph& g, std::span<const std::pair<VertexId, VertexId>> edges);

}  // namespace stereograph
