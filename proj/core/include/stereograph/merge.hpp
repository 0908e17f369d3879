#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "stereograph/graph.hpp"
#include "stereograph/stereotype_graph.hpp"

namespace stereograph {

/// Vertex of a partially merged graph: side `side` of the pair currently
/// labelled `pair` (labels are the smallest original pair index absorbed).
using MergedVertex = VertexId;

class PairedGraph;

struct MergeBlocked {
  std::array<MergedVertex, 3> triangle;
};

using MergeOutcome = std::variant<PairedGraph, MergeBlocked>;

/// A graph on pairs obtained from a stereotype graph by zero or more merges.
/// Each current vertex stands for an equivalence class of original
/// vertices. Unlike a stereotype graph, two pairs need not induce a 4-cycle.
class PairedGraph {
 public:
  explicit PairedGraph(const StereotypeGraph& g);

  int original_n() const noexcept { return original_n_; }
  std::size_t pair_count() const noexcept { return slots_.size(); }
  /// Labels of the pairs still present, ascending.
  std::vector<int> pairs() const;
  bool has_pair(int label) const noexcept { return slot_of(label).has_value(); }

  /// Original vertices represented by (label, side), ascending by id.
  const std::vector<VertexId>& class_of(int label, int side) const;
  bool adjacent(MergedVertex a, MergedVertex b) const;

  /// Current graph with vertex index 2*slot + (side-1), slots ordered by label.
  const Graph& graph() const noexcept { return adjacency_; }
  MergedVertex vertex_at(std::size_t index) const;

  friend bool operator==(const PairedGraph&, const PairedGraph&) = default;

 private:
  friend MergeOutcome merge_pairs(const PairedGraph& g, int i, int j);
  PairedGraph() = default;

  struct Slot {
    int label = 0;
    std::array<std::vector<VertexId>, 2> classes;
    friend bool operator==(const Slot&, const Slot&) = default;
  };

  std::optional<std::size_t> slot_of(int label) const noexcept;

  int original_n_ = 0;
  std::vector<Slot> slots_;
  Graph adjacency_;
};

/// Merges pairs i and j (labels of pairs currently present). Requires their
/// four vertices to induce a 4-cycle; otherwise the merge is Blocked and the
/// outcome carries a triangle among those vertices. Throws PairAbsent.
MergeOutcome merge_pairs(const PairedGraph& g, int i, int j);

struct MergeStep {
  int first = 0;
  int second = 0;
  /// Classes of the merged pair after the step (side 1, side 2).
  std::array<std::vector<VertexId>, 2> classes;
};

struct StabilityVerdict {
  bool stable = false;
  PairedGraph final_graph;
  std::vector<MergeStep> steps;
  std::optional<MergeBlocked> blocking;
};

using MergeOrder = std::vector<std::pair<int, int>>;

/// Merges until one pair remains or a merge is blocked. Without an explicit
/// order, each step merges the two smallest labels still present.
/// Throws InvalidOrder if a listed label is not present at its step.
StabilityVerdict reduce_to_k2(const StereotypeGraph& g, const std::optional<MergeOrder>& order = std::nullopt);

/// Runs every complete merge order and checks they agree on the verdict and,
/// for stable graphs, on the final two-class partition. Throws TooLarge when
/// the number of orders exceeds `max_orders`.
bool check_order_invariance(const StereotypeGraph& g, std::size_t max_orders = 100'000);

/// Number of distinct complete merge orders for n pairs: prod_{m=2..n} C(m,2).
std::size_t merge_order_count(int n);

}  // namespace stereograph
