#include "stereograph/merge.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "stereograph/errors.hpp"

namespace stereograph {

PairedGraph::PairedGraph(const StereotypeGraph& g) : original_n_(g.n()), adjacency_(g.graph()) {
  slots_.reserve(static_cast<std::size_t>(g.n()));
  for (int i = 1; i <= g.n(); ++i) {
    slots_.push_back(Slot{i, {std::vector<VertexId>{VertexId{i, 1}}, std::vector<VertexId>{VertexId{i, 2}}}});
  }
}

std::vector<int> PairedGraph::pairs() const {
  std::vector<int> out;
  out.reserve(slots_.size());
  for (const Slot& s : slots_) out.push_back(s.label);
  return out;
}

std::optional<std::size_t> PairedGraph::slot_of(int label) const noexcept {
  auto it = std::lower_bound(slots_.begin(), slots_.end(), label,
                             [](const Slot& s, int l) { return s.label < l; });
  if (it == slots_.end() || it->label != label) return std::nullopt;
  return static_cast<std::size_t>(it - slots_.begin());
}

const std::vector<VertexId>& PairedGraph::class_of(int label, int side) const {
  auto slot = slot_of(label);
  if (!slot) raise(ErrorKind::PairAbsent, "pair " + std::to_string(label) + " not present");
  if (side != 1 && side != 2) raise(ErrorKind::DomainError, "side must be 1 or 2");
  return slots_[*slot].classes[static_cast<std::size_t>(side - 1)];
}

bool PairedGraph::adjacent(MergedVertex a, MergedVertex b) const {
  auto sa = slot_of(a.pair);
  auto sb = slot_of(b.pair);
  if (!sa || !sb) raise(ErrorKind::PairAbsent, "vertex refers to a pair that is not present");
  return adjacency_.has_edge(2 * *sa + static_cast<std::size_t>(a.side - 1),
                             2 * *sb + static_cast<std::size_t>(b.side - 1));
}

MergedVertex PairedGraph::vertex_at(std::size_t index) const {
  return MergedVertex{slots_.at(index / 2).label, static_cast<int>(index % 2) + 1};
}

MergeOutcome merge_pairs(const PairedGraph& g, int i, int j) {
  if (i == j) raise(ErrorKind::DomainError, "cannot merge pair " + std::to_string(i) + " with itself");
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  auto slot_lo = g.slot_of(lo);
  auto slot_hi = g.slot_of(hi);
  if (!slot_lo) raise(ErrorKind::PairAbsent, "pair " + std::to_string(lo) + " not present");
  if (!slot_hi) raise(ErrorKind::PairAbsent, "pair " + std::to_string(hi) + " not present");

  const Graph& adj = g.adjacency_;
  const std::size_t a1 = 2 * *slot_lo;
  const std::size_t a2 = a1 + 1;
  const std::size_t b1 = 2 * *slot_hi;
  const std::size_t b2 = b1 + 1;
  const bool parallel = adj.has_edge(a1, b1) && adj.has_edge(a2, b2) && !adj.has_edge(a1, b2) && !adj.has_edge(a2, b1);
  const bool crossed = adj.has_edge(a1, b2) && adj.has_edge(a2, b1) && !adj.has_edge(a1, b1) && !adj.has_edge(a2, b2);
  const bool pair_edges = adj.has_edge(a1, a2) && adj.has_edge(b1, b2);

  if (!(pair_edges && (parallel || crossed))) {
    std::vector<std::size_t> quad{a1, a2, b1, b2};
    auto t = find_triangle(adj.induced(quad));
    if (!t) {
      raise(ErrorKind::InternalInvariant,
            "pairs " + std::to_string(lo) + "," + std::to_string(hi) + " induce neither a 4-cycle nor a triangle");
    }
    return MergeBlocked{{g.vertex_at(quad[(*t)[0]]), g.vertex_at(quad[(*t)[1]]), g.vertex_at(quad[(*t)[2]])}};
  }

  // Each vertex of the lower pair joins the vertex of the upper pair it is
  // not adjacent to.
  const std::size_t partner_of_a1 = parallel ? b2 : b1;
  const std::size_t partner_of_a2 = parallel ? b1 : b2;

  PairedGraph out;
  out.original_n_ = g.original_n_;
  out.slots_ = g.slots_;
  auto& merged = out.slots_[*slot_lo].classes;
  const auto& upper = g.slots_[*slot_hi].classes;
  merged[0].insert(merged[0].end(), upper[partner_of_a1 - b1].begin(), upper[partner_of_a1 - b1].end());
  merged[1].insert(merged[1].end(), upper[partner_of_a2 - b1].begin(), upper[partner_of_a2 - b1].end());
  std::sort(merged[0].begin(), merged[0].end());
  std::sort(merged[1].begin(), merged[1].end());
  out.slots_.erase(out.slots_.begin() + static_cast<std::ptrdiff_t>(*slot_hi));

  // Old vertex -> new vertex; a class is adjacent to whatever any member was.
  std::vector<std::size_t> remap(adj.vertex_count());
  for (std::size_t v = 0; v < adj.vertex_count(); ++v) {
    std::size_t slot = v / 2;
    if (slot == *slot_hi) continue;
    std::size_t new_slot = slot > *slot_hi ? slot - 1 : slot;
    remap[v] = 2 * new_slot + v % 2;
  }
  remap[partner_of_a1] = remap[a1];
  remap[partner_of_a2] = remap[a2];

  out.adjacency_ = Graph(adj.vertex_count() - 2);
  for (auto [u, v] : adj.edges()) {
    if (remap[u] != remap[v]) out.adjacency_.add_edge(remap[u], remap[v]);
  }
  return out;
}

namespace {

using Partition = std::set<std::vector<VertexId>>;

Partition final_partition(const PairedGraph& g) {
  Partition p;
  for (int label : g.pairs()) {
    p.insert(g.class_of(label, 1));
    p.insert(g.class_of(label, 2));
  }
  return p;
}

void check_stable_result(const PairedGraph& final_graph, int n) {
  const int label = final_graph.pairs().front();
  const auto& c1 = final_graph.class_of(label, 1);
  const auto& c2 = final_graph.class_of(label, 2);
  if (c1.size() != static_cast<std::size_t>(n) || c2.size() != static_cast<std::size_t>(n)) {
    raise(ErrorKind::InternalInvariant, "reduced K2 classes are not of size n");
  }
}

}  // namespace

StabilityVerdict reduce_to_k2(const StereotypeGraph& g, const std::optional<MergeOrder>& order) {
  const int n = g.n();
  if (order && order->size() != static_cast<std::size_t>(n - 1)) {
    raise(ErrorKind::InvalidOrder, "merge order for n=" + std::to_string(n) + " must list " +
                                       std::to_string(n - 1) + " merges, got " + std::to_string(order->size()));
  }
  PairedGraph current(g);
  std::vector<MergeStep> steps;
  for (int step = 0; step + 1 < n; ++step) {
    int i = 0;
    int j = 0;
    if (order) {
      std::tie(i, j) = (*order)[static_cast<std::size_t>(step)];
      if (i == j || !current.has_pair(i) || !current.has_pair(j)) {
        raise(ErrorKind::InvalidOrder, "step " + std::to_string(step + 1) + " merges (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") but those pairs are not both present");
      }
    } else {
      auto labels = current.pairs();
      i = labels[0];
      j = labels[1];
    }
    MergeOutcome outcome = merge_pairs(current, i, j);
    if (auto* blocked = std::get_if<MergeBlocked>(&outcome)) {
      return StabilityVerdict{false, std::move(current), std::move(steps), *blocked};
    }
    current = std::get<PairedGraph>(std::move(outcome));
    const int label = std::min(i, j);
    steps.push_back(MergeStep{i, j, {current.class_of(label, 1), current.class_of(label, 2)}});
  }
  check_stable_result(current, n);
  return StabilityVerdict{true, std::move(current), std::move(steps), std::nullopt};
}

std::size_t merge_order_count(int n) {
  std::size_t count = 1;
  for (int m = 2; m <= n; ++m) {
    auto choices = static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2;
    if (count > std::numeric_limits<std::size_t>::max() / choices) return std::numeric_limits<std::size_t>::max();
    count *= choices;
  }
  return count;
}

bool check_order_invariance(const StereotypeGraph& g, std::size_t max_orders) {
  if (merge_order_count(g.n()) > max_orders) {
    raise(ErrorKind::TooLarge, "n=" + std::to_string(g.n()) + " has more than " + std::to_string(max_orders) +
                                   " merge orders");
  }
  std::optional<std::pair<bool, Partition>> reference;
  bool consistent = true;

  auto record = [&](bool stable, Partition p) {
    if (!reference) {
      reference.emplace(stable, std::move(p));
    } else if (reference->first != stable || (stable && reference->second != p)) {
      consistent = false;
    }
  };

  auto explore = [&](auto&& self, const PairedGraph& current) -> void {
    if (!consistent) return;
    if (current.pair_count() == 1) {
      record(true, final_partition(current));
      return;
    }
    auto labels = current.pairs();
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        MergeOutcome outcome = merge_pairs(current, labels[a], labels[b]);
        if (std::holds_alternative<MergeBlocked>(outcome)) {
          record(false, {});
        } else {
          self(self, std::get<PairedGraph>(outcome));
        }
      }
    }
  };
  explore(explore, PairedGraph(g));
  return consistent;
}

}  // namespace stereograph
