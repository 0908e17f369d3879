#include "stereograph/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace stereograph {

namespace {

using Colors = std::vector<std::size_t>;

std::size_t vertex_triangles(const Graph& g, std::size_t v) {
  std::size_t count = 0;
  for (std::size_t w : bits_to_vertices(g.neighbors(v))) {
    count += static_cast<std::size_t>(std::popcount(g.neighbors(v) & g.neighbors(w)));
  }
  return count / 2;
}

/// Joint colour refinement over several graphs: colours are ranks of
/// signatures among all vertices of all graphs, so they are comparable
/// across graphs and invariant under relabelling.
std::vector<Colors> refine(const std::vector<const Graph*>& graphs, std::vector<std::size_t>* history = nullptr) {
  std::vector<Colors> colors(graphs.size());
  std::vector<std::vector<std::vector<std::size_t>>> sigs(graphs.size());
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    const Graph& g = *graphs[k];
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      sigs[k].push_back({g.degree(v), vertex_triangles(g, v)});
    }
  }
  std::size_t distinct = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> rank;
    for (const auto& per_graph : sigs) {
      for (const auto& s : per_graph) rank.emplace(s, 0);
    }
    std::size_t next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      colors[k].resize(sigs[k].size());
      for (std::size_t v = 0; v < sigs[k].size(); ++v) colors[k][v] = rank[sigs[k][v]];
    }
    if (history) {
      for (const auto& [sig, r] : rank) history->insert(history->end(), sig.begin(), sig.end());
    }
    if (rank.size() == distinct) break;
    distinct = rank.size();
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const Graph& g = *graphs[k];
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::size_t> sig{colors[k][v]};
        for (std::size_t w : bits_to_vertices(g.neighbors(v))) sig.push_back(colors[k][w]);
        std::sort(sig.begin() + 1, sig.end());
        sigs[k][v] = std::move(sig);
      }
    }
  }
  return colors;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, Colors ca, Colors cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.vertex_count(), kNone), used_(b.vertex_count(), false) {
    order_vertices();
  }

  std::optional<VertexMapping> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  void order_vertices() {
    const std::size_t n = a_.vertex_count();
    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t c : ca_) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::uint64_t placed_mask = 0;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kNone;
      auto key = [&](std::size_t v) {
        return std::make_tuple(-std::popcount(a_.neighbors(v) & placed_mask), class_size[ca_[v]], v);
      };
      for (std::size_t v = 0; v < n; ++v) {
        if (!placed[v] && (best == kNone || key(v) < key(best))) best = v;
      }
      placed[best] = true;
      placed_mask |= std::uint64_t{1} << best;
      order_.push_back(best);
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w] || cb_[w] != ca_[v]) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        std::size_t x = order_[d];
        consistent = a_.has_edge(v, x) == b_.has_edge(w, map_[x]);
      }
      if (!consistent) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = kNone;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  Colors ca_;
  Colors cb_;
  VertexMapping map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t w : bits_to_vertices(g.neighbors(u))) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& mapping) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (mapping.size() != a.vertex_count()) return false;
  std::vector<bool> hit(b.vertex_count(), false);
  for (std::size_t w : mapping) {
    if (w >= b.vertex_count() || hit[w]) return false;
    hit[w] = true;
  }
  for (auto [u, v] : a.edges()) {
    if (!b.has_edge(mapping[u], mapping[v])) return false;
  }
  return true;
}

std::optional<VertexMapping> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto colors = refine({&a, &b});
  Colors sorted_a = colors[0];
  Colors sorted_b = colors[1];
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) return std::nullopt;
  auto mapping = Matcher(a, b, std::move(colors[0]), std::move(colors[1])).run();
  if (mapping && !is_isomorphism(a, b, *mapping)) return std::nullopt;
  return mapping;
}

std::uint64_t invariant_fingerprint(const Graph& g) {
  std::vector<std::size_t> history{g.vertex_count(), g.edge_count()};
  auto colors = refine({&g}, &history);
  std::sort(colors[0].begin(), colors[0].end());
  history.insert(history.end(), colors[0].begin(), colors[0].end());
  // FNV-1a over the refinement history.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t x : history) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 1099511628211ULL;
  }
  return h;
}

bool recognize_complete_bipartite(const StereotypeGraph& g) {
  const Graph& graph = g.graph();
  auto side = bipartition(graph);
  if (!side) return false;
  const auto n = static_cast<std::size_t>(g.n());
  auto zeros = static_cast<std::size_t>(std::count(side->begin(), side->end(), 0));
  return zeros == n && graph.edge_count() == n * n;
}

bool recognize_complete_ladder(const StereotypeGraph& g) {
  const Graph& graph = g.graph();
  const std::size_t total = graph.vertex_count();
  const std::size_t half = total / 2;
  // Grow two cliques vertex by vertex; vertex 0 goes into the first.
  std::function<bool(std::size_t, std::uint64_t, std::uint64_t)> place =
      [&](std::size_t v, std::uint64_t left, std::uint64_t right) -> bool {
    if (v == total) {
      for (std::size_t u = 0; u < total; ++u) {
        std::uint64_t other = ((left >> u) & 1U) ? right : left;
        if (std::popcount(graph.neighbors(u) & other) != 1) return false;
      }
      return true;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (std::uint64_t* side : {&left, &right}) {
      if (static_cast<std::size_t>(std::popcount(*side)) >= half) continue;
      if ((graph.neighbors(v) & *side) != *side) continue;
      *side |= bit;
      bool ok = place(v + 1, left, right);
      *side &= ~bit;
      if (ok) return true;
      if (v == 0) break;
    }
    return false;
  };
  return place(0, 0, 0);
}

}  // namespace stereograph
