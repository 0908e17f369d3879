#include "stereograph/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "stereograph/errors.hpp"

namespace stereograph {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotAStereotypeGraph: return "NotAStereotypeGraph";
    case ErrorKind::PairAbsent: return "PairAbsent";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SizeExceeded: return "SizeExceeded";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
    case ErrorKind::MissingClique: return "MissingClique";
    case ErrorKind::RangeError: return "RangeError";
    case ErrorKind::EdgeAbsent: return "EdgeAbsent";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count, 0) {
  if (vertex_count > kMaxVertices) {
    raise(ErrorKind::SizeExceeded,
          "graph with " + std::to_string(vertex_count) + " vertices exceeds the 64-vertex limit");
  }
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    raise(ErrorKind::DomainError, "edge endpoint out of range");
  }
  if (u == v) raise(ErrorKind::DomainError, "self-loop on vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  adjacency_[u] |= std::uint64_t{1} << v;
  adjacency_[v] |= std::uint64_t{1} << u;
  ++edge_count_;
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
  if (!has_edge(u, v)) return;
  adjacency_[u] &= ~(std::uint64_t{1} << v);
  adjacency_[v] &= ~(std::uint64_t{1} << u);
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    std::uint64_t higher = adjacency_[u] & ~((std::uint64_t{2} << u) - 1);
    for (std::size_t v : bits_to_vertices(higher)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph sub(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (has_edge(vertices[a], vertices[b])) sub.add_edge(a, b);
    }
  }
  return sub;
}

std::vector<std::size_t> bits_to_vertices(std::uint64_t set) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(std::popcount(set)));
  while (set != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
    set &= set - 1;
  }
  return out;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t root) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreached);
  std::vector<std::size_t> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (std::size_t w : bits_to_vertices(g.neighbors(u))) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  for (std::size_t d : bfs_distances(g, 0)) {
    if (d == kUnreached) return false;
  }
  return true;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    for (std::size_t d : bfs_distances(g, root)) {
      if (d == kUnreached) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<std::size_t> girth(const Graph& g) {
  // BFS from every root; a non-tree edge (u, w) closes a walk of length
  // dist[u] + dist[w] + 1 through the root, and the minimum over all roots
  // is exactly the shortest cycle.
  std::optional<std::size_t> best;
  const std::size_t n = g.vertex_count();
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<std::size_t> dist(n, kUnreached);
    std::vector<std::size_t> parent(n, kUnreached);
    std::vector<std::size_t> queue{root};
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t w : bits_to_vertices(g.neighbors(u))) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w && parent[w] != u) {
          std::size_t len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::size_t triangle_count(const Graph& g) {
  std::size_t count = 0;
  for (auto [u, v] : g.edges()) {
    std::uint64_t common = g.neighbors(u) & g.neighbors(v);
    common &= ~((std::uint64_t{2} << v) - 1);  // third vertex above v
    count += static_cast<std::size_t>(std::popcount(common));
  }
  return count;
}

std::optional<Triangle> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    std::uint64_t common = g.neighbors(u) & g.neighbors(v);
    common &= ~((std::uint64_t{2} << v) - 1);
    if (common != 0) {
      return Triangle{u, v, static_cast<std::size_t>(std::countr_zero(common))};
    }
  }
  return std::nullopt;
}

}  // namespace stereograph
