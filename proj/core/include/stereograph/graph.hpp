#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace stereograph {

using Edge = std::pair<std::size_t, std::size_t>;
using Triangle = std::array<std::size_t, 3>;

/// Finite simple undirected graph on at most 64 vertices, stored as one
/// adjacency bitmask per vertex. Every graph in this library is small
/// (2n vertices for n pairs), so bit-parallel neighbourhoods are the
/// natural representation for clique, colouring and isomorphism search.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  bool has_edge(std::size_t u, std::size_t v) const noexcept {
    return u < adjacency_.size() && v < 64 && ((adjacency_[u] >> v) & 1U) != 0;
  }

  std::uint64_t neighbors(std::size_t u) const noexcept { return adjacency_[u]; }
  std::size_t degree(std::size_t u) const noexcept {
    return static_cast<std::size_t>(std::popcount(adjacency_[u]));
  }

  /// All edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
  Graph induced(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint64_t> adjacency_;
  std::size_t edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// Largest shortest-path distance; nullopt for a disconnected graph.
std::optional<std::size_t> diameter(const Graph& g);

/// Length of a shortest cycle; nullopt when the graph is acyclic.
std::optional<std::size_t> girth(const Graph& g);

std::size_t triangle_count(const Graph& g);

/// Lexicographically first triangle (i < j < k), if any.
std::optional<Triangle> find_triangle(const Graph& g);

/// Vertices in `set` as an ascending list.
std::vector<std::size_t> bits_to_vertices(std::uint64_t set);

}  // namespace stereograph
