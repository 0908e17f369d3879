#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stereograph/graph.hpp"

namespace stereograph {

/// Vertex u_side^pair. Both fields are 1-based; side is 1 or 2.
struct VertexId {
  int pair = 1;
  int side = 1;

  /// Dense id 2(pair-1) + (side-1): pairs occupy consecutive slots.
  std::size_t index() const noexcept {
    return 2 * static_cast<std::size_t>(pair - 1) + static_cast<std::size_t>(side - 1);
  }
  static VertexId from_index(std::size_t index) noexcept {
    return VertexId{static_cast<int>(index / 2) + 1, static_cast<int>(index % 2) + 1};
  }

  VertexId partner() const noexcept { return VertexId{pair, 3 - side}; }

  /// "u<side>.<pair>", e.g. "u2.3".
  std::string name() const;
  /// Inverse of name(); throws ParseError on malformed input.
  static VertexId parse(std::string_view name);

  friend auto operator<=>(const VertexId& a, const VertexId& b) noexcept {
    return a.index() <=> b.index();
  }
  friend bool operator==(const VertexId&, const VertexId&) = default;
};

/// One bit per unordered pair of pair indices (i < j), in lexicographic
/// order of (i, j). 0 joins u1^i-u1^j and u2^i-u2^j ("parallel"); 1 joins
/// u1^i-u2^j and u2^i-u1^j ("crossed").
class PatternBits {
 public:
  PatternBits() = default;
  /// Throws LengthMismatch / DomainError on malformed input.
  PatternBits(int n, std::span<const int> bits);

  static std::size_t length_for(int n) noexcept {
    return n <= 1 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  }
  /// Position of (i, j), 1 <= i < j <= n, in the lexicographic ordering.
  static std::size_t position(int n, int i, int j) noexcept;

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return bits_.size(); }
  int bit(int i, int j) const noexcept;
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::vector<int> as_ints() const { return {bits_.begin(), bits_.end()}; }

  friend bool operator==(const PatternBits&, const PatternBits&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

class StereotypeGraph {
 public:
  static StereotypeGraph from_pattern(int n, std::span<const int> bits);
  static StereotypeGraph from_pattern(const PatternBits& pattern);
  /// Accepts exactly the edge sets produced by from_pattern; throws
  /// NotAStereotypeGraph naming the first violated clause otherwise.
  static StereotypeGraph from_edge_list(int n, std::span<const std::pair<VertexId, VertexId>> edges);
  /// Same as from_edge_list for a graph already indexed by VertexId::index().
  static StereotypeGraph from_graph(int n, const Graph& graph);

  int n() const noexcept { return pattern_.n(); }
  const PatternBits& pattern() const noexcept { return pattern_; }
  const Graph& graph() const noexcept { return graph_; }

  bool has_edge(VertexId a, VertexId b) const noexcept { return graph_.has_edge(a.index(), b.index()); }

  friend bool operator==(const StereotypeGraph& a, const StereotypeGraph& b) {
    return a.pattern_ == b.pattern_;
  }

 private:
  explicit StereotypeGraph(PatternBits pattern);

  PatternBits pattern_;
  Graph graph_;
};

PatternBits pattern_of(const StereotypeGraph& g);

/// Stereotype graph induced on pairs 1..m of g (m <= n).
StereotypeGraph induced_prefix(const StereotypeGraph& g, int m);

struct ClauseResult {
  std::string clause;
  bool passed = true;
  std::string witness;  // empty when passed
};

struct ValidationReport {
  std::vector<ClauseResult> clauses;

  bool valid() const noexcept;
  const ClauseResult* first_failure() const noexcept;
};

/// Checks a graph on 2n canonically indexed vertices against the structural
/// rules of a stereotype graph (pair edges, pairwise 4-cycles) and the
/// consequences every such graph must have (n^2 edges, n-regular, connected,
/// diameter 2 when n >= 2). Failures are reported, never thrown.
ValidationReport validate_structure(int n, const Graph& g);

struct BasicProfile {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t regular_degree = 0;
  std::optional<std::size_t> girth;  // nullopt: acyclic
  std::size_t diameter = 0;
  bool connected = false;
  std::size_t triangle_count = 0;
};

BasicProfile basic_profile(const StereotypeGraph& g);

/// Number of pair triples {i, j, k} whose six vertices contain a triangle,
/// by explicit search on the induced subgraph.
std::size_t triangle_pair_triples(const StereotypeGraph& g);

/// Shortcut: pairs i, j, k carry a triangle iff bit(i,j) ^ bit(i,k) ^ bit(j,k) == 0.
bool triple_has_triangle_by_parity(const PatternBits& p, int i, int j, int k) noexcept;

/// Triangle-freeness from the parity shortcut alone.
bool triangle_free_by_parity(const PatternBits& p) noexcept;

}  // namespace stereograph
