#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stereograph/graph.hpp"
#include "stereograph/stereotype_graph.hpp"

namespace stereograph {

/// mapping[v] is the image in the second graph of vertex v of the first.
using VertexMapping = std::vector<std::size_t>;

/// Backtracking isomorphism search pruned by degree, per-vertex triangle
/// counts and colour refinement. Any mapping returned has been checked edge
/// by edge.
std::optional<VertexMapping> find_isomorphism(const Graph& a, const Graph& b);

inline bool graph_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// True iff `mapping` is a bijection carrying the edge set of a onto that of b.
bool is_isomorphism(const Graph& a, const Graph& b, const VertexMapping& mapping);

/// Isomorphism-invariant fingerprint (stable colour-refinement histogram).
/// Equal graphs up to isomorphism always share it; the converse need not hold.
std::uint64_t invariant_fingerprint(const Graph& g);

/// g is 2-colourable with both classes of size n; with n^2 edges that forces K_{n,n}.
bool recognize_complete_bipartite(const StereotypeGraph& g);

/// g splits into two n-cliques joined by a perfect matching and nothing else.
bool recognize_complete_ladder(const StereotypeGraph& g);

}  // namespace stereograph
