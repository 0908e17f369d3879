#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stereograph/chromatic.hpp"
#include "stereograph/generators.hpp"
#include "stereograph/graph.hpp"
#include "stereograph/merge.hpp"
#include "stereograph/polynomial.hpp"
#include "stereograph/stereotype_graph.hpp"

namespace stereograph {

inline constexpr std::string_view kBitFormat = "stereograph-v1";
inline constexpr std::string_view kEdgeFormat = "stereograph-edges-v1";

struct GraphMeta {
  std::string generator;
  std::optional<std::uint64_t> seed;
  std::string prng;  // empty when no generator randomness was used
};

/// Canonical bit-form document, one line, no trailing newline.
std::string to_json(const StereotypeGraph& g, const std::optional<GraphMeta>& meta = std::nullopt);

/// Edge-form document with sorted edges.
std::string to_edge_json(const StereotypeGraph& g);

struct ParsedGraph {
  int n = 0;
  Graph graph;
};

/// Parses either document format into a raw graph on 2n canonically indexed
/// vertices. Structural validation is left to the caller. Throws ParseError.
ParsedGraph parse_graph_document(std::string_view text);

/// parse_graph_document followed by StereotypeGraph::from_graph: throws
/// ParseError or NotAStereotypeGraph.
StereotypeGraph load_graph(std::string_view text);

/// Graphviz text; vertex names u<side>.<pair>, pair edges black, cross edges blue.
std::string to_dot(const Graph& g);
inline std::string to_dot(const StereotypeGraph& g) { return to_dot(g.graph()); }

/// [{"merged":[i,j],"classes":[[...],[...]]}, ...]
std::string merge_trace_json(const std::vector<MergeStep>& steps);

/// Header n,k,labeled_count,iso_class_count; rows sorted by (n, k).
std::string census_csv(const std::vector<CensusRow>& rows);

/// Space-separated coefficients, highest degree first.
std::string polynomial_line(const IntPolynomial& p);
/// {"degree":d,"coefficients":[...]} with exact integers.
std::string polynomial_json(const IntPolynomial& p);

/// {"u1.1":c,"u2.1":c,...} in vertex order.
std::string coloring_json(const Coloring& c);

/// First line summarises the verdict, e.g. "stable (all 8 criteria), CSI=2".
std::string report_headline(const StabilityReport& r);
std::string report_text(const StabilityReport& r);
std::string report_json(const StabilityReport& r);

}  // namespace stereograph
