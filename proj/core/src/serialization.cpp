#include "stereograph/serialization.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "stereograph/errors.hpp"

namespace stereograph {

using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& message) { raise(ErrorKind::ParseError, message); }

int read_n(const ordered_json& doc) {
  auto it = doc.find("n");
  if (it == doc.end() || !it->is_number_integer()) parse_error("missing integer field \"n\"");
  const auto n = it->get<std::int64_t>();
  if (n < 1 || n > 32) parse_error("n must lie in 1..32, got " + std::to_string(n));
  return static_cast<int>(n);
}

std::size_t read_vertex(const ordered_json& value, int n) {
  if (!value.is_string()) parse_error("vertex names must be strings");
  VertexId v{};
  try {
    v = VertexId::parse(value.get<std::string>());
  } catch (const Error& e) {
    parse_error(e.what());
  }
  if (v.pair < 1 || v.pair > n) parse_error("vertex " + v.name() + " is outside pairs 1.." + std::to_string(n));
  return v.index();
}

std::string json_list(const std::vector<VertexId>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + vs[i].name() + "\"";
  }
  return out + "]";
}

}  // namespace

std::string to_json(const StereotypeGraph& g, const std::optional<GraphMeta>& meta) {
  ordered_json doc;
  doc["format"] = kBitFormat;
  doc["n"] = g.n();
  doc["pattern"] = g.pattern().as_ints();
  if (meta) {
    ordered_json m;
    m["generator"] = meta->generator;
    if (meta->seed) m["seed"] = *meta->seed;
    if (!meta->prng.empty()) m["prng"] = meta->prng;
    doc["meta"] = m;
  }
  return doc.dump();
}

std::string to_edge_json(const StereotypeGraph& g) {
  ordered_json doc;
  doc["format"] = kEdgeFormat;
  doc["n"] = g.n();
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.graph().edges()) {
    edges.push_back({VertexId::from_index(u).name(), VertexId::from_index(v).name()});
  }
  doc["edges"] = edges;
  return doc.dump();
}

ParsedGraph parse_graph_document(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) parse_error("graph document must be a JSON object");
  auto format = doc.find("format");
  if (format == doc.end() || !format->is_string()) parse_error("missing string field \"format\"");
  const std::string kind = format->get<std::string>();
  const int n = read_n(doc);
  ParsedGraph out{n, Graph(2 * static_cast<std::size_t>(n))};

  if (kind == kBitFormat) {
    auto pattern = doc.find("pattern");
    if (pattern == doc.end() || !pattern->is_array()) parse_error("missing array field \"pattern\"");
    if (pattern->size() != PatternBits::length_for(n)) {
      parse_error("pattern has " + std::to_string(pattern->size()) + " bits, n=" + std::to_string(n) + " needs " +
                  std::to_string(PatternBits::length_for(n)));
    }
    std::vector<int> bits;
    for (const auto& b : *pattern) {
      if (!b.is_number_integer() || (b.get<std::int64_t>() != 0 && b.get<std::int64_t>() != 1)) {
        parse_error("pattern entries must be 0 or 1");
      }
      bits.push_back(b.get<int>());
    }
    out.graph = StereotypeGraph::from_pattern(n, bits).graph();
    return out;
  }

  if (kind == kEdgeFormat) {
    auto edges = doc.find("edges");
    if (edges == doc.end() || !edges->is_array()) parse_error("missing array field \"edges\"");
    for (const auto& e : *edges) {
      if (!e.is_array() || e.size() != 2) parse_error("each edge must be a two-element array");
      const std::size_t a = read_vertex(e[0], n);
      const std::size_t b = read_vertex(e[1], n);
      if (a == b) parse_error("self-loop at " + VertexId::from_index(a).name());
      if (out.graph.has_edge(a, b)) {
        parse_error("duplicate edge " + VertexId::from_index(a).name() + "-" + VertexId::from_index(b).name());
      }
      out.graph.add_edge(a, b);
    }
    return out;
  }

  parse_error("unknown format \"" + kind + "\"");
}

StereotypeGraph load_graph(std::string_view text) {
  ParsedGraph parsed = parse_graph_document(text);
  return StereotypeGraph::from_graph(parsed.n, parsed.graph);
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph stereograph {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << VertexId::from_index(v).name() << "\";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    const bool pair_edge = u / 2 == v / 2;
    out << "  \"" << VertexId::from_index(u).name() << "\" -- \"" << VertexId::from_index(v).name() << "\" [kind="
        << (pair_edge ? "pair, color=black" : "cross, color=blue") << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string merge_trace_json(const std::vector<MergeStep>& steps) {
  std::string out = "[";
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const MergeStep& step = steps[s];
    if (s > 0) out += ",";
    out += "{\"merged\":[" + std::to_string(step.first) + "," + std::to_string(step.second) + "],\"classes\":[" +
           json_list(step.classes[0]) + "," + json_list(step.classes[1]) + "]}";
  }
  return out + "]";
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::vector<CensusRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const CensusRow& a, const CensusRow& b) { return std::pair(a.n, a.k) < std::pair(b.n, b.k); });
  std::string out = "n,k,labeled_count,iso_class_count\n";
  for (const CensusRow& r : sorted) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.labeled_count) + "," +
           std::to_string(r.iso_class_count) + "\n";
  }
  return out;
}

std::string polynomial_line(const IntPolynomial& p) { return p.to_coefficient_line(); }

std::string polynomial_json(const IntPolynomial& p) {
  // Coefficients are written by hand: they may not fit a 64-bit JSON number.
  std::string out = "{\"degree\":" + std::to_string(p.degree()) + ",\"coefficients\":[";
  const auto& cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (i > 0) out += ",";
    out += cs[i].str();
  }
  return out + "]}";
}

std::string coloring_json(const Coloring& c) {
  ordered_json doc = ordered_json::object();
  for (std::size_t v = 0; v < c.size(); ++v) doc[VertexId::from_index(v).name()] = c.color_of(v);
  return doc.dump();
}

std::string report_headline(const StabilityReport& r) {
  std::size_t executed = 0;
  for (const auto& c : r.criteria) {
    if (c.verdict != Verdict::Skipped) ++executed;
  }
  const std::string csi = "CSI=" + std::to_string(r.csi);
  if (!r.agreement) {
    std::string names;
    for (Criterion c : r.disagreeing()) {
      if (!names.empty()) names += ", ";
      names += to_string(c);
    }
    if (names.empty()) names = "chromatic stability index";
    return "disagreement (" + names + "), " + csi;
  }
  const std::string verdict = r.stable ? "stable" : "unstable";
  if (executed == r.criteria.size()) return verdict + " (all 8 criteria), " + csi;
  return verdict + " (all " + std::to_string(executed) + " executed criteria, " +
         std::to_string(r.criteria.size() - executed) + " skipped), " + csi;
}

std::string report_text(const StabilityReport& r) {
  std::ostringstream out;
  out << report_headline(r) << "\n";
  for (const auto& c : r.criteria) {
    out << "  " << to_string(c.criterion) << ": " << to_string(c.verdict);
    if (!c.note.empty()) out << " (" << c.note << ")";
    out << "\n";
  }
  out << "  csi: " << r.csi << "\n";
  out << "  triangles: " << r.triangle_count << "\n";
  out << "  girth: " << (r.girth ? std::to_string(*r.girth) : "none") << "\n";
  out << "  agreement: " << (r.agreement ? "true" : "false") << "\n";
  return out.str();
}

std::string report_json(const StabilityReport& r) {
  ordered_json doc;
  doc["n"] = r.n;
  doc["stable"] = r.stable;
  doc["agreement"] = r.agreement;
  doc["csi"] = r.csi;
  doc["triangles"] = r.triangle_count;
  doc["girth"] = r.girth ? ordered_json(*r.girth) : ordered_json(nullptr);
  ordered_json criteria = ordered_json::object();
  for (const auto& c : r.criteria) criteria[std::string(to_string(c.criterion))] = to_string(c.verdict);
  doc["criteria"] = criteria;
  ordered_json disagreeing = ordered_json::array();
  for (Criterion c : r.disagreeing()) disagreeing.push_back(to_string(c));
  doc["disagreeing"] = disagreeing;
  return doc.dump();
}

}  // namespace stereograph
