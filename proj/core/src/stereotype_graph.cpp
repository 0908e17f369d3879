#include "stereograph/stereotype_graph.hpp"

#include <charconv>
#include <set>

#include "stereograph/errors.hpp"

namespace stereograph {

namespace {

constexpr int kMaxPairs = static_cast<int>(Graph::kMaxVertices / 2);

void require_pair_count(int n) {
  if (n < 1 || n > kMaxPairs) {
    raise(ErrorKind::DomainError,
          "pair count " + std::to_string(n) + " outside [1, " + std::to_string(kMaxPairs) + "]");
  }
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    raise(ErrorKind::ParseError, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

std::string pair_label(int i, int j) {
  return "pairs " + std::to_string(i) + "," + std::to_string(j);
}

}  // namespace

std::string VertexId::name() const {
  return "u" + std::to_string(side) + "." + std::to_string(pair);
}

VertexId VertexId::parse(std::string_view name) {
  if (name.size() < 4 || name[0] != 'u') {
    raise(ErrorKind::ParseError, "bad vertex name '" + std::string(name) + "'");
  }
  auto dot = name.find('.');
  if (dot == std::string_view::npos) {
    raise(ErrorKind::ParseError, "bad vertex name '" + std::string(name) + "'");
  }
  VertexId v{parse_int(name.substr(dot + 1)), parse_int(name.substr(1, dot - 1))};
  if (v.side != 1 && v.side != 2) {
    raise(ErrorKind::ParseError, "vertex side must be 1 or 2 in '" + std::string(name) + "'");
  }
  if (v.pair < 1) raise(ErrorKind::ParseError, "pair index must be positive in '" + std::string(name) + "'");
  return v;
}

PatternBits::PatternBits(int n, std::span<const int> bits) : n_(n) {
  require_pair_count(n);
  if (bits.size() != length_for(n)) {
    raise(ErrorKind::LengthMismatch, "pattern for n=" + std::to_string(n) + " needs " +
                                         std::to_string(length_for(n)) + " bits, got " +
                                         std::to_string(bits.size()));
  }
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) raise(ErrorKind::DomainError, "pattern bit " + std::to_string(b) + " is not 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

std::size_t PatternBits::position(int n, int i, int j) noexcept {
  auto a = static_cast<std::size_t>(i - 1);
  return a * static_cast<std::size_t>(n) - a * (a + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

int PatternBits::bit(int i, int j) const noexcept {
  if (i > j) std::swap(i, j);
  return bits_[position(n_, i, j)];
}

StereotypeGraph::StereotypeGraph(PatternBits pattern)
    : pattern_(std::move(pattern)), graph_(2 * static_cast<std::size_t>(pattern_.n())) {
  const int n = pattern_.n();
  for (int i = 1; i <= n; ++i) graph_.add_edge(VertexId{i, 1}.index(), VertexId{i, 2}.index());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int flip = pattern_.bit(i, j);
      graph_.add_edge(VertexId{i, 1}.index(), VertexId{j, 1 + flip}.index());
      graph_.add_edge(VertexId{i, 2}.index(), VertexId{j, 2 - flip}.index());
    }
  }
}

StereotypeGraph StereotypeGraph::from_pattern(int n, std::span<const int> bits) {
  return StereotypeGraph(PatternBits(n, bits));
}

StereotypeGraph StereotypeGraph::from_pattern(const PatternBits& pattern) {
  return StereotypeGraph(pattern);
}

StereotypeGraph StereotypeGraph::from_edge_list(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
  require_pair_count(n);
  Graph g(2 * static_cast<std::size_t>(n));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [a, b] : edges) {
    for (const VertexId& v : {a, b}) {
      if (v.pair < 1 || v.pair > n || (v.side != 1 && v.side != 2)) {
        raise(ErrorKind::DomainError, "vertex " + v.name() + " not in a graph with " + std::to_string(n) + " pairs");
      }
    }
    if (a == b) raise(ErrorKind::DomainError, "self-loop on " + a.name());
    const std::pair key{std::min(a.index(), b.index()), std::max(a.index(), b.index())};
    if (!seen.insert(key).second) {
      raise(ErrorKind::DomainError, "duplicate edge " + a.name() + "-" + b.name());
    }
    g.add_edge(a.index(), b.index());
  }
  return from_graph(n, g);
}

StereotypeGraph StereotypeGraph::from_graph(int n, const Graph& graph) {
  require_pair_count(n);
  ValidationReport report = validate_structure(n, graph);
  if (const ClauseResult* failure = report.first_failure()) {
    throw NotAStereotypeGraph(failure->clause, failure->witness);
  }
  std::vector<int> bits;
  bits.reserve(PatternBits::length_for(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bits.push_back(graph.has_edge(VertexId{i, 1}.index(), VertexId{j, 2}.index()) ? 1 : 0);
    }
  }
  return StereotypeGraph(PatternBits(n, bits));
}

PatternBits pattern_of(const StereotypeGraph& g) { return g.pattern(); }

StereotypeGraph induced_prefix(const StereotypeGraph& g, int m) {
  if (m < 1 || m > g.n()) {
    raise(ErrorKind::RangeError, "prefix size " + std::to_string(m) + " outside [1, " + std::to_string(g.n()) + "]");
  }
  std::vector<int> bits;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) bits.push_back(g.pattern().bit(i, j));
  }
  return StereotypeGraph::from_pattern(m, bits);
}

bool ValidationReport::valid() const noexcept { return first_failure() == nullptr; }

const ClauseResult* ValidationReport::first_failure() const noexcept {
  for (const ClauseResult& c : clauses) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

ValidationReport validate_structure(int n, const Graph& g) {
  ValidationReport report;
  auto add = [&report](std::string clause, bool passed, std::string witness) {
    report.clauses.push_back(ClauseResult{std::move(clause), passed, passed ? std::string{} : std::move(witness)});
  };

  const std::size_t order = 2 * static_cast<std::size_t>(std::max(n, 0));
  if (n < 1 || g.vertex_count() != order) {
    add("order", false, "expected " + std::to_string(order) + " vertices, found " + std::to_string(g.vertex_count()));
    return report;
  }
  add("order", true, {});

  std::string missing;
  for (int i = 1; i <= n && missing.empty(); ++i) {
    if (!g.has_edge(VertexId{i, 1}.index(), VertexId{i, 2}.index())) {
      missing = "pair " + std::to_string(i) + ": edge u1." + std::to_string(i) + "-u2." + std::to_string(i) + " missing";
    }
  }
  add("pair-edge", missing.empty(), missing);

  std::string bad_square;
  for (int i = 1; i <= n && bad_square.empty(); ++i) {
    for (int j = i + 1; j <= n && bad_square.empty(); ++j) {
      std::vector<std::size_t> quad{VertexId{i, 1}.index(), VertexId{i, 2}.index(), VertexId{j, 1}.index(),
                                    VertexId{j, 2}.index()};
      Graph sub = g.induced(quad);
      bool parallel = sub.has_edge(0, 2) && sub.has_edge(1, 3) && !sub.has_edge(0, 3) && !sub.has_edge(1, 2);
      bool crossed = sub.has_edge(0, 3) && sub.has_edge(1, 2) && !sub.has_edge(0, 2) && !sub.has_edge(1, 3);
      bool pair_edges = sub.has_edge(0, 1) && sub.has_edge(2, 3);
      if (!(pair_edges && (parallel || crossed))) {
        std::string cross;
        for (auto [a, b] : sub.edges()) {
          if (a / 2 != b / 2) {
            if (!cross.empty()) cross += " ";
            cross += VertexId::from_index(quad[a]).name() + "-" + VertexId::from_index(quad[b]).name();
          }
        }
        bad_square = pair_label(i, j) + " do not induce a 4-cycle; cross edges {" + cross + "}";
        if (auto t = find_triangle(sub)) {
          bad_square += "; triangle " + VertexId::from_index(quad[(*t)[0]]).name() + " " +
                        VertexId::from_index(quad[(*t)[1]]).name() + " " + VertexId::from_index(quad[(*t)[2]]).name();
        }
      }
    }
  }
  add("pair-square", bad_square.empty(), bad_square);

  const std::size_t expected_size = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  add("size", g.edge_count() == expected_size,
      "expected " + std::to_string(expected_size) + " edges, found " + std::to_string(g.edge_count()));

  std::string irregular;
  for (std::size_t v = 0; v < g.vertex_count() && irregular.empty(); ++v) {
    if (g.degree(v) != static_cast<std::size_t>(n)) {
      irregular = VertexId::from_index(v).name() + " has degree " + std::to_string(g.degree(v));
    }
  }
  add("regular", irregular.empty(), irregular);

  bool connected = is_connected(g);
  add("connected", connected, "graph is disconnected");

  auto diam = diameter(g);
  const std::size_t expected_diameter = n == 1 ? 1 : 2;
  add("diameter", diam && *diam == expected_diameter,
      diam ? "diameter " + std::to_string(*diam) + ", expected " + std::to_string(expected_diameter)
           : std::string("diameter undefined (disconnected)"));
  return report;
}

BasicProfile basic_profile(const StereotypeGraph& g) {
  const Graph& graph = g.graph();
  BasicProfile p;
  p.order = graph.vertex_count();
  p.size = graph.edge_count();
  p.regular_degree = graph.degree(0);
  p.girth = girth(graph);
  p.diameter = diameter(graph).value_or(0);
  p.connected = is_connected(graph);
  p.triangle_count = triangle_count(graph);
  return p;
}

std::size_t triangle_pair_triples(const StereotypeGraph& g) {
  std::size_t count = 0;
  const int n = g.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        std::vector<std::size_t> six;
        for (int p : {i, j, k}) {
          six.push_back(VertexId{p, 1}.index());
          six.push_back(VertexId{p, 2}.index());
        }
        if (find_triangle(g.graph().induced(six))) ++count;
      }
    }
  }
  return count;
}

bool triple_has_triangle_by_parity(const PatternBits& p, int i, int j, int k) noexcept {
  return (p.bit(i, j) ^ p.bit(i, k) ^ p.bit(j, k)) == 0;
}

bool triangle_free_by_parity(const PatternBits& p) noexcept {
  for (int i = 1; i <= p.n(); ++i) {
    for (int j = i + 1; j <= p.n(); ++j) {
      for (int k = j + 1; k <= p.n(); ++k) {
        if (triple_has_triangle_by_parity(p, i, j, k)) return false;
      }
    }
  }
  return true;
}

}  // namespace stereograph
