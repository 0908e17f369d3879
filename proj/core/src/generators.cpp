#include "stereograph/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <string>

#include "stereograph/errors.hpp"
#include "stereograph/isomorphism.hpp"

namespace stereograph {

std::uint64_t SplitMix64::at(std::uint64_t counter) const noexcept {
  std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % bound;
}

StereotypeGraph gen_complete_bipartite(int n) {
  std::vector<int> bits(PatternBits::length_for(n), 1);
  return StereotypeGraph::from_pattern(n, bits);
}

StereotypeGraph gen_complete_ladder(int n) {
  std::vector<int> bits(PatternBits::length_for(n), 0);
  return StereotypeGraph::from_pattern(n, bits);
}

StereotypeGraph gen_random(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> bits(PatternBits::length_for(n));
  for (std::size_t k = 0; k < bits.size(); ++k) bits[k] = static_cast<int>(rng.at(k) >> 63);
  return StereotypeGraph::from_pattern(n, bits);
}

int enumeration_bound() {
  if (const char* env = std::getenv("STEREOGRAPH_MAX_N")) {
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultEnumerationBound;
}

void enumerate_all(int n, const std::function<void(const StereotypeGraph&)>& visit, int max_n) {
  if (n < 1) raise(ErrorKind::DomainError, "enumeration needs n >= 1");
  if (n > max_n) {
    raise(ErrorKind::TooLarge, "enumeration of n=" + std::to_string(n) + " exceeds the bound " +
                                   std::to_string(max_n) + " (set STEREOGRAPH_MAX_N or pass --force)");
  }
  const std::size_t m = PatternBits::length_for(n);
  if (m >= 63) raise(ErrorKind::TooLarge, "pattern space too large to enumerate");
  std::vector<int> bits(m);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
    for (std::size_t k = 0; k < m; ++k) bits[k] = static_cast<int>((code >> (m - 1 - k)) & 1U);
    visit(StereotypeGraph::from_pattern(n, bits));
  }
}

std::vector<StereotypeGraph> enumerate_all(int n, int max_n) {
  std::vector<StereotypeGraph> out;
  enumerate_all(n, [&out](const StereotypeGraph& g) { out.push_back(g); }, max_n);
  return out;
}

Census census(int n, int max_n) {
  struct Bucket {
    std::size_t labeled = 0;
    std::vector<std::pair<std::uint64_t, Graph>> representatives;
    bool all_isomorphic_to_reference = true;
  };
  std::map<std::size_t, Bucket> buckets;
  const Graph bipartite = gen_complete_bipartite(n).graph();
  const Graph ladder = gen_complete_ladder(n).graph();

  enumerate_all(
      n,
      [&](const StereotypeGraph& g) {
        const std::size_t k = chromatic_number(g.graph()).chromatic_number;
        Bucket& bucket = buckets[k];
        ++bucket.labeled;
        const std::uint64_t print = invariant_fingerprint(g.graph());
        bool known = false;
        for (const auto& [rep_print, rep] : bucket.representatives) {
          if (rep_print == print && graph_isomorphic(g.graph(), rep)) {
            known = true;
            break;
          }
        }
        if (!known) {
          bucket.representatives.emplace_back(print, g.graph());
          const bool is_extreme = k == 2 || (n >= 2 && k == static_cast<std::size_t>(n));
          if (is_extreme) {
            const Graph& reference = k == 2 ? bipartite : ladder;
            if (!graph_isomorphic(g.graph(), reference)) bucket.all_isomorphic_to_reference = false;
          }
        }
      },
      max_n);

  Census out;
  out.extremes_unique = true;
  for (const auto& [k, bucket] : buckets) {
    out.rows.push_back(CensusRow{n, k, bucket.labeled, bucket.representatives.size()});
    if (!bucket.all_isomorphic_to_reference) out.extremes_unique = false;
  }
  out.every_index_attained = true;
  for (int k = 2; k <= n; ++k) {
    if (!buckets.contains(static_cast<std::size_t>(k))) out.every_index_attained = false;
  }
  return out;
}

namespace {

std::size_t validate_optimal(const StereotypeGraph& g, const Coloring& coloring) {
  if (!coloring.is_proper_for(g.graph())) raise(ErrorKind::InvalidColoring, "colouring is not proper");
  const std::size_t chi = chromatic_number(g.graph()).chromatic_number;
  if (coloring.colors_used() != chi) {
    raise(ErrorKind::InvalidColoring, "colouring uses " + std::to_string(coloring.colors_used()) +
                                          " colours but the chromatic number is " + std::to_string(chi));
  }
  for (int c : coloring.colors()) {
    if (c > static_cast<int>(chi)) {
      raise(ErrorKind::InvalidColoring, "colour indices must be 1.." + std::to_string(chi));
    }
  }
  return chi;
}

/// g plus pair n+1; new_bits[i-1] is the bit between pair i and the new pair.
StereotypeGraph append_pair(const StereotypeGraph& g, const std::vector<int>& new_bits) {
  const int n = g.n();
  std::vector<int> bits;
  bits.reserve(PatternBits::length_for(n + 1));
  for (int i = 1; i <= n + 1; ++i) {
    for (int j = i + 1; j <= n + 1; ++j) {
      bits.push_back(j == n + 1 ? new_bits[static_cast<std::size_t>(i - 1)] : g.pattern().bit(i, j));
    }
  }
  return StereotypeGraph::from_pattern(n + 1, bits);
}

/// Bit that joins u_side^i to u1^m (and so u_(3-side)^i to u2^m).
int bit_joining_to_first(int side) { return side - 1; }

void require_proper(const StereotypeGraph& g, std::vector<int> colors, const char* what) {
  if (!Coloring(std::move(colors)).is_proper_for(g.graph())) {
    raise(ErrorKind::InternalInvariant, std::string(what) + " produced an improper colouring");
  }
}

std::optional<std::vector<VertexId>> clique_across_pairs(const Graph& g, std::size_t size) {
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self, std::size_t start, std::uint64_t candidates) -> bool {
    if (chosen.size() == size) return true;
    for (std::size_t v = start; v < g.vertex_count(); ++v) {
      if (((candidates >> v) & 1U) == 0) continue;
      // Drop v's partner: a clique may use each pair at most once.
      const std::size_t partner = v ^ 1U;
      chosen.push_back(v);
      if (self(self, v + 1, candidates & g.neighbors(v) & ~(std::uint64_t{1} << partner))) return true;
      chosen.pop_back();
    }
    return false;
  };
  const std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  if (!search(search, 0, all)) return std::nullopt;
  std::vector<VertexId> out;
  for (std::size_t v : chosen) out.push_back(VertexId::from_index(v));
  return out;
}

}  // namespace

StereotypeGraph expand_preserving(const StereotypeGraph& g, const Coloring& coloring) {
  validate_optimal(g, coloring);
  const int n = g.n();
  std::vector<int> new_bits(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const int c1 = coloring.color_of(VertexId{i, 1}.index());
    const int c2 = coloring.color_of(VertexId{i, 2}.index());
    int bit = 0;
    if (c1 == 1 || c2 == 1) {
      // The colour-1 vertex faces u2^m, its partner faces u1^m.
      const int p = c1 == 1 ? 1 : 2;
      bit = bit_joining_to_first(3 - p);
    } else if (c1 == 2 || c2 == 2) {
      const int q = c1 == 2 ? 1 : 2;
      bit = bit_joining_to_first(q);
    }
    new_bits[static_cast<std::size_t>(i - 1)] = bit;
  }
  StereotypeGraph out = append_pair(g, new_bits);

  std::vector<int> colors = coloring.colors();
  colors.push_back(1);
  colors.push_back(2);
  require_proper(out, std::move(colors), "preserving expansion");
  return out;
}

StereotypeGraph expand_incrementing(const StereotypeGraph& g, const Coloring& coloring) {
  const std::size_t chi = validate_optimal(g, coloring);
  const int n = g.n();
  const int fresh = static_cast<int>(chi) + 1;
  auto clique = clique_across_pairs(g.graph(), chi);
  if (!clique) {
    raise(ErrorKind::MissingClique, "no " + std::to_string(chi) + "-clique with vertices in distinct pairs");
  }

  std::vector<int> colors = coloring.colors();
  std::vector<int> new_bits(static_cast<std::size_t>(n), -1);
  std::vector<int> mirror_colors;
  for (const VertexId& v : *clique) {
    new_bits[static_cast<std::size_t>(v.pair - 1)] = bit_joining_to_first(v.side);
    mirror_colors.push_back(colors[v.partner().index()]);
  }
  std::sort(mirror_colors.begin(), mirror_colors.end());
  mirror_colors.erase(std::unique(mirror_colors.begin(), mirror_colors.end()), mirror_colors.end());

  int second_color = 0;
  if (mirror_colors.size() < chi) {
    second_color = 1;
    while (std::binary_search(mirror_colors.begin(), mirror_colors.end(), second_color)) ++second_color;
  } else {
    // The mirrors use every colour: hand the first mirror's colour to u2^m
    // and move that mirror onto the fresh colour (it is not adjacent to u1^m).
    const std::size_t first_mirror = clique->front().partner().index();
    second_color = colors[first_mirror];
    colors[first_mirror] = fresh;
  }

  for (int k = 1; k <= n; ++k) {
    if (new_bits[static_cast<std::size_t>(k - 1)] != -1) continue;
    const int c1 = colors[VertexId{k, 1}.index()];
    const int c2 = colors[VertexId{k, 2}.index()];
    // u2^m must avoid its own colour; with no conflict it joins u2^k.
    int side_to_first = 1;
    if (c1 == second_color) side_to_first = 1;
    if (c2 == second_color) side_to_first = 2;
    new_bits[static_cast<std::size_t>(k - 1)] = bit_joining_to_first(side_to_first);
  }
  StereotypeGraph out = append_pair(g, new_bits);

  colors.push_back(fresh);
  colors.push_back(second_color);
  require_proper(out, std::move(colors), "incrementing expansion");
  return out;
}

StereotypeGraph build_with_csi(int n, int k) {
  if (n < 2 || k < 2 || k > n) {
    raise(ErrorKind::RangeError, "need 2 <= k <= n, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  StereotypeGraph g = gen_complete_bipartite(2);
  for (int step = 0; step < n - k; ++step) g = expand_preserving(g, chromatic_number(g.graph()).witness);
  for (int step = 0; step < k - 2; ++step) g = expand_incrementing(g, chromatic_number(g.graph()).witness);

  const std::size_t chi = chromatic_number(g.graph()).chromatic_number;
  if (chi != static_cast<std::size_t>(k) || !validate_structure(n, g.graph()).valid()) {
    raise(ErrorKind::InternalInvariant, "constructed graph has chromatic number " + std::to_string(chi) +
                                            ", expected " + std::to_string(k));
  }
  return g;
}

Graph delete_edges(const StereotypeGraph& g, std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph out = g.graph();
  for (const auto& [a, b] : edges) {
    if (a.pair < 1 || a.pair > g.n() || b.pair < 1 || b.pair > g.n() || !out.has_edge(a.index(), b.index())) {
      raise(ErrorKind::EdgeAbsent, "edge " + a.name() + "-" + b.name() + " is not in the graph");
    }
    out.remove_edge(a.index(), b.index());
  }
  return out;
}

}  // namespace stereograph
