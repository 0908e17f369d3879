#include "stereograph/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "stereograph/errors.hpp"
#include "stereograph/isomorphism.hpp"
#include "stereograph/merge.hpp"
#include "stereograph/spectral.hpp"

namespace stereograph {

std::size_t Coloring::colors_used() const {
  std::set<int> distinct(colors_.begin(), colors_.end());
  return distinct.size();
}

bool Coloring::is_proper_for(const Graph& g) const {
  if (colors_.size() != g.vertex_count()) return false;
  if (std::any_of(colors_.begin(), colors_.end(), [](int c) { return c < 1; })) return false;
  for (auto [u, v] : g.edges()) {
    if (colors_[u] == colors_[v]) return false;
  }
  return true;
}

namespace {

/// Counts partitions of the vertex set into independent classes, indexed by
/// the number of classes, never opening more than `max_classes` classes.
class PartitionCounter {
 public:
  PartitionCounter(const Graph& g, std::size_t max_classes)
      : g_(g), max_classes_(max_classes), counts_(g.vertex_count() + 1, 0) {}

  std::vector<BigInt> run() {
    std::vector<std::uint64_t> classes;
    visit(0, classes);
    return {counts_.begin(), counts_.end()};
  }

 private:
  void visit(std::size_t v, std::vector<std::uint64_t>& classes) {
    if (v == g_.vertex_count()) {
      ++counts_[classes.size()];
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << v;
    // Indexed: deeper calls push onto `classes` and may reallocate it.
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if ((g_.neighbors(v) & classes[c]) == 0) {
        classes[c] |= bit;
        visit(v + 1, classes);
        classes[c] &= ~bit;
      }
    }
    if (classes.size() < max_classes_) {
      classes.push_back(bit);
      visit(v + 1, classes);
      classes.pop_back();
    }
  }

  const Graph& g_;
  std::size_t max_classes_;
  std::vector<std::uint64_t> counts_;
};

std::size_t lowest(std::uint64_t mask) { return static_cast<std::size_t>(std::countr_zero(mask)); }

class ExactColorer {
 public:
  ExactColorer(const Graph& g, std::size_t k) : g_(g), k_(k), colors_(g.vertex_count(), 0) {}

  std::optional<Coloring> run() {
    if (search(0, 0)) return Coloring(colors_);
    return std::nullopt;
  }

 private:
  std::uint64_t neighbour_colors(std::size_t v) const {
    std::uint64_t used = 0;
    for (std::size_t w : bits_to_vertices(g_.neighbors(v))) {
      if (colors_[w] != 0) used |= std::uint64_t{1} << colors_[w];
    }
    return used;
  }

  bool search(std::size_t colored, int max_color) {
    if (colored == g_.vertex_count()) return true;
    // DSATUR choice: most distinct neighbour colours, then highest degree.
    std::size_t best = g_.vertex_count();
    int best_sat = -1;
    std::size_t best_deg = 0;
    for (std::size_t v = 0; v < g_.vertex_count(); ++v) {
      if (colors_[v] != 0) continue;
      int sat = std::popcount(neighbour_colors(v));
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = g_.degree(v);
      }
    }
    const std::uint64_t used = neighbour_colors(best);
    const int limit = std::min(static_cast<int>(k_), max_color + 1);
    for (int c = 1; c <= limit; ++c) {
      if ((used >> c) & 1U) continue;
      colors_[best] = c;
      if (search(colored + 1, std::max(max_color, c))) return true;
      colors_[best] = 0;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<int> colors_;
};

Coloring greedy_coloring(const Graph& g) {
  std::vector<std::size_t> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colors(g.vertex_count(), 0);
  for (std::size_t v : order) {
    std::uint64_t used = 0;
    for (std::size_t w : bits_to_vertices(g.neighbors(v))) {
      if (colors[w] != 0) used |= std::uint64_t{1} << colors[w];
    }
    int c = 1;
    while ((used >> c) & 1U) ++c;
    colors[v] = c;
  }
  return Coloring(std::move(colors));
}

void grow_clique(const Graph& g, std::uint64_t clique, std::uint64_t candidates, std::uint64_t& best) {
  if (candidates == 0) {
    if (std::popcount(clique) > std::popcount(best)) best = clique;
    return;
  }
  while (candidates != 0) {
    if (std::popcount(clique) + std::popcount(candidates) <= std::popcount(best)) return;
    std::size_t v = lowest(candidates);
    candidates &= candidates - 1;
    grow_clique(g, clique | (std::uint64_t{1} << v), candidates & g.neighbors(v), best);
  }
  if (std::popcount(clique) > std::popcount(best)) best = clique;
}

BigInt binomial_n2_2(int n) {
  BigInt m = BigInt(n) * n;
  return m * (m - 1) / 2;
}

}  // namespace

BigInt count_proper_colorings(const Graph& g, std::size_t x) {
  if (g.vertex_count() == 0) return 1;
  std::vector<BigInt> partitions = PartitionCounter(g, std::min(x, g.vertex_count())).run();
  BigInt total = 0;
  BigInt falling = 1;  // x (x-1) ... (x-j+1)
  for (std::size_t j = 0; j < partitions.size(); ++j) {
    if (j > 0) falling *= BigInt(x) - BigInt(j - 1);
    if (falling == 0) break;
    total += partitions[j] * falling;
  }
  return total;
}

IntPolynomial chromatic_polynomial(const Graph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) {
    raise(ErrorKind::SizeExceeded, "chromatic polynomial limited to " + std::to_string(max_vertices) +
                                       " vertices, graph has " + std::to_string(n));
  }
  if (n > 24) raise(ErrorKind::SizeExceeded, "subset dynamic programme limited to 24 vertices");
  const std::size_t subsets = std::size_t{1} << n;
  const std::size_t width = n + 1;

  std::vector<bool> independent(subsets, true);
  for (std::size_t s = 1; s < subsets; ++s) {
    std::size_t low = lowest(s);
    std::size_t rest = s & (s - 1);
    independent[s] = independent[rest] && (g.neighbors(low) & rest) == 0;
  }

  // ways[s * width + k]: partitions of s into k independent classes.
  std::vector<std::uint64_t> ways(subsets * width, 0);
  ways[0] = 1;
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low_bit = s & (~s + 1);
    const std::size_t rest = s ^ low_bit;
    // Every submask of rest, together with the lowest vertex, is a candidate
    // class containing that vertex.
    for (std::size_t t = rest;; t = (t - 1) & rest) {
      const std::size_t cls = t | low_bit;
      if (independent[cls]) {
        const std::size_t remaining = s ^ cls;
        for (std::size_t k = 0; k < n; ++k) ways[s * width + k + 1] += ways[remaining * width + k];
      }
      if (t == 0) break;
    }
  }
  std::vector<BigInt> by_classes(width);
  for (std::size_t k = 0; k < width; ++k) by_classes[k] = ways[(subsets - 1) * width + k];
  return IntPolynomial::from_falling_factorial_basis(by_classes);
}

std::vector<std::size_t> maximum_clique(const Graph& g) {
  std::uint64_t best = 0;
  const std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  grow_clique(g, 0, all, best);
  return bits_to_vertices(best);
}

ChromaticResult chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return ChromaticResult{0, Coloring{}};
  Coloring greedy = greedy_coloring(g);
  const std::size_t upper = greedy.colors_used();
  const std::size_t lower = std::max<std::size_t>(1, maximum_clique(g).size());
  for (std::size_t k = lower; k < upper; ++k) {
    if (auto coloring = ExactColorer(g, k).run()) {
      if (!coloring->is_proper_for(g)) raise(ErrorKind::InternalInvariant, "exact colouring is not proper");
      return ChromaticResult{coloring->colors_used(), std::move(*coloring)};
    }
  }
  if (!greedy.is_proper_for(g)) raise(ErrorKind::InternalInvariant, "greedy colouring is not proper");
  return ChromaticResult{upper, std::move(greedy)};
}

TwoColoringResult two_coloring(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<int> side(n, 0);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (side[root] != 0) continue;
    side[root] = 1;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t w : bits_to_vertices(g.neighbors(u))) {
        if (side[w] == 0) {
          side[w] = 3 - side[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          // Climb both tree paths to their meeting point.
          std::vector<std::size_t> left{u};
          std::vector<std::size_t> right{w};
          std::size_t a = u;
          std::size_t b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          return TwoColoringResult{std::nullopt, std::move(left)};
        }
      }
    }
  }
  return TwoColoringResult{Coloring(std::move(side)), {}};
}

bool ChromaticCoefficientReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

ChromaticCoefficientReport chromatic_coefficient_identities(const StereotypeGraph& g, std::size_t max_vertices) {
  if (g.n() < 2) raise(ErrorKind::DomainError, "chromatic coefficient identities need at least two pairs");
  IntPolynomial p = chromatic_polynomial(g.graph(), max_vertices);
  ChromaticCoefficientReport r;
  r.b0 = p.from_top(0);
  r.b1 = p.from_top(1);
  r.b2 = p.from_top(2);
  r.c3 = characteristic_polynomial(g).from_top(3);
  const BigInt n = g.n();
  const BigInt pairs_of_edges = binomial_n2_2(g.n());
  r.checks = {
      {"b0 = 1", r.b0 == 1},
      {"b1 = -n^2", r.b1 == -n * n},
      {"b2 <= C(n^2, 2)", r.b2 <= pairs_of_edges},
      {"b2 = C(n^2, 2) + c3/2", r.b2 == pairs_of_edges + r.c3 / 2},
  };
  return r;
}

bool chromatically_bipartite_criterion(const StereotypeGraph& g, std::size_t max_vertices) {
  ChromaticCoefficientReport r = chromatic_coefficient_identities(g, max_vertices);
  if (!r.all_passed()) {
    raise(ErrorKind::InternalInvariant, "chromatic polynomial coefficients violate the b0/b1/b2 identities");
  }
  return r.b2 == binomial_n2_2(g.n());
}

Coloring constructive_n_coloring(const StereotypeGraph& g) {
  const int n = g.n();
  if (n < 2) raise(ErrorKind::DomainError, "constructive colouring needs at least two pairs");
  std::vector<int> colors(g.graph().vertex_count(), 0);
  auto color = [&colors](VertexId v) -> int& { return colors[v.index()]; };

  color({1, 2}) = 1;
  for (int i = 2; i <= n; ++i) {
    // The vertex of pair i-1 that already carries colour i-1.
    VertexId anchor = color({i - 1, 1}) == i - 1 ? VertexId{i - 1, 1} : VertexId{i - 1, 2};
    color({i, 1}) = g.has_edge({i, 1}, anchor) ? i : i - 1;
    color({i, 2}) = (2 * i - 1) - color({i, 1});
  }
  std::uint64_t used = 0;
  for (std::size_t w : bits_to_vertices(g.graph().neighbors(VertexId{1, 1}.index()))) {
    used |= std::uint64_t{1} << colors[w];
  }
  int free_color = 1;
  while (free_color <= n && ((used >> free_color) & 1U)) ++free_color;
  if (free_color > n) raise(ErrorKind::InternalInvariant, "no free colour left for u1.1");
  color({1, 1}) = free_color;

  Coloring result(std::move(colors));
  if (!result.is_proper_for(g.graph())) raise(ErrorKind::InternalInvariant, "constructive colouring is not proper");
  return result;
}

std::string_view to_string(StabilityOrder order) noexcept {
  switch (order) {
    case StabilityOrder::MoreStable: return "MoreStable";
    case StabilityOrder::SameStable: return "SameStable";
    case StabilityOrder::MoreUnstable: return "MoreUnstable";
  }
  return "?";
}

StabilityOrder compare_stability(const StereotypeGraph& a, const StereotypeGraph& b) {
  const std::size_t ca = chromatic_number(a.graph()).chromatic_number;
  const std::size_t cb = chromatic_number(b.graph()).chromatic_number;
  if (ca < cb) return StabilityOrder::MoreStable;
  if (ca > cb) return StabilityOrder::MoreUnstable;
  return StabilityOrder::SameStable;
}

std::string_view to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::Merge: return "merge";
    case Criterion::Coloring: return "coloring";
    case Criterion::Bipartite: return "bipartite";
    case Criterion::Girth: return "girth";
    case Criterion::Minor: return "minor";
    case Criterion::Matrix: return "matrix";
    case Criterion::Characteristic: return "characteristic";
    case Criterion::ChromaticallyBipartite: return "chromatically-bipartite";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Stable: return "stable";
    case Verdict::Unstable: return "unstable";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::vector<Criterion> StabilityReport::disagreeing() const {
  std::size_t stable_votes = 0;
  std::size_t unstable_votes = 0;
  for (const auto& c : criteria) {
    if (c.verdict == Verdict::Stable) ++stable_votes;
    if (c.verdict == Verdict::Unstable) ++unstable_votes;
  }
  // The minority side (ties: the stable side) is reported as disagreeing.
  const Verdict minority = stable_votes > unstable_votes ? Verdict::Unstable : Verdict::Stable;
  std::vector<Criterion> out;
  if (stable_votes == 0 || unstable_votes == 0) return out;
  for (const auto& c : criteria) {
    if (c.verdict == minority) out.push_back(c.criterion);
  }
  return out;
}

StabilityReport stability_report(const StereotypeGraph& g, const ReportOptions& options) {
  StabilityReport report;
  report.n = g.n();
  const Graph& graph = g.graph();
  report.triangle_count = triangle_count(graph);
  report.girth = girth(graph);

  auto set = [&report](Criterion c, bool stable) {
    report.criteria[static_cast<std::size_t>(c)] =
        CriterionResult{c, stable ? Verdict::Stable : Verdict::Unstable, {}};
  };
  auto skip = [&report](Criterion c, std::string why) {
    report.criteria[static_cast<std::size_t>(c)] = CriterionResult{c, Verdict::Skipped, std::move(why)};
  };

  set(Criterion::Merge, reduce_to_k2(g).stable);
  set(Criterion::Coloring, two_coloring(graph).coloring.has_value());
  set(Criterion::Bipartite, recognize_complete_bipartite(g));
  set(Criterion::Minor, minor_criterion(g));
  if (g.n() >= 2) {
    set(Criterion::Girth, report.girth == std::optional<std::size_t>{4});
    set(Criterion::Matrix, matrix_criterion(g));
    set(Criterion::Characteristic, characteristic_criterion(g));
    if (graph.vertex_count() <= options.chromatic_polynomial_bound) {
      set(Criterion::ChromaticallyBipartite, chromatically_bipartite_criterion(g, options.chromatic_polynomial_bound));
    } else {
      skip(Criterion::ChromaticallyBipartite, "chromatic polynomial size bound exceeded");
    }
  } else {
    const std::string why = "needs at least two pairs";
    skip(Criterion::Girth, why);
    skip(Criterion::Matrix, why);
    skip(Criterion::Characteristic, why);
    skip(Criterion::ChromaticallyBipartite, why);
  }

  report.csi = chromatic_number(graph).chromatic_number;

  std::optional<bool> common;
  bool agree = true;
  for (const auto& c : report.criteria) {
    if (c.verdict == Verdict::Skipped) continue;
    const bool stable = c.verdict == Verdict::Stable;
    if (!common) {
      common = stable;
    } else if (*common != stable) {
      agree = false;
    }
  }
  report.stable = common.value_or(false);
  report.agreement = agree && common.has_value() && ((report.csi == 2) == report.stable);
  return report;
}

}  // namespace stereograph
