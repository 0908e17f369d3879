#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stereograph/graph.hpp"
#include "stereograph/polynomial.hpp"
#include "stereograph/stereotype_graph.hpp"

namespace stereograph {

/// Vertex colouring with 1-based colour indices, one entry per vertex.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {}

  const std::vector<int>& colors() const noexcept { return colors_; }
  int color_of(std::size_t v) const { return colors_.at(v); }
  std::size_t size() const noexcept { return colors_.size(); }
  std::size_t colors_used() const;

  /// Every vertex coloured with an index >= 1 and no edge monochromatic.
  bool is_proper_for(const Graph& g) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
};

/// Number of proper colourings from a palette of x colours (not all of
/// which need be used). Exact; counts colour-class partitions by
/// backtracking and weights them by falling factorials of x.
BigInt count_proper_colorings(const Graph& g, std::size_t x);

inline constexpr std::size_t kDefaultChromaticPolynomialBound = 14;

/// Exact chromatic polynomial via a subset dynamic programme over
/// independent sets. Throws SizeExceeded above `max_vertices`.
IntPolynomial chromatic_polynomial(const Graph& g, std::size_t max_vertices = kDefaultChromaticPolynomialBound);

struct ChromaticResult {
  std::size_t chromatic_number = 0;
  Coloring witness;
};

/// Exact chromatic number with a verified witness: greedy upper bound,
/// maximum-clique lower bound, then backtracking for each k in between.
ChromaticResult chromatic_number(const Graph& g);

/// Largest clique (as ascending vertex list); exact.
std::vector<std::size_t> maximum_clique(const Graph& g);

struct TwoColoringResult {
  std::optional<Coloring> coloring;
  /// Odd closed walk without repeated vertices, present when not 2-colourable.
  std::vector<std::size_t> odd_cycle;
};

/// Breadth-first bipartition.
TwoColoringResult two_coloring(const Graph& g);

struct ChromaticCoefficientReport {
  BigInt b0, b1, b2;
  BigInt c3;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_passed() const noexcept;
};

/// b0 = 1, b1 = -n^2, b2 <= C(n^2, 2) and b2 = C(n^2, 2) + c3/2, where bi is
/// the coefficient of x^(2n-i) of the chromatic polynomial and c3 comes from
/// the characteristic polynomial. Requires n >= 2.
ChromaticCoefficientReport chromatic_coefficient_identities(
    const StereotypeGraph& g, std::size_t max_vertices = kDefaultChromaticPolynomialBound);

/// b2 = C(n^2, 2). Throws InternalInvariant if the companion coefficient
/// identities fail, SizeExceeded above the polynomial bound.
bool chromatically_bipartite_criterion(const StereotypeGraph& g,
                                       std::size_t max_vertices = kDefaultChromaticPolynomialBound);

/// The sequential pair-by-pair colouring: pair i (i >= 2) takes colours
/// {i-1, i}, u2^1 takes colour 1 and u1^1 gets the smallest colour free
/// among its neighbours. Uses at most n colours. Requires n >= 2.
Coloring constructive_n_coloring(const StereotypeGraph& g);

enum class StabilityOrder { MoreStable, SameStable, MoreUnstable };

std::string_view to_string(StabilityOrder order) noexcept;

/// Lower chromatic number is more stable; graphs of different n compare.
StabilityOrder compare_stability(const StereotypeGraph& a, const StereotypeGraph& b);

enum class Criterion {
  Merge,
  Coloring,
  Bipartite,
  Girth,
  Minor,
  Matrix,
  Characteristic,
  ChromaticallyBipartite,
};

inline constexpr std::array<Criterion, 8> kAllCriteria{
    Criterion::Merge,  Criterion::Coloring, Criterion::Bipartite,      Criterion::Girth,
    Criterion::Minor,  Criterion::Matrix,   Criterion::Characteristic, Criterion::ChromaticallyBipartite,
};

std::string_view to_string(Criterion c) noexcept;

enum class Verdict { Stable, Unstable, Skipped };

std::string_view to_string(Verdict v) noexcept;

struct CriterionResult {
  Criterion criterion;
  Verdict verdict = Verdict::Skipped;
  std::string note;  // reason when skipped
};

struct StabilityReport {
  int n = 0;
  std::array<CriterionResult, 8> criteria{};
  std::size_t csi = 0;
  std::size_t triangle_count = 0;
  std::optional<std::size_t> girth;
  bool agreement = false;
  /// Common verdict of the executed criteria (meaningful when agreement).
  bool stable = false;

  const CriterionResult& operator[](Criterion c) const { return criteria[static_cast<std::size_t>(c)]; }
  std::vector<Criterion> disagreeing() const;
};

struct ReportOptions {
  std::size_t chromatic_polynomial_bound = kDefaultChromaticPolynomialBound;
};

/// Runs all eight stability predicates and the chromatic stability index.
/// Disagreement is reported (agreement = false), never resolved.
StabilityReport stability_report(const StereotypeGraph& g, const ReportOptions& options = {});

}  // namespace stereograph
