#include <doctest.h>

#include "stereograph/stereograph.hpp"

using namespace stereograph;

namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    load_graph(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error for " << text);
  return ErrorKind::InternalInvariant;
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("serialization") {
  TEST_CASE("bit form round trip") {
    const StereotypeGraph g = gen_random(5, 3);
    CHECK(load_graph(to_json(g)) == g);
    CHECK(to_json(StereotypeGraph::from_pattern(2, std::vector<int>{0})) ==
          R"({"format":"stereograph-v1","n":2,"pattern":[0]})");
    CHECK(load_graph(R"({"format":"stereograph-v1","n":2,"pattern":[0]})").pattern().as_ints() ==
          std::vector<int>{0});
    CHECK(load_graph(R"({"format":"stereograph-v1","n":1,"pattern":[]})").graph().edge_count() == 1);
  }

  TEST_CASE("meta block") {
    const std::string text = to_json(gen_random(3, 9), GraphMeta{"random", 9, "splitmix64-ctr-v1"});
    CHECK(text.find(R"("meta":{"generator":"random","seed":9,"prng":"splitmix64-ctr-v1"})") != std::string::npos);
    CHECK(load_graph(text) == gen_random(3, 9));
    CHECK(to_json(gen_complete_ladder(2), GraphMeta{"ladder", std::nullopt, {}}).find(R"("meta":{"generator":"ladder"})") !=
          std::string::npos);
  }

  TEST_CASE("edge form round trip") {
    const StereotypeGraph kl3 = gen_complete_ladder(3);
    const std::string text = to_edge_json(kl3);
    CHECK(text.find(R"("format":"stereograph-edges-v1")") != std::string::npos);
    CHECK(text.find(R"(["u1.1","u2.1"])") != std::string::npos);
    CHECK(load_graph(text).pattern().as_ints() == std::vector<int>{0, 0, 0});
    const std::string k22 =
        R"({"format":"stereograph-edges-v1","n":2,"edges":[["u1.1","u2.1"],["u1.2","u2.2"],["u1.1","u2.2"],["u2.1","u1.2"]]})";
    CHECK(load_graph(k22).pattern().as_ints() == std::vector<int>{1});
  }

  TEST_CASE("parse errors") {
    CHECK(kind_of(R"({"format":"stereograph-v1","n":3,"pattern":[0,1]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"stereograph-v1","n":2,"pattern":[2]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"stereograph-v1","pattern":[0]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"stereograph-v1","n":0,"pattern":[]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"other","n":2,"pattern":[0]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"n":2,"pattern":[0]})") == ErrorKind::ParseError);
    CHECK(kind_of("[1,2]") == ErrorKind::ParseError);
    CHECK(kind_of("{not json") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"stereograph-edges-v1","n":2,"edges":[["u1.1","u2.3"]]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"stereograph-edges-v1","n":2,"edges":[["u1.1","u1.1"]]})") == ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"stereograph-edges-v1","n":2,"edges":[["u1.1","u2.1"],["u2.1","u1.1"]]})") ==
          ErrorKind::ParseError);
    CHECK(kind_of(R"({"format":"stereograph-edges-v1","n":2,"edges":[["u1.1"]]})") == ErrorKind::ParseError);
  }

  TEST_CASE("structurally invalid edge lists are rejected with the clause") {
    const std::string fig3 =
        R"({"format":"stereograph-edges-v1","n":2,"edges":[["u1.1","u2.1"],["u1.2","u2.2"],["u1.1","u1.2"],["u1.1","u2.2"]]})";
    CHECK(kind_of(fig3) == ErrorKind::NotAStereotypeGraph);
    try {
      load_graph(R"({"format":"stereograph-edges-v1","n":2,"edges":[["u1.1","u2.1"],["u1.1","u1.2"],["u2.1","u2.2"]]})");
      FAIL("expected rejection");
    } catch (const NotAStereotypeGraph& e) {
      CHECK(e.clause() == "pair-edge");
    }
    const ParsedGraph raw = parse_graph_document(fig3);
    CHECK(raw.n == 2);
    CHECK(raw.graph.edge_count() == 4);
  }

  TEST_CASE("dot export") {
    const std::string k22 = to_dot(StereotypeGraph::from_pattern(2, std::vector<int>{0}));
    CHECK(count(k22, " -- ") == 4);
    CHECK(count(k22, "kind=pair") == 2);
    CHECK(count(k22, "kind=cross") == 2);
    CHECK(count(k22, "\";\n") == 4);
    const std::string kl4 = to_dot(gen_complete_ladder(4));
    CHECK(count(kl4, " -- ") == 16);
    CHECK(count(kl4, "kind=pair") == 4);
    CHECK(count(kl4, "kind=cross") == 12);
    CHECK(count(kl4, "\";\n") == 8);
    CHECK(to_dot(gen_complete_ladder(4)) == kl4);
    CHECK(kl4.rfind("graph stereograph {", 0) == 0);
  }

  TEST_CASE("merge trace") {
    const StabilityVerdict v = reduce_to_k2(gen_complete_bipartite(3));
    CHECK(merge_trace_json(v.steps) ==
          R"([{"merged":[1,2],"classes":[["u1.1","u1.2"],["u2.1","u2.2"]]},)"
          R"({"merged":[1,3],"classes":[["u1.1","u1.2","u1.3"],["u2.1","u2.2","u2.3"]]}])");
    CHECK(merge_trace_json({}) == "[]");
  }

  TEST_CASE("census csv") {
    const std::vector<CensusRow> rows{{4, 3, 48, 1}, {4, 2, 8, 1}, {4, 4, 8, 1}};
    CHECK(census_csv(rows) == "n,k,labeled_count,iso_class_count\n4,2,8,1\n4,3,48,1\n4,4,8,1\n");
  }

  TEST_CASE("polynomial output") {
    const IntPolynomial p = characteristic_polynomial(gen_complete_ladder(3));
    CHECK(polynomial_line(p) == "1 0 -9 -4 12 0 0");
    CHECK(polynomial_json(p) == R"({"degree":6,"coefficients":[1,0,-9,-4,12,0,0]})");
  }

  TEST_CASE("colouring json keeps vertex order") {
    CHECK(coloring_json(Coloring({1, 2, 2, 1})) == R"({"u1.1":1,"u2.1":2,"u1.2":2,"u2.2":1})");
  }

  TEST_CASE("report rendering") {
    const StabilityReport k33 = stability_report(gen_complete_bipartite(3));
    CHECK(report_headline(k33) == "stable (all 8 criteria), CSI=2");
    CHECK(report_text(k33).find("chromatically-bipartite: stable") != std::string::npos);
    CHECK(report_json(k33).find(R"("agreement":true)") != std::string::npos);
    const StabilityReport kl3 = stability_report(gen_complete_ladder(3));
    CHECK(report_headline(kl3) == "unstable (all 8 criteria), CSI=3");
    CHECK(report_json(kl3).find(R"("girth":3)") != std::string::npos);

    StabilityReport broken = k33;
    broken.criteria[static_cast<std::size_t>(Criterion::Girth)].verdict = Verdict::Unstable;
    broken.agreement = false;
    CHECK(report_headline(broken) == "disagreement (girth), CSI=2");
  }
}
