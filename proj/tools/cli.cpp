#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "stereograph/stereograph.hpp"

namespace stereograph::cli {

namespace {

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read(const std::string& path) const {
    if (path == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) raise(ErrorKind::IoError, "cannot open " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

  void write(const std::string& path, const std::string& text) const {
    if (path == "-") {
      out_ << text;
      out_.flush();
      return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) raise(ErrorKind::IoError, "cannot write " + path);
    file << text;
    if (!file.flush()) raise(ErrorKind::IoError, "write failed for " + path);
  }

  StereotypeGraph load(const std::string& path) const { return load_graph(read(path)); }

 private:
  std::istream& in_;
  std::ostream& out_;
};

std::pair<int, int> parse_pair_labels(const std::string& text) {
  const auto comma = text.find(',');
  auto number = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      raise(ErrorKind::ParseError, "--pairs expects i,j, got \"" + text + "\"");
    }
    return value;
  };
  if (comma == std::string::npos) raise(ErrorKind::ParseError, "--pairs expects i,j, got \"" + text + "\"");
  std::string_view view(text);
  return {number(view.substr(0, comma)), number(view.substr(comma + 1))};
}

std::string names(const std::vector<VertexId>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += vs[i].name();
  }
  return out + "}";
}

std::string triangle_names(const std::array<MergedVertex, 3>& t) {
  return t[0].name() + " " + t[1].name() + " " + t[2].name();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stereotype graph toolkit", "stereograph"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "stereograph 0.1.0");

  std::string input = "-";
  std::string output = "-";
  bool json = false;
  bool witness = false;
  bool trace = false;
  bool to_k2 = false;
  bool want_census = false;
  bool force = false;
  std::string pairs;
  std::string type;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::size_t max_vertices = kDefaultChromaticPolynomialBound;

  auto* validate = app.add_subcommand("validate", "Check a graph file and print its basic profile");
  validate->add_option("file", input, "Graph file or -")->required();

  auto* report = app.add_subcommand("report", "Run all stability criteria; exit 2 if they disagree");
  report->add_option("file", input, "Graph file or -")->required();
  report->add_flag("--json", json, "Emit JSON");
  report->add_option("--max-vertices", max_vertices, "Vertex bound for the chromatic polynomial")
      ->check(CLI::Range(std::size_t{1}, std::size_t{24}));

  auto* csi = app.add_subcommand("csi", "Print the chromatic stability index");
  csi->add_option("file", input, "Graph file or -")->required();
  csi->add_flag("--witness", witness, "Also print an optimal colouring as JSON");

  auto* charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of the adjacency matrix");
  charpoly->add_option("file", input, "Graph file or -")->required();
  charpoly->add_flag("--json", json, "Emit JSON");

  auto* chrompoly = app.add_subcommand("chrompoly", "Chromatic polynomial");
  chrompoly->add_option("file", input, "Graph file or -")->required();
  chrompoly->add_flag("--json", json, "Emit JSON");
  chrompoly->add_option("--max-vertices", max_vertices, "Vertex bound for the chromatic polynomial")
      ->check(CLI::Range(std::size_t{1}, std::size_t{24}));

  auto* generate = app.add_subcommand("generate", "Generate a graph");
  generate->add_option("--type", type, "knn, ladder or random")
      ->required()
      ->check(CLI::IsMember({"knn", "ladder", "random"}));
  generate->add_option("--n", n, "Number of pairs")->required()->check(CLI::Range(1, 32));
  generate->add_option("--seed", seed, "Seed for --type random");
  generate->add_option("-o,--output", output, "Output path or -");

  auto* build = app.add_subcommand("build", "Build a graph with a prescribed chromatic stability index");
  build->add_option("--n", n, "Number of pairs")->required()->check(CLI::Range(2, 32));
  build->add_option("--csi", k, "Target chromatic number")->required();
  build->add_option("-o,--output", output, "Output path or -");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate every pattern for n pairs");
  enumerate->add_option("--n", n, "Number of pairs")->required()->check(CLI::Range(1, 32));
  enumerate->add_flag("--census", want_census, "Write the chromatic census as CSV instead");
  enumerate->add_option("-o,--output", output, "Output path or -");
  enumerate->add_flag("--force", force, "Ignore the enumeration bound");

  auto* census_cmd = app.add_subcommand("census", "Chromatic census as CSV");
  census_cmd->add_option("--n", n, "Number of pairs")->required()->check(CLI::Range(1, 32));
  census_cmd->add_option("-o,--output", output, "Output path or -");
  census_cmd->add_flag("--force", force, "Ignore the enumeration bound");

  auto* merge = app.add_subcommand("merge", "Merge pairs");
  merge->add_option("file", input, "Graph file or -")->required();
  auto* pairs_opt = merge->add_option("--pairs", pairs, "Merge the two labels i,j");
  auto* to_k2_opt = merge->add_flag("--to-k2", to_k2, "Merge down to K2 with the default order");
  pairs_opt->excludes(to_k2_opt);
  merge->add_flag("--trace", trace, "Print the merge steps as JSON");

  auto* export_dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
  export_dot->add_option("file", input, "Graph file or -")->required();
  export_dot->add_option("-o,--output", output, "Output path or -");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  const Io io(in, out);
  try {
    if (validate->parsed()) {
      const StereotypeGraph g = io.load(input);
      const BasicProfile p = basic_profile(g);
      out << "valid: n=" << g.n() << ", " << p.order << " vertices, " << p.size << " edges, " << p.regular_degree
          << "-regular, diameter " << p.diameter << ", girth " << (p.girth ? std::to_string(*p.girth) : "none")
          << ", triangles " << p.triangle_count << "\n";
      return kOk;
    }

    if (report->parsed()) {
      const StereotypeGraph g = io.load(input);
      const StabilityReport r = stability_report(g, ReportOptions{max_vertices});
      out << (json ? report_json(r) + "\n" : report_text(r));
      if (!r.agreement) {
        err << "error: stability criteria disagree: " << report_headline(r) << "\n";
        return kInvariantBreach;
      }
      return kOk;
    }

    if (csi->parsed()) {
      const StereotypeGraph g = io.load(input);
      const ChromaticResult r = chromatic_number(g.graph());
      out << r.chromatic_number << "\n";
      if (witness) out << coloring_json(r.witness) << "\n";
      return kOk;
    }

    if (charpoly->parsed() || chrompoly->parsed()) {
      const StereotypeGraph g = io.load(input);
      const IntPolynomial p =
          charpoly->parsed() ? characteristic_polynomial(g) : chromatic_polynomial(g.graph(), max_vertices);
      out << (json ? polynomial_json(p) : polynomial_line(p)) << "\n";
      return kOk;
    }

    if (generate->parsed()) {
      GraphMeta meta{type, std::nullopt, {}};
      StereotypeGraph g = type == "knn" ? gen_complete_bipartite(n) : gen_complete_ladder(n);
      if (type == "random") {
        g = gen_random(n, seed);
        meta.seed = seed;
        meta.prng = std::string(SplitMix64::kName);
      }
      io.write(output, to_json(g, meta) + "\n");
      return kOk;
    }

    if (build->parsed()) {
      const StereotypeGraph g = build_with_csi(n, k);
      io.write(output, to_json(g, GraphMeta{"build-csi-" + std::to_string(k), std::nullopt, {}}) + "\n");
      return kOk;
    }

    if (enumerate->parsed() || census_cmd->parsed()) {
      const int bound = force ? std::numeric_limits<int>::max() : enumeration_bound();
      if (want_census || census_cmd->parsed()) {
        io.write(output, census_csv(census(n, bound).rows));
        return kOk;
      }
      std::string lines;
      enumerate_all(n, [&lines](const StereotypeGraph& g) { lines += to_json(g) + "\n"; }, bound);
      io.write(output, lines);
      return kOk;
    }

    if (merge->parsed()) {
      if (pairs.empty() && !to_k2) {
        err << "error: merge needs --pairs i,j or --to-k2\n";
        return kBadInput;
      }
      const StereotypeGraph g = io.load(input);
      if (to_k2) {
        const StabilityVerdict v = reduce_to_k2(g);
        if (trace) {
          out << merge_trace_json(v.steps) << "\n";
        } else if (v.stable) {
          out << "stable: reduced to K2 with classes " << names(v.final_graph.class_of(1, 1)) << " "
              << names(v.final_graph.class_of(1, 2)) << "\n";
        } else {
          const std::vector<int> labels = v.final_graph.pairs();
          out << "unstable: merging pairs " << labels.at(0) << " and " << labels.at(1)
              << " is blocked by the triangle " << triangle_names(v.blocking->triangle) << "\n";
        }
        return kOk;
      }
      const auto [i, j] = parse_pair_labels(pairs);
      const MergeOutcome outcome = merge_pairs(PairedGraph(g), i, j);
      if (const auto* blocked = std::get_if<MergeBlocked>(&outcome)) {
        if (trace) {
          out << "[]\n";
        } else {
          out << "blocked: pairs " << i << " and " << j << " span the triangle " << triangle_names(blocked->triangle)
              << "\n";
        }
        return kOk;
      }
      const auto& merged = std::get<PairedGraph>(outcome);
      const int label = std::min(i, j);
      MergeStep step{i, j, {merged.class_of(label, 1), merged.class_of(label, 2)}};
      if (trace) {
        out << merge_trace_json({step}) << "\n";
      } else {
        out << "merged pairs " << i << " and " << j << " into pair " << label << ": " << names(step.classes[0]) << " "
            << names(step.classes[1]) << "\n";
      }
      return kOk;
    }

    if (export_dot->parsed()) {
      io.write(output, to_dot(io.load(input)));
      return kOk;
    }
  } catch (const NotAStereotypeGraph& e) {
    err << "error: not a stereotype graph: clause " << e.clause() << ": " << e.witness() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalInvariant ? kInvariantBreach : kBadInput;
  }
  return kBadInput;
}

}  // namespace stereograph::cli
