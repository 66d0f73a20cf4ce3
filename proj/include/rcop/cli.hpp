#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rcop/rcop.hpp"

namespace rcop::cli {

enum ExitCode : int {
  kPass = 0,
  kSemanticFail = 1,
  kParseError = 2,
  kInvalidGraph = 3,
  kCapExceeded = 4,
};

inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoop:
    case ErrorCode::kDuplicateEdge:
    case ErrorCode::kVertexOutOfRange:
    case ErrorCode::kOrderTooLarge:
    case ErrorCode::kOrderTooSmall:
    case ErrorCode::kDisconnected:
      return kInvalidGraph;
    case ErrorCode::kCapExceeded:
    case ErrorCode::kCostGuard:
      return kCapExceeded;
    case ErrorCode::kParse:
    case ErrorCode::kColoringMismatch:
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kNotOnOuterFace:
      return kParseError;
  }
  return kParseError;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParse, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline const std::map<std::string, GraphFormat>& format_names() {
  static const std::map<std::string, GraphFormat> names{{"edgelist", GraphFormat::kEdgeList},
                                                        {"graph6", GraphFormat::kGraph6}};
  return names;
}

inline const std::map<std::string, GraphClass>& class_names() {
  static const std::map<std::string, GraphClass> names{
      {"all", GraphClass::kAll},
      {"outerplanar", GraphClass::kConnectedOuterplanar},
      {"bridgeless-outerplanar", GraphClass::kBridgelessOuterplanar},
      {"mop", GraphClass::kMop}};
  return names;
}

inline int cmd_rc(const std::string& path, GraphFormat format, std::ostream& out) {
  const Graph g = parse_graph(read_file(path), format);
  const RcResult result = rc_exact(g);
  out << "rc = " << result.rc << "\n" << render_coloring(g, result.witness);
  return kPass;
}

inline int cmd_check_coloring(const std::string& graph_path, const std::string& coloring_path,
                              GraphFormat format, std::ostream& out) {
  const Graph g = parse_graph(read_file(graph_path), format);
  const EdgeColoring c = parse_coloring(read_file(coloring_path), g);
  const ColoringCheck check = check_coloring(g, c);
  if (check.rainbow_connected) {
    out << "pass\n";
    return kPass;
  }
  out << "fail\n";
  for (const auto& [u, v] : check.failing_pairs) out << u << " " << v << "\n";
  return kSemanticFail;
}

inline int cmd_verify(const std::string& theorem_text, int max_n, int jobs,
                      const std::string& report_path, std::ostream& out) {
  const auto theorem = parse_theorem(theorem_text);
  if (!theorem) throw Error(ErrorCode::kParse, "unknown theorem '" + theorem_text + "'");
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport report = verify(*theorem, max_n, jobs);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string text = render_report(report);
  if (!report_path.empty()) {
    std::ofstream file(report_path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kParse, "cannot write " + report_path);
    file << text;
  }
  out << text;
  if (report.sharpness) {
    out << "sharpness witness (edge list):\n"
        << render_edge_list(report.records[*report.sharpness].graph);
  }
  char timing[64];
  std::snprintf(timing, sizeof timing, "time: %.3f s\n", seconds);
  out << timing;
  return report.pass() ? kPass : kSemanticFail;
}

inline int cmd_enumerate(GraphClass graph_class, int n, std::optional<int> diameter,
                         GraphFormat format, std::ostream& out) {
  if (graph_class == GraphClass::kAll && n > kMaxOracleOrder) {
    throw Error(ErrorCode::kCapExceeded, "class 'all' is limited to n <= " + std::to_string(kMaxOracleOrder));
  }
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kCapExceeded, "n <= " + std::to_string(kMaxEnumerationOrder) + " required");
  }
  const ClassList classes = enumerate({n, graph_class, diameter});
  bool first = true;
  for (const auto& member : classes) {
    if (format == GraphFormat::kEdgeList && !first) out << "\n";
    out << render_graph(member.graph, format);
    first = false;
  }
  return kPass;
}

// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rainbow connection toolkit for small outerplanar graphs", "rcop"};
  app.require_subcommand(1);

  std::string format_text = "edgelist";
  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    format_text = fallback;
    return sub->add_option("--format", format_text, "Graph format: edgelist or graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
  };

  std::string graph_path;
  std::string coloring_path;
  auto* rc = app.add_subcommand("rc", "Compute rc(G) and a witness coloring");
  rc->add_option("graph", graph_path, "Graph file")->required();
  add_format(rc, "edgelist");

  auto* check = app.add_subcommand("check-coloring", "Decide whether a coloring is rainbow connected");
  check->add_option("graph", graph_path, "Graph file")->required();
  check->add_option("coloring", coloring_path, "Coloring file (lines \"u v c\")")->required();
  check->add_option("--format", format_text, "Graph format: edgelist or graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string theorem_text;
  int max_n = 8;
  int jobs = 1;
  std::string report_path;
  auto* ver = app.add_subcommand("verify", "Check a theorem over all graphs up to an order");
  ver->add_option("theorem", theorem_text, "diam2, diam3 or formulas")
      ->required()
      ->check(CLI::IsMember({"diam2", "diam3", "formulas"}));
  ver->add_option("--max-n", max_n, "Largest order to check");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--report", report_path, "Report file (default <theorem>-report.txt)");

  std::string class_text = "bridgeless-outerplanar";
  int order = 3;
  std::optional<int> diameter;
  auto* en = app.add_subcommand("enumerate", "List graphs of one order up to isomorphism");
  en->add_option("--class", class_text, "all, outerplanar, bridgeless-outerplanar or mop")
      ->check(CLI::IsMember({"all", "outerplanar", "bridgeless-outerplanar", "mop"}));
  en->add_option("--n", order, "Order")->required();
  en->add_option("--diameter", diameter, "Keep graphs of exactly this diameter");
  en->add_option("--format", format_text, "Output format: graph6 (one per line) or edgelist")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  // enumerate defaults to graph6 so each graph is one line.
  en->preparse_callback([&](std::size_t) { format_text = "graph6"; });
  rc->preparse_callback([&](std::size_t) { format_text = "edgelist"; });
  check->preparse_callback([&](std::size_t) { format_text = "edgelist"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    const GraphFormat format = format_names().at(format_text);
    if (*rc) return cmd_rc(graph_path, format, out);
    if (*check) return cmd_check_coloring(graph_path, coloring_path, format, out);
    if (*ver) {
      if (report_path.empty()) report_path = theorem_text + "-report.txt";
      return cmd_verify(theorem_text, max_n, jobs, report_path, out);
    }
    return cmd_enumerate(class_names().at(class_text), order, diameter, format, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace rcop::cli
