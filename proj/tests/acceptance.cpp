// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "rcop/cli.hpp"
#include "rcop/rcop.hpp"

namespace {

using namespace rcop;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds) {
    o.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  if (!o.pass) ++failures;
  char head[160];
  std::snprintf(head, sizeof head, "criterion %d %s [%.2f s] %s", id, o.pass ? "PASS" : "FAIL",
                seconds, title.c_str());
  std::cout << head << (o.detail.empty() ? "" : ": " + o.detail) << std::endl;
}

std::string str(const Graph& g) { return to_graph6(g); }

// rc confirmed without the backtracking solver where the oracle can afford it,
// otherwise by the solver run with the other edge order.
int independent_rc(const Graph& g) {
  if (g.size() <= oracle::kMaxOracleEdges) return rc_oracle(g);
  return rc_exact(g, {EdgeOrder::kLexicographic}).rc;
}

std::vector<int> random_colors(int m, int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::vector<int> out(m);
  for (int& c : out) c = pick(rng);
  return out;
}

bool bridgeless_outerplanar(const Graph& g) {
  return is_connected(g) && is_bridgeless(g) && is_outerplanar_by_minors(g);
}

ClassList connected_classes(int n) {
  return enumerate_labeled_oracle(n, [](const Graph& g) { return is_connected(g); });
}

}  // namespace

int main() {
  criterion(1, "rc(C_n) = ceil(n/2) for 4 <= n <= 12", 60, [] {
    Outcome o;
    std::ostringstream seen;
    for (int n = 4; n <= 12; ++n) {
      const RcResult r = rc_exact(cycle(n));
      seen << (n > 4 ? "," : "") << r.rc;
      if (r.rc != (n + 1) / 2) o.fail("C" + std::to_string(n) + " gave " + std::to_string(r.rc));
      if (!oracle::rainbow_connected_by_paths(cycle(n), r.witness.colors)) {
        o.fail("C" + std::to_string(n) + " witness invalid");
      }
    }
    if (o.pass) o.detail = "rc(C4..C12) = " + seen.str();
    return o;
  });

  criterion(2, "rc(F_n) = 1, 2, 3 for n = 2, 3..6, 7..9", 60, [] {
    Outcome o;
    std::ostringstream seen;
    for (int n = 2; n <= 9; ++n) {
      const int want = n == 2 ? 1 : n <= 6 ? 2 : 3;
      const RcResult r = rc_exact(fan(n));
      seen << (n > 2 ? "," : "") << r.rc;
      if (r.rc != want) o.fail("F" + std::to_string(n) + " gave " + std::to_string(r.rc));
      if (!oracle::rainbow_connected_by_paths(fan(n), r.witness.colors)) {
        o.fail("F" + std::to_string(n) + " witness invalid");
      }
    }
    if (o.pass) o.detail = "rc(F2..F9) = " + seen.str();
    return o;
  });

  criterion(3, "rc(K_n) = 1 for 2 <= n <= 6; rc(T) = m for 20 random trees", 0, [] {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
      if (rc_exact(complete(n)).rc != 1) o.fail("K" + std::to_string(n));
    }
    std::mt19937 rng(20);
    for (int i = 0; i < 20; ++i) {
      std::uniform_int_distribution<int> order(2, 8);
      const int n = order(rng);
      std::vector<Edge> edges;
      for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.push_back({parent(rng), v});
      }
      const Graph t = build_graph(n, edges);
      const int rc = rc_exact(t).rc;
      if (rc != t.size() || rc_oracle(t) != t.size()) o.fail("tree " + str(t));
    }
    if (o.pass) o.detail = "K2..K6 and 20 trees with n <= 8 (trees also by brute force)";
    return o;
  });

  criterion(4, "diameter-2 bridgeless outerplanar graphs, n <= 8", 600, [] {
    Outcome o;
    const VerificationReport report = verify_diam2(8);
    const std::set<CanonicalCode> three{canonical_code(cycle(5)), canonical_code(fan(7))};
    std::size_t two_connected = 0;
    std::size_t cut = 0;
    for (const auto& r : report.records) {
      (r.has_cut_vertex ? cut : two_connected) += 1;
      if (diameter(r.graph) != 2 || !is_bridgeless(r.graph) || !is_outerplanar(r.graph)) {
        o.fail(r.code.bytes + " is outside the class");
      }
      if (!is_rainbow_connected(r.graph, r.witness) || r.witness.distinct_colors() != r.rc) {
        o.fail(r.code.bytes + " witness invalid");
      }
      const int want = three.contains(r.code) ? 3 : 2;
      if (r.holds != (r.rc == want)) o.fail(r.code.bytes + " claim mislabeled");
    }
    std::size_t oracle_total = 0;
    for (int n = 3; n <= 7; ++n) {
      oracle_total +=
          filter_by_diameter(enumerate_labeled_oracle(n, bridgeless_outerplanar), 2).size();
    }
    std::size_t up_to_seven = 0;
    for (const auto& r : report.records) up_to_seven += r.graph.order() <= 7 ? 1 : 0;
    if (up_to_seven != oracle_total) o.fail("enumeration disagrees with brute force up to n = 7");

    std::size_t localized = 0;
    std::ostringstream where;
    for (std::size_t i : report.counterexamples) {
      const auto& r = report.records[i];
      if (!r.has_cut_vertex) {
        o.fail("2-connected counterexample " + r.code.bytes);
        continue;
      }
      if (independent_rc(r.graph) != r.rc) {
        o.fail("counterexample " + r.code.bytes + " not confirmed");
        continue;
      }
      ++localized;
      where << (localized > 1 ? " " : "") << r.code.bytes << "(n=" << r.graph.order()
            << ",rc=" << r.rc << ")";
    }
    if (!o.pass) return o;
    std::ostringstream d;
    d << report.records.size() << " graphs (" << two_connected << " 2-connected, " << cut
      << " with a cut vertex); 2-connected class: rc = 3 exactly for C5 and fan(7), 2 otherwise";
    if (report.counterexamples.empty()) {
      d << "; all graphs match";
    } else {
      d << "; localized counterexample report: " << localized
        << " cut-vertex graphs, confirmed independently: " << where.str();
    }
    o.detail = d.str();
    return o;
  });

  criterion(5, "diameter-3 bridgeless outerplanar graphs, n <= 8: rc <= 4 and sharpness", 900, [] {
    Outcome o;
    const VerificationReport report = verify_diam3(8);
    int top = 0;
    for (const auto& r : report.records) {
      top = std::max(top, r.rc);
      if (diameter(r.graph) != 3) o.fail(r.code.bytes + " is outside the class");
      if (!is_rainbow_connected(r.graph, r.witness)) o.fail(r.code.bytes + " witness invalid");
      if (r.rc > 4) o.fail(r.code.bytes + " needs " + std::to_string(r.rc));
    }
    if (!report.sharpness) {
      o.fail("no graph with rc = 4");
      return o;
    }
    const auto& s = report.records[*report.sharpness];
    if (independent_rc(s.graph) != 4) o.fail("sharpness graph " + s.code.bytes + " not confirmed");
    if (!o.pass) return o;
    std::ostringstream d;
    d << report.records.size() << " graphs, 0 violations, max rc " << top
      << "; first rc = 4 graph at n = " << s.graph.order() << " (expected "
      << kExpectedSharpnessOrder << "), " << s.code.bytes << ", edges " << render_edges_inline(s.graph);
    o.detail = d.str();
    return o;
  });

  criterion(6, "rc_exact = rc_oracle on connected classes n <= 5 and bridgeless outerplanar m <= 10",
            0, [] {
              Outcome o;
              std::size_t checked = 0;
              for (int n = 2; n <= 5; ++n) {
                for (const auto& c : connected_classes(n)) {
                  ++checked;
                  if (rc_exact(c.graph).rc != rc_oracle(c.graph)) o.fail(c.code.bytes);
                }
              }
              const auto levels = bridgeless_outerplanar_by_order(10);
              for (int n = 3; n <= 10; ++n) {
                for (const auto& m : levels[n]) {
                  if (m.graph.size() > oracle::kMaxOracleEdges) continue;
                  ++checked;
                  if (rc_exact(m.graph).rc != rc_oracle(m.graph)) o.fail(m.code.bytes);
                }
              }
              if (o.pass) o.detail = std::to_string(checked) + " graphs agree";
              return o;
            });

  criterion(7, "structured enumeration = labeled brute force for bridgeless outerplanar, n = 5, 6, 7",
            0, [] {
              Outcome o;
              std::ostringstream d;
              for (int n = 5; n <= 7; ++n) {
                std::set<CanonicalCode> a;
                std::set<CanonicalCode> b;
                for (const auto& m : enumerate_bridgeless_outerplanar(n)) a.insert(m.code);
                for (const auto& m : enumerate_labeled_oracle(n, bridgeless_outerplanar)) {
                  b.insert(m.code);
                }
                if (a != b) o.fail("n = " + std::to_string(n));
                d << (n > 5 ? ", " : "") << "n=" << n << ": " << a.size();
              }
              if (o.pass) o.detail = d.str() + " classes";
              return o;
            });

  criterion(8, "no outerplanar graph with m > 2n-3 (n <= 7); K4 and K2,3 rejected with witnesses",
            0, [] {
              Outcome o;
              std::size_t graphs = 0;
              for (int n = 1; n <= 7; ++n) {
                for (const auto& c : enumerate_labeled_oracle(n, [](const Graph&) { return true; })) {
                  ++graphs;
                  const bool outer = is_outerplanar_by_minors(c.graph);
                  if (outer != is_outerplanar(c.graph)) o.fail("disagreement on " + c.code.bytes);
                  if (n >= 2 && outer && c.graph.size() > 2 * n - 3) o.fail(c.code.bytes);
                }
              }
              const auto k4 = find_k4_minor(complete(4));
              const auto k23 = find_k23_minor(complete_bipartite(2, 3));
              if (is_outerplanar(complete(4)) || !k4 || !is_valid_witness(complete(4), *k4)) {
                o.fail("K4");
              }
              if (is_outerplanar(complete_bipartite(2, 3)) || !k23 ||
                  !is_valid_witness(complete_bipartite(2, 3), *k23)) {
                o.fail("K2,3");
              }
              if (o.pass) o.detail = std::to_string(graphs) + " graphs checked";
              return o;
            });

  criterion(9, "property checks across modules", 0, [] {
    Outcome o;
    std::mt19937 rng(9);
    const auto six = connected_classes(6);

    // Color-renaming invariance of the rainbow check.
    for (int t = 0; t < 300; ++t) {
      const Graph& g = six[rng() % six.size()].graph;
      const int k = 2 + static_cast<int>(rng() % 4);
      const auto colors = random_colors(g.size(), k, rng);
      std::vector<int> rename(k);
      std::iota(rename.begin(), rename.end(), 0);
      std::shuffle(rename.begin(), rename.end(), rng);
      std::vector<int> renamed;
      for (int c : colors) renamed.push_back(rename[c]);
      if (check_coloring(g, make_coloring(g, colors, k)).failing_pairs !=
          check_coloring(g, make_coloring(g, renamed, k)).failing_pairs) {
        o.fail("color renaming on " + str(g));
      }
    }

    // Edge-addition monotonicity and witness validity.
    for (int n = 3; n <= 6; ++n) {
      for (const auto& c : connected_classes(n)) {
        const RcResult r = rc_exact(c.graph);
        if (!oracle::rainbow_connected_by_paths(c.graph, r.witness.colors) ||
            r.witness.distinct_colors() != r.rc) {
          o.fail("witness on " + c.code.bytes);
        }
        for (Vertex u = 0; u < n; ++u) {
          for (Vertex v = u + 1; v < n; ++v) {
            if (!c.graph.has_edge(u, v) && rc_exact(with_edge(c.graph, {u, v})).rc > r.rc) {
              o.fail("monotonicity on " + c.code.bytes);
            }
          }
        }
      }
    }

    // Subgraph closure of outerplanarity and block locality.
    for (int n = 3; n <= 7; ++n) {
      for (const auto& c : connected_classes(n)) {
        const Graph& g = c.graph;
        const bool outer = is_outerplanar(g);
        if (outer) {
          for (const Edge& e : g.edges()) {
            if (!is_outerplanar(without_edge(g, e))) o.fail("edge deletion on " + c.code.bytes);
          }
          for (Vertex v = 0; v < n; ++v) {
            if (!is_outerplanar(induced_subgraph(g, g.vertices() & ~bit(v)))) {
              o.fail("vertex deletion on " + c.code.bytes);
            }
          }
        }
        bool blocks = true;
        for (VertexMask b : block_decomposition(g).blocks) {
          blocks = blocks && is_outerplanar(induced_subgraph(g, b));
        }
        if (blocks != outer) o.fail("block locality on " + c.code.bytes);
      }
    }

    // Report determinism under --jobs.
    const auto dir = std::filesystem::temp_directory_path() / "rcop_acceptance";
    std::filesystem::create_directories(dir);
    for (const std::string theorem : {"diam2", "diam3", "formulas"}) {
      std::string reports[2];
      for (int i = 0; i < 2; ++i) {
        const std::string path = (dir / (theorem + std::to_string(i) + ".txt")).string();
        const std::string jobs = i == 0 ? "1" : "4";
        const char* argv[] = {"rcop", "verify", theorem.c_str(), "--max-n", "8",
                              "--jobs", jobs.c_str(), "--report", path.c_str()};
        std::ostringstream out;
        std::ostringstream err;
        cli::run(9, argv, out, err);
        reports[i] = cli::read_file(path);
      }
      if (reports[0].empty() || reports[0] != reports[1]) o.fail("report for " + theorem + " differs");
    }
    std::filesystem::remove_all(dir);
    if (o.pass) {
      o.detail =
          "color renaming, edge addition, witness validity, subgraph closure, block locality, "
          "--jobs 1 vs 4 reports";
    }
    return o;
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
