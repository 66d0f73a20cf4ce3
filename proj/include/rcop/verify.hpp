#pragma once

#include <algorithm>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rcop/canonical.hpp"
#include "rcop/enumerate.hpp"
#include "rcop/error.hpp"
#include "rcop/families.hpp"
#include "rcop/parallel.hpp"
#include "rcop/rainbow.hpp"

namespace rcop {

enum class Theorem { kDiam2, kDiam3, kFormulas };

inline constexpr std::string_view theorem_name(Theorem t) {
  switch (t) {
    case Theorem::kDiam2: return "diam2";
    case Theorem::kDiam3: return "diam3";
    case Theorem::kFormulas: return "formulas";
  }
  return "?";
}

inline std::optional<Theorem> parse_theorem(std::string_view name) {
  for (Theorem t : {Theorem::kDiam2, Theorem::kDiam3, Theorem::kFormulas}) {
    if (theorem_name(t) == name) return t;
  }
  return std::nullopt;
}

inline constexpr int kMaxVerifyOrder = 10;
inline constexpr int kMaxFormulaOrder = 12;
// Order of the smallest known diameter-3 graph needing four colors.
inline constexpr int kExpectedSharpnessOrder = 7;
inline constexpr int kDiam3Bound = 4;

struct VerificationRecord {
  std::string label;  // family name for formula checks, empty otherwise
  CanonicalCode code;
  Graph graph;  // canonical representative
  int diameter = 0;
  bool has_cut_vertex = false;
  int rc = 0;
  std::string claim;  // "=k" or "<=k"
  bool holds = false;
  EdgeColoring witness;
};

struct VerificationReport {
  Theorem theorem = Theorem::kDiam2;
  int max_n = 0;
  // Sorted by (order, code, label).
  std::vector<VerificationRecord> records;
  // Indices into records.
  std::vector<std::size_t> counterexamples;
  // diam3: smallest-order record with rc = 4.
  std::optional<std::size_t> sharpness;

  bool pass() const { return counterexamples.empty(); }
};

namespace detail {

struct Job {
  std::string label;
  Graph graph;
  std::string claim;
  int claimed_rc;  // exact value, or bound for "<=" claims
  bool exact;
};

inline VerificationReport run_jobs(Theorem theorem, int max_n, std::vector<Job> jobs, int workers) {
  VerificationReport report;
  report.theorem = theorem;
  report.max_n = max_n;
  report.records.resize(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    const Job& job = jobs[i];
    auto result = rc_exact(job.graph);
    VerificationRecord& r = report.records[i];
    r.label = job.label;
    r.code = canonical_code(job.graph);
    r.graph = job.graph;
    r.diameter = *diameter(job.graph);
    r.has_cut_vertex = has_cut_vertex(job.graph);
    r.rc = result.rc;
    r.claim = job.claim;
    r.holds = job.exact ? result.rc == job.claimed_rc : result.rc <= job.claimed_rc;
    r.witness = std::move(result.witness);
  });
  std::stable_sort(report.records.begin(), report.records.end(),
                   [](const VerificationRecord& a, const VerificationRecord& b) {
                     if (a.code != b.code) return a.code < b.code;
                     return a.label < b.label;
                   });
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    if (!report.records[i].holds) report.counterexamples.push_back(i);
  }
  return report;
}

inline void check_max_n(int max_n, int lo, int hi) {
  if (max_n > hi) {
    throw Error(ErrorCode::kCapExceeded,
                "max order " + std::to_string(max_n) + " exceeds " + std::to_string(hi));
  }
  if (max_n < lo) throw Error(ErrorCode::kInvalidArgument, "max order must be at least " + std::to_string(lo));
}

}  // namespace detail

// Every bridgeless outerplanar graph of diameter 2 and order <= max_n has
// rc 3 when it is C5 or a fan F_k with k >= 7, and rc 2 otherwise.
inline VerificationReport verify_diam2(int max_n, int workers = 1) {
  detail::check_max_n(max_n, 3, kMaxVerifyOrder);
  std::set<CanonicalCode> needs_three{canonical_code(cycle(5))};
  for (int k = 7; k + 1 <= max_n; ++k) needs_three.insert(canonical_code(fan(k)));
  std::vector<detail::Job> jobs;
  const auto levels = bridgeless_outerplanar_by_order(max_n);
  for (int n = 3; n <= max_n; ++n) {
    for (const auto& member : filter_by_diameter(levels[n], 2)) {
      const int want = needs_three.contains(member.code) ? 3 : 2;
      jobs.push_back({"", member.graph, "=" + std::to_string(want), want, true});
    }
  }
  return detail::run_jobs(Theorem::kDiam2, max_n, std::move(jobs), workers);
}

// Every bridgeless outerplanar graph of diameter 3 and order <= max_n has
// rc <= 4; records the smallest one that needs exactly 4.
inline VerificationReport verify_diam3(int max_n, int workers = 1) {
  detail::check_max_n(max_n, 3, kMaxVerifyOrder);
  std::vector<detail::Job> jobs;
  const auto levels = bridgeless_outerplanar_by_order(max_n);
  for (int n = 3; n <= max_n; ++n) {
    for (const auto& member : filter_by_diameter(levels[n], 3)) {
      jobs.push_back({"", member.graph, "<=" + std::to_string(kDiam3Bound), kDiam3Bound, false});
    }
  }
  auto report = detail::run_jobs(Theorem::kDiam3, max_n, std::move(jobs), workers);
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    if (report.records[i].rc == kDiam3Bound) {
      report.sharpness = i;
      break;
    }
  }
  return report;
}

// rc of C_n (4 <= n <= max_n) and of F_n (2 <= n <= max_n - 1) against the
// closed forms.
inline VerificationReport verify_formulas(int max_n, int workers = 1) {
  detail::check_max_n(max_n, 3, kMaxFormulaOrder);
  std::vector<detail::Job> jobs;
  for (int n = 4; n <= max_n; ++n) {
    const int want = formula_rc_cycle(n);
    jobs.push_back({"C" + std::to_string(n), canonical_form(cycle(n)), "=" + std::to_string(want), want, true});
  }
  for (int n = 2; n + 1 <= max_n; ++n) {
    const int want = formula_rc_fan(n);
    jobs.push_back({"F" + std::to_string(n), canonical_form(fan(n)), "=" + std::to_string(want), want, true});
  }
  return detail::run_jobs(Theorem::kFormulas, max_n, std::move(jobs), workers);
}

inline VerificationReport verify(Theorem theorem, int max_n, int workers = 1) {
  switch (theorem) {
    case Theorem::kDiam2: return verify_diam2(max_n, workers);
    case Theorem::kDiam3: return verify_diam3(max_n, workers);
    case Theorem::kFormulas: return verify_formulas(max_n, workers);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown theorem");
}

// ---------------------------------------------------------------------------
// Report text

inline std::string render_witness(const Graph& g, const EdgeColoring& c) {
  std::string out;
  for (int e = 0; e < g.size(); ++e) {
    if (!out.empty()) out += ',';
    out += std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v) + ":" +
           std::to_string(c.colors[e]);
  }
  return out.empty() ? "-" : out;
}

inline std::string render_edges_inline(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out;
}

inline std::string render_record(const VerificationRecord& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%5d %4d %4d %3d %3d %5s %5s %-5s %-10s ", r.graph.order(),
                r.graph.size(), r.diameter, r.has_cut_vertex ? 1 : 0, r.rc, r.claim.c_str(),
                r.holds ? "yes" : "no", r.label.empty() ? "-" : r.label.c_str(), r.code.bytes.c_str());
  return std::string(head) + render_witness(r.graph, r.witness) + "\n";
}

// Key-value header, then one fixed-column line per record. Contains nothing
// run-dependent, so equal inputs give byte-identical text.
inline std::string render_report(const VerificationReport& report) {
  std::string out;
  auto kv = [&](std::string_view key, const std::string& value) {
    out += std::string(key) + ": " + value + "\n";
  };
  std::size_t cut = 0;
  std::size_t bad_cut = 0;
  for (const auto& r : report.records) cut += r.has_cut_vertex ? 1 : 0;
  for (std::size_t i : report.counterexamples) bad_cut += report.records[i].has_cut_vertex ? 1 : 0;
  kv("theorem", std::string(theorem_name(report.theorem)));
  kv("max_n", std::to_string(report.max_n));
  kv("graphs", std::to_string(report.records.size()));
  kv("graphs_two_connected", std::to_string(report.records.size() - cut));
  kv("graphs_cut_vertex", std::to_string(cut));
  kv("counterexamples", std::to_string(report.counterexamples.size()));
  kv("counterexamples_two_connected", std::to_string(report.counterexamples.size() - bad_cut));
  kv("counterexamples_cut_vertex", std::to_string(bad_cut));
  if (report.theorem == Theorem::kDiam3) {
    int top = 0;
    for (const auto& r : report.records) top = std::max(top, r.rc);
    kv("rc_max", std::to_string(top));
    if (report.sharpness) {
      const auto& s = report.records[*report.sharpness];
      kv("sharpness_min_order", std::to_string(s.graph.order()));
      kv("sharpness_expected_order", std::to_string(kExpectedSharpnessOrder));
      kv("sharpness_order_matches", s.graph.order() == kExpectedSharpnessOrder ? "yes" : "no");
      kv("sharpness_code", s.code.bytes);
      kv("sharpness_edges", render_edges_inline(s.graph));
    } else {
      kv("sharpness_min_order", "none");
    }
  }
  kv("verdict", report.pass() ? "pass" : "fail");
  out += "records:\n";
  out += "order size diam cut  rc claim holds label code       witness\n";
  for (const auto& r : report.records) out += render_record(r);
  out += "counterexample_records:\n";
  for (std::size_t i : report.counterexamples) out += render_record(report.records[i]);
  return out;
}

}  // namespace rcop
