#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rcop/canonical.hpp"
#include "rcop/error.hpp"
#include "rcop/graph.hpp"
#include "rcop/recognition.hpp"

namespace rcop {

// Largest order the structured generators accept.
inline constexpr int kMaxEnumerationOrder = 10;
// Largest order of the labeled brute-force enumerator (2^21 edge subsets).
inline constexpr int kMaxOracleOrder = 7;

// A yielded isomorphism class: its code and canonical representative.
struct ClassMember {
  CanonicalCode code;
  Graph graph;
};

using ClassList = std::vector<ClassMember>;

// Chords of the cycle 0..n-1; no chord joins cycle neighbours.
struct ChordSet {
  int n = 0;
  std::vector<Edge> chords;

  bool is_non_crossing() const {
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        if (cross(chords[i], chords[j])) return false;
      }
    }
    return true;
  }

  Graph to_graph() const {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    edges.insert(edges.end(), chords.begin(), chords.end());
    return build_graph(n, edges);
  }

  // Chords {a,b} and {c,d} cross iff exactly one of c,d lies strictly inside (a,b).
  static bool cross(Edge x, Edge y) {
    x = normalized(x);
    y = normalized(y);
    auto inside = [&](Vertex p) { return x.u < p && p < x.v; };
    const bool shared = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
    return !shared && inside(y.u) != inside(y.v);
  }
};

// Every non-crossing chord set of the n-cycle, in lexicographic order of the
// sorted chord lists' inclusion pattern.
template <typename Visit>
void for_each_chord_set(int n, Visit&& visit) {
  std::vector<Edge> candidates;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 2; b < n; ++b) {
      if (!(a == 0 && b == n - 1)) candidates.push_back({a, b});
    }
  }
  ChordSet current{n, {}};
  auto extend = [&](auto& self, std::size_t from) -> void {
    visit(static_cast<const ChordSet&>(current));
    for (std::size_t i = from; i < candidates.size(); ++i) {
      const Edge c = candidates[i];
      const bool ok = std::none_of(current.chords.begin(), current.chords.end(),
                                   [&](Edge d) { return ChordSet::cross(c, d); });
      if (!ok) continue;
      current.chords.push_back(c);
      self(self, i + 1);
      current.chords.pop_back();
    }
  };
  extend(extend, 0);
}

namespace detail {

inline void check_order(int n, int lo, int hi) {
  if (n > hi) {
    throw Error(ErrorCode::kCapExceeded,
                "order " + std::to_string(n) + " exceeds " + std::to_string(hi));
  }
  if (n < lo) throw Error(ErrorCode::kOrderTooSmall, "order " + std::to_string(n));
}

// Collects canonical representatives; iteration order is by code.
class ClassCollector {
 public:
  void add(const Graph& g) {
    Graph canon = canonical_form(g);
    CanonicalCode code{to_graph6(canon), g.order()};
    classes_.try_emplace(std::move(code), std::move(canon));
  }

  ClassList take() {
    ClassList out;
    out.reserve(classes_.size());
    for (auto& [code, graph] : classes_) out.push_back({code, std::move(graph)});
    return out;
  }

 private:
  std::map<CanonicalCode, Graph> classes_;
};

// Identifies vertex `at_h` of h with vertex `at_b` of b; b's other vertices
// follow h's.
inline Graph glue(const Graph& h, Vertex at_h, const Graph& b, Vertex at_b) {
  std::vector<Vertex> map(b.order());
  Vertex next = h.order();
  for (Vertex v = 0; v < b.order(); ++v) map[v] = v == at_b ? at_h : next++;
  std::vector<Edge> edges(h.edges().begin(), h.edges().end());
  for (const Edge& e : b.edges()) edges.push_back({map[e.u], map[e.v]});
  return build_graph(next, edges);
}

}  // namespace detail

// 2-connected outerplanar graphs: the n-cycle plus non-crossing chords.
inline ClassList enumerate_two_connected_outerplanar(int n) {
  detail::check_order(n, 3, kMaxEnumerationOrder);
  detail::ClassCollector collector;
  for_each_chord_set(n, [&](const ChordSet& c) { collector.add(c.to_graph()); });
  return collector.take();
}

// Bridgeless outerplanar graphs of every order 3..max_n; index i holds order i.
// A graph with a cut vertex has a leaf block, so it arises from a smaller
// bridgeless outerplanar graph by gluing a 2-connected block at one vertex.
inline std::vector<ClassList> bridgeless_outerplanar_by_order(int max_n) {
  detail::check_order(max_n, 3, kMaxEnumerationOrder);
  std::vector<ClassList> blocks(max_n + 1);
  std::vector<ClassList> levels(max_n + 1);
  for (int n = 3; n <= max_n; ++n) {
    blocks[n] = enumerate_two_connected_outerplanar(n);
    detail::ClassCollector collector;
    for (const auto& member : blocks[n]) collector.add(member.graph);
    for (int k = 3; k <= n - 2; ++k) {
      for (const auto& base : levels[n - k + 1]) {
        for (const auto& block : blocks[k]) {
          for (Vertex at_h = 0; at_h < base.graph.order(); ++at_h) {
            for (Vertex at_b = 0; at_b < k; ++at_b) {
              collector.add(detail::glue(base.graph, at_h, block.graph, at_b));
            }
          }
        }
      }
    }
    levels[n] = collector.take();
  }
  return levels;
}

inline ClassList enumerate_bridgeless_outerplanar(int n) {
  detail::check_order(n, 3, kMaxEnumerationOrder);
  return std::move(bridgeless_outerplanar_by_order(n)[n]);
}

// Connected outerplanar graphs, built like the bridgeless ones but with
// single edges allowed as blocks.
inline ClassList enumerate_connected_outerplanar(int n) {
  detail::check_order(n, 1, kMaxEnumerationOrder);
  std::vector<ClassList> blocks(n + 1);
  std::vector<ClassList> levels(n + 1);
  levels[1].push_back({canonical_code(build_graph(1, std::vector<Edge>{})), build_graph(1, std::vector<Edge>{})});
  if (n >= 2) blocks[2].push_back({canonical_code(build_graph(2, {{0, 1}})), build_graph(2, {{0, 1}})});
  for (int k = 3; k <= n; ++k) blocks[k] = enumerate_two_connected_outerplanar(k);
  for (int size = 2; size <= n; ++size) {
    detail::ClassCollector collector;
    for (const auto& member : blocks[size]) collector.add(member.graph);
    for (int k = 2; k <= size - 1; ++k) {
      for (const auto& base : levels[size - k + 1]) {
        if (base.graph.order() < 2) continue;
        for (const auto& block : blocks[k]) {
          for (Vertex at_h = 0; at_h < base.graph.order(); ++at_h) {
            for (Vertex at_b = 0; at_b < k; ++at_b) {
              collector.add(detail::glue(base.graph, at_h, block.graph, at_b));
            }
          }
        }
      }
    }
    levels[size] = collector.take();
  }
  return std::move(levels[n]);
}

// Brute force over every edge subset of K_n, filtered then deduplicated.
// Subsets whose degrees are not non-increasing in vertex order are skipped;
// every graph has a labeling that passes, so no class is lost as long as the
// predicate is invariant under relabeling.
inline ClassList enumerate_labeled_oracle(int n, const std::function<bool(const Graph&)>& predicate) {
  detail::check_order(n, 1, kMaxOracleOrder);
  std::vector<Edge> all;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  const std::uint32_t subsets = 1U << all.size();
  detail::ClassCollector collector;
  std::vector<Edge> edges;
  std::array<int, kMaxOrder> degree{};
  for (std::uint32_t s = 0; s < subsets; ++s) {
    edges.clear();
    degree.fill(0);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if ((s >> i) & 1U) {
        edges.push_back(all[i]);
        ++degree[all[i].u];
        ++degree[all[i].v];
      }
    }
    if (!std::is_sorted(degree.begin(), degree.begin() + n, std::greater<>())) continue;
    const Graph g = build_graph(n, edges);
    if (predicate(g)) collector.add(g);
  }
  return collector.take();
}

inline ClassList filter_by_diameter(const ClassList& classes, int d) {
  ClassList out;
  for (const auto& member : classes) {
    if (diameter(member.graph) == d) out.push_back(member);
  }
  return out;
}

enum class GraphClass {
  kAll,
  kConnectedOuterplanar,
  kBridgelessOuterplanar,
  kMop,
};

struct EnumerationRequest {
  int order = 3;
  GraphClass graph_class = GraphClass::kBridgelessOuterplanar;
  std::optional<int> diameter;
};

// Deduplicated classes sorted by canonical code.
inline ClassList enumerate(const EnumerationRequest& request) {
  ClassList classes;
  switch (request.graph_class) {
    case GraphClass::kAll:
      classes = enumerate_labeled_oracle(request.order, [](const Graph&) { return true; });
      break;
    case GraphClass::kConnectedOuterplanar:
      classes = enumerate_connected_outerplanar(request.order);
      break;
    case GraphClass::kBridgelessOuterplanar:
      classes = enumerate_bridgeless_outerplanar(request.order);
      break;
    case GraphClass::kMop:
      for (auto& member : enumerate_two_connected_outerplanar(request.order)) {
        if (is_mop(member.graph)) classes.push_back(std::move(member));
      }
      break;
  }
  if (request.diameter) classes = filter_by_diameter(classes, *request.diameter);
  return classes;
}

}  // namespace rcop
