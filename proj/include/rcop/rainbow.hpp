#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcop/error.hpp"
#include "rcop/graph.hpp"

namespace rcop {

// Largest color count handled by the color-subset dynamic programs.
inline constexpr int kMaxColors = 16;

// Colors of the edges of one graph, indexed like Graph::edges().
struct EdgeColoring {
  int order = 0;
  std::vector<Edge> edges;
  std::vector<int> colors;
  int k = 0;

  bool refers_to(const Graph& g) const {
    return order == g.order() && std::equal(edges.begin(), edges.end(), g.edges().begin(),
                                            g.edges().end());
  }

  int color_of(const Graph& g, Vertex u, Vertex v) const { return colors[g.edge_index(u, v)]; }

  int distinct_colors() const {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

inline EdgeColoring make_coloring(const Graph& g, std::vector<int> colors, int k) {
  if (static_cast<int>(colors.size()) != g.size()) {
    throw Error(ErrorCode::kColoringMismatch, std::to_string(colors.size()) + " colors for " +
                                                  std::to_string(g.size()) + " edges");
  }
  if (k < 1 || k > kMaxColors) {
    throw Error(ErrorCode::kInvalidArgument, "color count " + std::to_string(k));
  }
  for (int c : colors) {
    if (c < 0 || c >= k) {
      throw Error(ErrorCode::kColoringMismatch,
                  "color " + std::to_string(c) + " outside 0.." + std::to_string(k - 1));
    }
  }
  return {g.order(), std::vector<Edge>(g.edges().begin(), g.edges().end()), std::move(colors), k};
}

namespace detail {

inline void require_match(const Graph& g, const EdgeColoring& c) {
  if (!c.refers_to(g) || c.colors.size() != c.edges.size()) {
    throw Error(ErrorCode::kColoringMismatch, "coloring does not belong to this graph");
  }
  if (c.k < 1 || c.k > kMaxColors) {
    throw Error(ErrorCode::kInvalidArgument, "color count " + std::to_string(c.k));
  }
}

// Vertices reachable from `source` by a walk with pairwise distinct colors.
// A rainbow walk shortcuts to a rainbow path, so this is exact for paths.
// States are (vertex, used color set).
inline VertexMask rainbow_reach(const Graph& g, const EdgeColoring& c, Vertex source) {
  const int n = g.order();
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) << c.k, 0);
  std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(source)};
  seen[source] = 1;
  VertexMask reached = bit(source);
  while (!stack.empty()) {
    const std::uint32_t state = stack.back();
    stack.pop_back();
    const Vertex v = static_cast<Vertex>(state % n);
    const std::uint32_t used = state / n;
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
      const std::uint32_t col = 1U << c.colors[g.edge_index(v, w)];
      if (used & col) return;
      const std::uint32_t next = (used | col) * n + w;
      if (!seen[next]) {
        seen[next] = 1;
        reached |= bit(w);
        stack.push_back(next);
      }
    });
  }
  return reached;
}

}  // namespace detail

inline bool rainbow_path_exists(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  detail::require_match(g, c);
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange, "pair (" + std::to_string(u) + "," +
                                                  std::to_string(v) + ")");
  }
  return (detail::rainbow_reach(g, c, u) >> v) & 1U;
}

struct ColoringCheck {
  bool rainbow_connected = true;
  // Pairs (u, v), u < v, without a rainbow path, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> failing_pairs;
};

inline ColoringCheck check_coloring(const Graph& g, const EdgeColoring& c) {
  detail::require_match(g, c);
  ColoringCheck out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const VertexMask reached = detail::rainbow_reach(g, c, u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!((reached >> v) & 1U)) out.failing_pairs.emplace_back(u, v);
    }
  }
  out.rainbow_connected = out.failing_pairs.empty();
  return out;
}

inline bool is_rainbow_connected(const Graph& g, const EdgeColoring& c) {
  detail::require_match(g, c);
  const VertexMask all = g.vertices();
  for (Vertex u = 0; u < g.order(); ++u) {
    if ((detail::rainbow_reach(g, c, u) | full_mask(u)) != all) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exact search

enum class EdgeOrder {
  // Edges lying on shortest paths of many vertex pairs first.
  kShortestPathLoad,
  kLexicographic,
};

struct SearchOptions {
  EdgeOrder edge_order = EdgeOrder::kShortestPathLoad;
};

namespace detail {

// Backtracking over edge colorings with k colors.
//
// Colors are introduced in order of first use, so every class of colorings
// equal up to renaming is visited once. After each assignment every open
// vertex pair is tested with uncolored edges as wildcards that take a fresh
// color: a pair is dead when even that relaxation has no path whose colored
// edges are distinct and whose length is at most k, and settled for good once
// a fully colored rainbow path exists.
class RainbowSearch {
 public:
  RainbowSearch(const Graph& g, int k, SearchOptions options) : g_(g), k_(k), n_(g.order()) {
    const int m = g.size();
    color_.assign(m, -1);
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<std::vector<int>> dist(n_);
    for (Vertex v = 0; v < n_; ++v) dist[v] = distances_from(g, v);
    if (options.edge_order == EdgeOrder::kShortestPathLoad) {
      std::vector<int> load(m, 0);
      for (int e = 0; e < m; ++e) {
        const Edge ed = g.edge(e);
        for (Vertex s = 0; s < n_; ++s) {
          for (Vertex t = s + 1; t < n_; ++t) {
            const int d = dist[s][t];
            if (dist[s][ed.u] + 1 + dist[ed.v][t] == d || dist[s][ed.v] + 1 + dist[ed.u][t] == d) {
              ++load[e];
            }
          }
        }
      }
      std::stable_sort(order_.begin(), order_.end(),
                       [&](int a, int b) { return load[a] > load[b]; });
    }
    for (Vertex s = 0; s < n_; ++s) {
      for (Vertex t = s + 1; t < n_; ++t) {
        if (dist[s][t] >= 2) open_[s] |= bit(t);
      }
    }
    seen_.assign(static_cast<std::size_t>(n_) << k_, kUnseen);
  }

  std::optional<std::vector<int>> run() {
    if (!prune_pairs()) return std::nullopt;
    if (!descend(0, -1)) return std::nullopt;
    return color_;
  }

 private:
  static constexpr std::uint8_t kUnseen = 0xFF;

  bool descend(int pos, int top_color) {
    if (pos == static_cast<int>(order_.size())) return true;
    if (std::all_of(open_.begin(), open_.end(), [](VertexMask m) { return m == 0; })) {
      // Every pair is settled; color 0 is the first choice the search would make.
      for (int rest = pos; rest < static_cast<int>(order_.size()); ++rest) color_[order_[rest]] = 0;
      return true;
    }
    const int e = order_[pos];
    const int limit = std::min(k_ - 1, top_color + 1);
    const auto saved = open_;
    for (int c = 0; c <= limit; ++c) {
      color_[e] = c;
      if (prune_pairs() && descend(pos + 1, std::max(top_color, c))) return true;
      open_ = saved;
    }
    color_[e] = -1;
    return false;
  }

  // Updates open_ and reports whether every open pair is still satisfiable.
  bool prune_pairs() {
    for (Vertex s = 0; s < n_; ++s) {
      if (open_[s] != 0 && !explore(s)) return false;
    }
    return true;
  }

  // Layered search from s: layer w holds states reached with w wildcard edges.
  bool explore(Vertex s) {
    std::fill(seen_.begin(), seen_.end(), kUnseen);
    VertexMask wanted = open_[s];
    std::vector<std::uint32_t> layer{static_cast<std::uint32_t>(s)};
    seen_[s] = 0;
    for (int w = 0; w <= k_ && !layer.empty(); ++w) {
      std::vector<std::uint32_t> next_layer;
      VertexMask reached = 0;
      for (std::size_t i = 0; i < layer.size(); ++i) {
        const std::uint32_t state = layer[i];
        if (seen_[state] != w) continue;  // improved after it was queued
        const Vertex v = static_cast<Vertex>(state % n_);
        const std::uint32_t used = state / n_;
        reached |= bit(v);
        const int budget = k_ - std::popcount(used) - w;
        if (budget <= 0) continue;
        for_each_vertex(g_.neighbors(v), [&](Vertex x) {
          const int c = color_[g_.edge_index(v, x)];
          if (c < 0) {
            const std::uint32_t to = used * n_ + x;
            if (seen_[to] == kUnseen) {
              seen_[to] = static_cast<std::uint8_t>(w + 1);
              next_layer.push_back(to);
            }
            return;
          }
          if (used & (1U << c)) return;
          const std::uint32_t to = (used | (1U << c)) * n_ + x;
          if (seen_[to] == kUnseen || seen_[to] > w) {
            seen_[to] = static_cast<std::uint8_t>(w);
            layer.push_back(to);
          }
        });
      }
      if (w == 0) open_[s] &= ~reached;
      wanted &= ~reached;
      if (wanted == 0) return true;
      layer = std::move(next_layer);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int n_;
  std::vector<int> color_;
  std::vector<int> order_;
  std::array<VertexMask, kMaxOrder> open_{};
  std::vector<std::uint8_t> seen_;
};

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

}  // namespace detail

// A rainbow-connecting coloring with at most k colors, or nullopt when none
// exists. Among colorings whose colors appear in order of first use along the
// search order, the first one in lexicographic order is returned.
inline std::optional<EdgeColoring> exists_rainbow_coloring(const Graph& g, int k,
                                                           SearchOptions options = {}) {
  detail::require_connected(g);
  if (k < 1 || k > kMaxColors) {
    throw Error(ErrorCode::kInvalidArgument, "color count " + std::to_string(k) +
                                                 " outside 1.." + std::to_string(kMaxColors));
  }
  auto colors = detail::RainbowSearch(g, k, options).run();
  if (!colors) return std::nullopt;
  return make_coloring(g, std::move(*colors), k);
}

struct RcResult {
  int rc = 0;
  EdgeColoring witness;
};

inline RcResult rc_exact(const Graph& g, SearchOptions options = {}) {
  detail::require_connected(g);
  if (g.order() < 2) throw Error(ErrorCode::kOrderTooSmall, "rc needs at least 2 vertices");
  const int m = g.size();
  if (m == g.order() - 1) {
    // Trees: every edge is a bridge, so all colors differ.
    std::vector<int> colors(m);
    std::iota(colors.begin(), colors.end(), 0);
    return {m, make_coloring(g, std::move(colors), m)};
  }
  const int bridge_count = static_cast<int>(bridges(g).size());
  int k = std::max({1, *diameter(g), bridge_count});
  for (; k <= kMaxColors; ++k) {
    auto witness = exists_rainbow_coloring(g, k, options);
    if (!witness) continue;
    // Searching again in lexicographic edge order yields the smallest color
    // sequence that works, whatever order was used to find k.
    if (options.edge_order != EdgeOrder::kLexicographic) {
      witness = exists_rainbow_coloring(g, k, {EdgeOrder::kLexicographic});
    }
    return {k, std::move(*witness)};
  }
  throw Error(ErrorCode::kCostGuard, "rc exceeds " + std::to_string(kMaxColors));
}

// ---------------------------------------------------------------------------
// Brute-force oracle, independent of the search above

namespace oracle {

// Explicit depth-first enumeration of simple paths from u.
inline bool rainbow_path_by_paths(const Graph& g, const std::vector<int>& colors, Vertex u,
                                  Vertex v) {
  if (u == v) return true;
  auto walk = [&](auto& self, Vertex at, VertexMask visited, std::uint32_t used) -> bool {
    for (Vertex x = 0; x < g.order(); ++x) {
      if (!g.has_edge(at, x) || ((visited >> x) & 1U)) continue;
      const std::uint32_t col = 1U << colors[g.edge_index(at, x)];
      if (used & col) continue;
      if (x == v) return true;
      if (self(self, x, visited | bit(x), used | col)) return true;
    }
    return false;
  };
  return walk(walk, u, bit(u), 0);
}

inline bool rainbow_connected_by_paths(const Graph& g, const std::vector<int>& colors) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!rainbow_path_by_paths(g, colors, u, v)) return false;
    }
  }
  return true;
}

inline constexpr int kMaxOracleEdges = 10;

}  // namespace oracle

// Smallest k for which one of the k^m colorings is rainbow connected, found
// by plain enumeration. Only meant for validating rc_exact.
inline int rc_oracle(const Graph& g) {
  detail::require_connected(g);
  if (g.order() < 2) throw Error(ErrorCode::kOrderTooSmall, "rc needs at least 2 vertices");
  const int m = g.size();
  if (m > oracle::kMaxOracleEdges) {
    throw Error(ErrorCode::kCostGuard, std::to_string(m) + " edges exceed the oracle limit of " +
                                           std::to_string(oracle::kMaxOracleEdges));
  }
  for (int k = 1;; ++k) {
    std::vector<int> colors(m, 0);
    while (true) {
      if (oracle::rainbow_connected_by_paths(g, colors)) return k;
      int i = m - 1;
      while (i >= 0 && colors[i] == k - 1) colors[i--] = 0;
      if (i < 0) break;
      ++colors[i];
    }
  }
}

// ---------------------------------------------------------------------------
// Closed forms

// rc(C_n) = ceil(n/2). C_3 = K_3 has rc 1, so n < 4 is rejected.
inline int formula_rc_cycle(int n) {
  if (n < 4) throw Error(ErrorCode::kInvalidArgument, "cycle formula needs n >= 4");
  return (n + 1) / 2;
}

// rc of the fan P_n joined with K_1.
inline int formula_rc_fan(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "fan formula needs n >= 2");
  if (n == 2) return 1;
  return n <= 6 ? 2 : 3;
}

}  // namespace rcop
