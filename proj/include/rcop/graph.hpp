#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rcop/error.hpp"

namespace rcop {

using Vertex = int;
// Vertex subsets are bit masks; bit v stands for vertex v.
using VertexMask = std::uint32_t;

inline constexpr int kMaxOrder = 16;
// Distance marker for a vertex in another component.
inline constexpr int kUnreachable = -1;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
constexpr VertexMask full_mask(int n) { return (VertexMask{1} << n) - 1; }
constexpr int popcount(VertexMask m) { return std::popcount(m); }
constexpr Vertex lowest(VertexMask m) { return std::countr_zero(m); }

template <typename F>
constexpr void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(lowest(m));
    m &= m - 1;
  }
}

// Unordered vertex pair, stored with u < v once it is part of a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr auto operator<=>(const Edge&) const = default;
};

constexpr Edge normalized(Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; }

// Immutable simple undirected graph on vertices 0..n-1 with n <= 16.
// Edges are kept in lexicographic order; edge indices refer to that order.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  VertexMask vertices() const { return full_mask(n_); }
  VertexMask neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }

  // Index of {u, v} in edges(), or -1 when absent.
  int edge_index(Vertex u, Vertex v) const {
    if (u == v) return -1;
    if (u > v) std::swap(u, v);
    return index_[u * kMaxOrder + v];
  }

  VertexMask neighborhood(VertexMask set) const {
    VertexMask out = 0;
    for_each_vertex(set, [&](Vertex v) { out |= adj_[v]; });
    return out & ~set;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edge_list);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::array<VertexMask, kMaxOrder> adj_{};
  std::array<std::int8_t, kMaxOrder * kMaxOrder> index_{};
};

inline Graph build_graph(int n, std::span<const Edge> edge_list) {
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kOrderTooLarge,
                "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  if (n < 1) {
    throw Error(ErrorCode::kOrderTooSmall, "order must be at least 1");
  }
  Graph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (const Edge& raw : edge_list) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                      "} outside 0.." + std::to_string(n - 1));
    }
    if (raw.u == raw.v) {
      throw Error(ErrorCode::kLoop, "edge {" + std::to_string(raw.u) + "," +
                                        std::to_string(raw.v) + "}");
    }
    const Edge e = normalized(raw);
    if (g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    g.adj_[e.u] |= bit(e.v);
    g.adj_[e.v] |= bit(e.u);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.index_.fill(-1);
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    g.index_[g.edges_[i].u * kMaxOrder + g.edges_[i].v] = static_cast<std::int8_t>(i);
  }
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

inline Graph build_graph(int n, const std::vector<Edge>& edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list));
}

// Graph whose vertex perm[v] corresponds to vertex v of g.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> out;
  out.reserve(g.edges().size());
  for (const Edge& e : g.edges()) out.push_back(normalized({perm[e.u], perm[e.v]}));
  return build_graph(g.order(), out);
}

inline Graph with_edge(const Graph& g, Edge e) {
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  out.push_back(e);
  return build_graph(g.order(), out);
}

inline Graph without_edge(const Graph& g, Edge e) {
  e = normalized(e);
  std::vector<Edge> out;
  out.reserve(g.edges().size());
  for (const Edge& f : g.edges()) {
    if (f != e) out.push_back(f);
  }
  return build_graph(g.order(), out);
}

// Subgraph induced by `keep`, vertices renumbered in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexMask keep) {
  std::array<Vertex, kMaxOrder> remap{};
  int next = 0;
  for_each_vertex(keep, [&](Vertex v) { remap[v] = next++; });
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((keep & bit(e.u)) && (keep & bit(e.v))) out.push_back({remap[e.u], remap[e.v]});
  }
  return build_graph(next, out);
}

// ---------------------------------------------------------------------------
// Metrics

// Vertices reachable from `start` inside `allowed` (start must be allowed).
inline VertexMask reach(const Graph& g, Vertex start, VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected_set(const Graph& g, VertexMask set) {
  if (set == 0) return false;
  return reach(g, lowest(set), set) == set;
}

inline std::vector<int> distances_from(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.order()) {
    throw Error(ErrorCode::kVertexOutOfRange, "source " + std::to_string(source));
  }
  std::vector<int> dist(g.order(), kUnreachable);
  dist[source] = 0;
  VertexMask seen = bit(source);
  VertexMask frontier = seen;
  for (int level = 1; frontier != 0; ++level) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    next &= ~seen;
    for_each_vertex(next, [&](Vertex v) { dist[v] = level; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  return g.order() > 0 && reach(g, 0, g.vertices()) == g.vertices();
}

inline int component_count(const Graph& g) {
  int count = 0;
  VertexMask left = g.vertices();
  while (left != 0) {
    left &= ~reach(g, lowest(left), g.vertices());
    ++count;
  }
  return count;
}

// Eccentricity of v; nullopt when some vertex is unreachable.
inline std::optional<int> eccentricity(const Graph& g, Vertex v) {
  const auto dist = distances_from(g, v);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) return std::nullopt;
  return *std::max_element(dist.begin(), dist.end());
}

// nullopt stands for an infinite diameter (disconnected graph).
inline std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto ecc = eccentricity(g, v);
    if (!ecc) return std::nullopt;
    best = std::max(best, *ecc);
  }
  return best;
}

inline std::optional<int> radius(const Graph& g) {
  std::optional<int> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto ecc = eccentricity(g, v);
    if (!ecc) return std::nullopt;
    if (!best || *ecc < *best) best = ecc;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Bridges and blocks

namespace detail {

struct LowpointState {
  explicit LowpointState(const Graph& graph) : g(&graph) {}

  const Graph* g;
  std::array<int, kMaxOrder> disc{};
  std::array<int, kMaxOrder> low{};
  int clock = 0;
  std::vector<Edge> bridges;
  VertexMask cut_vertices = 0;
  std::vector<Edge> edge_stack;
  std::vector<VertexMask> blocks;

  void visit(Vertex v, Vertex parent) {
    disc[v] = low[v] = ++clock;
    int children = 0;
    for_each_vertex(g->neighbors(v), [&](Vertex w) {
      if (w == parent) return;
      if (disc[w] == 0) {
        ++children;
        edge_stack.push_back(normalized({v, w}));
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridges.push_back(normalized({v, w}));
        if (low[w] >= disc[v]) {
          if (parent != -1) cut_vertices |= bit(v);
          VertexMask block = 0;
          const Edge closing = normalized({v, w});
          while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            block |= bit(e.u) | bit(e.v);
            if (e == closing) break;
          }
          blocks.push_back(block);
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(normalized({v, w}));
        low[v] = std::min(low[v], disc[w]);
      }
    });
    if (parent == -1 && children > 1) cut_vertices |= bit(v);
  }

  void run() {
    for (Vertex v = 0; v < g->order(); ++v) {
      if (disc[v] == 0) {
        visit(v, -1);
        if (g->degree(v) == 0) blocks.push_back(bit(v));
      }
    }
  }
};

}  // namespace detail

// Cut edges, lexicographically ordered.
inline std::vector<Edge> bridges(const Graph& g) {
  detail::LowpointState state(g);
  state.run();
  std::sort(state.bridges.begin(), state.bridges.end());
  return state.bridges;
}

// Connected with no cut edge; K1 qualifies.
inline bool is_bridgeless(const Graph& g) {
  return is_connected(g) && bridges(g).empty();
}

struct BlockDecomposition {
  VertexMask cut_vertices = 0;
  // Vertex sets of the blocks, sorted by mask value.
  std::vector<VertexMask> blocks;
};

inline BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "block decomposition needs a connected graph");
  }
  detail::LowpointState state(g);
  state.run();
  std::sort(state.blocks.begin(), state.blocks.end());
  return {state.cut_vertices, std::move(state.blocks)};
}

inline bool has_cut_vertex(const Graph& g) {
  detail::LowpointState state(g);
  state.run();
  return state.cut_vertices != 0;
}

inline bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && !has_cut_vertex(g);
}

// ---------------------------------------------------------------------------
// Operations

// Disjoint union of g and h plus every edge between them; h is shifted by n(g).
inline Graph join(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) {
    throw Error(ErrorCode::kOrderTooLarge, "join of order " + std::to_string(n));
  }
  std::vector<Edge> out(g.edges().begin(), g.edges().end());
  const int shift = g.order();
  for (const Edge& e : h.edges()) out.push_back({e.u + shift, e.v + shift});
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.push_back({u, v + shift});
  }
  return build_graph(n, out);
}

}  // namespace rcop
