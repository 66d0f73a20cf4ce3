#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rcop/error.hpp"
#include "rcop/graph.hpp"
#include "rcop/recognition.hpp"

namespace rcop {

inline Graph cycle(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return build_graph(n, edges);
}

inline Graph path(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return build_graph(n, edges);
}

inline Graph complete(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

// Sides 0..s-1 and s..s+t-1.
inline Graph complete_bipartite(int s, int t) {
  if (s < 1 || t < 1) throw Error(ErrorCode::kInvalidArgument, "both sides need a vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < s; ++u) {
    for (Vertex v = 0; v < t; ++v) edges.push_back({u, s + v});
  }
  return build_graph(s + t, edges);
}

// P_n joined with K_1: path vertices 0..n-1, hub n.
inline Graph fan(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "fan needs n >= 2");
  return join(path(n), complete(1));
}

// Two triangles sharing vertex 2.
inline Graph bowtie() {
  return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline Graph attach_vertex_to_adjacent_pair(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const Vertex fresh = g.order();
  edges.push_back({u, fresh});
  edges.push_back({v, fresh});
  return build_graph(g.order() + 1, edges);
}

// Recursive MOP construction: start from the triangle 0,1,2; step i joins
// vertex 3+i to both ends of an edge of the current outer face.
struct MopConstruction {
  std::vector<Edge> steps;
};

struct BuiltMop {
  Graph graph;
  // Outer face as a cyclic vertex sequence.
  std::vector<Vertex> outer;
};

inline BuiltMop build_mop_with_outer_face(const MopConstruction& c) {
  std::vector<Vertex> outer{0, 1, 2};
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  Vertex next = 3;
  for (const Edge& step : c.steps) {
    const std::size_t len = outer.size();
    std::optional<std::size_t> insert_at;
    for (std::size_t i = 0; i < len && !insert_at; ++i) {
      if (normalized({outer[i], outer[(i + 1) % len]}) == normalized(step)) insert_at = i + 1;
    }
    if (!insert_at) {
      throw Error(ErrorCode::kNotOnOuterFace,
                  "{" + std::to_string(step.u) + "," + std::to_string(step.v) + "}");
    }
    if (next >= kMaxOrder) throw Error(ErrorCode::kOrderTooLarge, "MOP construction too long");
    edges.push_back({step.u, next});
    edges.push_back({step.v, next});
    outer.insert(outer.begin() + static_cast<std::ptrdiff_t>(*insert_at), next);
    ++next;
  }
  return {build_graph(next, edges), std::move(outer)};
}

inline Graph build_mop(const MopConstruction& c) { return build_mop_with_outer_face(c).graph; }

}  // namespace rcop
