#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "rcop/graph.hpp"

namespace rcop {

enum class MinorPattern { kK4, kK23 };

// Branch sets realizing a forbidden minor. For K4 all four sets are pairwise
// linked; for K2,3 the first two sets are the small side and each of them is
// linked to each of the last three.
struct MinorWitness {
  MinorPattern pattern = MinorPattern::kK4;
  std::vector<VertexMask> branch_sets;
};

inline bool sets_linked(const Graph& g, VertexMask a, VertexMask b) {
  return (g.neighborhood(a) & b) != 0;
}

// Checks disjointness, connectivity and the linkage required by the pattern.
inline bool is_valid_witness(const Graph& g, const MinorWitness& w) {
  const auto& sets = w.branch_sets;
  const std::size_t want = w.pattern == MinorPattern::kK4 ? 4 : 5;
  if (sets.size() != want) return false;
  VertexMask used = 0;
  for (VertexMask s : sets) {
    if ((s & ~g.vertices()) != 0 || (s & used) != 0 || !is_connected_set(g, s)) return false;
    used |= s;
  }
  if (w.pattern == MinorPattern::kK4) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        if (!sets_linked(g, sets[i], sets[j])) return false;
      }
    }
    return true;
  }
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 2; b < 5; ++b) {
      if (!sets_linked(g, sets[a], sets[b])) return false;
    }
  }
  return true;
}

namespace detail {

// Calls visit(S) for every connected S with start in S and S within allowed.
// Each such set is produced exactly once; visit returns true to stop early.
template <typename Visit>
bool for_each_connected_superset(const Graph& g, VertexMask set, VertexMask allowed,
                                 VertexMask excluded, Visit& visit) {
  if (visit(set)) return true;
  VertexMask cand = g.neighborhood(set) & allowed & ~excluded;
  VertexMask done = 0;
  while (cand != 0) {
    const Vertex v = lowest(cand);
    cand &= cand - 1;
    if (for_each_connected_superset(g, set | bit(v), allowed, excluded | done, visit)) return true;
    done |= bit(v);
  }
  return false;
}

// Searches partitions of a connected vertex set into `parts` connected
// pieces, pieces ordered by their lowest vertex. Any minor model inside a
// connected graph extends to one whose branch sets cover every vertex, so
// partitions are enough. `compatible` prunes a partial partition after each
// new piece; `accept` tests a complete one.
template <typename Compatible, typename Accept>
bool search_partitions(const Graph& g, VertexMask rest, int parts,
                       std::vector<VertexMask>& chosen, Compatible& compatible, Accept& accept) {
  if (static_cast<int>(chosen.size()) == parts - 1) {
    if (rest == 0 || !is_connected_set(g, rest)) return false;
    chosen.push_back(rest);
    const bool ok = compatible(chosen) && accept(chosen);
    if (!ok) chosen.pop_back();
    return ok;
  }
  const Vertex root = lowest(rest);
  auto visit = [&](VertexMask piece) {
    const VertexMask left = rest & ~piece;
    if (popcount(left) < parts - 1 - static_cast<int>(chosen.size())) return false;
    chosen.push_back(piece);
    if (compatible(chosen) &&
        search_partitions(g, left, parts, chosen, compatible, accept)) {
      return true;
    }
    chosen.pop_back();
    return false;
  };
  return for_each_connected_superset(g, bit(root), rest, 0, visit);
}

inline std::vector<VertexMask> components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.vertices();
  while (left != 0) {
    const VertexMask c = reach(g, lowest(left), g.vertices());
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline std::optional<MinorWitness> k4_in_component(const Graph& g, VertexMask component) {
  if (popcount(component) < 4) return std::nullopt;
  auto compatible = [&](const std::vector<VertexMask>& sets) {
    const VertexMask last = sets.back();
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
      if (!sets_linked(g, sets[i], last)) return false;
    }
    return true;
  };
  auto accept = [](const std::vector<VertexMask>&) { return true; };
  std::vector<VertexMask> chosen;
  if (!search_partitions(g, component, 4, chosen, compatible, accept)) return std::nullopt;
  return MinorWitness{MinorPattern::kK4, chosen};
}

inline std::optional<MinorWitness> k23_in_component(const Graph& g, VertexMask component) {
  if (popcount(component) < 5) return std::nullopt;
  std::vector<VertexMask> found;
  auto compatible = [](const std::vector<VertexMask>&) { return true; };
  auto accept = [&](const std::vector<VertexMask>& sets) {
    std::array<unsigned, 5> linked{};
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        if (i != j && sets_linked(g, sets[i], sets[j])) linked[i] |= 1U << j;
      }
    }
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        const unsigned others = 0x1FU & ~(1U << a) & ~(1U << b);
        if ((linked[a] & others) == others && (linked[b] & others) == others) {
          found = {sets[a], sets[b]};
          for (int k = 0; k < 5; ++k) {
            if (k != a && k != b) found.push_back(sets[k]);
          }
          return true;
        }
      }
    }
    return false;
  };
  std::vector<VertexMask> chosen;
  if (!search_partitions(g, component, 5, chosen, compatible, accept)) return std::nullopt;
  return MinorWitness{MinorPattern::kK23, found};
}

}  // namespace detail

inline std::optional<MinorWitness> find_k4_minor(const Graph& g) {
  for (VertexMask c : detail::components(g)) {
    if (auto w = detail::k4_in_component(g, c)) return w;
  }
  return std::nullopt;
}

inline std::optional<MinorWitness> find_k23_minor(const Graph& g) {
  for (VertexMask c : detail::components(g)) {
    if (auto w = detail::k23_in_component(g, c)) return w;
  }
  return std::nullopt;
}

// Outerplanarity decided by the two minor searches alone.
inline bool is_outerplanar_by_minors(const Graph& g) {
  return !find_k4_minor(g) && !find_k23_minor(g);
}

inline bool is_outerplanar(const Graph& g) {
  const int n = g.order();
  if (n >= 2 && g.size() > 2 * n - 3 && is_connected(g)) return false;
  return is_outerplanar_by_minors(g);
}

// Maximality checked by definition: every missing edge breaks outerplanarity.
inline bool is_mop(const Graph& g) {
  if (g.order() < 3 || !is_outerplanar(g)) return false;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v) && is_outerplanar(with_edge(g, {u, v}))) return false;
    }
  }
  return true;
}

namespace detail {

// Hamiltonian cycles through vertex 0, each reported once: the vertex after 0
// is smaller than the vertex before it.
template <typename Visit>
void for_each_hamiltonian_cycle(const Graph& g, Visit&& visit) {
  const int n = g.order();
  if (n < 3) return;
  std::vector<Vertex> path{0};
  auto extend = [&](auto& self, VertexMask used) -> bool {
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.has_edge(tail, 0) && path[1] < path.back()) return visit(path);
      return false;
    }
    VertexMask next = g.neighbors(tail) & ~used;
    while (next != 0) {
      const Vertex v = lowest(next);
      next &= next - 1;
      path.push_back(v);
      if (self(self, used | bit(v))) return true;
      path.pop_back();
    }
    return false;
  };
  extend(extend, bit(0));
}

}  // namespace detail

inline int hamiltonian_cycle_count(const Graph& g) {
  int count = 0;
  detail::for_each_hamiltonian_cycle(g, [&](const std::vector<Vertex>&) {
    ++count;
    return false;
  });
  return count;
}

// Boundary of the outer face of a 2-connected outerplanar graph, starting at
// vertex 0 and heading to its smaller cycle neighbour.
inline std::optional<std::vector<Vertex>> outer_cycle(const Graph& g) {
  if (!is_two_connected(g) || !is_outerplanar(g)) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  detail::for_each_hamiltonian_cycle(g, [&](const std::vector<Vertex>& cycle) {
    found = cycle;
    return true;
  });
  return found;
}

}  // namespace rcop
