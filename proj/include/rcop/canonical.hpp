#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rcop/graph.hpp"
#include "rcop/graph6.hpp"

namespace rcop {

// Isomorphism-complete code: the graph6 string of a canonical relabeling.
// Codes of equal order compare like the canonical adjacency bit strings.
struct CanonicalCode {
  std::string bytes;
  int order = 0;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (auto c = a.order <=> b.order; c != 0) return c;
    return a.bytes.compare(b.bytes) <=> 0;
  }
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};

namespace detail {

// Iterated degree refinement. Colors are ranks of isomorphism-invariant
// signatures, so equal graphs up to relabeling get equal color multisets.
inline std::array<int, kMaxOrder> refined_colors(const Graph& g) {
  const int n = g.order();
  std::array<int, kMaxOrder> color{};
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.push_back(color[v]);
      for_each_vertex(g.neighbors(v), [&](Vertex w) { sig.push_back(color[w]); });
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

// Branch and bound over vertex orders that respect the refined cells. Row j
// holds the adjacency bits between position j and positions 0..j-1, read as
// an integer with position 0 as the most significant bit.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    const auto color = refined_colors(g);
    std::array<Vertex, kMaxOrder> by_color{};
    for (Vertex v = 0; v < n_; ++v) by_color[v] = v;
    std::sort(by_color.begin(), by_color.begin() + n_,
              [&](Vertex a, Vertex b) { return color[a] != color[b] ? color[a] < color[b] : a < b; });
    for (int pos = 0; pos < n_; ++pos) {
      cell_at_[pos] = 0;
      for (int q = 0; q < n_; ++q) {
        if (color[q] == color[by_color[pos]]) cell_at_[pos] |= bit(q);
      }
    }
  }

  // position -> vertex
  std::array<Vertex, kMaxOrder> run() {
    if (n_ > 0) descend(0, 0, false);
    return best_perm_;
  }

 private:
  void descend(int pos, VertexMask placed, bool below) {
    if (pos == n_) {
      if (below || !have_best_) {
        have_best_ = true;
        ++updates_;
        best_rows_ = rows_;
        best_perm_ = perm_;
      }
      return;
    }
    struct Candidate {
      std::uint32_t row;
      Vertex v;
    };
    std::array<Candidate, kMaxOrder> cands{};
    int count = 0;
    for_each_vertex(cell_at_[pos] & ~placed, [&](Vertex v) {
      std::uint32_t row = 0;
      for (int i = 0; i < pos; ++i) row = (row << 1) | (g_.has_edge(perm_[i], v) ? 1U : 0U);
      cands[count++] = {row, v};
    });
    std::sort(cands.begin(), cands.begin() + count, [](const Candidate& a, const Candidate& b) {
      return a.row != b.row ? a.row < b.row : a.v < b.v;
    });
    VertexMask tried = 0;
    for (int c = 0; c < count; ++c) {
      const Vertex v = cands[c].v;
      if (twin_of_tried(v, tried)) continue;
      tried |= bit(v);
      bool child_below = below || !have_best_;
      if (!child_below) {
        if (cands[c].row > best_rows_[pos]) break;
        child_below = cands[c].row < best_rows_[pos];
      }
      perm_[pos] = v;
      rows_[pos] = cands[c].row;
      const int updates = updates_;
      descend(pos + 1, placed | bit(v), child_below);
      // Any new best shares this prefix, so later siblings compare against it.
      if (updates_ != updates) below = false;
    }
  }

  // Two twins (same neighbourhood apart from each other) are swapped by an
  // automorphism fixing everything else, so only one of them needs a branch.
  bool twin_of_tried(Vertex v, VertexMask tried) const {
    bool found = false;
    for_each_vertex(tried, [&](Vertex t) {
      if ((g_.neighbors(t) & ~bit(v)) == (g_.neighbors(v) & ~bit(t))) found = true;
    });
    return found;
  }

  const Graph& g_;
  int n_;
  std::array<VertexMask, kMaxOrder> cell_at_{};
  std::array<Vertex, kMaxOrder> perm_{};
  std::array<std::uint32_t, kMaxOrder> rows_{};
  std::array<Vertex, kMaxOrder> best_perm_{};
  std::array<std::uint32_t, kMaxOrder> best_rows_{};
  bool have_best_ = false;
  int updates_ = 0;
};

}  // namespace detail

// Canonical relabeling: vertex v of g becomes labeling[v].
inline std::array<Vertex, kMaxOrder> canonical_labeling(const Graph& g) {
  const auto order = detail::CanonicalSearch(g).run();
  std::array<Vertex, kMaxOrder> labeling{};
  for (int pos = 0; pos < g.order(); ++pos) labeling[order[pos]] = pos;
  return labeling;
}

inline Graph canonical_form(const Graph& g) {
  const auto labeling = canonical_labeling(g);
  return relabel(g, std::span<const Vertex>(labeling.data(), g.order()));
}

inline CanonicalCode canonical_code(const Graph& g) {
  return {to_graph6(canonical_form(g)), g.order()};
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_code(g) == canonical_code(h);
}

}  // namespace rcop
