#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "rcop/error.hpp"
#include "rcop/graph.hpp"
#include "rcop/graph6.hpp"
#include "rcop/rainbow.hpp"

namespace rcop {

enum class GraphFormat { kEdgeList, kGraph6 };

namespace detail {

struct Token {
  int value;
  std::size_t column;  // 1-based
};

[[noreturn]] inline void fail_at(ErrorCode code, std::size_t line, std::size_t column,
                                 const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        what);
}

// Splits LF-terminated text into lines; a final LF does not open a new line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Exactly `count` non-negative integers separated by spaces or tabs.
inline std::vector<Token> parse_ints(std::string_view line, std::size_t line_no, std::size_t count) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (c == '\r') fail_at(ErrorCode::kParse, line_no, i + 1, "carriage return (LF line endings only)");
    if (c < '0' || c > '9') {
      fail_at(ErrorCode::kParse, line_no, i + 1, std::string("unexpected character '") + c + "'");
    }
    std::size_t j = i;
    while (j < line.size() && line[j] >= '0' && line[j] <= '9') ++j;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc()) fail_at(ErrorCode::kParse, line_no, i + 1, "integer out of range");
    out.push_back({value, i + 1});
    i = j;
  }
  if (out.size() != count) {
    fail_at(ErrorCode::kParse, line_no, out.size() < count ? line.size() + 1 : out[count].column,
            "expected " + std::to_string(count) + " integers, found " + std::to_string(out.size()));
  }
  return out;
}

}  // namespace detail

// First line "n m", then m lines "u v".
inline Graph parse_edge_list(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) detail::fail_at(ErrorCode::kParse, 1, 1, "missing header \"n m\"");
  const auto header = detail::parse_ints(lines[0], 1, 2);
  const int n = header[0].value;
  const int m = header[1].value;
  if (n > kMaxOrder) {
    detail::fail_at(ErrorCode::kOrderTooLarge, 1, header[0].column,
                    "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  if (n < 1) detail::fail_at(ErrorCode::kOrderTooSmall, 1, header[0].column, "order must be at least 1");
  if (static_cast<std::size_t>(m) != lines.size() - 1) {
    detail::fail_at(ErrorCode::kParse, 1, header[1].column,
                    "header announces " + std::to_string(m) + " edges, file has " +
                        std::to_string(lines.size() - 1) + " edge lines");
  }
  std::vector<Edge> edges;
  std::vector<bool> present(kMaxOrder * kMaxOrder, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto t = detail::parse_ints(lines[i], i + 1, 2);
    for (const auto& tok : t) {
      if (tok.value >= n) {
        detail::fail_at(ErrorCode::kVertexOutOfRange, i + 1, tok.column,
                        "vertex " + std::to_string(tok.value) + " outside 0.." + std::to_string(n - 1));
      }
    }
    if (t[0].value == t[1].value) {
      detail::fail_at(ErrorCode::kLoop, i + 1, t[1].column,
                      "loop at vertex " + std::to_string(t[0].value));
    }
    const Edge e = normalized({t[0].value, t[1].value});
    if (present[e.u * kMaxOrder + e.v]) {
      detail::fail_at(ErrorCode::kDuplicateEdge, i + 1, t[0].column,
                      "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " repeated");
    }
    present[e.u * kMaxOrder + e.v] = true;
    edges.push_back(e);
  }
  return build_graph(n, edges);
}

inline std::string render_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.find('\n') != std::string_view::npos) {
    throw Error(ErrorCode::kParse, "graph6 input must be a single line");
  }
  return from_graph6(text);
}

inline std::string render_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::kEdgeList) return render_edge_list(g);
  return to_graph6(g) + "\n";
}

// Lines "u v c" covering every edge of g exactly once. The color count is
// one more than the largest color.
inline EdgeColoring parse_coloring(std::string_view text, const Graph& g) {
  const auto lines = detail::split_lines(text);
  std::vector<int> colors(g.size(), -1);
  int top = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto t = detail::parse_ints(lines[i], i + 1, 3);
    const int index = (t[0].value < g.order() && t[1].value < g.order())
                          ? g.edge_index(t[0].value, t[1].value)
                          : -1;
    if (index < 0) {
      detail::fail_at(ErrorCode::kColoringMismatch, i + 1, t[0].column,
                      std::to_string(t[0].value) + " " + std::to_string(t[1].value) +
                          " is not an edge of the graph");
    }
    if (colors[index] >= 0) {
      detail::fail_at(ErrorCode::kColoringMismatch, i + 1, t[0].column, "edge colored twice");
    }
    if (t[2].value >= kMaxColors) {
      detail::fail_at(ErrorCode::kColoringMismatch, i + 1, t[2].column,
                      "color " + std::to_string(t[2].value) + " exceeds " + std::to_string(kMaxColors - 1));
    }
    colors[index] = t[2].value;
    top = std::max(top, t[2].value);
  }
  for (int e = 0; e < g.size(); ++e) {
    if (colors[e] < 0) {
      throw Error(ErrorCode::kColoringMismatch, "edge " + std::to_string(g.edge(e).u) + " " +
                                                    std::to_string(g.edge(e).v) + " has no color");
    }
  }
  return make_coloring(g, std::move(colors), top + 1);
}

inline std::string render_coloring(const Graph& g, const EdgeColoring& c) {
  std::string out;
  for (int e = 0; e < g.size(); ++e) {
    out += std::to_string(g.edge(e).u) + " " + std::to_string(g.edge(e).v) + " " +
           std::to_string(c.colors[e]) + "\n";
  }
  return out;
}

}  // namespace rcop
