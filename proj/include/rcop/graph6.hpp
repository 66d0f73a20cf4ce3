#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rcop/error.hpp"
#include "rcop/graph.hpp"

namespace rcop {

// graph6: one byte n+63, then the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte
// (big-endian within the byte, value+63), zero padded.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  auto fail = [](std::size_t column, const std::string& what) -> Error {
    return Error(ErrorCode::kParse, "graph6 column " + std::to_string(column + 1) + ": " + what);
  };
  if (text.starts_with(">>")) throw fail(0, "header '>>graph6<<' is not accepted");
  if (text.empty()) throw fail(0, "empty input");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw fail(i, "byte " + std::to_string(c) + " outside 63..126");
  }
  if (text[0] == '~') throw fail(0, "order exceeds " + std::to_string(kMaxOrder));
  const int n = text[0] - 63;
  if (n > kMaxOrder) throw fail(0, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  if (n < 1) throw fail(0, "order must be at least 1");
  const int bit_count = n * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((bit_count + 5) / 6);
  if (text.size() != expected) {
    throw fail(std::min(text.size(), expected),
               "expected " + std::to_string(expected) + " bytes, got " + std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  int index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      const int byte = text[1 + index / 6] - 63;
      if ((byte >> (5 - index % 6)) & 1) edges.push_back({i, j});
    }
  }
  for (; index % 6 != 0; ++index) {
    const int byte = text[1 + index / 6] - 63;
    if ((byte >> (5 - index % 6)) & 1) throw fail(1 + index / 6, "nonzero padding bit");
  }
  return build_graph(n, edges);
}

}  // namespace rcop
