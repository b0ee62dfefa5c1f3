#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace cwc {

inline constexpr int kGraph6MaxVertices = 258047;

/// Decodes one canonical graph6 word (no trailing newline).
inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 word", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("byte outside graph6 range", i);
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~') throw ParseError("8-byte graph6 header not supported", 1);
    if (text.size() < 4) throw ParseError("truncated graph6 size header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | (text[i] - 63);
    if (n < 63) throw ParseError("non-canonical long-form size header", 1);
    pos = 4;
  }
  if (n > kMaxVertices) throw ParseError("graph with " + std::to_string(n) + " vertices exceeds the toolkit cap", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos < need) throw ParseError("truncated graph6 bit section", text.size());
  if (text.size() - pos > need) throw ParseError("trailing bytes after graph6 bit section", pos + need);

  GraphBuilder b(static_cast<int>(n));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  // padding bits must be zero in the canonical form
  if (bits % 6) {
    int last = text[pos + need - 1] - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("non-zero graph6 padding bits", pos + need - 1);
  }
  return b.build();
}

inline std::string write_graph6(const Graph& g) {
  const long n = g.n();
  if (n > kGraph6MaxVertices) throw std::invalid_argument("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Plain edge list: "n m" then m lines "u v", 0-indexed.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  auto es = g.edges();
  os << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    std::size_t start = pos;
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 100000000) throw ParseError(std::string(what) + " too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    return v;
  };
  long n = read_int("vertex count");
  long m = read_int("edge count");
  if (n > kMaxVertices) throw ParseError("vertex count exceeds the toolkit cap", 0);
  GraphBuilder b(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    std::size_t at = pos;
    long u = read_int("edge endpoint"), v = read_int("edge endpoint");
    if (u >= n || v >= n) throw ParseError("edge endpoint out of range", at);
    if (u == v) throw ParseError("self-loop", at);
    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing content after edge list", pos);
  return b.build();
}

/// Reads a graph file: graph6 if the first byte is in the graph6 range,
/// otherwise an edge list. Multi-graph graph6 files yield one graph per line.
inline std::vector<Graph> parse_graph_file(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
  if (start == text.size()) throw ParseError("empty graph file", 0);
  std::vector<Graph> out;
  if (static_cast<unsigned char>(text[start]) >= 63) {
    std::size_t line_start = 0;
    while (line_start < text.size()) {
      std::size_t end = text.find('\n', line_start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(line_start, end - line_start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) {
        try {
          out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
          throw ParseError(e.reason(), line_start + e.offset());
        }
      }
      line_start = end + 1;
    }
  } else {
    out.push_back(parse_edge_list(text));
  }
  return out;
}

}  // namespace cwc
