#pragma once

// graph6 codec, bit-exact per the published format: size header in 63-offset
// sextets (1, 4, or 8 bytes), then the upper triangle column-major, packed
// 6 bits per byte, zero-padded. Also a plain "n m" + "u v" edge-list text
// format and a sniffing reader that picks between the two.

#include <cctype>
#include <string>
#include <string_view>

#include "flowers/graph.hpp"

namespace flowers {

enum class GraphFormat { Graph6, EdgeList };

inline std::string graph6_encode(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else if (n <= 68719476735LL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw input_error("graph too large for graph6");
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

inline Graph graph6_decode(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw parse_error("empty graph6 string", base);

  std::size_t pos = 0;
  auto sextet = [&](const char* what) -> long long {
    if (pos >= text.size()) throw parse_error(std::string("truncated ") + what, base + pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw parse_error(std::string("invalid byte in ") + what, base + pos);
    ++pos;
    return c - 63;
  };

  long long n;
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = sextet("size header");
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
    pos = 2;
    n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | sextet("size header");
  } else {
    pos = 1;
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | sextet("size header");
  }
  if (n > 1'000'000) throw parse_error("graph6 order too large", base);

  Graph g(static_cast<int>(n));
  long long bits_needed = n * (n - 1) / 2;
  int acc = 0, have = 0;
  long long bit = 0;
  int u = 0, v = 1;
  while (bit < bits_needed) {
    if (have == 0) {
      acc = static_cast<int>(sextet("bit vector"));
      have = 6;
    }
    if ((acc >> (have - 1)) & 1) g.add_edge(u, v);
    --have;
    ++bit;
    if (++u == v) {
      u = 0;
      ++v;
    }
  }
  if (have > 0 && (acc & ((1 << have) - 1)) != 0)
    throw parse_error("nonzero padding bits", base + pos - 1);
  if (pos != text.size()) throw parse_error("trailing bytes after graph6 data", base + pos);
  return g;
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

inline Graph read_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r'))
      ++pos;
  };
  auto read_int = [&](const char* what) -> long long {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw parse_error(std::string("expected ") + what, start);
    long long value = 0;
    for (std::size_t i = start; i < pos; ++i) {
      value = value * 10 + (text[i] - '0');
      if (value > 100'000'000) throw parse_error(std::string(what) + " out of range", start);
    }
    return value;
  };

  long long n = read_int("vertex count");
  long long m = read_int("edge count");
  if (n > 1'000'000) throw parse_error("vertex count out of range", 0);
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    std::size_t at = pos;
    long long u = read_int("edge endpoint");
    long long v = read_int("edge endpoint");
    if (u >= n || v >= n) throw parse_error("vertex id out of range", at);
    if (u == v) throw parse_error("self loop", at);
    if (!g.add_edge(static_cast<int>(u), static_cast<int>(v)))
      throw parse_error("duplicate edge", at);
  }
  skip_ws();
  if (pos != text.size()) throw parse_error("trailing data after declared edges", pos);
  return g;
}

// Edge list iff the first line is exactly two decimal integers.
inline std::pair<Graph, GraphFormat> read_graph_auto(std::string_view text) {
  std::size_t eol = text.find('\n');
  std::string_view first = text.substr(0, eol == std::string_view::npos ? text.size() : eol);
  int ints = 0;
  bool ok = !first.empty(), in_num = false;
  for (char c : first) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!in_num) {
        in_num = true;
        ++ints;
      }
    } else if (c == ' ' || c == '\t' || c == '\r') {
      in_num = false;
    } else {
      ok = false;
      break;
    }
  }
  if (ok && ints == 2) return {read_edge_list(text), GraphFormat::EdgeList};
  return {graph6_decode(text), GraphFormat::Graph6};
}

}  // namespace flowers
