#include "glpt/graph6.hpp"

#include <cstdint>
#include <vector>

#include "glpt/errors.hpp"

namespace glpt {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::string_view kSparse6Header = ">>sparse6<<";

std::string_view strip_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Reads N(n) starting at `pos`; advances pos. `base` is the offset of s[0]
// within the original line, for error reporting.
int read_order(std::string_view s, std::size_t& pos, std::size_t base) {
  auto byte_at = [&](std::size_t i) -> int {
    if (i >= s.size()) throw ParseError("truncated size header", base + i);
    const int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("character out of range in size header", base + i);
    return c - 63;
  };
  const int first = byte_at(pos);
  if (first < 63) {
    ++pos;
    return first;
  }
  if (pos + 1 < s.size() && s[pos + 1] == '~')
    throw ParseError("8-byte size header: graph exceeds 512 vertices", base + pos);
  long n = 0;
  for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte_at(pos + i);
  if (n < 63) throw ParseError("non-canonical long size header", base + pos);
  pos += 4;
  if (n > kMaxVertices)
    throw ParseError("graph with " + std::to_string(n) + " vertices exceeds 512", base + pos - 4);
  return static_cast<int>(n);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip_line_end(text);
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);
  std::size_t pos = 0;
  const int n = read_order(text, pos, base);
  if (n == 0) throw ParseError("graph6 string encodes an empty graph", base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t want = (bits + 5) / 6;
  const std::size_t have = text.size() - pos;
  if (have < want) throw ParseError("truncated edge data", base + text.size());
  if (have > want) throw ParseError("trailing characters after edge data", base + pos + want);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + k / 6;
      const int c = static_cast<unsigned char>(text[at]);
      if (c < 63 || c > 126) throw ParseError("character out of range", base + at);
      if (((c - 63) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (want > 0) {
    const std::size_t at = pos + want - 1;
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("character out of range", base + at);
    const std::size_t pad = want * 6 - bits;
    if (((c - 63) & ((1 << pad) - 1)) != 0)
      throw ParseError("nonzero padding bits", base + at);
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph parse_sparse6(std::string_view text) {
  text = strip_line_end(text);
  std::size_t base = 0;
  if (text.starts_with(kSparse6Header)) {
    text.remove_prefix(kSparse6Header.size());
    base = kSparse6Header.size();
  }
  if (text.empty() || text.front() != ':') throw ParseError("sparse6 string must start with ':'", base);
  std::size_t pos = 1;
  const int n = read_order(text, pos, base);
  if (n == 0) throw ParseError("sparse6 string encodes an empty graph", base);
  int k = 0;
  while ((1 << k) < n) ++k;

  std::vector<int> bits;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("character out of range", base + i);
    for (int b = 5; b >= 0; --b) bits.push_back(((c - 63) >> b) & 1);
  }
  std::vector<Edge> edges;
  std::size_t at = 0;
  int v = 0;
  while (at + 1 + static_cast<std::size_t>(k) <= bits.size()) {
    const int b = bits[at++];
    int x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | bits[at++];
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw ParseError("sparse6 loop edge is not a simple graph", base + pos + (at - 1) / 6);
      edges.emplace_back(x, v);
    }
  }
  return Graph(n, edges);
}

Graph parse_graph_line(std::string_view text) {
  if (text.starts_with(':') || text.starts_with(kSparse6Header)) return parse_sparse6(text);
  return parse_graph6(text);
}

}  // namespace glpt
