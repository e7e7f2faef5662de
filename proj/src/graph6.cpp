#include "indseq/graph6.hpp"

#include "indseq/errors.hpp"

namespace indseq {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph read_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  int n = 0;
  std::size_t at = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    at = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw ParseError("graph6: unsupported vertex count");
    }
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    at = 4;
  }
  if (n < 1 || n > kMaxVertices) {
    throw ParseError("graph6: vertex count must be in [1, 64]");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() - at != (bits + 5) / 6) {
    throw ParseError("graph6: wrong length for " + std::to_string(n) +
                     " vertices");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[at + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  const int tail = static_cast<int>(bits % 6);
  if (tail != 0 && ((text.back() - 63) & ((1 << (6 - tail)) - 1)) != 0) {
    throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

}  // namespace indseq
