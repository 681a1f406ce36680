#include "cyclebound/graph6.hpp"

namespace cyclebound {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int decode_char(std::string_view text, std::size_t at) {
  const auto c = static_cast<unsigned char>(text[at]);
  if (c < 63 || c > 126) throw Graph6Error(at, "character out of range");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (pos >= text.size()) throw Graph6Error(pos, "missing header byte");

  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      throw Graph6Error(pos + 1, "orders above 258047 are not supported");
    }
    if (pos + 4 > text.size()) throw Graph6Error(text.size(), "truncated order field");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | decode_char(text, pos + static_cast<std::size_t>(k));
    pos += 4;
  } else {
    n = decode_char(text, pos);
    if (n == 63) throw Graph6Error(pos, "malformed header byte");
    pos += 1;
  }
  if (n > kMaxVertices) {
    throw Graph6Error(pos - 1, "order " + std::to_string(n) + " exceeds the 64-vertex cap");
  }

  const auto order = static_cast<int>(n);
  const std::size_t bits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - (order > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw Graph6Error(text.size(), "truncated bit payload");
  if (text.size() - pos > bytes) throw Graph6Error(pos + bytes, "trailing bytes after payload");

  Graph g(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = decode_char(text, pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bytes > 0 && bits % 6 != 0) {
    const int last = decode_char(text, pos + bytes - 1);
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw Graph6Error(pos + bytes - 1, "nonzero padding bits");
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace cyclebound
