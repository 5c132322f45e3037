#include "factorcover/graph6.hpp"

namespace fcover {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126)
    throw Graph6Error(Graph6Error::Kind::InvalidCharacter,
                      "graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                          " outside printable range 63..126");
  return c - 63;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: empty record");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw Graph6Error(Graph6Error::Kind::OrderTooLarge, "graph6: orders above 258047 unsupported");
    if (text.size() < 4)
      throw Graph6Error(Graph6Error::Kind::MalformedHeader, "graph6: truncated long-form order");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63)
      throw Graph6Error(Graph6Error::Kind::MalformedHeader,
                        "graph6: long-form order " + std::to_string(n) + " should use short form");
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > kMaxOrder)
    throw Graph6Error(Graph6Error::Kind::OrderTooLarge,
                      "graph6: order " + std::to_string(n) + " exceeds supported maximum 64");

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  const long actual = static_cast<long>(text.size() - pos);
  if (actual != expected)
    throw Graph6Error(Graph6Error::Kind::LengthMismatch,
                      "graph6: expected " + std::to_string(expected) + " data bytes for order " +
                          std::to_string(n) + ", found " + std::to_string(actual));

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int byte = sextet(text[pos + k / 6]);
    const int pad_mask = (1 << (6 - k % 6)) - 1;
    if (byte & pad_mask)
      throw Graph6Error(Graph6Error::Kind::TrailingBits, "graph6: nonzero padding bits");
  }
  for (long i = pos + k / 6 + (k % 6 != 0); i < static_cast<long>(text.size()); ++i) sextet(text[i]);
  return g;
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
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

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const Graph6Error& e) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace fcover
