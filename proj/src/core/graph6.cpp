#include <string>

#include "domlab/errors.hpp"
#include "domlab/graph.hpp"

namespace domlab {

namespace {

constexpr int kBias = 63;
constexpr char kLongForm = 126;

int six_bits(std::string_view text, std::size_t at) {
  const int c = static_cast<unsigned char>(text[at]);
  if (c < 63 || c > 126) {
    throw FormatError("graph6: byte " + std::to_string(c) + " outside printable range 63..126", at);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw FormatError("graph6: missing order byte", pos);

  long long n = 0;
  if (text[pos] == kLongForm) {
    ++pos;
    if (pos < text.size() && text[pos] == kLongForm) {
      throw FormatError("graph6: order exceeds 256", pos);
    }
    if (pos + 3 > text.size()) throw FormatError("graph6: truncated long order header", text.size());
    for (int i = 0; i < 3; ++i) n = (n << 6) | six_bits(text, pos++);
  } else {
    n = six_bits(text, pos++);
  }
  if (n > Graph::kMaxOrder) {
    throw FormatError("graph6: order " + std::to_string(n) + " exceeds 256", pos - 1);
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + body) {
    throw FormatError("graph6: expected " + std::to_string(body) + " body bytes", text.size());
  }
  if (text.size() > pos + body) {
    throw FormatError("graph6: unexpected trailing bytes", pos + body);
  }

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int group = six_bits(text, at);
      if ((group >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (body > 0) {
    const std::size_t last = pos + body - 1;
    const int used = static_cast<int>(bits - static_cast<long long>(body - 1) * 6);
    const int pad_mask = (1 << (6 - used)) - 1;
    if (six_bits(text, last) & pad_mask) throw FormatError("graph6: nonzero padding bits", last);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongForm);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace domlab
