#include "rvc/graph6.hpp"

namespace rvc {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("graph6: empty input");

  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxByte) {
      throw Graph6Error("graph6: byte " + std::to_string(c) + " at offset " +
                        std::to_string(i) + " outside 63..126");
    }
  }

  const int header = static_cast<unsigned char>(text[0]);
  if (header == kMaxByte) {
    throw Graph6Error("graph6: unsupported size (multi-byte header, n > 62)");
  }
  const int n = header - kBias;
  if (n < 1) throw Graph6Error("graph6: zero-vertex graph not supported");

  const std::string_view body = text.substr(1);
  if (body.size() != body_length(n)) {
    throw Graph6Error("graph6: expected " + std::to_string(body_length(n)) +
                      " data bytes for n=" + std::to_string(n) + ", got " +
                      std::to_string(body.size()));
  }

  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t bit = 0;
  auto read_bit = [&](std::size_t index) {
    const int group = static_cast<unsigned char>(body[index / 6]) - kBias;
    return (group >> (5 - static_cast<int>(index % 6))) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (read_bit(bit)) {
        rows[static_cast<std::size_t>(i)] |= singleton(j);
        rows[static_cast<std::size_t>(j)] |= singleton(i);
      }
    }
  }
  for (; bit < body.size() * 6; ++bit) {
    if (read_bit(bit)) throw Graph6Error("graph6: nonzero padding bits");
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw Graph6Error("graph6: unsupported size n=" + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + body_length(n));
  out.push_back(static_cast<char>(kBias + n));

  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  return out;
}

}  // namespace rvc
