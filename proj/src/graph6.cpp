#include "groot/graph6.hpp"

namespace groot {
namespace {

constexpr int kOffset = 63;
constexpr char kMaxByte = 126;
constexpr std::string_view kPrefix = ">>graph6<<";

bool printable(char c) { return c >= kOffset && c <= kMaxByte; }

// Reads `count` 6-bit groups big-endian starting at `pos`.
std::size_t read_size_field(std::string_view text, std::size_t pos, std::size_t count) {
  if (text.size() < pos + count) {
    throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: incomplete vertex-count field");
  }
  std::size_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = text[pos + i];
    if (!printable(c)) {
      throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: invalid byte in vertex-count field");
    }
    value = (value << 6) | static_cast<std::size_t>(c - kOffset);
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kPrefix)) text.remove_prefix(kPrefix.size());
  if (text.empty()) throw Graph6Error(Graph6Error::Kind::Empty, "graph6: empty input");

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] == kMaxByte) {
    if (text.size() > 1 && text[1] == kMaxByte) {
      n = read_size_field(text, 2, 6);
      pos = 8;
    } else {
      n = read_size_field(text, 1, 3);
      pos = 4;
    }
  } else if (printable(text[0])) {
    n = static_cast<std::size_t>(text[0] - kOffset);
    pos = 1;
  } else {
    throw Graph6Error(Graph6Error::Kind::BadHeader, "graph6: invalid header byte");
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  const std::string_view data = text.substr(pos);
  for (std::size_t k = 0; k < data.size() && k < body; ++k) {
    if (!printable(data[k])) {
      throw Graph6Error(Graph6Error::Kind::BadCharacter,
                        "graph6: invalid body byte at offset " + std::to_string(pos + k));
    }
  }
  if (data.size() < body) {
    throw Graph6Error(Graph6Error::Kind::Truncated,
                      "graph6: expected " + std::to_string(body) + " body bytes, got " +
                          std::to_string(data.size()));
  }
  if (data.size() > body) {
    throw Graph6Error(Graph6Error::Kind::TrailingData, "graph6: trailing data after body");
  }

  GraphBuilder builder(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int group = data[k / 6] - kOffset;
      if (group & (0x20 >> (k % 6))) builder.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = data[body - 1] - kOffset;
    const int unused_mask = (1 << (6 - bits % 6)) - 1;
    if (last & unused_mask) {
      throw Graph6Error(Graph6Error::Kind::PaddingNotZero, "graph6: padding bits are not zero");
    }
  }
  return builder.build();
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kOffset + n));
  } else if (n <= 258047) {
    out.push_back(kMaxByte);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(kOffset + ((n >> shift) & 0x3f)));
    }
  } else {
    out.append(2, kMaxByte);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(kOffset + ((n >> shift) & 0x3f)));
    }
  }

  int group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const VertexSet& row = g.neighbor_set(j);
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (row.test(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (group << (6 - filled))));
  return out;
}

}  // namespace groot
