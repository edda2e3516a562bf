#pragma once

#include "groot/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace groot {

class Graph6Error : public std::runtime_error {
 public:
  enum class Kind {
    Empty,           // no header byte at all
    BadHeader,       // header byte or extended size field out of range
    BadCharacter,    // body byte outside '?'..'~'
    Truncated,       // fewer body bytes than the vertex count requires
    TrailingData,    // extra bytes after the body
    PaddingNotZero,  // unused low bits of the final byte are set
  };

  Graph6Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Parses one graph6 string. An optional ">>graph6<<" prefix is accepted;
/// surrounding whitespace is not.
Graph parse_graph6(std::string_view text);

std::string emit_graph6(const Graph& g);

}  // namespace groot
