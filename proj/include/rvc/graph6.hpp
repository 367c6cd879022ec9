#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "rvc/graph.hpp"

namespace rvc {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest order expressible with the single-byte size header.
inline constexpr int kGraph6MaxOrder = 62;

// graph6 with the one-byte header only: byte 63+n, then the upper triangle
// in column order x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per
// byte (most significant first), each group offset by 63, zero padded.
//
// A trailing '\n' / "\r\n" is tolerated on input. Multi-byte headers fail
// with "unsupported size"; nonzero padding and bytes outside 63..126 fail
// too.
Graph parse_graph6(std::string_view text);

/// Encodes the given labeling. Throws Graph6Error when n > 62.
std::string to_graph6(const Graph& g);

}  // namespace rvc
