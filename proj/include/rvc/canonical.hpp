#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "rvc/graph.hpp"

namespace rvc {

/// Isomorphism invariants are exact only up to this order.
inline constexpr int kCanonicalMaxOrder = 8;

/// Lexicographically least upper-triangle bit string over all relabelings.
///
/// Bit string order is the graph6 column order x(0,1) x(0,2) x(1,2) ...;
/// `bits` holds it most-significant-first, so integer order equals
/// lexicographic order for a fixed n.
class CanonicalForm {
 public:
  CanonicalForm(int order, std::uint64_t bits) : order_(order), bits_(bits) {}

  int order() const { return order_; }
  std::uint64_t bits() const { return bits_; }

  /// The '0'/'1' upper-triangle string, length n(n-1)/2.
  std::string to_string() const;

  /// The canonical representative: the labeling that realizes the form.
  Graph to_graph() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  int order_;
  std::uint64_t bits_;
};

/// Upper-triangle bits of `g` as labeled (no minimization). n <= 11.
std::uint64_t triangle_bits(const Graph& g);

/// Throws GraphError when n > 8.
CanonicalForm canonical_form(const Graph& g);

/// canonical_form(g).to_graph()
Graph canonical_graph(const Graph& g);

}  // namespace rvc

template <>
struct std::hash<rvc::CanonicalForm> {
  std::size_t operator()(const rvc::CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits() * 0x9E3779B97F4A7C15ULL ^
                                      static_cast<std::uint64_t>(f.order()));
  }
};
