#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rvc/graph.hpp"

namespace rvc {

/// A computation contradicted a proven bound. Never expected to fire.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Colors 0..k-1 per vertex. With k == 0 the color vector is empty and no
/// path may have an internal vertex, which only complete graphs satisfy.
struct VertexColoring {
  int k = 0;
  std::vector<int> color;

  /// Every vertex its own color, k = n.
  static VertexColoring injective(int n);

  /// 1-based colors for display.
  std::vector<int> one_based() const;

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// Throws std::invalid_argument unless `c` is a well-formed coloring of `g`.
void validate_coloring(const Graph& g, const VertexColoring& c);

/// True iff some s-t path has pairwise distinct internal colors. Endpoint
/// colors are ignored. Searches states (vertex, internal colors used);
/// because colors never repeat along a state's history, neither do
/// vertices, so every accepted walk is already a simple path.
/// Throws std::out_of_range for bad ids or s == t.
bool exists_rainbow_path(const Graph& g, const VertexColoring& c, int s, int t);

/// Same contract as exists_rainbow_path, by enumerating every simple s-t
/// path. Exponential; meant for n <= 8 cross-checks.
bool exists_rainbow_path_oracle(const Graph& g, const VertexColoring& c, int s, int t);

/// g connected and every pair joined by a rainbow path.
bool is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c);

/// Lexicographically first (s, t), s < t, with no rainbow path.
std::optional<Edge> first_failing_pair(const Graph& g, const VertexColoring& c);

/// First rainbow coloring with at most k colors in restricted-growth order
/// (vertex 0 gets color 0, each later vertex at most one above the running
/// maximum). Throws DisconnectedGraphError, or std::invalid_argument when
/// k is outside [0, n].
std::optional<VertexColoring> find_rainbow_coloring(const Graph& g, int k);

enum class LowerBoundReason {
  kCompleteGraph,     // value 0
  kDiameterMinusOne,  // value met diam - 1 exactly
  kExhaustedK,        // every k below value was refuted by search
};

std::string_view to_string(LowerBoundReason reason);

struct RvcResult {
  int value = 0;
  VertexColoring witness;
  LowerBoundReason reason = LowerBoundReason::kCompleteGraph;
  /// k values refuted by exhaustive search, ascending.
  std::vector<int> exhausted_k;
};

/// rvc(G): smallest k with a rainbow coloring, searched upward from
/// max(1, diam - 1). Throws DisconnectedGraphError; TheoremViolation if a
/// non-complete graph needs more than n - 2 colors.
RvcResult rvc_exact(const Graph& g);

}  // namespace rvc
