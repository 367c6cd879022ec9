#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rvc {

/// Adjacency row: bit j set means an edge to vertex j.
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int kMaxVertices = 64;

/// Bad construction input: vertex cap, loops, endpoints out of range.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by operations only defined on connected graphs (diameter, rvc).
class DisconnectedGraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr VertexSet all_vertices(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }

/// Immutable simple undirected graph on 1..64 labeled vertices.
///
/// Adjacency is one 64-bit row per vertex. Rows are kept symmetric and
/// loop-free; every factory validates this.
class Graph {
 public:
  /// Collapses duplicate pairs. Throws GraphError on loops, out-of-range
  /// endpoints, or n outside [1, 64].
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  /// Builds from raw adjacency rows, validating symmetry and loops.
  static Graph from_rows(std::vector<VertexSet> rows);

  static Graph empty(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexSet>& rows() const { return rows_; }

  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;
  bool is_complete() const;

  /// Edges as (i, j) with i < j, sorted.
  std::vector<Edge> edges() const;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(const std::vector<int>& perm) const;

  /// Appends vertex n adjacent to exactly `neighbors` (a subset of 0..n-1).
  Graph with_vertex(VertexSet neighbors) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)) {}

  std::vector<VertexSet> rows_;
};

Graph complement(const Graph& g);

/// K1 counts as connected.
bool is_connected(const Graph& g);

/// Breadth-first distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// Full distance matrix; entries are -1 between different components.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// Eccentricity maximum over all vertices. Throws DisconnectedGraphError.
int diameter(const Graph& g);

/// Short human-readable dump, e.g. "n=4 {0-1 1-2 2-3}".
std::string describe(const Graph& g);

}  // namespace rvc
