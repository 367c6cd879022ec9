#include "rvc/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace rvc {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  check_order(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw GraphError("loop at vertex " + std::to_string(u));
    }
    rows[static_cast<std::size_t>(u)] |= singleton(v);
    rows[static_cast<std::size_t>(v)] |= singleton(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const VertexSet valid = all_vertices(n);
  for (int i = 0; i < n; ++i) {
    const VertexSet row = rows[static_cast<std::size_t>(i)];
    if (row & ~valid) throw GraphError("row " + std::to_string(i) + " has bits >= n");
    if (row & singleton(i)) throw GraphError("loop at vertex " + std::to_string(i));
    for (VertexSet rest = row; rest; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      if (!(rows[static_cast<std::size_t>(j)] & singleton(i))) {
        throw GraphError("asymmetric adjacency between " + std::to_string(i) +
                         " and " + std::to_string(j));
      }
    }
  }
  return Graph(std::move(rows));
}

Graph Graph::empty(int n) {
  check_order(n);
  return Graph(std::vector<VertexSet>(static_cast<std::size_t>(n), 0));
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet row : rows_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::is_complete() const {
  const int n = order();
  return edge_count() == n * (n - 1) / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < order(); ++i) {
    for (VertexSet rest = neighbors(i) & ~all_vertices(i + 1); rest; rest &= rest - 1) {
      out.emplace_back(i, std::countr_zero(rest));
    }
  }
  return out;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || (seen & singleton(p))) throw GraphError("not a permutation");
    seen |= singleton(p);
  }
  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    VertexSet mapped = 0;
    for (VertexSet rest = neighbors(i); rest; rest &= rest - 1) {
      mapped |= singleton(perm[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = mapped;
  }
  return Graph(std::move(rows));
}

Graph Graph::with_vertex(VertexSet neighbors) const {
  const int n = order();
  if (n + 1 > kMaxVertices) throw GraphError("vertex cap exceeded");
  if (neighbors & ~all_vertices(n)) throw GraphError("neighbor outside 0.." + std::to_string(n - 1));
  std::vector<VertexSet> rows = rows_;
  for (VertexSet rest = neighbors; rest; rest &= rest - 1) {
    rows[static_cast<std::size_t>(std::countr_zero(rest))] |= singleton(n);
  }
  rows.push_back(neighbors);
  return Graph(std::move(rows));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const VertexSet full = all_vertices(n);
  std::vector<VertexSet> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[static_cast<std::size_t>(i)] = ~g.neighbors(i) & full & ~singleton(i);
  }
  return Graph::from_rows(std::move(rows));
}

bool is_connected(const Graph& g) {
  const VertexSet full = all_vertices(g.order());
  VertexSet reached = singleton(0);
  VertexSet frontier = reached;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest; rest &= rest - 1) {
      next |= g.neighbors(std::countr_zero(rest));
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == full;
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  VertexSet reached = singleton(source);
  VertexSet frontier = reached;
  int level = 0;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      dist[static_cast<std::size_t>(v)] = level;
      next |= g.neighbors(v);
    }
    frontier = next & ~reached;
    reached |= next;
    ++level;
  }
  return dist;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int s = 0; s < g.order(); ++s) out.push_back(distances_from(g, s));
  return out;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    for (int d : distances_from(g, s)) {
      if (d < 0) throw DisconnectedGraphError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " {";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    os << (first ? "" : " ") << u << '-' << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace rvc
