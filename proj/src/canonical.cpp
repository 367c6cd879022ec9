#include "rvc/canonical.hpp"

#include <array>
#include <bit>

namespace rvc {

namespace {

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Depth-first construction of the minimal relabeling. Position p contributes
// column p of the upper triangle, which is determined by which vertices sit
// at positions 0..p-1 and which vertex is put at p. Columns are compared in
// order, so at each depth only the candidates giving the smallest column can
// lead to the minimum; ties branch.
class MinimalLabeling {
 public:
  explicit MinimalLabeling(const Graph& g)
      : g_(g), n_(g.order()), total_bits_(pair_count(n_)) {}

  std::uint64_t run() {
    best_ = ~std::uint64_t{0};
    have_best_ = false;
    extend(0, 0, all_vertices(n_));
    return best_;
  }

 private:
  std::uint64_t column_for(int position, int vertex) const {
    std::uint64_t col = 0;
    const VertexSet row = g_.neighbors(vertex);
    for (int i = 0; i < position; ++i) {
      col = (col << 1) | ((row >> placed_[static_cast<std::size_t>(i)]) & 1U);
    }
    return col;
  }

  void extend(int position, std::uint64_t prefix, VertexSet unplaced) {
    if (position == n_) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }

    std::uint64_t min_col = ~std::uint64_t{0};
    for (VertexSet rest = unplaced; rest; rest &= rest - 1) {
      const std::uint64_t col = column_for(position, std::countr_zero(rest));
      if (col < min_col) min_col = col;
    }

    const std::uint64_t next_prefix = (prefix << position) | min_col;
    if (have_best_) {
      const int used = pair_count(position + 1);
      const std::uint64_t best_prefix = best_ >> (total_bits_ - used);
      if (next_prefix > best_prefix) return;
    }

    for (VertexSet rest = unplaced; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (column_for(position, v) != min_col) continue;
      placed_[static_cast<std::size_t>(position)] = v;
      extend(position + 1, next_prefix, unplaced & ~singleton(v));
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::array<int, kCanonicalMaxOrder> placed_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalForm::to_string() const {
  const int m = pair_count(order_);
  std::string out(static_cast<std::size_t>(m), '0');
  for (int i = 0; i < m; ++i) {
    if ((bits_ >> (m - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Graph CanonicalForm::to_graph() const {
  const int m = pair_count(order_);
  std::vector<Edge> edges;
  int index = 0;
  for (int j = 1; j < order_; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      if ((bits_ >> (m - 1 - index)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(order_, edges);
}

std::uint64_t triangle_bits(const Graph& g) {
  const int n = g.order();
  if (pair_count(n) > 64) throw GraphError("triangle_bits: n too large");
  std::uint64_t bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.adjacent(i, j) ? 1U : 0U);
  }
  return bits;
}

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw GraphError("canonical_form: n=" + std::to_string(g.order()) +
                     " exceeds the exhaustive limit of " + std::to_string(kCanonicalMaxOrder));
  }
  return CanonicalForm(g.order(), MinimalLabeling(g).run());
}

Graph canonical_graph(const Graph& g) { return canonical_form(g).to_graph(); }

}  // namespace rvc
