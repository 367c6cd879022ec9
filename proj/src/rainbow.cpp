#include "rvc/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_set>

namespace rvc {

namespace {

using ColorMask = std::uint64_t;

struct State {
  int vertex;
  ColorMask used;
  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.used * 0x9E3779B97F4A7C15ULL +
                                      static_cast<std::uint64_t>(s.vertex));
  }
};

// Dense stamped table for small color counts, hash set beyond that.
constexpr std::size_t kDenseStateLimit = std::size_t{1} << 22;

class PathSearch {
 public:
  PathSearch(const Graph& g, int palette) : g_(g), palette_(palette) {
    const std::size_t states = palette < 58
        ? static_cast<std::size_t>(g.order()) << palette
        : kDenseStateLimit + 1;
    dense_ = states <= kDenseStateLimit;
    if (dense_) stamp_.assign(states, 0);
  }

  // `color` holds ranks < palette for every vertex.
  bool run(const std::vector<int>& color, int s, int t) {
    if (g_.adjacent(s, t)) return true;
    next_epoch();
    stack_.clear();
    const VertexSet blocked = singleton(s) | singleton(t);
    for (VertexSet rest = g_.neighbors(s) & ~blocked; rest; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      visit({w, ColorMask{1} << color[static_cast<std::size_t>(w)]});
    }
    const VertexSet target_side = g_.neighbors(t);
    while (!stack_.empty()) {
      const State cur = stack_.back();
      stack_.pop_back();
      if (target_side & singleton(cur.vertex)) return true;
      for (VertexSet rest = g_.neighbors(cur.vertex) & ~blocked; rest; rest &= rest - 1) {
        const int w = std::countr_zero(rest);
        const ColorMask bit = ColorMask{1} << color[static_cast<std::size_t>(w)];
        if (cur.used & bit) continue;
        visit({w, cur.used | bit});
      }
    }
    return false;
  }

 private:
  void next_epoch() {
    if (dense_) {
      if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
      }
    } else {
      seen_.clear();
    }
  }

  void visit(State s) {
    if (dense_) {
      auto& mark = stamp_[(static_cast<std::size_t>(s.vertex) << palette_) | s.used];
      if (mark == epoch_) return;
      mark = epoch_;
    } else if (!seen_.insert(s).second) {
      return;
    }
    stack_.push_back(s);
  }

  const Graph& g_;
  int palette_;
  bool dense_ = false;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::unordered_set<State, StateHash> seen_;
  std::vector<State> stack_;
};

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(g.order() - 1));
  }
}

// Dense ranks of the colors that can appear on internal vertices. The
// returned palette is at most n.
int rank_colors(const VertexColoring& c, std::vector<int>& ranks) {
  std::vector<int> distinct = c.color;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  ranks.resize(c.color.size());
  for (std::size_t i = 0; i < c.color.size(); ++i) {
    ranks[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c.color[i]) -
                                distinct.begin());
  }
  return static_cast<int>(distinct.size());
}

// Pairs at distance 1 or 2 always pass (at most one internal vertex), so
// only pairs at distance >= 3 are checked, farthest first.
class RainbowChecker {
 public:
  RainbowChecker(const Graph& g, int palette) : search_(g, palette) {
    const auto dist = distance_matrix(g);
    std::vector<std::tuple<int, int, int>> far;
    for (int s = 0; s < g.order(); ++s) {
      for (int t = s + 1; t < g.order(); ++t) {
        const int d = dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (d >= 3) far.emplace_back(-d, s, t);
      }
    }
    std::sort(far.begin(), far.end());
    for (const auto& [neg_d, s, t] : far) pairs_.emplace_back(s, t);
  }

  bool check(const std::vector<int>& color) {
    return std::all_of(pairs_.begin(), pairs_.end(),
                       [&](const Edge& p) { return search_.run(color, p.first, p.second); });
  }

 private:
  PathSearch search_;
  std::vector<Edge> pairs_;
};

}  // namespace

VertexColoring VertexColoring::injective(int n) {
  VertexColoring c;
  c.k = n;
  c.color.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) c.color[static_cast<std::size_t>(v)] = v;
  return c;
}

std::vector<int> VertexColoring::one_based() const {
  std::vector<int> out = color;
  for (int& x : out) ++x;
  return out;
}

void validate_coloring(const Graph& g, const VertexColoring& c) {
  if (c.k < 0) throw std::invalid_argument("negative color count");
  if (c.k == 0) {
    if (!c.color.empty()) throw std::invalid_argument("k = 0 requires an empty color vector");
    return;
  }
  if (static_cast<int>(c.color.size()) != g.order()) {
    throw std::invalid_argument("coloring has " + std::to_string(c.color.size()) +
                                " entries for " + std::to_string(g.order()) + " vertices");
  }
  for (int x : c.color) {
    if (x < 0 || x >= c.k) {
      throw std::invalid_argument("color " + std::to_string(x) + " outside 0.." +
                                  std::to_string(c.k - 1));
    }
  }
}

bool exists_rainbow_path(const Graph& g, const VertexColoring& c, int s, int t) {
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw std::out_of_range("rainbow path endpoints must differ");
  validate_coloring(g, c);
  if (g.adjacent(s, t)) return true;
  if (c.k == 0) return false;
  std::vector<int> ranks;
  const int palette = rank_colors(c, ranks);
  return PathSearch(g, palette).run(ranks, s, t);
}

bool is_rainbow_vertex_connected(const Graph& g, const VertexColoring& c) {
  validate_coloring(g, c);
  if (!is_connected(g)) return false;
  if (g.is_complete()) return true;
  if (c.k == 0) return false;
  std::vector<int> ranks;
  const int palette = rank_colors(c, ranks);
  return RainbowChecker(g, palette).check(ranks);
}

std::optional<Edge> first_failing_pair(const Graph& g, const VertexColoring& c) {
  validate_coloring(g, c);
  std::vector<int> ranks;
  const int palette = c.k == 0 ? 0 : rank_colors(c, ranks);
  PathSearch search(g, palette);
  for (int s = 0; s < g.order(); ++s) {
    for (int t = s + 1; t < g.order(); ++t) {
      if (g.adjacent(s, t)) continue;
      if (c.k == 0 || !search.run(ranks, s, t)) return Edge{s, t};
    }
  }
  return std::nullopt;
}

std::optional<VertexColoring> find_rainbow_coloring(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n) {
    throw std::invalid_argument("color count " + std::to_string(k) + " outside [0, " +
                                std::to_string(n) + "]");
  }
  if (!is_connected(g)) throw DisconnectedGraphError("rainbow coloring of a disconnected graph");
  if (k == 0) {
    if (g.is_complete()) return VertexColoring{};
    return std::nullopt;
  }

  RainbowChecker checker(g, k);
  // Restricted growth string: color[i] <= min(k - 1, 1 + max(color[0..i-1])).
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> running_max(static_cast<std::size_t>(n), 0);
  while (true) {
    if (checker.check(color)) return VertexColoring{k, color};

    int i = n - 1;
    for (; i > 0; --i) {
      const auto ui = static_cast<std::size_t>(i);
      const int limit = std::min(k - 1, running_max[ui - 1] + 1);
      if (color[ui] < limit) {
        ++color[ui];
        running_max[ui] = std::max(running_max[ui - 1], color[ui]);
        for (std::size_t j = ui + 1; j < color.size(); ++j) {
          color[j] = 0;
          running_max[j] = running_max[ui];
        }
        break;
      }
    }
    if (i == 0) return std::nullopt;
  }
}

std::string_view to_string(LowerBoundReason reason) {
  switch (reason) {
    case LowerBoundReason::kCompleteGraph: return "complete-graph";
    case LowerBoundReason::kDiameterMinusOne: return "diameter-minus-one";
    case LowerBoundReason::kExhaustedK: return "exhausted-k";
  }
  return "unknown";
}

RvcResult rvc_exact(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("rvc is undefined for disconnected graphs");
  RvcResult result;
  if (g.is_complete()) return result;

  const int n = g.order();
  const int lower = std::max(1, diameter(g) - 1);
  for (int k = lower; k <= n - 2; ++k) {
    if (auto found = find_rainbow_coloring(g, k)) {
      result.value = k;
      result.witness = std::move(*found);
      result.reason = k == lower ? LowerBoundReason::kDiameterMinusOne
                                 : LowerBoundReason::kExhaustedK;
      return result;
    }
    result.exhausted_k.push_back(k);
  }
  throw TheoremViolation("no rainbow coloring with at most n-2 = " + std::to_string(n - 2) +
                         " colors for " + describe(g));
}

}  // namespace rvc
