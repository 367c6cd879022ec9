// Brute-force rainbow path check. Shares nothing with the state search in
// rainbow.cpp beyond the coloring validation.

#include <string>
#include <vector>

#include "rvc/rainbow.hpp"

namespace rvc {

namespace {

struct SimplePathWalker {
  const Graph& g;
  const VertexColoring& c;
  int target;
  std::vector<bool> on_path;
  std::vector<int> internal;

  bool internal_colors_distinct() const {
    for (std::size_t i = 0; i < internal.size(); ++i) {
      for (std::size_t j = i + 1; j < internal.size(); ++j) {
        if (c.color[static_cast<std::size_t>(internal[i])] ==
            c.color[static_cast<std::size_t>(internal[j])]) {
          return false;
        }
      }
    }
    return true;
  }

  bool walk(int v) {
    for (int w = 0; w < g.order(); ++w) {
      if (!g.adjacent(v, w) || on_path[static_cast<std::size_t>(w)]) continue;
      if (w == target) {
        if (internal_colors_distinct()) return true;
        continue;
      }
      // k == 0 leaves no color for an internal vertex.
      if (c.k == 0) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      internal.push_back(w);
      const bool found = walk(w);
      internal.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
      if (found) return true;
    }
    return false;
  }
};

}  // namespace

bool exists_rainbow_path_oracle(const Graph& g, const VertexColoring& c, int s, int t) {
  const int n = g.order();
  if (s < 0 || t < 0 || s >= n || t >= n) throw std::out_of_range("vertex id out of range");
  if (s == t) throw std::out_of_range("rainbow path endpoints must differ");
  validate_coloring(g, c);
  SimplePathWalker walker{g, c, t, std::vector<bool>(static_cast<std::size_t>(n), false), {}};
  walker.on_path[static_cast<std::size_t>(s)] = true;
  return walker.walk(s);
}

}  // namespace rvc
