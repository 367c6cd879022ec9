#include "rvc/constructions.hpp"

#include <bit>
#include <string>

#include "rvc/rainbow.hpp"

namespace rvc {

namespace {

void require_order(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw GraphError(std::string(what) + ": n=" + std::to_string(n) + " below minimum " +
                     std::to_string(minimum));
  }
}

void expect(bool ok, const std::string& message) {
  if (!ok) throw TheoremViolation(message);
}

}  // namespace

Graph path_graph(int n) {
  require_order(n, 1, "path_graph");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  require_order(n, 3, "cycle_graph");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require_order(n, 1, "complete_graph");
  return complement(Graph::empty(n));
}

Graph star_graph(int n) {
  require_order(n, 1, "star_graph");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

NgPair make_ng_pair(const Graph& g) {
  NgPair pair{g, complement(g), g.order(), 0, 0, 0};
  pair.rvc_g = rvc_exact(pair.g).value;
  pair.rvc_gbar = rvc_exact(pair.gbar).value;
  pair.sum = pair.rvc_g + pair.rvc_gbar;
  return pair;
}

NgPair path_complement_pair(int n) {
  require_order(n, 5, "path_complement_pair");
  NgPair pair = make_ng_pair(path_graph(n));
  expect(pair.rvc_g == n - 2 && pair.rvc_gbar == 1,
         "path pair n=" + std::to_string(n) + ": got rvc " + std::to_string(pair.rvc_g) + " + " +
             std::to_string(pair.rvc_gbar));
  return pair;
}

Graph theorem2_graph(int n) {
  require_order(n, 5, "theorem2_graph");
  const int k = n / 2;  // number of v_i
  const int u_count = n - 1 - k;
  const auto v_of = [](int i) { return i; };
  const auto u_of = [k](int j) { return k + j; };

  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) edges.emplace_back(0, v_of(i));
  for (int i = 1; i <= u_count; ++i) edges.emplace_back(v_of(i), u_of(i));
  if (n % 2 == 0) edges.emplace_back(v_of(k), u_of(k - 1));
  for (int i = 1; i <= u_count; ++i) {
    for (int j = i + 1; j <= u_count; ++j) edges.emplace_back(u_of(i), u_of(j));
  }
  Graph g = Graph::from_edges(n, edges);

  const Graph gbar = complement(g);
  expect(is_connected(g) && is_connected(gbar) && diameter(g) == 2 && diameter(gbar) == 2,
         "theorem2_graph n=" + std::to_string(n) + " is not diameter 2 on both sides");
  return g;
}

NgPair lower_bound_pair(int n) {
  NgPair pair = make_ng_pair(theorem2_graph(n));
  expect(pair.sum == 2, "lower bound pair n=" + std::to_string(n) + " has sum " +
                            std::to_string(pair.sum));
  return pair;
}

Lemma1Report verify_lemma1_instance(const Graph& g, VertexSet neighbors) {
  if (neighbors == 0) throw GraphError("vertex addition needs a nonempty neighbor set");
  if (!is_connected(g)) throw DisconnectedGraphError("vertex addition on a disconnected graph");

  Lemma1Report report;
  report.n = g.order();
  report.k = rvc_exact(g).value;
  report.q = std::popcount(neighbors);
  report.rvc_extended = rvc_exact(g.with_vertex(neighbors)).value;
  report.premise = report.q >= report.n - report.k;
  report.conclusion = report.rvc_extended <= report.k;
  return report;
}

}  // namespace rvc
