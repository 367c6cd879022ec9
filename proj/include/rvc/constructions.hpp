#pragma once

#include "rvc/graph.hpp"

namespace rvc {

/// Path 0-1-...-(n-1). n >= 1.
Graph path_graph(int n);
/// Cycle 0-1-...-(n-1)-0. n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,n-1} centered at vertex 0.
Graph star_graph(int n);

/// A graph, its complement, and rvc on both sides.
struct NgPair {
  Graph g;
  Graph gbar;
  int n = 0;
  int rvc_g = 0;
  int rvc_gbar = 0;
  int sum = 0;
};

/// Solves both sides. Throws DisconnectedGraphError if either side is
/// disconnected.
NgPair make_ng_pair(const Graph& g);

/// P_n with its complement: rvc_g = n-2, rvc_gbar = 1, sum = n-1.
/// Throws GraphError for n < 5 and TheoremViolation if the values differ.
NgPair path_complement_pair(int n);

/// A graph that has diameter 2 together with its complement.
///
/// Labels: v = 0, v_i = i for i = 1..k, u_j = k + j. For n = 2k+1 the edges
/// are v-v_i, v_i-u_i (1 <= i <= k) and a clique on u_1..u_k. For n = 2k
/// there are only k-1 u's: v-v_i (1 <= i <= k), v_i-u_i (i < k), v_k-u_{k-1}
/// and a clique on u_1..u_{k-1}.
///
/// Throws GraphError for n < 5; TheoremViolation unless both the graph and
/// its complement have diameter 2.
Graph theorem2_graph(int n);

/// theorem2_graph(n) solved on both sides; sum must be 2.
NgPair lower_bound_pair(int n);

struct Lemma1Report {
  int n = 0;           // order of g
  int k = 0;           // rvc(g)
  int q = 0;           // neighbors of the new vertex
  int rvc_extended = 0;
  bool premise = false;     // q >= n - k
  bool conclusion = false;  // rvc_extended <= k
  bool violation() const { return premise && !conclusion; }
};

/// Adds a vertex adjacent to exactly `neighbors` and compares rvc before and
/// after. Throws DisconnectedGraphError, or GraphError for an empty or
/// out-of-range neighbor set. A violation is reported, not thrown.
Lemma1Report verify_lemma1_instance(const Graph& g, VertexSet neighbors);

}  // namespace rvc
