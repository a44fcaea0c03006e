#pragma once

#include <algorithm>
#include <vector>

#include "szeged/errors.hpp"
#include "szeged/exact.hpp"
#include "szeged/graph.hpp"

namespace szeged {

// Vertex weight w, edge weights w' and lambda'. All values nonnegative.
struct WeightAssignment {
  std::vector<Exact> w;
  std::vector<Exact> w_edge;
  std::vector<Exact> lambda_edge;

  static WeightAssignment uniform(const Graph& g, Exact w = 1, Exact w_edge = 1,
                                  Exact lambda_edge = 1) {
    return {std::vector<Exact>(g.vertex_count(), w), std::vector<Exact>(g.edge_count(), w_edge),
            std::vector<Exact>(g.edge_count(), lambda_edge)};
  }
};

inline void check_weights(const Graph& g, const WeightAssignment& wa) {
  if (wa.w.size() != g.vertex_count() || wa.w_edge.size() != g.edge_count() ||
      wa.lambda_edge.size() != g.edge_count()) {
    throw InvalidWeights("weight assignment does not match the graph's vertex/edge counts");
  }
  auto negative = [](const std::vector<Exact>& v) {
    return std::any_of(v.begin(), v.end(), [](Exact x) { return x < Exact(0); });
  };
  if (negative(wa.w) || negative(wa.w_edge) || negative(wa.lambda_edge)) {
    throw InvalidWeights("weights must be nonnegative");
  }
}

// Weights that turn the generic indices into the degree-weighted ones:
// w = 1, lambda' = 1, w'(xy) = deg(x) + deg(y), or deg(x) * deg(y) when starred.
inline WeightAssignment degree_weights(const Graph& g, bool starred) {
  WeightAssignment wa = WeightAssignment::uniform(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const Exact du = g.degree(ed.u), dv = g.degree(ed.v);
    wa.w_edge[e] = starred ? du * dv : du + dv;
  }
  return wa;
}

}  // namespace szeged
