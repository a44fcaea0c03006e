#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "szeged/errors.hpp"
#include "szeged/exact.hpp"
#include "szeged/graph.hpp"
#include "szeged/theta.hpp"
#include "szeged/weights.hpp"

namespace szeged {

struct QuotientComponent {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> internal_edges;
};

// G/F: one vertex per connected component of G minus F, one edge per pair of
// components joined by at least one edge of F. Components are numbered by
// their smallest vertex id; quotient edges by their (U, V) pair, U < V.
class QuotientGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const Graph& graph() const { return graph_; }
  std::size_t component_count() const { return components_.size(); }
  const QuotientComponent& component(std::size_t c) const { return components_.at(c); }
  std::size_t component_of(VertexId u) const { return component_of_.at(u); }
  std::span<const std::size_t> component_map() const { return component_of_; }

  std::span<const EdgeId> cut_edges() const { return cut_edges_; }
  std::span<const EdgeId> fiber(EdgeId quotient_edge) const { return fibers_.at(quotient_edge); }
  // Quotient edge whose fiber contains e, or npos when e is not in F.
  std::size_t fiber_of(EdgeId e) const { return fiber_of_.at(e); }

  // Induced weights: w_i, lambda_i per component; w_i', lambda_i' per quotient edge.
  std::span<const Exact> w() const { return weights_.w; }
  std::span<const Exact> lambda() const { return lambda_; }
  std::span<const Exact> w_edge() const { return weights_.w_edge; }
  std::span<const Exact> lambda_edge() const { return weights_.lambda_edge; }

  // (G_i, w_i, lambda_i', w_i') as a weighted graph.
  const WeightAssignment& vertex_weighting() const { return weights_; }
  // Same, with lambda_i in the vertex slot.
  WeightAssignment lambda_weighting() const {
    return {lambda_, weights_.w_edge, weights_.lambda_edge};
  }

  friend QuotientGraph quotient_graph(const Graph&, const WeightAssignment&,
                                      std::span<const EdgeId>);

 private:
  Graph graph_;
  std::vector<QuotientComponent> components_;
  std::vector<std::size_t> component_of_;
  std::vector<EdgeId> cut_edges_;
  std::vector<std::vector<EdgeId>> fibers_;
  std::vector<std::size_t> fiber_of_;
  WeightAssignment weights_;
  std::vector<Exact> lambda_;
};

// Throws NotACut when an edge of f has both ends in one component of G minus f
// (then f is not a union of Theta*-classes and the quotient is undefined).
inline QuotientGraph quotient_graph(const Graph& g, const WeightAssignment& wa,
                                    std::span<const EdgeId> f) {
  check_weights(g, wa);
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();

  QuotientGraph q;
  std::vector<char> in_f(m, 0);
  for (EdgeId e : f) {
    g.edge(e);
    in_f[e] = 1;
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (in_f[e]) q.cut_edges_.push_back(e);
  }

  q.component_of_.assign(n, QuotientGraph::npos);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    if (q.component_of_[s] != QuotientGraph::npos) continue;
    const std::size_t c = q.components_.size();
    q.components_.emplace_back();
    q.component_of_[s] = c;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId x = queue[head];
      for (const auto& inc : g.neighbors(x)) {
        if (in_f[inc.edge] || q.component_of_[inc.neighbor] != QuotientGraph::npos) continue;
        q.component_of_[inc.neighbor] = c;
        queue.push_back(inc.neighbor);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) q.components_[q.component_of_[v]].vertices.push_back(v);

  const std::size_t k = q.components_.size();
  std::unordered_map<std::uint64_t, std::vector<EdgeId>> crossing;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& ed = g.edge(e);
    const std::size_t cu = q.component_of_[ed.u], cv = q.component_of_[ed.v];
    if (!in_f[e]) {
      q.components_[cu].internal_edges.push_back(e);
      continue;
    }
    if (cu == cv) {
      throw NotACut("edge " + std::to_string(e) + " of the cut set joins a component to itself");
    }
    crossing[std::uint64_t{std::min(cu, cv)} * k + std::max(cu, cv)].push_back(e);
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(crossing.size());
  for (const auto& [key, _] : crossing) keys.push_back(key);
  std::sort(keys.begin(), keys.end());

  std::vector<std::pair<VertexId, VertexId>> qedges;
  qedges.reserve(keys.size());
  q.fiber_of_.assign(m, QuotientGraph::npos);
  for (std::uint64_t key : keys) {
    qedges.emplace_back(static_cast<VertexId>(key / k), static_cast<VertexId>(key % k));
    auto& fiber = crossing[key];
    for (EdgeId e : fiber) q.fiber_of_[e] = q.fibers_.size();
    q.fibers_.push_back(std::move(fiber));
  }
  q.graph_ = build_graph(k, qedges);

  q.weights_.w.assign(k, Exact(0));
  q.lambda_.assign(k, Exact(0));
  for (std::size_t c = 0; c < k; ++c) {
    for (VertexId v : q.components_[c].vertices) q.weights_.w[c] += wa.w[v];
    for (EdgeId e : q.components_[c].internal_edges) q.lambda_[c] += wa.lambda_edge[e];
  }
  q.weights_.w_edge.assign(q.fibers_.size(), Exact(0));
  q.weights_.lambda_edge.assign(q.fibers_.size(), Exact(0));
  for (std::size_t qe = 0; qe < q.fibers_.size(); ++qe) {
    for (EdgeId e : q.fibers_[qe]) {
      q.weights_.w_edge[qe] += wa.w_edge[e];
      q.weights_.lambda_edge[qe] += wa.lambda_edge[e];
    }
  }
  return q;
}

inline QuotientGraph quotient_graph(const Graph& g, const WeightAssignment& wa,
                                    const std::vector<EdgeId>& f) {
  return quotient_graph(g, wa, std::span<const EdgeId>(f));
}

inline std::size_t component_of(const QuotientGraph& q, VertexId u) { return q.component_of(u); }

// d_G(u,v) == sum over i of d_{G_i}(l_i(u), l_i(v)) for every pair (u, v).
inline bool distance_decomposition_check(const Graph& g, std::span<const QuotientGraph> quotients) {
  const auto dm = all_pairs_distances(g);
  std::vector<DistanceMatrix> qdm;
  qdm.reserve(quotients.size());
  for (const auto& q : quotients) qdm.push_back(all_pairs_distances(q.graph()));
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
      std::uint64_t total = 0;
      for (std::size_t i = 0; i < quotients.size(); ++i) {
        total += qdm[i](static_cast<VertexId>(quotients[i].component_of(u)),
                        static_cast<VertexId>(quotients[i].component_of(v)));
      }
      if (total != dm(u, v)) return false;
    }
  }
  return true;
}

inline bool distance_decomposition_check(const Graph& g, const std::vector<QuotientGraph>& qs) {
  return distance_decomposition_check(g, std::span<const QuotientGraph>(qs));
}

// Quotients G/F_i for every class F_i of p, built in parallel.
inline std::vector<QuotientGraph> quotients_for(const Graph& g, const WeightAssignment& wa,
                                                const EdgePartition& p) {
  std::vector<QuotientGraph> out(p.class_count());
  parallel_for(p.class_count(), [&](std::size_t i) { out[i] = quotient_graph(g, wa, p.members(i)); });
  return out;
}

}  // namespace szeged
