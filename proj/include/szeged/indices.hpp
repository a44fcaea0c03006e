#pragma once

#include <span>
#include <vector>

#include "szeged/errors.hpp"
#include "szeged/exact.hpp"
#include "szeged/graph.hpp"
#include "szeged/quotient.hpp"
#include "szeged/report.hpp"
#include "szeged/theta.hpp"
#include "szeged/weights.hpp"

namespace szeged {

// N_u, N_v, M_u, M_v of edge e from a precomputed distance matrix.
// Vertices and edges equidistant from u and v land on neither side.
inline EdgeSides edge_sides(const Graph& g, const DistanceMatrix& dm, EdgeId e) {
  const Edge& ed = g.edge(e);
  EdgeSides s;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (dm(ed.u, x) < dm(ed.v, x)) s.n_u.push_back(x);
    else if (dm(ed.v, x) < dm(ed.u, x)) s.n_v.push_back(x);
  }
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    const Distance du = edge_vertex_distance(g, dm, ed.u, f);
    const Distance dv = edge_vertex_distance(g, dm, ed.v, f);
    if (du < dv) s.m_u.push_back(f);
    else if (dv < du) s.m_v.push_back(f);
  }
  return s;
}

// Weighted side sums of one edge, oriented as the edge is stored (u, v):
// n_* = sum of vertex weights, m_* = sum of lambda' over the side sets.
struct SideSums {
  Exact n_u, n_v, m_u, m_v;
};

namespace detail {

// Trees: the side of edge (parent, child) containing the child is exactly the
// child's subtree, so subtree sums give every edge in O(n).
inline std::vector<SideSums> tree_side_sums(const Graph& g, std::span<const Exact> vertex_w,
                                            std::span<const Exact> lambda_edge) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<VertexId> parent(n, 0);
  std::vector<EdgeId> parent_edge(n, 0);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId x = order[head];
    for (const auto& inc : g.neighbors(x)) {
      if (seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      parent[inc.neighbor] = x;
      parent_edge[inc.neighbor] = inc.edge;
      order.push_back(inc.neighbor);
    }
  }
  std::vector<Exact> sub_w(vertex_w.begin(), vertex_w.end());
  std::vector<Exact> sub_lambda(n, Exact(0));
  for (std::size_t i = n; i-- > 1;) {
    VertexId c = order[i];
    sub_w[parent[c]] += sub_w[c];
    sub_lambda[parent[c]] += sub_lambda[c] + lambda_edge[parent_edge[c]];
  }
  const Exact total_w = sub_w[0];
  const Exact total_lambda = sub_lambda[0];

  std::vector<SideSums> out(g.edge_count());
  for (std::size_t i = 1; i < n; ++i) {
    VertexId c = order[i];
    EdgeId e = parent_edge[c];
    const Exact child_n = sub_w[c];
    const Exact child_m = sub_lambda[c];
    const Exact other_n = total_w - child_n;
    const Exact other_m = total_lambda - child_m - lambda_edge[e];
    if (g.edge(e).u == c) out[e] = {child_n, other_n, child_m, other_m};
    else out[e] = {other_n, child_n, other_m, child_m};
  }
  return out;
}

inline std::vector<SideSums> bfs_side_sums(const Graph& g, std::span<const Exact> vertex_w,
                                           std::span<const Exact> lambda_edge) {
  std::vector<SideSums> out(g.edge_count());
  parallel_for(g.edge_count(), [&](std::size_t i) {
    const auto e = static_cast<EdgeId>(i);
    const Edge& ed = g.edge(e);
    const auto du = bfs_reach(g, ed.u);
    const auto dv = bfs_reach(g, ed.v);
    SideSums s;
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      if (du[x] < dv[x]) s.n_u += vertex_w[x];
      else if (dv[x] < du[x]) s.n_v += vertex_w[x];
    }
    for (EdgeId f = 0; f < g.edge_count(); ++f) {
      const Edge& fe = g.edge(f);
      const Distance a = std::min(du[fe.u], du[fe.v]);
      const Distance b = std::min(dv[fe.u], dv[fe.v]);
      if (a < b) s.m_u += lambda_edge[f];
      else if (b < a) s.m_v += lambda_edge[f];
    }
    out[e] = s;
  });
  return out;
}

}  // namespace detail

// Side sums for every edge of a connected graph. Linear on trees, one BFS pair
// per edge otherwise.
inline std::vector<SideSums> side_sums(const Graph& g, std::span<const Exact> vertex_w,
                                       std::span<const Exact> lambda_edge) {
  require_connected(g);
  if (g.edge_count() + 1 == g.vertex_count()) {
    return detail::tree_side_sums(g, vertex_w, lambda_edge);
  }
  return detail::bfs_side_sums(g, vertex_w, lambda_edge);
}

inline Exact index_from_sums(std::span<const SideSums> sums, std::span<const Exact> w_edge,
                             IndexKind kind) {
  Exact total;
  for (std::size_t e = 0; e < sums.size(); ++e) {
    const SideSums& s = sums[e];
    switch (kind) {
      case IndexKind::SZ: total += w_edge[e] * s.n_u * s.n_v; break;
      case IndexKind::PI_V: total += w_edge[e] * (s.n_u + s.n_v); break;
      case IndexKind::SZ_E: total += w_edge[e] * s.m_u * s.m_v; break;
      case IndexKind::PI: total += w_edge[e] * (s.m_u + s.m_v); break;
      case IndexKind::SZ_T: total += w_edge[e] * (s.n_u + s.m_u) * (s.n_v + s.m_v); break;
    }
  }
  return total;
}

// Sz(G,w,w'), PI_v(G,w,w'), Sz_e(G,lambda',w'), PI(G,lambda',w') or
// Sz_t(G,w,lambda',w') of a weighted connected graph.
inline Exact weighted_index(const Graph& g, const WeightAssignment& wa, IndexKind kind) {
  check_weights(g, wa);
  const auto sums = side_sums(g, wa.w, wa.lambda_edge);
  return index_from_sums(sums, wa.w_edge, kind);
}

inline Exact first_zagreb(const Graph& g) {
  Exact total;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Exact d = g.degree(v);
    total += d * d;
  }
  return total;
}

// Degree-weighted suite straight from the definitions over the all-pairs
// distance table. No quotients involved.
inline IndexReport weighted_suite_direct(const Graph& g, bool starred) {
  require_connected(g);
  const auto dm = all_pairs_distances(g);
  const auto wa = degree_weights(g, starred);
  IndexValues v;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto s = edge_sides(g, dm, e);
    const Exact nu = s.n_u.size(), nv = s.n_v.size();
    const Exact mu = s.m_u.size(), mv = s.m_v.size();
    v.wSz += wa.w_edge[e] * nu * nv;
    v.wPI_v += wa.w_edge[e] * (nu + nv);
    v.wSz_e += wa.w_edge[e] * mu * mv;
    v.wPI += wa.w_edge[e] * (mu + mv);
  }
  IndexReport r;
  r.method = Method::direct;
  r.starred = starred;
  r.totals = v;
  r.per_class.push_back({0, g.edge_count(), v});
  return r;
}

namespace detail {

inline EdgePartition checked_c_partition(const Graph& g, const EdgePartition& p) {
  require_connected(g);
  require_covering(g, p);
  return p.refined_by_theta_star() ? p : certify_c_partition(g, p);
}

// Contribution of one quotient G_i to each of the four indices.
inline IndexValues quotient_contribution(const QuotientGraph& q) {
  const Graph& qg = q.graph();
  const auto by_w = side_sums(qg, q.w(), q.lambda_edge());
  const auto by_lambda = side_sums(qg, q.lambda(), q.lambda_edge());
  IndexValues v;
  v.wSz = index_from_sums(by_w, q.w_edge(), IndexKind::SZ);
  v.wPI_v = index_from_sums(by_w, q.w_edge(), IndexKind::PI_V);
  v.wSz_e = index_from_sums(by_lambda, q.w_edge(), IndexKind::SZ_T);
  v.wPI = index_from_sums(by_lambda, q.w_edge(), IndexKind::PI_V) +
          index_from_sums(by_lambda, q.w_edge(), IndexKind::PI);
  return v;
}

}  // namespace detail

// Cut method: sums per-quotient contributions over the classes of a
// c-partition. Partitions not flagged as Theta*-refined are validated first
// (O(m^2)); throws InvalidCPartition if that fails.
inline IndexReport weighted_suite_cut(const Graph& g, const EdgePartition& p, bool starred) {
  const EdgePartition cp = detail::checked_c_partition(g, p);
  const auto wa = degree_weights(g, starred);
  IndexReport r;
  r.method = Method::cut;
  r.starred = starred;
  r.per_class.resize(cp.class_count());
  parallel_for(cp.class_count(), [&](std::size_t i) {
    const auto q = quotient_graph(g, wa, cp.members(i));
    r.per_class[i] = {i, cp.members(i).size(), detail::quotient_contribution(q)};
  });
  r.totals = r.contribution_sum();
  return r;
}

// Cut decomposition for arbitrary weights. Sz_t has no decomposition of its own.
inline Exact general_cut_index(const Graph& g, const WeightAssignment& wa, const EdgePartition& p,
                               IndexKind kind) {
  if (kind == IndexKind::SZ_T) {
    throw UnsupportedKind("no cut decomposition is available for Sz_t");
  }
  check_weights(g, wa);
  const EdgePartition cp = detail::checked_c_partition(g, p);
  std::vector<Exact> parts(cp.class_count());
  parallel_for(cp.class_count(), [&](std::size_t i) {
    const auto q = quotient_graph(g, wa, cp.members(i));
    switch (kind) {
      case IndexKind::SZ:
      case IndexKind::PI_V:
        parts[i] = weighted_index(q.graph(), q.vertex_weighting(), kind);
        break;
      case IndexKind::SZ_E:
        parts[i] = weighted_index(q.graph(), q.lambda_weighting(), IndexKind::SZ_T);
        break;
      case IndexKind::PI:
        parts[i] = weighted_index(q.graph(), q.lambda_weighting(), IndexKind::PI_V) +
                   weighted_index(q.graph(), q.vertex_weighting(), IndexKind::PI);
        break;
      case IndexKind::SZ_T:
        break;
    }
  });
  Exact total;
  for (const Exact& x : parts) total += x;
  return total;
}

}  // namespace szeged
