#pragma once

// Brute-force evaluation of every index straight from the definitions.
// Depends only on graph-core and the plain report/weight types; it must not
// pull in the cut-method headers, so that a bug cannot reach both sides of an
// equivalence check.

#include <algorithm>
#include <vector>

#include "szeged/exact.hpp"
#include "szeged/graph.hpp"
#include "szeged/report.hpp"
#include "szeged/weights.hpp"

namespace szeged::oracle {

// Two fresh BFS runs, one from each endpoint of e.
inline EdgeSides oracle_edge_sides(const Graph& g, EdgeId e) {
  const Edge ed = g.edge(e);
  const std::vector<Distance> from_u = bfs_distances(g, ed.u);
  const std::vector<Distance> from_v = bfs_distances(g, ed.v);
  EdgeSides sides;
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (from_u[x] < from_v[x]) sides.n_u.push_back(x);
    if (from_v[x] < from_u[x]) sides.n_v.push_back(x);
  }
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    const Edge fe = g.edge(f);
    const Distance to_u = std::min(from_u[fe.u], from_u[fe.v]);
    const Distance to_v = std::min(from_v[fe.u], from_v[fe.v]);
    if (to_u < to_v) sides.m_u.push_back(f);
    if (to_v < to_u) sides.m_v.push_back(f);
  }
  return sides;
}

inline IndexReport oracle_suite(const Graph& g, bool starred) {
  require_connected(g);
  IndexValues v;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge ed = g.edge(e);
    const Exact du = g.degree(ed.u);
    const Exact dv = g.degree(ed.v);
    const Exact weight = starred ? du * dv : du + dv;
    const EdgeSides s = oracle_edge_sides(g, e);
    const Exact nu = s.n_u.size(), nv = s.n_v.size(), mu = s.m_u.size(), mv = s.m_v.size();
    v.wSz += weight * nu * nv;
    v.wPI_v += weight * (nu + nv);
    v.wSz_e += weight * mu * mv;
    v.wPI += weight * (mu + mv);
  }
  IndexReport r;
  r.method = Method::direct;
  r.starred = starred;
  r.totals = v;
  r.per_class.push_back({0, g.edge_count(), v});
  return r;
}

inline Exact oracle_general(const Graph& g, const WeightAssignment& wa, IndexKind kind) {
  require_connected(g);
  check_weights(g, wa);
  Exact total = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const EdgeSides s = oracle_edge_sides(g, e);
    Exact nu = 0, nv = 0, mu = 0, mv = 0;
    for (VertexId x : s.n_u) nu += wa.w[x];
    for (VertexId x : s.n_v) nv += wa.w[x];
    for (EdgeId f : s.m_u) mu += wa.lambda_edge[f];
    for (EdgeId f : s.m_v) mv += wa.lambda_edge[f];
    Exact term = 0;
    if (kind == IndexKind::SZ) term = nu * nv;
    if (kind == IndexKind::PI_V) term = nu + nv;
    if (kind == IndexKind::SZ_E) term = mu * mv;
    if (kind == IndexKind::PI) term = mu + mv;
    if (kind == IndexKind::SZ_T) term = (nu + mu) * (nv + mv);
    total += wa.w_edge[e] * term;
  }
  return total;
}

}  // namespace szeged::oracle
