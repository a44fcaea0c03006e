#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "szeged/szeged.hpp"

namespace szeged::testing {

using EdgePairs = std::vector<std::pair<VertexId, VertexId>>;

inline Graph path_graph(std::size_t n) {
  EdgePairs e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  EdgePairs e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, static_cast<VertexId>((i + 1) % n));
  return build_graph(n, e);
}

// Fullerene patch: a pentagon a0..a4 ringed by five hexagons. Vertex ids
// a_i = i, b_i = 5+i, x_i = 10+i, y_i = 15+i; sector i contributes edges
// a_i a_{i+1}, a_i b_i, b_i x_i, b_i y_i, y_i x_{i+1} (ids 5i .. 5i+4).
inline Graph fullerene_patch() {
  EdgePairs e;
  for (VertexId i = 0; i < 5; ++i) {
    const VertexId j = (i + 1) % 5;
    e.emplace_back(i, j);
    e.emplace_back(i, 5 + i);
    e.emplace_back(5 + i, 10 + i);
    e.emplace_back(5 + i, 15 + i);
    e.emplace_back(15 + i, 10 + j);
  }
  return build_graph(20, e);
}

// Pentagon and rim edges: the large Theta*-class of the patch.
inline bool fullerene_f1_edge(EdgeId e) { return e % 5 == 0 || e % 5 == 4; }

// Random connected graph on n vertices: random spanning tree plus each
// remaining pair with probability `density`.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double density) {
  EdgePairs e;
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<VertexId> order(n);
  for (VertexId i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    VertexId a = order[i], b = order[pick(rng)];
    e.emplace_back(a, b);
    used.insert({std::min(a, b), std::max(a, b)});
  }
  std::bernoulli_distribution coin(density);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (!used.count({a, b}) && coin(rng)) e.emplace_back(a, b);
    }
  }
  std::shuffle(e.begin(), e.end(), rng);
  return build_graph(n, e);
}

// Connected bipartite graph: random spanning tree across two colour classes
// plus random cross edges.
inline Graph random_bipartite_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<int> side(n);
  std::bernoulli_distribution half(0.5);
  side[0] = 0;
  if (n > 1) side[1] = 1;
  for (std::size_t i = 2; i < n; ++i) side[i] = half(rng);
  EdgePairs e;
  std::set<std::pair<VertexId, VertexId>> used;
  for (VertexId i = 1; i < n; ++i) {
    std::vector<VertexId> other;
    for (VertexId j = 0; j < i; ++j) {
      if (side[j] != side[i]) other.push_back(j);
    }
    if (other.empty()) {
      // flip to attach to vertex 0's opposite class
      side[i] = 1 - side[0];
      other.push_back(0);
    }
    std::uniform_int_distribution<std::size_t> pick(0, other.size() - 1);
    VertexId j = other[pick(rng)];
    e.emplace_back(j, i);
    used.insert({j, i});
  }
  std::bernoulli_distribution coin(density);
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (side[a] != side[b] && !used.count({a, b}) && coin(rng)) e.emplace_back(a, b);
    }
  }
  return build_graph(n, e);
}

// Random coarsening of p: each class goes to one of `groups` buckets.
inline EdgePartition random_coarsening(std::mt19937_64& rng, const EdgePartition& p,
                                       std::size_t groups) {
  std::uniform_int_distribution<std::size_t> pick(0, std::max<std::size_t>(groups, 1) - 1);
  std::vector<std::size_t> grouping(p.class_count());
  for (auto& g : grouping) g = pick(rng);
  return coarsen(p, grouping);
}

inline WeightAssignment random_weights(std::mt19937_64& rng, const Graph& g, int max_weight) {
  std::uniform_int_distribution<int> pick(0, max_weight);
  WeightAssignment wa;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) wa.w.emplace_back(pick(rng));
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    wa.w_edge.emplace_back(pick(rng));
    wa.lambda_edge.emplace_back(pick(rng));
  }
  return wa;
}

// Grows a random edge-connected polyhex. With `catacondensed`, only cells
// touching the region along exactly one side and creating no triple
// vertex are added, so the result is a valid phenylene base.
inline HexSpec random_polyhex(std::mt19937_64& rng, std::size_t cells, bool catacondensed) {
  std::set<Cell> region{{0, 0}};
  std::size_t attempts = 0;
  while (region.size() < cells && attempts++ < cells * 200) {
    std::vector<Cell> current(region.begin(), region.end());
    std::uniform_int_distribution<std::size_t> pick(0, current.size() - 1);
    std::uniform_int_distribution<int> dir(0, 5);
    Cell c = hex::neighbour(current[pick(rng)], dir(rng));
    if (region.count(c)) continue;
    if (catacondensed) {
      int touching = 0;
      for (int d = 0; d < 6; ++d) touching += region.count(hex::neighbour(c, d)) ? 1 : 0;
      if (touching != 1) continue;
    }
    region.insert(c);
  }
  return HexSpec{{region.begin(), region.end()}};
}

}  // namespace szeged::testing
