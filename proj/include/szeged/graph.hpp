#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "szeged/errors.hpp"
#include "szeged/parallel.hpp"

namespace szeged {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Simple undirected graph with dense vertex ids 0..n-1 and edge ids 0..m-1
// in insertion order. Immutable once built; connectivity is not required here
// and is checked by the index entry points instead.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const {
    if (e >= edges_.size()) {
      throw EdgeOutOfRange("edge id " + std::to_string(e) + " out of range");
    }
    return edges_[e];
  }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> neighbors(VertexId v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  void check_vertex(VertexId v) const {
    if (v >= adjacency_.size()) {
      throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range");
    }
  }

  friend Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Builds a graph on n vertices with edge ids assigned in input order.
// Throws LoopEdge, DuplicateEdge or VertexOutOfRange.
inline Graph build_graph(std::size_t n,
                         std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw VertexOutOfRange("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") references a vertex >= " + std::to_string(n));
    }
    if (u == v) throw LoopEdge("loop edge at vertex " + std::to_string(u));
    auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!seen.insert(key).second) {
      throw DuplicateEdge("duplicate edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
    }
    auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back({u, v});
    g.adjacency_[u].push_back({v, id});
    g.adjacency_[v].push_back({u, id});
  }
  return g;
}

inline Graph build_graph(std::size_t n,
                         std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  return build_graph(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

inline Graph build_graph(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  return build_graph(n, std::span<const std::pair<VertexId, VertexId>>(edges));
}

// BFS hop distances from source; kUnreachable for vertices in other components.
inline std::vector<Distance> bfs_reach(const Graph& g, VertexId source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.vertex_count(), kUnreachable);
  std::vector<VertexId> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId x = queue[head];
    for (const auto& inc : g.neighbors(x)) {
      if (dist[inc.neighbor] == kUnreachable) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_reach(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

inline void require_connected(const Graph& g) {
  if (g.vertex_count() == 0) throw Disconnected("graph has no vertices");
  if (!is_connected(g)) throw Disconnected("graph is not connected");
}

// Exact hop distances from source. Throws Disconnected if some vertex is unreached.
inline std::vector<Distance> bfs_distances(const Graph& g, VertexId source) {
  auto dist = bfs_reach(g, source);
  if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
    throw Disconnected("vertex unreachable from " + std::to_string(source));
  }
  return dist;
}

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  Distance operator()(VertexId u, VertexId v) const { return data_[std::size_t{u} * n_ + v]; }
  std::span<const Distance> row(VertexId u) const {
    return {data_.data() + std::size_t{u} * n_, n_};
  }
  std::span<Distance> row(VertexId u) { return {data_.data() + std::size_t{u} * n_, n_}; }

  Distance max_entry() const {
    return data_.empty() ? 0 : *std::max_element(data_.begin(), data_.end());
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

// n independent BFS runs; rows may be filled in parallel.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  require_connected(g);
  DistanceMatrix dm(g.vertex_count());
  parallel_for(g.vertex_count(), [&](std::size_t s) {
    auto dist = bfs_reach(g, static_cast<VertexId>(s));
    std::copy(dist.begin(), dist.end(), dm.row(static_cast<VertexId>(s)).begin());
  });
  return dm;
}

// d(u, e) = min of the distances from u to the two endpoints of e.
inline Distance edge_vertex_distance(const Graph& g, const DistanceMatrix& dm, VertexId u,
                                     EdgeId e) {
  g.check_vertex(u);
  const Edge& ed = g.edge(e);
  return std::min(dm(u, ed.u), dm(u, ed.v));
}

// Two-colouring by BFS. Empty result when the graph has an odd cycle.
inline std::vector<int> two_colouring(const Graph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      VertexId x = queue[head];
      for (const auto& inc : g.neighbors(x)) {
        if (colour[inc.neighbor] == -1) {
          colour[inc.neighbor] = 1 - colour[x];
          queue.push_back(inc.neighbor);
        } else if (colour[inc.neighbor] == colour[x]) {
          return {};
        }
      }
    }
  }
  return colour;
}

inline bool is_bipartite(const Graph& g) {
  return g.vertex_count() == 0 || !two_colouring(g).empty();
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() > 0 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line `n m`, then m lines `u v`. Lines whose
// first non-blank character is `#` are ignored, as are blank lines.

namespace detail {

inline bool next_data_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

template <typename... T>
inline void parse_fields(const std::string& line, std::size_t line_no, T&... out) {
  std::istringstream ss(line);
  std::string token;
  auto read_one = [&](auto& field) {
    if (!(ss >> token)) {
      throw ParseError("line " + std::to_string(line_no) + ": missing field");
    }
    if (token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                       token + "'");
    }
    try {
      unsigned long long value = std::stoull(token);
      using F = std::remove_reference_t<decltype(field)>;
      if (value > std::numeric_limits<F>::max()) throw std::out_of_range("too large");
      field = static_cast<F>(value);
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(line_no) + ": integer out of range");
    }
  };
  (read_one(out), ...);
  if (ss >> token) {
    throw ParseError("line " + std::to_string(line_no) + ": unexpected trailing field '" + token +
                     "'");
  }
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!detail::next_data_line(in, line, line_no)) throw ParseError("missing header line `n m`");
  std::size_t n = 0, m = 0;
  detail::parse_fields(line, line_no, n, m);
  if (n > std::numeric_limits<VertexId>::max()) throw ParseError("vertex count too large");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!detail::next_data_line(in, line, line_no)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    VertexId u = 0, v = 0;
    detail::parse_fields(line, line_no, u, v);
    pairs.emplace_back(u, v);
  }
  if (detail::next_data_line(in, line, line_no)) {
    throw ParseError("line " + std::to_string(line_no) + ": more edges than declared");
  }
  try {
    return build_graph(n, pairs);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace szeged
