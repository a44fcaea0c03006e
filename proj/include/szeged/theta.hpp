#pragma once

#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "szeged/errors.hpp"
#include "szeged/graph.hpp"

namespace szeged {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned char> rank_;
};

// Partition of the edge ids 0..m-1 into nonempty classes. Classes are
// numbered by their smallest edge id, so two partitions with the same blocks
// compare equal regardless of how their labels were chosen.
class EdgePartition {
 public:
  EdgePartition() = default;

  // `refined` asserts that every class is a union of Theta*-classes. Only
  // set it when that is known (validated, or guaranteed by construction).
  static EdgePartition from_labels(std::span<const std::size_t> labels, bool refined = false) {
    EdgePartition p;
    p.class_of_.resize(labels.size());
    std::unordered_map<std::size_t, std::size_t> index;
    for (std::size_t e = 0; e < labels.size(); ++e) {
      auto [it, fresh] = index.try_emplace(labels[e], p.classes_.size());
      if (fresh) p.classes_.emplace_back();
      p.class_of_[e] = it->second;
      p.classes_[it->second].push_back(static_cast<EdgeId>(e));
    }
    p.refined_ = refined;
    return p;
  }
  static EdgePartition from_labels(const std::vector<std::size_t>& labels, bool refined = false) {
    return from_labels(std::span<const std::size_t>(labels), refined);
  }

  static EdgePartition single_class(std::size_t m) {
    // {E(G)} is the coarsest c-partition
    return from_labels(std::vector<std::size_t>(m, 0), true);
  }

  std::size_t edge_count() const { return class_of_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  std::size_t class_of(EdgeId e) const { return class_of_.at(e); }
  std::span<const std::size_t> labels() const { return class_of_; }
  std::span<const EdgeId> members(std::size_t c) const { return classes_.at(c); }
  const std::vector<std::vector<EdgeId>>& classes() const { return classes_; }
  bool refined_by_theta_star() const { return refined_; }

  friend bool operator==(const EdgePartition& a, const EdgePartition& b) {
    return a.class_of_ == b.class_of_;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<EdgeId>> classes_;
  bool refined_ = false;
};

// e1 = u1v1 and e2 = u2v2 are Theta-related iff
// d(u1,u2) + d(v1,v2) != d(u1,v2) + d(u2,v1). Swapping the names of either
// edge's endpoints swaps the two sides, so the test is orientation-free.
inline bool theta_related(const Graph& g, const DistanceMatrix& dm, EdgeId e1, EdgeId e2) {
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  return dm(a.u, b.u) + dm(a.v, b.v) != dm(a.u, b.v) + dm(b.u, a.v);
}

// Theta* classes by union-find over all Theta-related pairs, O(m^2) tests.
inline EdgePartition theta_star_partition(const Graph& g, const DistanceMatrix& dm) {
  const std::size_t m = g.edge_count();
  UnionFind uf(m);
  for (EdgeId e1 = 0; e1 < m; ++e1) {
    for (EdgeId e2 = e1 + 1; e2 < m; ++e2) {
      if (uf.find(e1) == uf.find(e2)) continue;
      if (theta_related(g, dm, e1, e2)) uf.unite(e1, e2);
    }
  }
  std::vector<std::size_t> roots(m);
  for (std::size_t e = 0; e < m; ++e) roots[e] = uf.find(e);
  return EdgePartition::from_labels(roots, true);
}

inline EdgePartition theta_star_partition(const Graph& g) {
  return theta_star_partition(g, all_pairs_distances(g));
}

namespace detail {
inline void require_covering(const Graph& g, const EdgePartition& p) {
  if (p.edge_count() != g.edge_count()) {
    throw PartitionNotCovering("partition covers " + std::to_string(p.edge_count()) +
                               " edges, graph has " + std::to_string(g.edge_count()));
  }
}

inline bool is_coarsening_of(const EdgePartition& fine, const EdgePartition& coarse) {
  for (const auto& cls : fine.classes()) {
    const std::size_t target = coarse.class_of(cls.front());
    for (EdgeId e : cls) {
      if (coarse.class_of(e) != target) return false;
    }
  }
  return true;
}
}  // namespace detail

// True iff every Theta*-class lies inside a single class of p.
inline bool validate_c_partition(const Graph& g, const EdgePartition& p) {
  detail::require_covering(g, p);
  return detail::is_coarsening_of(theta_star_partition(g), p);
}

// Validates p and returns it flagged as refined; throws InvalidCPartition.
inline EdgePartition certify_c_partition(const Graph& g, const EdgePartition& p) {
  if (!validate_c_partition(g, p)) {
    throw InvalidCPartition("partition splits a Theta*-class across classes");
  }
  return EdgePartition::from_labels(p.labels(), true);
}

// Merges classes: class c of p goes to group grouping[c].
inline EdgePartition coarsen(const EdgePartition& p, std::span<const std::size_t> grouping) {
  if (grouping.size() != p.class_count()) {
    throw IncompleteGrouping("grouping has " + std::to_string(grouping.size()) +
                             " entries for " + std::to_string(p.class_count()) + " classes");
  }
  std::vector<std::size_t> labels(p.edge_count());
  for (std::size_t e = 0; e < labels.size(); ++e) labels[e] = grouping[p.class_of(static_cast<EdgeId>(e))];
  return EdgePartition::from_labels(labels, p.refined_by_theta_star());
}

inline EdgePartition coarsen(const EdgePartition& p, const std::vector<std::size_t>& grouping) {
  return coarsen(p, std::span<const std::size_t>(grouping));
}

// Bipartite and Theta transitive (each Theta*-class pairwise Theta-related).
inline bool is_partial_cube(const Graph& g) {
  require_connected(g);
  if (!is_bipartite(g)) return false;
  auto dm = all_pairs_distances(g);
  auto star = theta_star_partition(g, dm);
  for (const auto& cls : star.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (!theta_related(g, dm, cls[i], cls[j])) return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// `edge_id label` per line, one line per edge; used for partition files and
// direction-label sidecars.

inline std::vector<std::size_t> read_edge_labels(std::istream& in, std::size_t m) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(m, kUnset);
  std::string line;
  std::size_t line_no = 0;
  while (detail::next_data_line(in, line, line_no)) {
    std::size_t e = 0, label = 0;
    detail::parse_fields(line, line_no, e, label);
    if (e >= m) {
      throw ParseError("line " + std::to_string(line_no) + ": edge id " + std::to_string(e) +
                       " out of range");
    }
    if (label == kUnset) throw ParseError("line " + std::to_string(line_no) + ": label too large");
    if (labels[e] != kUnset) {
      throw ParseError("line " + std::to_string(line_no) + ": edge " + std::to_string(e) +
                       " listed twice");
    }
    labels[e] = label;
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (labels[e] == kUnset) {
      throw PartitionNotCovering("edge " + std::to_string(e) + " has no class");
    }
  }
  return labels;
}

inline void write_edge_labels(std::ostream& out, std::span<const std::size_t> labels) {
  for (std::size_t e = 0; e < labels.size(); ++e) out << e << ' ' << labels[e] << '\n';
}

// One class per line as `u-v` tokens.
inline void write_classes(std::ostream& out, const Graph& g, const EdgePartition& p) {
  for (const auto& cls : p.classes()) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const Edge& e = g.edge(cls[i]);
      out << (i ? " " : "") << e.u << '-' << e.v;
    }
    out << '\n';
  }
}

}  // namespace szeged
