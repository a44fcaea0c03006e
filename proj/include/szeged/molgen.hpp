#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "szeged/errors.hpp"
#include "szeged/exact.hpp"
#include "szeged/graph.hpp"
#include "szeged/quotient.hpp"
#include "szeged/report.hpp"
#include "szeged/theta.hpp"
#include "szeged/weights.hpp"

namespace szeged {

// Axial coordinates of a hexagon on the pointy-top hexagonal lattice.
struct Cell {
  int q = 0;
  int r = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct HexSpec {
  std::vector<Cell> cells;

  static HexSpec linear_chain(std::size_t h) {
    HexSpec s;
    for (std::size_t i = 0; i < h; ++i) s.cells.push_back({static_cast<int>(i), 0});
    return s;
  }
};

namespace hex {

using Point = std::pair<int, int>;

// Neighbour offsets in axial coordinates.
inline constexpr std::array<Cell, 6> kNeighbours{{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

// Corners in units of (sqrt(3)/2, 1/2) around a centre at (2q + r, 3r),
// counter-clockwise from the upper-right corner. Integer units make corners
// shared by neighbouring cells compare exactly equal.
inline constexpr std::array<Point, 6> kCornerOffsets{{{1, 1}, {0, 2}, {-1, 1}, {-1, -1}, {0, -2}, {1, -1}}};

// Direction of side (k, k+1): 1 vertical, 2 and 3 the two diagonal families.
inline constexpr std::array<std::uint8_t, 6> kSideDirection{2, 3, 1, 2, 3, 1};

inline Point corner(const Cell& c, int k) {
  return {2 * c.q + c.r + kCornerOffsets[k].first, 3 * c.r + kCornerOffsets[k].second};
}

inline Cell neighbour(const Cell& c, int d) {
  return {c.q + kNeighbours[d].q, c.r + kNeighbours[d].r};
}

}  // namespace hex

// Sorted, validated copy of the cells: nonempty, distinct, edge-connected.
inline std::vector<Cell> normalized_cells(const HexSpec& spec) {
  if (spec.cells.empty()) throw DisconnectedCells("hex spec has no cells");
  std::vector<Cell> cells = spec.cells;
  std::sort(cells.begin(), cells.end());
  auto dup = std::adjacent_find(cells.begin(), cells.end());
  if (dup != cells.end()) {
    throw DuplicateCell("cell (" + std::to_string(dup->q) + "," + std::to_string(dup->r) +
                        ") listed twice");
  }
  std::set<Cell> remaining(cells.begin(), cells.end());
  std::vector<Cell> stack{cells.front()};
  remaining.erase(cells.front());
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (int d = 0; d < 6; ++d) {
      auto it = remaining.find(hex::neighbour(c, d));
      if (it != remaining.end()) {
        stack.push_back(*it);
        remaining.erase(it);
      }
    }
  }
  if (!remaining.empty()) throw DisconnectedCells("cells do not form an edge-connected region");
  return cells;
}

// Pairs (i, j), i < j, of indices into the sorted cell list that share a side.
inline std::vector<std::pair<std::size_t, std::size_t>> cell_adjacency(
    const std::vector<Cell>& sorted_cells) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < sorted_cells.size(); ++i) {
    for (int d = 0; d < 6; ++d) {
      auto nb = hex::neighbour(sorted_cells[i], d);
      auto it = std::lower_bound(sorted_cells.begin(), sorted_cells.end(), nb);
      if (it != sorted_cells.end() && *it == nb) {
        auto j = static_cast<std::size_t>(it - sorted_cells.begin());
        if (i < j) out.emplace_back(i, j);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct EdgeOrigin {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t cell = npos;
  std::size_t other_cell = npos;  // set only for square edges of phenylenes
};

// A molecular graph whose edges carry lattice direction labels: 1-3 for
// hexagon sides, 4 for the square-closing edges of a phenylene.
struct DirectionLabeledGraph {
  Graph graph;
  std::vector<std::uint8_t> direction_of;
  std::vector<EdgeOrigin> cell_of;
  std::vector<Cell> cells;  // sorted; EdgeOrigin indexes into this
  bool nonstandard_region = false;

  std::vector<std::size_t> labels() const {
    return {direction_of.begin(), direction_of.end()};
  }
  // Direction classes. Flagged as Theta*-refined: for benzenoids and
  // phenylenes every direction class is a union of Theta-classes.
  EdgePartition partition() const { return EdgePartition::from_labels(labels(), true); }
};

inline DirectionLabeledGraph build_benzenoid(const HexSpec& spec) {
  DirectionLabeledGraph out;
  out.cells = normalized_cells(spec);
  std::map<hex::Point, VertexId> corner_id;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_id;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t ci = 0; ci < out.cells.size(); ++ci) {
    std::array<VertexId, 6> ids{};
    for (int k = 0; k < 6; ++k) {
      auto [it, fresh] = corner_id.try_emplace(hex::corner(out.cells[ci], k),
                                               static_cast<VertexId>(corner_id.size()));
      ids[k] = it->second;
    }
    for (int k = 0; k < 6; ++k) {
      VertexId a = ids[k], b = ids[(k + 1) % 6];
      if (!edge_id.try_emplace({std::min(a, b), std::max(a, b)},
                               static_cast<EdgeId>(pairs.size())).second) {
        continue;
      }
      pairs.emplace_back(a, b);
      out.direction_of.push_back(hex::kSideDirection[k]);
      out.cell_of.push_back({ci, EdgeOrigin::npos});
    }
  }
  out.graph = build_graph(corner_id.size(), pairs);
  // Euler: a hole shows up as an inner face that is not one of the cells.
  const std::size_t inner_faces = pairs.size() + 1 - corner_id.size();
  out.nonstandard_region = inner_faces != out.cells.size();
  return out;
}

// One quotient per direction class, weighted for the degree-weighted suite.
// Throws NotATree if a quotient is not a tree.
inline std::vector<QuotientGraph> benzenoid_quotient_trees(const DirectionLabeledGraph& b,
                                                           bool starred = false) {
  const auto wa = degree_weights(b.graph, starred);
  const auto p = b.partition();
  std::vector<QuotientGraph> trees;
  for (std::size_t c = 0; c < p.class_count(); ++c) {
    trees.push_back(quotient_graph(b.graph, wa, p.members(c)));
    if (!is_tree(trees.back().graph())) {
      throw NotATree("quotient by direction " +
                     std::to_string(b.direction_of[p.members(c).front()]) + " is not a tree");
    }
  }
  return trees;
}

// Phenylene over a catacondensed cell set: a separate hexagon per cell, and a
// square between every pair of adjacent cells, formed by the two copies of
// their shared side and two new edges (label 4) joining copies of the same
// lattice corner.
inline DirectionLabeledGraph build_phenylene(const HexSpec& spec) {
  DirectionLabeledGraph out;
  out.cells = normalized_cells(spec);
  const auto& cells = out.cells;

  std::map<hex::Point, int> multiplicity;
  for (const Cell& c : cells) {
    for (int k = 0; k < 6; ++k) {
      if (++multiplicity[hex::corner(c, k)] >= 3) {
        throw NotCatacondensed("a lattice vertex is shared by three hexagons");
      }
    }
  }
  const auto adjacent = cell_adjacency(cells);
  if (adjacent.size() + 1 != cells.size()) {
    throw CellsNotTree("hexagon adjacency graph is not a tree");
  }

  std::vector<std::pair<VertexId, VertexId>> pairs;
  auto vid = [](std::size_t cell, int k) { return static_cast<VertexId>(cell * 6 + k); };
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    for (int k = 0; k < 6; ++k) {
      pairs.emplace_back(vid(ci, k), vid(ci, (k + 1) % 6));
      out.direction_of.push_back(hex::kSideDirection[k]);
      out.cell_of.push_back({ci, EdgeOrigin::npos});
    }
  }
  for (auto [a, b] : adjacent) {
    for (int ka = 0; ka < 6; ++ka) {
      for (int kb = 0; kb < 6; ++kb) {
        if (hex::corner(cells[a], ka) != hex::corner(cells[b], kb)) continue;
        pairs.emplace_back(vid(a, ka), vid(b, kb));
        out.direction_of.push_back(4);
        out.cell_of.push_back({a, b});
      }
    }
  }
  out.graph = build_graph(cells.size() * 6, pairs);
  return out;
}

inline DirectionLabeledGraph linear_phenylene(std::size_t n) {
  if (n < 2) throw NTooSmall("linear phenylene needs n >= 2");
  return build_phenylene(HexSpec::linear_chain(n));
}

inline DirectionLabeledGraph linear_benzenoid(std::size_t h) {
  if (h < 1) throw NTooSmall("linear benzenoid needs at least one hexagon");
  return build_benzenoid(HexSpec::linear_chain(h));
}

// Closed forms for the linear phenylene PH_n.
inline IndexReport ph_closed_formulas(std::size_t n) {
  if (n < 2) throw NTooSmall("closed formulas hold for n >= 2");
  const Exact x = n;
  const Exact x2 = x * x, x3 = x2 * x;
  const Exact sz_e_numerator = Exact(1348) * x3 - Exact(1860) * x2 + Exact(812) * x - Exact(12);
  if (sz_e_numerator % Exact(3) != Exact(0)) {
    throw std::logic_error("wSz_e numerator not divisible by 3");
  }
  IndexReport r;
  r.method = Method::formula;
  r.totals.wSz = Exact(300) * x3 - Exact(36) * x2 - Exact(84) * x + Exact(36);
  r.totals.wPI_v = Exact(264) * x2 - Exact(120) * x;
  r.totals.wSz_e = sz_e_numerator / Exact(3);
  r.totals.wPI = Exact(328) * x2 - Exact(304) * x + Exact(72);
  return r;
}

// ---------------------------------------------------------------------------
// Hex-spec text format: one `q r` pair per line, `#` comments ignored.

inline HexSpec read_hex_spec(std::istream& in) {
  HexSpec spec;
  std::string line;
  std::size_t line_no = 0;
  while (detail::next_data_line(in, line, line_no)) {
    std::istringstream ss(line);
    Cell c;
    std::string extra;
    if (!(ss >> c.q >> c.r) || (ss >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected `q r`");
    }
    spec.cells.push_back(c);
  }
  if (spec.cells.empty()) throw ParseError("hex spec has no cells");
  return spec;
}

inline void write_hex_spec(std::ostream& out, const HexSpec& spec) {
  for (const Cell& c : spec.cells) out << c.q << ' ' << c.r << '\n';
}

}  // namespace szeged
