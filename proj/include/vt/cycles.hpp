#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vt/error.hpp"
#include "vt/torus.hpp"

namespace vt {

/// AP / OP: 2r repetitions of one diagonal step from `vertices.front()`.
struct DiagonalPath {
  std::vector<Vertex> vertices;
  EdgeKind purity = EdgeKind::acute;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  /// Endpoints coincide; happens when s divides r.
  bool closed() const noexcept { return vertices.size() > 1 && vertices.front() == vertices.back(); }
};

/// AC / OC in canonical form: starts at the lexicographically smallest vertex
/// and steps with dx = +1.
struct DiagonalCycle {
  std::vector<Vertex> vertices;
  EdgeKind purity = EdgeKind::acute;

  std::size_t length() const noexcept { return vertices.size(); }

  friend bool operator==(const DiagonalCycle&, const DiagonalCycle&) = default;
};

/// gcd(r,s) with the toroidal / poloidal revolution counts r/d and s/d.
struct HelixSignature {
  int d = 1;
  int p = 1;
  int q = 1;

  friend bool operator==(const HelixSignature&, const HelixSignature&) = default;
};

inline HelixSignature helix_signature(TorusParams params) {
  const int d = std::gcd(params.r, params.s);
  return {d, params.r / d, params.s / d};
}

namespace detail {

inline Step purity_step(EdgeKind purity) noexcept {
  return purity == EdgeKind::acute ? kAcuteStep : kObtuseStep;
}

inline DiagonalPath diagonal_path(const VtGraph& g, Vertex start, EdgeKind purity) {
  g.index(start);
  const Step st = purity_step(purity);
  DiagonalPath path{{start}, purity};
  Vertex v = start;
  for (int i = 0; i < 2 * g.r(); ++i) {
    v = g.shift(v, st.dx, st.dy);
    path.vertices.push_back(v);
  }
  return path;
}

inline DiagonalCycle diagonal_cycle(const VtGraph& g, Vertex start, EdgeKind purity) {
  g.index(start);
  const Step st = purity_step(purity);
  std::vector<Vertex> walk{start};
  for (Vertex v = g.shift(start, st.dx, st.dy); v != start; v = g.shift(v, st.dx, st.dy)) {
    walk.push_back(v);
  }
  const auto smallest = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), smallest, walk.end());

  const auto sig = helix_signature(g.params());
  const std::size_t expected = 2 * static_cast<std::size_t>(g.r()) * g.s() / sig.d;
  if (walk.size() != expected) {
    throw std::logic_error("diagonal cycle of length " + std::to_string(walk.size()) + ", expected " +
                           std::to_string(expected));
  }
  return {std::move(walk), purity};
}

inline std::vector<DiagonalCycle> distinct_cycles(const VtGraph& g, EdgeKind purity) {
  std::vector<DiagonalCycle> out;
  std::vector<bool> covered(g.order(), false);
  // The translates through (0,2k) already meet every cycle.
  for (int k = 0; k < g.s(); ++k) {
    const Vertex start{0, 2 * k};
    if (covered[g.index(start)]) continue;
    DiagonalCycle c = diagonal_cycle(g, start, purity);
    for (const Vertex& v : c.vertices) covered[g.index(v)] = true;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

inline DiagonalPath acute_path(const VtGraph& g, Vertex start) {
  return detail::diagonal_path(g, start, EdgeKind::acute);
}

inline DiagonalPath obtuse_path(const VtGraph& g, Vertex start) {
  return detail::diagonal_path(g, start, EdgeKind::obtuse);
}

inline DiagonalCycle acute_cycle(const VtGraph& g, Vertex start) {
  return detail::diagonal_cycle(g, start, EdgeKind::acute);
}

inline DiagonalCycle obtuse_cycle(const VtGraph& g, Vertex start) {
  return detail::diagonal_cycle(g, start, EdgeKind::obtuse);
}

inline std::vector<DiagonalCycle> distinct_acute_cycles(const VtGraph& g) {
  return detail::distinct_cycles(g, EdgeKind::acute);
}

inline std::vector<DiagonalCycle> distinct_obtuse_cycles(const VtGraph& g) {
  return detail::distinct_cycles(g, EdgeKind::obtuse);
}

/// Edge ids traversed by a cycle, closing edge included.
inline std::vector<std::size_t> cycle_edge_ids(const VtGraph& g, const DiagonalCycle& c) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const auto id = g.edge_id(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
    if (!id) throw Error(Errc::unknown_edge, "cycle steps off the graph");
    ids.push_back(*id);
  }
  return ids;
}

struct Revolutions {
  int row_count = 0;
  int col_count = 0;

  friend bool operator==(const Revolutions&, const Revolutions&) = default;
};

/// |C ∩ ROW_i| and |C ∩ COL_j|, required to be the same for every row and
/// every column.
inline Revolutions revolutions(const VtGraph& g, const DiagonalCycle& c) {
  std::vector<int> per_row(2 * static_cast<std::size_t>(g.r()), 0);
  std::vector<int> per_col(2 * static_cast<std::size_t>(g.s()), 0);
  std::set<Vertex> distinct;
  for (const Vertex& v : c.vertices) {
    g.index(v);
    if (!distinct.insert(v).second) continue;
    ++per_row[v.x];
    ++per_col[v.y];
  }
  const auto uniform = [](const std::vector<int>& counts) {
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
  };
  if (!uniform(per_row)) throw Error(Errc::non_uniform_intersection, "rows meet the cycle unevenly");
  if (!uniform(per_col)) throw Error(Errc::non_uniform_intersection, "columns meet the cycle unevenly");
  return {per_row.front(), per_col.front()};
}

}  // namespace vt
