#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vt/edgecut.hpp"
#include "vt/error.hpp"
#include "vt/graph.hpp"
#include "vt/metric.hpp"
#include "vt/path_set.hpp"
#include "vt/torus.hpp"

namespace vt {

enum class Axis { x, y };

inline const char* to_string(Axis a) noexcept { return a == Axis::x ? "x" : "y"; }

struct EdgecutPartition {
  std::vector<Edgecut> cuts;
  Axis axis = Axis::y;
};

namespace detail {

inline int coordinate(Vertex v, Axis axis) noexcept { return axis == Axis::x ? v.x : v.y; }

/// Boundary t lies between levels t and t+1 (mod 2*half); every edge crosses one.
inline int crossed_boundary(const Edge& e, Axis axis, int half) noexcept {
  const int a = coordinate(e.u, axis);
  const int b = coordinate(e.v, axis);
  return (a + 1) % (2 * half) == b ? a : b;
}

}  // namespace detail

/// Antipodal band cuts: cut j collects the edges crossing boundary j or j+half,
/// where half is s for the y axis and r for the x axis. U is the band of
/// levels j+1 .. j+half.
inline EdgecutPartition band_edgecut_partition(const VtGraph& g, Axis axis) {
  const int half = axis == Axis::x ? g.r() : g.s();
  EdgecutPartition part;
  part.axis = axis;
  part.cuts.resize(static_cast<std::size_t>(half));
  for (int j = 0; j < half; ++j) {
    Edgecut& cut = part.cuts[j];
    for (const Vertex& v : g.vertices()) {
      const int offset = ((detail::coordinate(v, axis) - j - 1) % (2 * half) + 2 * half) % (2 * half);
      (offset < half ? cut.side_u : cut.side_w).push_back(v);
    }
  }
  for (const Edge& e : g.edges()) {
    part.cuts[detail::crossed_boundary(e, axis, half) % half].edges.push_back(e);
  }
  return part;
}

/// Sides (U, W) when removing `edges` leaves exactly two components and the
/// set is precisely the edges running between them.
inline std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> is_edgecut(
    const VtGraph& g, const std::vector<Edge>& edges) {
  std::vector<bool> removed(g.size(), false);
  for (const Edge& e : edges) {
    const auto id = g.edge_id(e);
    if (!id) return std::nullopt;
    removed[*id] = true;
  }
  DisjointSets sets(g.order());
  for (std::size_t id = 0; id < g.size(); ++id) {
    if (!removed[id]) sets.unite(g.index(g.edge(id).u), g.index(g.edge(id).v));
  }
  if (sets.count() != 2) return std::nullopt;

  const std::size_t root_u = sets.find(0);
  std::pair<std::vector<Vertex>, std::vector<Vertex>> sides;
  for (std::size_t i = 0; i < g.order(); ++i) {
    (sets.find(i) == root_u ? sides.first : sides.second).push_back(g.vertex(i));
  }
  for (std::size_t id = 0; id < g.size(); ++id) {
    const bool crosses = sets.find(g.index(g.edge(id).u)) != sets.find(g.index(g.edge(id).v));
    if (crosses != removed[id]) return std::nullopt;
  }
  return sides;
}

/// Per-edge path counts, indexed by edge id.
inline std::vector<std::int64_t> edge_loads(const VtGraph& g, const Routing& routing) {
  std::vector<std::int64_t> load(g.size(), 0);
  for (const Path& p : routing.paths) {
    for (std::size_t id : path_edge_ids(g, p)) ++load[id];
  }
  return load;
}

/// Number of paths of the routing that use edge e.
inline std::int64_t congestion(const VtGraph& g, const Routing& routing, const Edge& e) {
  const auto id = g.edge_id(e);
  if (!id) throw Error(Errc::unknown_edge, "(" + to_string(e.u) + ")-(" + to_string(e.v) + ")");
  std::int64_t count = 0;
  for (const Path& p : routing.paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if ((p[i] == e.u && p[i + 1] == e.v) || (p[i] == e.v && p[i + 1] == e.u)) ++count;
    }
  }
  return count;
}

struct CutTerms {
  std::int64_t k_uw = 0;  // pairs split by the cut
  std::int64_t k_u = 0;   // both endpoints in U
  std::int64_t k_w = 0;   // both endpoints in W

  std::int64_t total() const noexcept { return k_uw + k_u + k_w; }
};

struct SumPathsLedger {
  std::vector<CutTerms> per_cut;
  std::int64_t grand_total = 0;
  std::int64_t path_length_sum = 0;
};

namespace detail {

/// Cut index of every edge; PartitionMismatch unless each edge appears once.
inline std::vector<std::size_t> edge_to_cut(const VtGraph& g, const EdgecutPartition& part) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(g.size(), none);
  for (std::size_t c = 0; c < part.cuts.size(); ++c) {
    for (const Edge& e : part.cuts[c].edges) {
      const auto id = g.edge_id(e);
      if (!id) throw Error(Errc::partition_mismatch, "cut lists a non-edge");
      if (owner[*id] != none) {
        throw Error(Errc::partition_mismatch, "edge (" + to_string(e.u) + ")-(" + to_string(e.v) +
                                                  ") appears in two cuts");
      }
      owner[*id] = c;
    }
  }
  if (std::find(owner.begin(), owner.end(), none) != owner.end()) {
    throw Error(Errc::partition_mismatch, "cuts do not cover every edge");
  }
  return owner;
}

}  // namespace detail

/// Splits each cut's load into k_{U,W}, k_U and k_W by where the routed
/// pair's endpoints sit. The grand total always equals the summed path length.
inline SumPathsLedger sum_paths_ledger(const VtGraph& g, const Routing& routing, const EdgecutPartition& part) {
  const auto owner = detail::edge_to_cut(g, part);
  // in_u[c][v]: vertex v lies on side U of cut c.
  std::vector<std::vector<bool>> in_u(part.cuts.size(), std::vector<bool>(g.order(), false));
  for (std::size_t c = 0; c < part.cuts.size(); ++c) {
    for (const Vertex& v : part.cuts[c].side_u) in_u[c][g.index(v)] = true;
  }

  SumPathsLedger ledger;
  ledger.per_cut.resize(part.cuts.size());
  std::vector<std::int64_t> hits(part.cuts.size(), 0);
  for (const Path& p : routing.paths) {
    if (p.size() < 2) continue;
    const auto ids = path_edge_ids(g, p);
    ledger.path_length_sum += static_cast<std::int64_t>(ids.size());
    for (std::size_t id : ids) ++hits[owner[id]];
    const std::size_t x = g.index(p.front());
    const std::size_t y = g.index(p.back());
    for (std::size_t id : ids) {
      const std::size_t c = owner[id];
      if (hits[c] == 0) continue;
      CutTerms& t = ledger.per_cut[c];
      if (in_u[c][x] != in_u[c][y]) {
        t.k_uw += hits[c];
      } else if (in_u[c][x]) {
        t.k_u += hits[c];
      } else {
        t.k_w += hits[c];
      }
      hits[c] = 0;
    }
  }
  for (const CutTerms& t : ledger.per_cut) ledger.grand_total += t.total();
  return ledger;
}

enum class WienerMethod { brute, cut_decomposition };

struct WienerReport {
  std::int64_t value = 0;
  WienerMethod method = WienerMethod::brute;
  std::vector<std::int64_t> per_cut_contributions;
};

/// Sum of d(u,v) over unordered pairs, from a BFS per source.
template <IndexedGraph G>
std::int64_t wiener_index(const G& g) {
  const DistanceMatrix d(g);
  std::int64_t sum = 0;
  for (std::size_t u = 0; u < d.order(); ++u) {
    for (std::size_t v = u + 1; v < d.order(); ++v) sum += d(u, v);
  }
  return sum;
}

inline WienerReport wiener_brute(const VtGraph& g) { return {wiener_index(g), WienerMethod::brute, {}}; }

/// Wiener index as the sum of cut loads Π(G,C,E_i) under the canonical
/// shortest routing.
inline WienerReport wiener_via_cuts(const VtGraph& g, const EdgecutPartition& part) {
  const auto ledger = sum_paths_ledger(g, shortest_routing(g), part);
  WienerReport report{ledger.grand_total, WienerMethod::cut_decomposition, {}};
  for (const CutTerms& t : ledger.per_cut) report.per_cut_contributions.push_back(t.total());
  return report;
}

}  // namespace vt
