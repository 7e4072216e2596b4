#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vt/edgecut.hpp"
#include "vt/error.hpp"
#include "vt/graph.hpp"
#include "vt/parallel.hpp"
#include "vt/torus.hpp"

namespace vt {

inline constexpr int kUnreachable = -1;
inline constexpr std::size_t kDefaultPathCap = 1'000'000;
inline constexpr std::size_t kDefaultSubsetLimit = 24;

using Path = std::vector<Vertex>;

// ---------------------------------------------------------------------------
// Distances

template <IndexedGraph G>
std::vector<int> bfs(const G& g, std::size_t src) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<std::size_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.adjacent(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Exact all-pairs distances, one BFS per source.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  template <IndexedGraph G>
  explicit DistanceMatrix(const G& g) : n_(g.order()), d_(n_ * n_) {
    parallel_for(n_, [&](std::size_t src) {
      const auto row = bfs(g, src);
      std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(src * n_));
    });
  }

  std::size_t order() const noexcept { return n_; }
  int operator()(std::size_t u, std::size_t v) const { return d_[u * n_ + v]; }

  int eccentricity(std::size_t u) const {
    return *std::max_element(d_.begin() + static_cast<std::ptrdiff_t>(u * n_),
                             d_.begin() + static_cast<std::ptrdiff_t>((u + 1) * n_));
  }

 private:
  std::size_t n_ = 0;
  std::vector<int> d_;
};

struct DistanceField {
  Vertex source;
  std::vector<int> dist;  // indexed like g.vertices()

  int at(const VtGraph& g, Vertex v) const { return dist[g.index(v)]; }
};

inline DistanceField bfs_distances(const VtGraph& g, Vertex src) {
  return {src, bfs(g, g.index(src))};
}

/// Maximum eccentricity over every source (no vertex-transitivity shortcut).
template <IndexedGraph G>
int diameter(const G& g) {
  const DistanceMatrix d(g);
  int best = 0;
  for (std::size_t u = 0; u < d.order(); ++u) {
    const int e = d.eccentricity(u);
    if (e == kUnreachable) return kUnreachable;
    best = std::max(best, e);
  }
  return best;
}

/// Diameter of the ring torus C_a x C_b, measured by BFS on the product.
inline int ring_torus_diameter(int cycle_a, int cycle_b) {
  if (cycle_a < 4 || cycle_b < 4 || cycle_a % 2 != 0 || cycle_b % 2 != 0) {
    throw Error(Errc::param_too_small, "ring torus cycles must have even length >= 4");
  }
  return diameter(cycle_product(static_cast<std::size_t>(cycle_a), static_cast<std::size_t>(cycle_b)));
}

/// Vertices on some shortest x,y-path, in index order.
inline std::vector<std::size_t> interval(const DistanceMatrix& d, std::size_t x, std::size_t y) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < d.order(); ++z) {
    if (d(x, z) + d(z, y) == d(x, y)) out.push_back(z);
  }
  return out;
}

/// A shortest path from x to y, first neighbor in adjacency order at each step.
template <IndexedGraph G>
std::vector<std::size_t> greedy_geodesic(const G& g, const DistanceMatrix& d, std::size_t x, std::size_t y) {
  std::vector<std::size_t> path{x};
  while (path.back() != y) {
    for (std::size_t w : g.adjacent(path.back())) {
      if (d(w, y) == d(path.back(), y) - 1) {
        path.push_back(w);
        break;
      }
    }
  }
  return path;
}

// ---------------------------------------------------------------------------
// Isometric path enumeration

/// Every shortest x,y-path, by DFS on the geodesic DAG between x and y.
template <IndexedGraph G>
std::vector<std::vector<std::size_t>> all_isometric_paths(const G& g, std::size_t x, std::size_t y,
                                                          std::size_t cap = kDefaultPathCap) {
  const auto from_x = bfs(g, x);
  const auto to_y = bfs(g, y);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> stack{x};

  const auto dfs = [&](auto&& self, std::size_t u) -> void {
    if (u == y) {
      if (out.size() == cap) {
        throw Error(Errc::cap_exceeded, "more than " + std::to_string(cap) + " isometric paths");
      }
      out.push_back(stack);
      return;
    }
    for (std::size_t w : g.adjacent(u)) {
      if (from_x[w] == from_x[u] + 1 && to_y[w] == to_y[u] - 1) {
        stack.push_back(w);
        self(self, w);
        stack.pop_back();
      }
    }
  };
  dfs(dfs, x);
  return out;
}

inline std::vector<Path> all_isometric_paths(const VtGraph& g, Vertex x, Vertex y,
                                             std::size_t cap = kDefaultPathCap) {
  std::vector<Path> out;
  for (const auto& p : all_isometric_paths(g, g.index(x), g.index(y), cap)) {
    Path path;
    for (std::size_t i : p) path.push_back(g.vertex(i));
    out.push_back(std::move(path));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pair taxonomy for the Wiener decomposition

enum class PairTag { pure_acute_line, pure_obtuse_line, generic, dist_equals_r, dist_equals_s };

inline const char* to_string(PairTag t) noexcept {
  switch (t) {
    case PairTag::pure_acute_line: return "PureAcuteLine";
    case PairTag::pure_obtuse_line: return "PureObtuseLine";
    case PairTag::generic: return "Generic";
    case PairTag::dist_equals_r: return "DistEqualsR";
    case PairTag::dist_equals_s: return "DistEqualsS";
  }
  return "?";
}

struct PairClass {
  PairTag tag = PairTag::generic;
  int distance = 0;
  std::size_t isometric_path_count = 0;
  std::vector<Path> paths;
  /// Path count the case analysis predicts (1 on a line, 2 generic, 4 when d is r or s).
  std::size_t claimed_count = 0;
  bool claim_holds = false;
};

/// Tags are checked in the order d = r, d = s, acute line, obtuse line. A line
/// pair is one joined by a geodesic repeating a single diagonal step.
inline PairClass classify_pair(const VtGraph& g, Vertex x, Vertex y, std::size_t cap = kDefaultPathCap) {
  if (x == y) throw Error(Errc::unknown_vertex, "classify_pair needs two distinct vertices");
  const auto dist = bfs(g, g.index(x));
  PairClass out;
  out.distance = dist[g.index(y)];
  const int d = out.distance;
  const Vertex delta = g.difference(y, x);
  const auto along = [&](int dx, int dy) {
    return g.wrap(d * dx, d * dy) == delta || g.wrap(-d * dx, -d * dy) == delta;
  };

  if (g.r() != g.s() && d == g.r()) {
    out.tag = PairTag::dist_equals_r;
  } else if (g.r() != g.s() && d == g.s()) {
    out.tag = PairTag::dist_equals_s;
  } else if (along(kAcuteStep.dx, kAcuteStep.dy)) {
    out.tag = PairTag::pure_acute_line;
  } else if (along(kObtuseStep.dx, kObtuseStep.dy)) {
    out.tag = PairTag::pure_obtuse_line;
  } else {
    out.tag = PairTag::generic;
  }

  out.paths = all_isometric_paths(g, x, y, cap);
  out.isometric_path_count = out.paths.size();
  switch (out.tag) {
    case PairTag::pure_acute_line:
    case PairTag::pure_obtuse_line: out.claimed_count = 1; break;
    case PairTag::generic: out.claimed_count = 2; break;
    case PairTag::dist_equals_r:
    case PairTag::dist_equals_s: out.claimed_count = 4; break;
  }
  out.claim_holds = out.claimed_count == out.isometric_path_count;
  return out;
}

// ---------------------------------------------------------------------------
// Isometric subgraphs and convex sets

/// A subgraph given by its own vertex and edge lists (not necessarily induced).
struct Subgraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

inline Subgraph induced_subgraph(const VtGraph& g, const std::vector<Vertex>& vertices) {
  Subgraph sub{vertices, {}};
  const std::set<Vertex> members(vertices.begin(), vertices.end());
  for (const Edge& e : g.edges()) {
    if (members.contains(e.u) && members.contains(e.v)) sub.edges.emplace_back(e.u, e.v);
  }
  return sub;
}

/// The cycle through `cyclic` in order, closing edge included.
inline Subgraph cycle_subgraph(const std::vector<Vertex>& cyclic) {
  Subgraph sub{cyclic, {}};
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    sub.edges.emplace_back(cyclic[i], cyclic[(i + 1) % cyclic.size()]);
  }
  return sub;
}

/// d_H(u,v) == d_G(u,v) for every pair of H's vertices.
inline bool is_isometric_subgraph(const VtGraph& g, const Subgraph& sub) {
  std::map<Vertex, std::size_t> local;
  for (const Vertex& v : sub.vertices) {
    g.index(v);
    local.emplace(v, local.size());
  }
  SimpleGraph h(local.size());
  for (const auto& [a, b] : sub.edges) {
    if (!g.edge_id(a, b)) throw Error(Errc::unknown_edge, "(" + to_string(a) + ")-(" + to_string(b) + ")");
    h.add_edge(local.at(a), local.at(b));
  }
  for (const auto& [u, iu] : local) {
    const auto dh = bfs(h, iu);
    const auto dg = bfs(g, g.index(u));
    for (const auto& [v, iv] : local) {
      if (dh[iv] == kUnreachable) throw Error(Errc::disconnected_subgraph, "subgraph is not connected");
      if (dh[iv] != dg[g.index(v)]) return false;
    }
  }
  return true;
}

struct ConvexityWitness {
  Vertex x;
  Vertex y;
  Path escaping_path;  // isometric x,y-path leaving the set
};

struct ConvexityVerdict {
  bool convex = true;
  std::optional<ConvexityWitness> witness;
};

/// Convex iff every isometric path between members stays inside the set,
/// i.e. every geodesic interval I(x,y) is contained in it.
inline ConvexityVerdict is_convex(const VtGraph& g, const std::vector<Vertex>& set) {
  if (set.empty()) throw Error(Errc::unknown_vertex, "convexity of the empty set");
  std::vector<std::size_t> members;
  for (const Vertex& v : set) members.push_back(g.index(v));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> inside(g.order(), false);
  for (std::size_t i : members) inside[i] = true;

  const DistanceMatrix d(g);
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const std::size_t x = members[a];
      const std::size_t y = members[b];
      for (std::size_t z : interval(d, x, y)) {
        if (inside[z]) continue;
        auto path = greedy_geodesic(g, d, x, z);
        const auto tail = greedy_geodesic(g, d, z, y);
        path.insert(path.end(), tail.begin() + 1, tail.end());
        ConvexityWitness w{g.vertex(x), g.vertex(y), {}};
        for (std::size_t i : path) w.escaping_path.push_back(g.vertex(i));
        return {false, std::move(w)};
      }
    }
  }
  return {true, std::nullopt};
}

/// A cycle is convex when its vertex set induces exactly the cycle and is a
/// convex set.
inline bool is_convex_cycle(const VtGraph& g, const std::vector<Vertex>& cyclic) {
  if (induced_subgraph(g, cyclic).edges.size() != cyclic.size()) return false;
  return is_convex(g, cyclic).convex;
}

// ---------------------------------------------------------------------------
// Exhaustive subset scans (bitmask based, |V| <= 64)

namespace detail {

using Mask = std::uint64_t;

template <IndexedGraph G>
struct MaskGraph {
  std::size_t n;
  std::vector<Mask> nbr;
  std::vector<Mask> interval;  // n*n

  explicit MaskGraph(const G& g) : n(g.order()), nbr(n, 0), interval(n * n, 0) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t w : g.adjacent(u)) nbr[u] |= Mask{1} << w;
    }
    const DistanceMatrix d(g);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z : vt::interval(d, x, y)) interval[x * n + y] |= Mask{1} << z;
      }
    }
  }

  bool connected(Mask m) const {
    if (m == 0) return false;
    Mask seen = m & (~m + 1);
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
      next &= m & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == m;
  }

  bool convex(Mask m) const {
    for (Mask a = m; a; a &= a - 1) {
      const std::size_t x = static_cast<std::size_t>(std::countr_zero(a));
      for (Mask b = a & (a - 1); b; b &= b - 1) {
        const std::size_t y = static_cast<std::size_t>(std::countr_zero(b));
        if (interval[x * n + y] & ~m) return false;
      }
    }
    return true;
  }

  bool induces_cycle(Mask m) const {
    if (std::popcount(m) < 3) return false;
    for (Mask a = m; a; a &= a - 1) {
      if (std::popcount(nbr[std::countr_zero(a)] & m) != 2) return false;
    }
    return connected(m);
  }

  std::vector<std::size_t> cyclic_order(Mask m) const {
    std::vector<std::size_t> order{static_cast<std::size_t>(std::countr_zero(m))};
    Mask used = Mask{1} << order.front();
    for (;;) {
      const Mask next = nbr[order.back()] & m & ~used;
      if (!next) break;
      order.push_back(static_cast<std::size_t>(std::countr_zero(next)));
      used |= Mask{1} << order.back();
    }
    return order;
  }
};

inline void check_subset_limit(std::size_t n, std::size_t limit) {
  if (n > limit || n > 63) {
    throw Error(Errc::instance_too_large, std::to_string(n) + " vertices exceeds the exhaustive bound " +
                                              std::to_string(std::min<std::size_t>(limit, 63)));
  }
}

}  // namespace detail

/// Every vertex subset of size <= max_vertices that induces a cycle and is
/// convex, each listed in cyclic order.
template <IndexedGraph G>
std::vector<std::vector<std::size_t>> find_convex_cycles(const G& g, std::size_t max_vertices,
                                                         std::size_t limit = kDefaultSubsetLimit) {
  detail::check_subset_limit(g.order(), limit);
  const detail::MaskGraph<G> mg(g);
  std::vector<std::vector<std::size_t>> out;
  const detail::Mask end = detail::Mask{1} << mg.n;
  for (detail::Mask m = 1; m < end; ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) > max_vertices) continue;
    if (mg.induces_cycle(m) && mg.convex(m)) out.push_back(mg.cyclic_order(m));
  }
  return out;
}

inline std::vector<Path> find_convex_cycles(const VtGraph& g, std::size_t max_vertices,
                                            std::size_t limit = kDefaultSubsetLimit) {
  std::vector<Path> out;
  for (const auto& c : find_convex_cycles<VtGraph>(g, max_vertices, limit)) {
    Path p;
    for (std::size_t i : c) p.push_back(g.vertex(i));
    out.push_back(std::move(p));
  }
  return out;
}

/// First bipartition (U,W) with both sides nonempty, connected and convex;
/// the last vertex is always placed in W.
template <IndexedGraph G>
std::optional<IndexBipartition> find_convex_edgecut(const G& g, std::size_t limit = kDefaultSubsetLimit) {
  detail::check_subset_limit(g.order(), limit);
  const detail::MaskGraph<G> mg(g);
  if (mg.n < 2) return std::nullopt;
  const detail::Mask full = (detail::Mask{1} << mg.n) - 1;
  const detail::Mask end = detail::Mask{1} << (mg.n - 1);
  for (detail::Mask u = 1; u < end; ++u) {
    const detail::Mask w = full & ~u;
    if (!mg.connected(u) || !mg.connected(w)) continue;
    if (!mg.convex(u) || !mg.convex(w)) continue;
    IndexBipartition cut;
    for (std::size_t v = 0; v < mg.n; ++v) ((u >> v) & 1 ? cut.side_u : cut.side_w).push_back(v);
    for (std::size_t v = 0; v < mg.n; ++v) {
      for (std::size_t x : g.adjacent(v)) {
        if (v < x && (((u >> v) & 1) != ((u >> x) & 1))) cut.crossing.emplace_back(v, x);
      }
    }
    return cut;
  }
  return std::nullopt;
}

inline std::optional<Edgecut> find_convex_edgecut(const VtGraph& g, std::size_t limit = kDefaultSubsetLimit) {
  const auto cut = find_convex_edgecut<VtGraph>(g, limit);
  if (!cut) return std::nullopt;
  Edgecut out;
  for (std::size_t i : cut->side_u) out.side_u.push_back(g.vertex(i));
  for (std::size_t i : cut->side_w) out.side_w.push_back(g.vertex(i));
  for (const auto& [a, b] : cut->crossing) out.edges.push_back(g.edge(*g.edge_id(g.vertex(a), g.vertex(b))));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// ---------------------------------------------------------------------------
// Maximal isometric paths

inline constexpr std::size_t kDefaultGeodesicLimit = 512;

/// Lengths of maximal (non-extendable at either end) isometric paths that
/// start at one of `sources`. Exhaustive over all geodesics from each source.
template <IndexedGraph G>
std::set<int> maximal_isometric_path_lengths(const G& g, const std::vector<std::size_t>& sources,
                                             std::size_t limit = kDefaultGeodesicLimit) {
  if (g.order() > limit) {
    throw Error(Errc::instance_too_large, std::to_string(g.order()) + " vertices exceeds the geodesic scan bound");
  }
  const DistanceMatrix d(g);
  std::set<int> lengths;
  for (std::size_t src : sources) {
    const auto dfs = [&](auto&& self, std::size_t end, int k) -> void {
      bool extended = false;
      for (std::size_t w : g.adjacent(end)) {
        if (d(src, w) == k + 1) {
          extended = true;
          self(self, w, k + 1);
        }
      }
      if (extended || k == 0) return;
      for (std::size_t u : g.adjacent(src)) {
        if (d(u, end) == k + 1) return;
      }
      lengths.insert(k);
    };
    dfs(dfs, src, 0);
  }
  return lengths;
}

/// VT(r,s) is vertex-transitive (translations), so one source suffices.
inline std::set<int> maximal_isometric_path_samples(const VtGraph& g,
                                                    std::size_t limit = kDefaultGeodesicLimit) {
  return maximal_isometric_path_lengths(g, std::vector<std::size_t>{0}, limit);
}

}  // namespace vt
