#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vt/error.hpp"

namespace vt {

/// Shape of a Villarceau torus: first coordinates live mod 2r, second mod 2s.
struct TorusParams {
  int r = 2;
  int s = 2;

  friend bool operator==(const TorusParams&, const TorusParams&) = default;

  int smaller() const noexcept { return std::min(r, s); }
  int larger() const noexcept { return std::max(r, s); }
  /// True when the second coordinate plays the "larger" role (s >= r).
  bool s_is_larger() const noexcept { return s >= r; }
};

struct Vertex {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(Vertex v) {
  return std::to_string(v.x) + "," + std::to_string(v.y);
}

enum class EdgeKind { acute, obtuse };

inline const char* to_string(EdgeKind k) noexcept {
  return k == EdgeKind::acute ? "acute" : "obtuse";
}

struct Step {
  int dx;
  int dy;
};

// Neighbor order used everywhere (adjacency, BFS tie-breaks, routing).
inline constexpr std::array<Step, 4> kSteps{{{+1, +1}, {-1, -1}, {+1, -1}, {-1, +1}}};
inline constexpr Step kAcuteStep{+1, +1};
inline constexpr Step kObtuseStep{+1, -1};

constexpr EdgeKind step_kind(Step st) noexcept {
  return st.dx == st.dy ? EdgeKind::acute : EdgeKind::obtuse;
}

/// Undirected edge; u < v lexicographically.
struct Edge {
  Vertex u;
  Vertex v;
  EdgeKind kind = EdgeKind::acute;

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

struct Incidence {
  std::size_t neighbor;
  std::size_t edge;
  EdgeKind kind;
};

/// The 4-regular Villarceau torus graph VT(r, s). Immutable once built.
///
/// Vertices are indexed row-major by (x, y), which coincides with their
/// lexicographic order; edges are sorted by (u, v).
class VtGraph {
 public:
  explicit VtGraph(TorusParams params) : params_(params) {
    if (params.r < 2 || params.s < 2) {
      throw Error(Errc::param_too_small, "r and s must be >= 2");
    }
    const std::size_t n = 2 * static_cast<std::size_t>(params.r) * params.s;
    vertices_.reserve(n);
    for (int x = 0; x < 2 * params.r; ++x) {
      for (int y = x % 2; y < 2 * params.s; y += 2) vertices_.push_back({x, y});
    }

    neighbors_.resize(4 * n);
    incidences_.resize(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < kSteps.size(); ++k) {
        const Vertex w = shift(vertices_[i], kSteps[k].dx, kSteps[k].dy);
        neighbors_[4 * i + k] = index_unchecked(w);
        if (vertices_[i] < w) edges_.push_back({vertices_[i], w, step_kind(kSteps[k])});
      }
    }
    std::sort(edges_.begin(), edges_.end());

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < kSteps.size(); ++k) {
        const std::size_t j = neighbors_[4 * i + k];
        const Vertex a = std::min(vertices_[i], vertices_[j]);
        const Vertex b = std::max(vertices_[i], vertices_[j]);
        const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
        incidences_[4 * i + k] = {j, static_cast<std::size_t>(it - edges_.begin()),
                                  step_kind(kSteps[k])};
      }
    }
  }

  const TorusParams& params() const noexcept { return params_; }
  int r() const noexcept { return params_.r; }
  int s() const noexcept { return params_.s; }

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  /// Neighbor indices in the fixed order (+1,+1), (-1,-1), (+1,-1), (-1,+1).
  std::span<const std::size_t> adjacent(std::size_t i) const {
    return std::span<const std::size_t>(neighbors_).subspan(4 * i, 4);
  }
  std::span<const Incidence> incidences(std::size_t i) const {
    return std::span<const Incidence>(incidences_).subspan(4 * i, 4);
  }

  bool contains(Vertex v) const noexcept {
    return v.x >= 0 && v.x < 2 * params_.r && v.y >= 0 && v.y < 2 * params_.s &&
           (v.x - v.y) % 2 == 0;
  }

  std::size_t index(Vertex v) const {
    if (!contains(v)) throw Error(Errc::unknown_vertex, "(" + to_string(v) + ") is not a vertex");
    return index_unchecked(v);
  }

  /// Normalizes an arbitrary integer point into [0,2r) x [0,2s).
  Vertex wrap(int x, int y) const noexcept {
    const int m = 2 * params_.r;
    const int n = 2 * params_.s;
    return {((x % m) + m) % m, ((y % n) + n) % n};
  }

  Vertex shift(Vertex v, int dx, int dy) const noexcept { return wrap(v.x + dx, v.y + dy); }

  /// Translation by an arbitrary vertex offset; always lands on a vertex.
  Vertex translate(Vertex v, Vertex offset) const noexcept { return shift(v, offset.x, offset.y); }

  /// offset such that translate(from, offset) == to.
  Vertex difference(Vertex to, Vertex from) const noexcept { return wrap(to.x - from.x, to.y - from.y); }

  std::optional<std::size_t> edge_id(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return std::nullopt;
    for (const auto& inc : incidences(index_unchecked(a))) {
      if (vertices_[inc.neighbor] == b) return inc.edge;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> edge_id(const Edge& e) const { return edge_id(e.u, e.v); }

  std::size_t edge_count(EdgeKind kind) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [kind](const Edge& e) { return e.kind == kind; }));
  }

 private:
  std::size_t index_unchecked(Vertex v) const noexcept {
    return static_cast<std::size_t>(v.x) * params_.s + static_cast<std::size_t>(v.y / 2);
  }

  TorusParams params_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> neighbors_;
  std::vector<Incidence> incidences_;
};

inline VtGraph build_vt(TorusParams params) { return VtGraph(params); }

/// Componentwise sum mod (2r, 2s), restricted to sums landing in the even
/// coset. An even and an odd operand raise ParityViolation.
inline Vertex vertex_add(const VtGraph& g, Vertex p, Vertex q) {
  g.index(p);
  g.index(q);
  if ((p.x + q.x) % 2 != 0) {
    throw Error(Errc::parity_violation,
                "(" + to_string(p) + ") + (" + to_string(q) + ") mixes an even and an odd vertex");
  }
  return g.shift(p, q.x, q.y);
}

struct Neighbor {
  Vertex vertex;
  EdgeKind kind;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

inline std::vector<Neighbor> neighbors(const VtGraph& g, Vertex v) {
  std::vector<Neighbor> out;
  for (const auto& inc : g.incidences(g.index(v))) out.push_back({g.vertex(inc.neighbor), inc.kind});
  return out;
}

/// ROW_i holds the s vertices with first coordinate i; COL_j the r vertices
/// with second coordinate j.
struct RowsAndCols {
  std::vector<std::vector<Vertex>> rows;
  std::vector<std::vector<Vertex>> cols;
};

inline RowsAndCols rows_and_cols(const VtGraph& g) {
  RowsAndCols out;
  out.rows.resize(2 * static_cast<std::size_t>(g.r()));
  out.cols.resize(2 * static_cast<std::size_t>(g.s()));
  for (const Vertex& v : g.vertices()) {
    out.rows[v.x].push_back(v);
    out.cols[v.y].push_back(v);
  }
  return out;
}

}  // namespace vt
