#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vt/error.hpp"
#include "vt/graph.hpp"
#include "vt/torus.hpp"

namespace vt {

/// Circulant graph C_b(a): vertices 0..b-1, edges {i, i+a mod b}.
class CirculantGraph {
 public:
  CirculantGraph(int b, int a) : b_(b), a_(a) {
    if (b < 3 || a < 1 || a >= b || 2 * a == b) {
      throw Error(Errc::degenerate_jump,
                  "C_" + std::to_string(b) + "(" + std::to_string(a) + ") would have loops or doubled edges");
    }
    adj_.resize(2 * static_cast<std::size_t>(b));
    for (int i = 0; i < b; ++i) {
      edges_.emplace_back(i, (i + a) % b);
      adj_[2 * i] = static_cast<std::size_t>((i + a) % b);
      adj_[2 * i + 1] = static_cast<std::size_t>((i - a + b) % b);
    }
  }

  int b() const noexcept { return b_; }
  int a() const noexcept { return a_; }

  std::size_t order() const noexcept { return static_cast<std::size_t>(b_); }
  std::span<const std::size_t> adjacent(std::size_t i) const {
    return std::span<const std::size_t>(adj_).subspan(2 * i, 2);
  }

  /// Edges listed as (i, i+a mod b) for i = 0..b-1.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

 private:
  int b_;
  int a_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::size_t> adj_;
};

inline CirculantGraph build_circulant(int b, int a) { return CirculantGraph(b, a); }

/// The gcd(a, b) classes {j, j+a, ..., j+(q-1)a} mod b, j = 0..d-1.
inline std::vector<std::vector<int>> residue_partition(int a, int b) {
  const int d = std::gcd(a, b);
  const int q = b / d;
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    for (int t = 0; t < q; ++t) {
      classes[j].push_back(static_cast<int>((j + static_cast<long long>(t) * a) % b));
    }
  }
  return classes;
}

/// Walks i -> i+a from each unvisited vertex. Each returned cycle is one
/// component of C_b(a).
inline std::vector<std::vector<int>> circulant_cycle_partition(const CirculantGraph& c) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(c.order(), false);
  for (int start = 0; start < c.b(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int v = start;
    do {
      seen[v] = true;
      cycle.push_back(v);
      v = (v + c.a()) % c.b();
    } while (v != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

/// Result of contracting every acute path AP(0,2k) of VT(r,s) to one edge
/// (0,2k)-(0,2k+2r) and relabelling (0,2k) as k.
struct AcuteContraction {
  int vertices = 0;                        // s
  std::vector<std::pair<int, int>> edges;  // (k, label of the far endpoint)
  std::size_t components = 0;
};

inline AcuteContraction contract_acute_paths(const VtGraph& g) {
  AcuteContraction out;
  out.vertices = g.s();
  DisjointSets sets(static_cast<std::size_t>(g.s()));
  for (int k = 0; k < g.s(); ++k) {
    Vertex v{0, 2 * k};
    // Only acute steps are followed, which is the same as deleting E_o first.
    for (int i = 0; i < 2 * g.r(); ++i) v = g.shift(v, kAcuteStep.dx, kAcuteStep.dy);
    const int far = v.y / 2;
    out.edges.emplace_back(k, far);
    sets.unite(static_cast<std::size_t>(k), static_cast<std::size_t>(far));
  }
  out.components = sets.count();
  return out;
}

/// The contraction as a circulant graph. Its jump is r mod s; jumps 0 and
/// s/2 give a multigraph and raise DegenerateJump.
inline CirculantGraph acute_quotient(const VtGraph& g) {
  const AcuteContraction q = contract_acute_paths(g);
  const int s = q.vertices;
  const int jump = ((q.edges.front().second - q.edges.front().first) % s + s) % s;
  for (const auto& [k, far] : q.edges) {
    if (((far - k) % s + s) % s != jump) {
      throw Error(Errc::degenerate_jump, "contracted acute paths do not share one jump");
    }
  }
  if (jump == 0 || 2 * jump == s) {
    throw Error(Errc::degenerate_jump, "VT(" + std::to_string(g.r()) + "," + std::to_string(s) +
                                           ") contracts to jump " + std::to_string(jump) + " on " +
                                           std::to_string(s) + " vertices");
  }
  return CirculantGraph(s, jump);
}

}  // namespace vt
