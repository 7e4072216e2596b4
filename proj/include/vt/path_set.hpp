#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vt/error.hpp"
#include "vt/metric.hpp"
#include "vt/parallel.hpp"
#include "vt/torus.hpp"

namespace vt {

/// A set of paths C. With one simple path per unordered vertex pair it is a
/// routing; partial sets are allowed wherever only path totals matter.
struct Routing {
  std::vector<Path> paths;

  std::size_t total_length() const noexcept {
    std::size_t sum = 0;
    for (const Path& p : paths) sum += p.empty() ? 0 : p.size() - 1;
    return sum;
  }
};

inline std::vector<std::size_t> path_edge_ids(const VtGraph& g, const Path& path) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const auto id = g.edge_id(path[i], path[i + 1]);
    if (!id) {
      throw Error(Errc::unknown_edge,
                  "(" + to_string(path[i]) + ")-(" + to_string(path[i + 1]) + ") is not an edge");
    }
    ids.push_back(*id);
  }
  return ids;
}

inline bool is_simple_path(const VtGraph& g, const Path& path) {
  if (path.empty()) return false;
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.contains(path[i]) || !seen.insert(path[i]).second) return false;
    if (i > 0 && !g.edge_id(path[i - 1], path[i])) return false;
  }
  return true;
}

/// One simple path for each of the |V|(|V|-1)/2 unordered pairs.
inline bool is_complete_routing(const VtGraph& g, const Routing& routing) {
  const std::size_t n = g.order();
  if (routing.paths.size() != n * (n - 1) / 2) return false;
  std::set<std::pair<Vertex, Vertex>> pairs;
  for (const Path& p : routing.paths) {
    if (p.size() < 2 || !is_simple_path(g, p)) return false;
    if (!pairs.insert(std::minmax(p.front(), p.back())).second) return false;
  }
  return true;
}

/// BFS tree from src with first-discoverer parents, neighbors in kSteps order.
inline std::vector<std::size_t> bfs_parents(const VtGraph& g, std::size_t src) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(g.order(), none);
  std::deque<std::size_t> queue{src};
  parent[src] = src;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t w : g.adjacent(u)) {
      if (parent[w] == none) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return parent;
}

inline Path tree_path(const VtGraph& g, const std::vector<std::size_t>& parent, std::size_t to) {
  Path rev{g.vertex(to)};
  for (std::size_t v = to; parent[v] != v; v = parent[v]) rev.push_back(g.vertex(parent[v]));
  return {rev.rbegin(), rev.rend()};
}

/// Canonical shortest routing: pair (u, v) with u before v in vertex order is
/// routed along u's BFS tree.
inline Routing shortest_routing(const VtGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Path>> rows(n);
  parallel_for(n, [&](std::size_t u) {
    const auto parent = bfs_parents(g, u);
    for (std::size_t v = u + 1; v < n; ++v) rows[u].push_back(tree_path(g, parent, v));
  });
  Routing out;
  out.paths.reserve(n * (n - 1) / 2);
  for (auto& row : rows) {
    for (auto& p : row) out.paths.push_back(std::move(p));
  }
  return out;
}

}  // namespace vt
