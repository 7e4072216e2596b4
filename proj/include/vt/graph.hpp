#pragma once

#include <concepts>
#include <cstddef>
#include <numeric>
#include <ranges>
#include <span>
#include <utility>
#include <vector>

namespace vt {

// Anything with vertices 0..order()-1 and an adjacency accessor. The metric
// and search algorithms run on this, so they work for VtGraph, circulants and
// the ring-torus control graphs alike.
template <class G>
concept IndexedGraph = requires(const G& g, std::size_t i) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.adjacent(i) } -> std::ranges::random_access_range;
};

/// Plain undirected simple graph with index vertices.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const std::size_t> adjacent(std::size_t v) const { return adj_[v]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  void add_edge(std::size_t u, std::size_t v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Cartesian product C_a x C_b of two cycles; vertex (i, j) has index i*b + j.
inline SimpleGraph cycle_product(std::size_t a, std::size_t b) {
  SimpleGraph g(a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      g.add_edge(i * b + j, ((i + 1) % a) * b + j);
      g.add_edge(i * b + j, i * b + (j + 1) % b);
    }
  }
  return g;
}

// Minimal union-find, used for component counts.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), count_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --count_;
    }
  }

  std::size_t count() const noexcept { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t count_;
};

}  // namespace vt
