#pragma once

#include <vector>

#include "vt/torus.hpp"

namespace vt {

/// A (U,W)-edgecut: removing `edges` leaves exactly G[U] and G[W].
struct Edgecut {
  std::vector<Edge> edges;
  std::vector<Vertex> side_u;
  std::vector<Vertex> side_w;
};

/// Edgecut on an index graph (used for control graphs without coordinates).
struct IndexBipartition {
  std::vector<std::size_t> side_u;
  std::vector<std::size_t> side_w;
  std::vector<std::pair<std::size_t, std::size_t>> crossing;
};

}  // namespace vt
