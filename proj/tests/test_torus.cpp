#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vt/torus.hpp"

namespace {

using vt::EdgeKind;
using vt::Errc;
using vt::Vertex;
using vt::VtGraph;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const vt::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no vt::Error thrown";
  return Errc::io_failure;
}

TEST(Build, SmallestInstanceCounts) {
  const VtGraph g = vt::build_vt({2, 2});
  EXPECT_EQ(g.order(), 8u);
  EXPECT_EQ(g.size(), 16u);
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.adjacent(i).size(), 4u);
}

TEST(Build, FourFiveSplitsEdgesEvenly) {
  const VtGraph g = vt::build_vt({4, 5});
  EXPECT_EQ(g.order(), 40u);
  EXPECT_EQ(g.size(), 80u);
  EXPECT_EQ(g.edge_count(EdgeKind::acute), 40u);
  EXPECT_EQ(g.edge_count(EdgeKind::obtuse), 40u);
}

TEST(Build, RejectsSmallParameters) {
  EXPECT_EQ(code_of([] { vt::build_vt({1, 5}); }), Errc::param_too_small);
  EXPECT_EQ(code_of([] { vt::build_vt({3, 0}); }), Errc::param_too_small);
}

TEST(Build, StructureAgainstHandCount) {
  // Compare with an edge set built directly from the four diagonal offsets.
  for (int r = 2; r <= 8; ++r) {
    for (int s = 2; s <= 8; ++s) {
      const VtGraph g({r, s});
      const auto expected_vertices = vt::oracle::vertices(r, s);
      ASSERT_EQ(g.vertices(), expected_vertices) << r << "," << s;

      std::set<std::pair<Vertex, Vertex>> expected;
      for (const Vertex& v : expected_vertices) {
        for (auto [dx, dy] : {std::pair{1, 1}, {1, -1}}) {
          Vertex w{(v.x + dx + 2 * r) % (2 * r), (v.y + dy + 2 * s) % (2 * s)};
          expected.insert({std::min(v, w), std::max(v, w)});
        }
      }
      std::set<std::pair<Vertex, Vertex>> actual;
      for (const auto& e : g.edges()) actual.insert({e.u, e.v});
      EXPECT_EQ(actual, expected) << r << "," << s;
      EXPECT_EQ(g.size(), static_cast<std::size_t>(4 * r * s));

      std::set<Vertex> distinct_neighbors;
      for (std::size_t i = 0; i < g.order(); ++i) {
        distinct_neighbors.clear();
        for (std::size_t j : g.adjacent(i)) distinct_neighbors.insert(g.vertex(j));
        EXPECT_EQ(distinct_neighbors.size(), 4u) << r << "," << s;
      }
    }
  }
}

TEST(Build, EdgeKindMatchesStepDirection) {
  const VtGraph g({3, 4});
  for (const auto& e : g.edges()) {
    const int dx = (e.v.x - e.u.x + 6) % 6;
    const int dy = (e.v.y - e.u.y + 8) % 8;
    const bool same = (dx == 1 && dy == 1) || (dx == 5 && dy == 7);
    EXPECT_EQ(e.kind == EdgeKind::acute, same) << vt::to_string(e.u) << " " << vt::to_string(e.v);
  }
}

TEST(VertexAdd, Wraparound) {
  const VtGraph g({4, 5});
  EXPECT_EQ(vt::vertex_add(g, {7, 9}, {1, 1}), (Vertex{0, 0}));
  EXPECT_EQ(vt::vertex_add(g, {2, 2}, {0, 0}), (Vertex{2, 2}));
}

TEST(VertexAdd, EvenPlusOddIsRejected) {
  const VtGraph g({4, 5});
  EXPECT_EQ(code_of([&] { vt::vertex_add(g, {2, 2}, {1, 1}); }), Errc::parity_violation);
  EXPECT_EQ(code_of([&] { vt::vertex_add(g, {2, 3}, {0, 0}); }), Errc::unknown_vertex);
}

TEST(Neighbors, FixedOrder) {
  const VtGraph g({4, 5});
  const std::vector<vt::Neighbor> expected{
      {{1, 1}, EdgeKind::acute}, {{7, 9}, EdgeKind::acute}, {{1, 9}, EdgeKind::obtuse}, {{7, 1}, EdgeKind::obtuse}};
  EXPECT_EQ(vt::neighbors(g, {0, 0}), expected);
}

TEST(Neighbors, SmallestInstanceSeesAllOddVertices) {
  const VtGraph g({2, 2});
  std::set<Vertex> got;
  for (const auto& n : vt::neighbors(g, {0, 0})) got.insert(n.vertex);
  EXPECT_EQ(got, (std::set<Vertex>{{1, 1}, {3, 3}, {1, 3}, {3, 1}}));
}

TEST(Neighbors, UnknownVertex) {
  const VtGraph g({4, 5});
  EXPECT_EQ(code_of([&] { vt::neighbors(g, {0, 1}); }), Errc::unknown_vertex);
  EXPECT_EQ(code_of([&] { vt::neighbors(g, {8, 0}); }), Errc::unknown_vertex);
}

TEST(RowsAndCols, Sizes) {
  const VtGraph g({4, 5});
  const auto rc = vt::rows_and_cols(g);
  ASSERT_EQ(rc.rows.size(), 8u);
  ASSERT_EQ(rc.cols.size(), 10u);
  EXPECT_EQ(rc.rows[0].size(), 5u);
  EXPECT_EQ(rc.cols[0].size(), 4u);

  std::set<Vertex> seen;
  for (const auto& row : rc.rows) {
    for (const Vertex& v : row) EXPECT_TRUE(seen.insert(v).second);
  }
  EXPECT_EQ(seen.size(), g.order());
}

TEST(RowsAndCols, OddColumn) {
  const VtGraph g({2, 3});
  EXPECT_EQ(vt::rows_and_cols(g).cols[1], (std::vector<Vertex>{{1, 1}, {3, 1}}));
}

TEST(Indexing, RoundTrip) {
  const VtGraph g({3, 5});
  for (std::size_t i = 0; i < g.order(); ++i) EXPECT_EQ(g.index(g.vertex(i)), i);
  for (std::size_t id = 0; id < g.size(); ++id) {
    EXPECT_EQ(g.edge_id(g.edge(id).v, g.edge(id).u), id);
  }
  EXPECT_FALSE(g.edge_id({0, 0}, {2, 2}).has_value());
}

TEST(Incidences, AgreeWithEdgeList) {
  const VtGraph g({2, 5});
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (const auto& inc : g.incidences(i)) {
      const auto& e = g.edge(inc.edge);
      EXPECT_EQ(e.kind, inc.kind);
      EXPECT_TRUE((e.u == g.vertex(i) && e.v == g.vertex(inc.neighbor)) ||
                  (e.v == g.vertex(i) && e.u == g.vertex(inc.neighbor)));
    }
  }
}

}  // namespace
