#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vt/circulant.hpp"
#include "vt/cuts.hpp"
#include "vt/cycles.hpp"
#include "vt/error.hpp"
#include "vt/io.hpp"
#include "vt/metric.hpp"
#include "vt/routing.hpp"
#include "vt/torus.hpp"

namespace vt {

enum class RowStatus { pass, fail, experimental, skipped };

inline const char* to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::pass: return "pass";
    case RowStatus::fail: return "fail";
    case RowStatus::experimental: return "experimental";
    case RowStatus::skipped: return "skipped";
  }
  return "?";
}

struct MatrixRow {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string observed;
  RowStatus status = RowStatus::pass;
};

struct VerificationMatrix {
  std::vector<MatrixRow> rows;

  /// Experimental and skipped rows never fail the run.
  bool passed() const {
    return std::none_of(rows.begin(), rows.end(), [](const MatrixRow& r) { return r.status == RowStatus::fail; });
  }
  std::size_t count(RowStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [s](const MatrixRow& r) { return r.status == s; }));
  }
};

enum class Section {
  structure,
  cycles,
  quotient,
  revolutions,
  diameter,
  ring_torus,
  geodesics,
  isometry,
  convex_cycles,
  convex_edgecut,
  ledger,
  wiener,
  routing,
};

inline const char* to_string(Section s) noexcept {
  switch (s) {
    case Section::structure: return "structure";
    case Section::cycles: return "cycles";
    case Section::quotient: return "quotient";
    case Section::revolutions: return "revolutions";
    case Section::diameter: return "diameter";
    case Section::ring_torus: return "ring-torus";
    case Section::geodesics: return "geodesics";
    case Section::isometry: return "isometry";
    case Section::convex_cycles: return "convex-cycles";
    case Section::convex_edgecut: return "convex-edgecut";
    case Section::ledger: return "ledger";
    case Section::wiener: return "wiener";
    case Section::routing: return "routing";
  }
  return "?";
}

inline std::vector<Section> all_sections() {
  return {Section::structure,  Section::cycles,        Section::quotient,       Section::revolutions,
          Section::diameter,   Section::ring_torus,    Section::geodesics,      Section::isometry,
          Section::convex_cycles, Section::convex_edgecut, Section::ledger,     Section::wiener,
          Section::routing};
}

/// Sections that stay fast on any desk-scale instance.
inline std::vector<Section> quick_sections() {
  return {Section::structure, Section::cycles, Section::quotient, Section::revolutions, Section::diameter};
}

struct ReportOptions {
  std::size_t subset_limit = kDefaultSubsetLimit;
  std::size_t search_budget = 200;
  std::uint64_t seed = 0;
};

namespace detail {

class RowSink {
 public:
  RowSink(VerificationMatrix& m, std::string instance) : m_(m), instance_(std::move(instance)) {}

  template <class T>
  void check(const std::string& claim, const T& expected, const T& observed) {
    m_.rows.push_back({claim, instance_, str(expected), str(observed),
                       expected == observed ? RowStatus::pass : RowStatus::fail});
  }

  void experimental(const std::string& claim, const std::string& expected, const std::string& observed) {
    m_.rows.push_back({claim, instance_, expected, observed, RowStatus::experimental});
  }

  void skipped(const std::string& claim, const std::string& why) {
    m_.rows.push_back({claim, instance_, "-", why, RowStatus::skipped});
  }

  void failed(const std::string& claim, const std::string& what) {
    m_.rows.push_back({claim, instance_, "no error", what, RowStatus::fail});
  }

 private:
  template <class T>
  static std::string str(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else {
      return std::to_string(v);
    }
  }

  VerificationMatrix& m_;
  std::string instance_;
};

inline bool ids_partition(std::vector<std::size_t> ids, const std::vector<std::size_t>& universe) {
  std::sort(ids.begin(), ids.end());
  return ids == universe;
}

inline void structure_rows(const VtGraph& g, RowSink& out) {
  const long r = g.r();
  const long s = g.s();
  out.check("|V| = 2rs", 2 * r * s, static_cast<long>(g.order()));
  out.check("|E| = 4rs", 4 * r * s, static_cast<long>(g.size()));
  bool regular = true;
  for (std::size_t i = 0; i < g.order(); ++i) {
    int acute = 0;
    for (const auto& inc : g.incidences(i)) acute += inc.kind == EdgeKind::acute;
    std::set<std::size_t> distinct(g.adjacent(i).begin(), g.adjacent(i).end());
    regular = regular && distinct.size() == 4 && acute == 2;
  }
  out.check("4-regular with 2 acute + 2 obtuse per vertex", true, regular);
  out.check("|E_a| = |E_o|", static_cast<long>(g.edge_count(EdgeKind::acute)),
            static_cast<long>(g.edge_count(EdgeKind::obtuse)));
  const auto dist = bfs(g, 0);
  const bool connected = std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
  out.check("connected", true, connected);
  bool bipartite = true;
  for (const Edge& e : g.edges()) bipartite = bipartite && (e.u.x % 2) != (e.v.x % 2);
  out.check("bipartite (even / odd coordinates)", true, bipartite);
}

inline void cycle_rows(const VtGraph& g, RowSink& out) {
  const auto sig = helix_signature(g.params());
  const long expected_len = 2L * g.r() * g.s() / sig.d;
  std::vector<std::size_t> all_vertices(g.order());
  std::iota(all_vertices.begin(), all_vertices.end(), std::size_t{0});

  for (EdgeKind kind : {EdgeKind::acute, EdgeKind::obtuse}) {
    const std::string name = kind == EdgeKind::acute ? "acute" : "obtuse";
    const auto cycles = kind == EdgeKind::acute ? distinct_acute_cycles(g) : distinct_obtuse_cycles(g);
    out.check("distinct " + name + " cycles = gcd(r,s)", static_cast<long>(sig.d), static_cast<long>(cycles.size()));
    bool lengths = true;
    std::vector<std::size_t> vids;
    std::vector<std::size_t> eids;
    for (const auto& c : cycles) {
      lengths = lengths && static_cast<long>(c.length()) == expected_len;
      for (const Vertex& v : c.vertices) vids.push_back(g.index(v));
      const auto ids = cycle_edge_ids(g, c);
      eids.insert(eids.end(), ids.begin(), ids.end());
    }
    std::vector<std::size_t> kind_edges;
    for (std::size_t id = 0; id < g.size(); ++id) {
      if (g.edge(id).kind == kind) kind_edges.push_back(id);
    }
    out.check(name + " cycle length = 2rs/d", true, lengths);
    out.check(name + " cycles partition V", true, ids_partition(vids, all_vertices));
    out.check(name + " cycles partition E_" + name.substr(0, 1), true, ids_partition(eids, kind_edges));

    // s translates of the diagonal path from (0,2k): half-open vertex lists and edges.
    std::vector<std::size_t> pv;
    std::vector<std::size_t> pe;
    for (int k = 0; k < g.s(); ++k) {
      const auto p = kind == EdgeKind::acute ? acute_path(g, {0, 2 * k}) : obtuse_path(g, {0, 2 * k});
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        pv.push_back(g.index(p.vertices[i]));
        pe.push_back(*g.edge_id(p.vertices[i], p.vertices[i + 1]));
      }
    }
    out.check(name + " paths from (0,2k) partition V and E_" + name.substr(0, 1), true,
              ids_partition(pv, all_vertices) && ids_partition(pe, kind_edges));
  }
}

inline void quotient_rows(const VtGraph& g, RowSink& out) {
  const long d = std::gcd(g.r(), g.s());
  const auto contraction = contract_acute_paths(g);
  out.check("contracted acute paths: components = gcd(r,s)", d, static_cast<long>(contraction.components));
  try {
    const auto q = acute_quotient(g);
    const auto parts = circulant_cycle_partition(q);
    out.check("quotient C_s(r mod s): cycles = gcd(r,s)", d, static_cast<long>(parts.size()));
    bool equal = true;
    for (const auto& c : parts) equal = equal && static_cast<long>(c.size()) == g.s() / d;
    out.check("quotient cycles have length s/d", true, equal);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate_jump) throw;
    out.skipped("quotient C_s(r mod s): cycles = gcd(r,s)", "jump is 0 or s/2 (multigraph quotient)");
  }
}

inline void revolution_rows(const VtGraph& g, RowSink& out) {
  const auto sig = helix_signature(g.params());
  const Revolutions expected{g.s() / sig.d, g.r() / sig.d};
  long matching = 0;
  long total = 0;
  for (const auto& cycles : {distinct_acute_cycles(g), distinct_obtuse_cycles(g)}) {
    for (const auto& c : cycles) {
      ++total;
      try {
        matching += revolutions(g, c) == expected;
      } catch (const Error&) {
      }
    }
  }
  out.check("every diagonal cycle meets each row s/d and each column r/d times", total, matching);
}

inline void diameter_rows(const VtGraph& g, RowSink& out) {
  out.check("diameter = max(r,s)", static_cast<long>(g.params().larger()), static_cast<long>(diameter(g)));
}

inline void ring_rows(const VtGraph& g, RowSink& out) {
  out.check("ring torus C_2r x C_2s diameter = r+s", static_cast<long>(g.r() + g.s()),
            static_cast<long>(ring_torus_diameter(2 * g.r(), 2 * g.s())));
}

inline void geodesic_rows(const VtGraph& g, RowSink& out) {
  const auto lengths = maximal_isometric_path_samples(g);
  out.check("maximal isometric path of length r", true, lengths.contains(g.r()));
  out.check("maximal isometric path of length s", true, lengths.contains(g.s()));
}

inline void isometry_rows(const VtGraph& g, RowSink& out) {
  const bool multiple = g.params().larger() % g.params().smaller() == 0;
  for (EdgeKind kind : {EdgeKind::acute, EdgeKind::obtuse}) {
    const std::string name = kind == EdgeKind::acute ? "AC(0,0)" : "OC(0,0)";
    const auto c = kind == EdgeKind::acute ? acute_cycle(g, {0, 0}) : obtuse_cycle(g, {0, 0});
    out.check(name + " isometric iff larger parameter is a multiple of the smaller", multiple,
              is_isometric_subgraph(g, cycle_subgraph(c.vertices)));
    out.check(name + " is a convex cycle", false, is_convex_cycle(g, c.vertices));
  }
}

inline void convex_cycle_rows(const VtGraph& g, RowSink& out, const ReportOptions& opt) {
  const std::string claim = "no convex cycle other than C4";
  if (g.order() > opt.subset_limit) {
    out.skipped(claim, "|V| above exhaustive bound " + std::to_string(opt.subset_limit));
    return;
  }
  const auto cycles = find_convex_cycles(g, g.order(), opt.subset_limit);
  const long other = std::count_if(cycles.begin(), cycles.end(), [](const Path& c) { return c.size() != 4; });
  out.check(claim, 0L, other);
}

inline void convex_edgecut_rows(const VtGraph& g, RowSink& out, const ReportOptions& opt) {
  const std::string claim = "no convex edgecut";
  if (g.order() > opt.subset_limit) {
    out.skipped(claim, "|V| above exhaustive bound " + std::to_string(opt.subset_limit));
    return;
  }
  out.check(claim, false, find_convex_edgecut(g, opt.subset_limit).has_value());
}

inline void ledger_rows(const VtGraph& g, RowSink& out) {
  const auto routing = shortest_routing(g);
  const long wiener = static_cast<long>(wiener_index(g));
  for (Axis axis : {Axis::x, Axis::y}) {
    const auto part = band_edgecut_partition(g, axis);
    bool cuts_ok = true;
    for (const auto& cut : part.cuts) cuts_ok = cuts_ok && is_edgecut(g, cut.edges).has_value();
    out.check(std::string("band cuts (") + to_string(axis) + ") are edgecuts", true, cuts_ok);
    const auto ledger = sum_paths_ledger(g, routing, part);
    out.check(std::string("ledger grand total = sum |P| (") + to_string(axis) + ")",
              static_cast<long>(ledger.path_length_sum), static_cast<long>(ledger.grand_total));
    out.check(std::string("ledger grand total = Wiener (") + to_string(axis) + ")", wiener,
              static_cast<long>(ledger.grand_total));
  }
}

inline void wiener_rows(const VtGraph& g, RowSink& out) {
  const long brute = static_cast<long>(wiener_brute(g).value);
  for (Axis axis : {Axis::x, Axis::y}) {
    out.check(std::string("Wiener via band cuts (") + to_string(axis) + ") = brute force", brute,
              static_cast<long>(wiener_via_cuts(g, band_edgecut_partition(g, axis)).value));
  }
}

inline void routing_rows(const VtGraph& g, RowSink& out, const ReportOptions& opt) {
  const Rational bound = optimal_congestion_bound(g);
  const long wiener = static_cast<long>(wiener_index(g));
  const auto shortest = congestion_profile(g, shortest_routing(g));
  out.check("shortest routing max load >= ceil(Wiener/|E|)", true, shortest.max >= bound.ceil());
  out.check("shortest routing conserves load", wiener, static_cast<long>(shortest.total()));
  const auto translation = congestion_profile(g, translation_routing(g));
  out.check("translation routing conserves load", wiener, static_cast<long>(translation.total()));
  const auto search = search_balanced_routing(g, opt.search_budget, opt.seed);
  out.check("search never widens the gap", true, search.profile.gap() <= search.initial_gap);
  out.experimental("optimal congestion bound Wiener/|E|", to_string(bound), to_string(search.profile.mean));
  out.experimental("balance gap (max - min) after search", "0",
                   std::to_string(search.profile.gap()) + " (from " + std::to_string(search.initial_gap) + ")");
}

}  // namespace detail

/// Runs the requested theorem checks on VT(r,s). Module errors become fail rows.
inline VerificationMatrix run_report(TorusParams params, const std::vector<Section>& sections,
                                     const ReportOptions& opt = {}) {
  VerificationMatrix m;
  const std::string instance = "VT(" + std::to_string(params.r) + "," + std::to_string(params.s) + ")";
  detail::RowSink out(m, instance);
  const VtGraph g(params);
  for (Section s : sections) {
    try {
      switch (s) {
        case Section::structure: detail::structure_rows(g, out); break;
        case Section::cycles: detail::cycle_rows(g, out); break;
        case Section::quotient: detail::quotient_rows(g, out); break;
        case Section::revolutions: detail::revolution_rows(g, out); break;
        case Section::diameter: detail::diameter_rows(g, out); break;
        case Section::ring_torus: detail::ring_rows(g, out); break;
        case Section::geodesics: detail::geodesic_rows(g, out); break;
        case Section::isometry: detail::isometry_rows(g, out); break;
        case Section::convex_cycles: detail::convex_cycle_rows(g, out, opt); break;
        case Section::convex_edgecut: detail::convex_edgecut_rows(g, out, opt); break;
        case Section::ledger: detail::ledger_rows(g, out); break;
        case Section::wiener: detail::wiener_rows(g, out); break;
        case Section::routing: detail::routing_rows(g, out, opt); break;
      }
    } catch (const std::exception& e) {
      out.failed(to_string(s), e.what());
    }
  }
  return m;
}

inline std::string export_matrix_csv(const VerificationMatrix& m) {
  std::ostringstream out;
  out << "claim,instance,expected,observed,status\n";
  for (const auto& row : m.rows) {
    out << csv_field(row.claim) << ',' << csv_field(row.instance) << ',' << csv_field(row.expected) << ','
        << csv_field(row.observed) << ',' << to_string(row.status) << '\n';
  }
  return out.str();
}

}  // namespace vt
