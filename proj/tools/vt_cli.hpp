#pragma once

#include <cstdint>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vt/vt.hpp"

namespace vt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  int r = 0;
  int s = 0;
  std::string out;
  std::string axis = "y";
  std::string scheme = "shortest";
  std::size_t budget = 1000;
  std::uint64_t seed = 0;
  bool all = false;
};

namespace detail {

inline void emit(const Options& opt, std::ostream& out, const std::string& content) {
  if (opt.out.empty()) {
    out << content;
  } else {
    write_text_file(opt.out, content);
  }
}

inline Axis parse_axis(const std::string& a) { return a == "x" ? Axis::x : Axis::y; }

inline void print_matrix(const VerificationMatrix& m, std::ostream& out) {
  for (const auto& row : m.rows) {
    out << "[" << to_string(row.status) << "] " << row.instance << "  " << row.claim << "  expected=" << row.expected
        << " observed=" << row.observed << "\n";
  }
  out << "rows: " << m.rows.size() << "  pass: " << m.count(RowStatus::pass) << "  fail: " << m.count(RowStatus::fail)
      << "  experimental: " << m.count(RowStatus::experimental) << "  skipped: " << m.count(RowStatus::skipped)
      << "\n";
}

inline std::string cycle_line(const DiagonalCycle& c) {
  std::string line;
  for (const Vertex& v : c.vertices) line += "(" + to_string(v) + ")";
  return line;
}

inline int run_stats(const VtGraph& g, std::ostream& out) {
  const auto sig = helix_signature(g.params());
  out << "r: " << g.r() << "\ns: " << g.s() << "\n";
  out << "vertices: " << g.order() << "\nedges: " << g.size() << "\n";
  out << "acute edges: " << g.edge_count(EdgeKind::acute) << "\nobtuse edges: " << g.edge_count(EdgeKind::obtuse)
      << "\n";
  out << "diameter: " << diameter(g) << "\n";
  out << "ring torus diameter (C_" << 2 * g.r() << " x C_" << 2 * g.s()
      << "): " << ring_torus_diameter(2 * g.r(), 2 * g.s()) << "\n";
  out << "gcd d: " << sig.d << "\np = r/d: " << sig.p << "\nq = s/d: " << sig.q << "\n";
  out << "wiener index: " << wiener_brute(g).value << "\n";
  out << "optimal congestion bound: " << to_string(optimal_congestion_bound(g)) << "\n";
  return kExitOk;
}

inline int run_cycles(const VtGraph& g, std::ostream& out) {
  for (EdgeKind kind : {EdgeKind::acute, EdgeKind::obtuse}) {
    const auto cycles = kind == EdgeKind::acute ? distinct_acute_cycles(g) : distinct_obtuse_cycles(g);
    out << to_string(kind) << " cycles: " << cycles.size() << "\n";
    for (const auto& c : cycles) {
      const auto rev = revolutions(g, c);
      out << "  length " << c.length() << "  rows " << rev.row_count << "  cols " << rev.col_count << "  "
          << cycle_line(c) << "\n";
    }
  }
  return kExitOk;
}

inline int run_wiener(const VtGraph& g, const Options& opt, std::ostream& out) {
  const auto brute = wiener_brute(g);
  const auto cut = wiener_via_cuts(g, band_edgecut_partition(g, parse_axis(opt.axis)));
  out << "brute: " << brute.value << "\n";
  out << "cuts (" << opt.axis << "): " << cut.value << "\n";
  out << "per cut:";
  for (auto c : cut.per_cut_contributions) out << " " << c;
  out << "\n";
  return brute.value == cut.value ? kExitOk : kExitVerifyFailed;
}

inline int run_cuts(const VtGraph& g, const Options& opt, std::ostream& out) {
  const auto part = band_edgecut_partition(g, parse_axis(opt.axis));
  const auto ledger = sum_paths_ledger(g, shortest_routing(g), part);
  std::ostringstream csv;
  csv << "cut,edges,side_u,side_w,k_uw,k_u,k_w,total\n";
  for (std::size_t i = 0; i < part.cuts.size(); ++i) {
    const auto& t = ledger.per_cut[i];
    csv << i << ',' << part.cuts[i].edges.size() << ',' << part.cuts[i].side_u.size() << ','
        << part.cuts[i].side_w.size() << ',' << t.k_uw << ',' << t.k_u << ',' << t.k_w << ',' << t.total() << '\n';
  }
  emit(opt, out, csv.str());
  if (!opt.out.empty()) out << "grand total: " << ledger.grand_total << "  sum |P|: " << ledger.path_length_sum << "\n";
  return ledger.grand_total == ledger.path_length_sum ? kExitOk : kExitVerifyFailed;
}

inline int run_routing(const VtGraph& g, const Options& opt, std::ostream& out) {
  CongestionProfile profile;
  if (opt.scheme == "shortest") {
    profile = congestion_profile(g, shortest_routing(g));
  } else if (opt.scheme == "translation") {
    profile = congestion_profile(g, translation_routing(g));
  } else {
    const auto result = search_balanced_routing(g, opt.budget, opt.seed);
    out << "experimental search: gap " << result.initial_gap << " -> " << result.profile.gap() << " after "
        << result.iterations << " iterations (" << result.accepted_moves << " accepted)\n";
    profile = result.profile;
  }
  if (!opt.out.empty()) write_text_file(opt.out, export_profile_csv(g, profile));
  out << "scheme: " << opt.scheme << "\n";
  out << "min: " << profile.min << "\nmax: " << profile.max << "\nmean: " << to_string(profile.mean) << "\n";
  out << "total: " << profile.total() << "\nbalanced: " << (profile.balanced ? "true" : "false") << "\n";
  out << "optimal bound: " << to_string(optimal_congestion_bound(g)) << "\n";
  return kExitOk;
}

}  // namespace detail

/// Entry point behind the `vt` binary; returns the process exit code.
inline int cli_main(const std::vector<std::string>& args, std::ostream& out = std::cout,
                    std::ostream& err = std::cerr) {
  Options opt;
  CLI::App app{"Villarceau torus graph toolkit", "vt"};
  app.require_subcommand(1);

  const auto with_params = [&](CLI::App* sub) {
    sub->add_option("--r", opt.r, "toroidal parameter r (first coordinate mod 2r)")->required();
    sub->add_option("--s", opt.s, "poloidal parameter s (second coordinate mod 2s)")->required();
    return sub;
  };
  const auto with_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out, "output file (stdout when omitted)");
    return sub;
  };
  const auto with_axis = [&](CLI::App* sub) {
    sub->add_option("--axis", opt.axis, "band cut axis")->check(CLI::IsMember({"x", "y"}));
    return sub;
  };

  auto* build = with_out(with_params(app.add_subcommand("build", "construct VT(r,s) and write its JSON")));
  auto* stats = with_params(app.add_subcommand("stats", "counts, diameter, gcd signature, Wiener index"));
  auto* cycles = with_params(app.add_subcommand("cycles", "distinct acute/obtuse cycles and revolutions"));
  auto* verify = with_params(app.add_subcommand("verify", "run theorem checks; exit 1 on any failure"));
  verify->add_flag("--all", opt.all, "include the exhaustive and routing sections");
  verify->add_option("--seed", opt.seed, "seed for the experimental routing search");
  auto* wiener = with_axis(with_params(app.add_subcommand("wiener", "Wiener index by brute force and by cuts")));
  auto* cuts = with_out(with_axis(with_params(app.add_subcommand("cuts", "band edgecut partition and ledger"))));
  auto* routing = with_out(with_params(app.add_subcommand("routing", "congestion profile of a routing")));
  routing->add_option("--scheme", opt.scheme, "routing scheme")
      ->check(CLI::IsMember({"shortest", "translation", "search"}));
  routing->add_option("--budget", opt.budget, "search iterations");
  routing->add_option("--seed", opt.seed, "search seed");
  auto* dot = with_out(with_params(app.add_subcommand("export-dot", "write Graphviz DOT")));
  auto* json = with_out(with_params(app.add_subcommand("export-json", "write graph JSON")));
  auto* report = with_out(with_params(app.add_subcommand("report", "verification matrix as CSV")));
  report->add_option("--seed", opt.seed, "seed for the experimental routing search");
  report->add_option("--budget", opt.budget, "search iterations");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  if (opt.r < 2 || opt.s < 2) {
    err << "r and s must be ≥ 2\n";
    return kExitUsage;
  }

  try {
    const VtGraph g({opt.r, opt.s});
    if (build->parsed() || json->parsed()) {
      detail::emit(opt, out, export_json(g));
      return kExitOk;
    }
    if (dot->parsed()) {
      detail::emit(opt, out, export_dot(g));
      return kExitOk;
    }
    if (stats->parsed()) return detail::run_stats(g, out);
    if (cycles->parsed()) return detail::run_cycles(g, out);
    if (wiener->parsed()) return detail::run_wiener(g, opt, out);
    if (cuts->parsed()) return detail::run_cuts(g, opt, out);
    if (routing->parsed()) return detail::run_routing(g, opt, out);
    if (verify->parsed()) {
      ReportOptions ro;
      ro.seed = opt.seed;
      const auto m = run_report(g.params(), opt.all ? all_sections() : quick_sections(), ro);
      detail::print_matrix(m, out);
      return m.passed() ? kExitOk : kExitVerifyFailed;
    }
    if (report->parsed()) {
      ReportOptions ro;
      ro.seed = opt.seed;
      ro.search_budget = opt.budget;
      const auto m = run_report(g.params(), all_sections(), ro);
      detail::emit(opt, out, export_matrix_csv(m));
      return m.passed() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == Errc::param_too_small ? kExitUsage : kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace vt::cli
