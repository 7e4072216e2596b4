#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vt/cuts.hpp"
#include "vt/error.hpp"
#include "vt/metric.hpp"
#include "vt/path_set.hpp"
#include "vt/torus.hpp"

namespace vt {

/// Exact nonnegative-denominator fraction in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  std::int64_t ceil() const noexcept { return num >= 0 ? (num + den - 1) / den : -((-num) / den); }
  bool is_integer() const noexcept { return den == 1; }
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

inline std::string to_string(const Rational& q) {
  return q.den == 1 ? std::to_string(q.num) : std::to_string(q.num) + "/" + std::to_string(q.den);
}

struct CongestionProfile {
  std::vector<std::int64_t> per_edge;  // indexed by edge id
  std::int64_t min = 0;
  std::int64_t max = 0;
  Rational mean;
  bool balanced = false;

  std::int64_t gap() const noexcept { return max - min; }
  std::int64_t total() const noexcept {
    return std::accumulate(per_edge.begin(), per_edge.end(), std::int64_t{0});
  }
};

inline CongestionProfile profile_from_loads(std::vector<std::int64_t> loads) {
  CongestionProfile p;
  p.per_edge = std::move(loads);
  if (!p.per_edge.empty()) {
    const auto [lo, hi] = std::minmax_element(p.per_edge.begin(), p.per_edge.end());
    p.min = *lo;
    p.max = *hi;
    p.mean = Rational(p.total(), static_cast<std::int64_t>(p.per_edge.size()));
  }
  p.balanced = p.min == p.max;
  return p;
}

inline CongestionProfile congestion_profile(const VtGraph& g, const Routing& routing) {
  return profile_from_loads(edge_loads(g, routing));
}

/// Wiener(G) / |E|: the common load of an optimal congestion-balanced routing.
inline Rational optimal_congestion_bound(const VtGraph& g) {
  return Rational(wiener_index(g), static_cast<std::int64_t>(g.size()));
}

// ---------------------------------------------------------------------------
// Translation-invariant routings

/// One difference class {delta, -delta} per entry, with the template path
/// (offsets from the origin) used for every pair in the class.
struct TranslationScheme {
  std::vector<Vertex> representatives;  // min(delta, -delta)
  std::vector<Path> templates;          // (0,0) ... representative
  std::vector<bool> involutive;         // delta == -delta
};

inline TranslationScheme canonical_translation_scheme(const VtGraph& g) {
  TranslationScheme scheme;
  const Vertex origin{0, 0};
  const auto parent = bfs_parents(g, g.index(origin));
  for (const Vertex& delta : g.vertices()) {
    if (delta == origin) continue;
    const Vertex negated = g.difference(origin, delta);
    if (negated < delta) continue;
    scheme.representatives.push_back(delta);
    scheme.templates.push_back(tree_path(g, parent, g.index(delta)));
    scheme.involutive.push_back(negated == delta);
  }
  return scheme;
}

namespace detail {

/// Start vertices of the pairs routed with class c's template.
inline std::vector<Vertex> class_bases(const VtGraph& g, Vertex rep, bool involutive) {
  std::vector<Vertex> bases;
  for (const Vertex& x : g.vertices()) {
    if (involutive && g.translate(x, rep) < x) continue;
    bases.push_back(x);
  }
  return bases;
}

inline Path translated(const VtGraph& g, const Path& tmpl, Vertex base) {
  Path out;
  out.reserve(tmpl.size());
  for (const Vertex& v : tmpl) out.push_back(g.translate(base, v));
  return out;
}

}  // namespace detail

inline Routing routing_from_scheme(const VtGraph& g, const TranslationScheme& scheme) {
  Routing out;
  for (std::size_t c = 0; c < scheme.representatives.size(); ++c) {
    for (const Vertex& base : detail::class_bases(g, scheme.representatives[c], scheme.involutive[c])) {
      out.paths.push_back(detail::translated(g, scheme.templates[c], base));
    }
  }
  return out;
}

/// Every pair {x, x+delta} is routed along x + T(delta) for one shortest
/// template per class. Self-inverse classes (delta == -delta) start at the
/// endpoint that comes first in vertex order.
inline Routing translation_routing(const VtGraph& g) {
  return routing_from_scheme(g, canonical_translation_scheme(g));
}

struct BalancedSearchResult {
  Routing routing;
  CongestionProfile profile;
  TranslationScheme scheme;
  std::int64_t initial_gap = 0;
  std::size_t iterations = 0;
  std::size_t accepted_moves = 0;
};

inline constexpr std::size_t kTemplateCap = 4096;

/// Experimental local search over template choices of translation_routing,
/// minimising (max - min load, sum of squared loads) lexicographically. A
/// move is kept only when it does not worsen that key, so the gap never
/// grows. Deterministic for a given seed.
inline BalancedSearchResult search_balanced_routing(const VtGraph& g, std::size_t budget,
                                                    std::uint64_t seed = 0) {
  BalancedSearchResult result;
  result.scheme = canonical_translation_scheme(g);
  TranslationScheme& scheme = result.scheme;
  const std::size_t classes = scheme.representatives.size();

  std::vector<std::vector<Vertex>> bases(classes);
  std::vector<std::vector<Path>> candidates(classes);
  for (std::size_t c = 0; c < classes; ++c) {
    bases[c] = detail::class_bases(g, scheme.representatives[c], scheme.involutive[c]);
    candidates[c] = all_isometric_paths(g, Vertex{0, 0}, scheme.representatives[c], kTemplateCap);
  }
  const auto contribution = [&](std::size_t c, const Path& tmpl) {
    std::vector<std::size_t> ids;
    for (const Vertex& b : bases[c]) {
      const auto path_ids = path_edge_ids(g, detail::translated(g, tmpl, b));
      ids.insert(ids.end(), path_ids.begin(), path_ids.end());
    }
    return ids;
  };

  std::vector<std::int64_t> load(g.size(), 0);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t id : contribution(c, scheme.templates[c])) ++load[id];
  }
  const auto key = [](const std::vector<std::int64_t>& l) {
    const auto [lo, hi] = std::minmax_element(l.begin(), l.end());
    std::int64_t sq = 0;
    for (std::int64_t v : l) sq += v * v;
    return std::pair{*hi - *lo, sq};
  };
  auto current = key(load);
  result.initial_gap = current.first;

  std::vector<std::size_t> movable;
  for (std::size_t c = 0; c < classes; ++c) {
    if (candidates[c].size() > 1) movable.push_back(c);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t it = 0; it < budget && !movable.empty() && current.first > 0; ++it) {
    ++result.iterations;
    const std::size_t c = movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)];
    const Path& pick = candidates[c][std::uniform_int_distribution<std::size_t>(0, candidates[c].size() - 1)(rng)];
    if (pick == scheme.templates[c]) continue;

    std::vector<std::int64_t> trial = load;
    for (std::size_t id : contribution(c, scheme.templates[c])) --trial[id];
    for (std::size_t id : contribution(c, pick)) ++trial[id];
    const auto k = key(trial);
    if (k <= current) {
      load = std::move(trial);
      current = k;
      scheme.templates[c] = pick;
      ++result.accepted_moves;
    }
  }

  result.routing = routing_from_scheme(g, scheme);
  result.profile = profile_from_loads(std::move(load));
  return result;
}

}  // namespace vt
