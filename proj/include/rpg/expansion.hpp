#pragma once

// Connectivity and vertex-expansion checks: every S with |S| <= max_fraction n
// should satisfy |N(S)| > 2|S|. Small sets are enumerated exhaustively, larger
// ones sampled.

#include <cstddef>
#include <span>
#include <vector>

#include "rpg/graph.hpp"
#include "rpg/rng.hpp"

namespace rpg {

/// {v not in S : v adjacent to some u in S}, ascending.
std::vector<Vertex> external_neighborhood(const Graph& g, std::span<const Vertex> s);

/// Connected components by union-find; labels are the smallest vertex of each component.
std::vector<Vertex> component_labels(const Graph& g);
bool is_connected(const Graph& g);

struct ExpansionViolation {
  std::vector<Vertex> set;
  std::size_t neighborhood_size = 0;
};

struct ExpansionOptions {
  double max_fraction = 0.2;
  std::size_t small_cap = 3;
  std::size_t samples = 10000;
  /// Violations beyond this many per phase are counted but not stored.
  std::size_t max_recorded = 1000;
};

struct ExpansionReport {
  bool connected = false;
  std::size_t small_cap = 0;
  std::size_t samples = 0;
  std::size_t large_limit = 0;   // floor(max_fraction n)
  std::size_t small_sets_checked = 0;
  std::size_t small_set_violation_count = 0;
  std::size_t sampled_violation_count = 0;
  std::vector<ExpansionViolation> small_set_violations;
  std::vector<ExpansionViolation> sampled_violations;

  bool ok() const {
    return connected && small_set_violation_count == 0 && sampled_violation_count == 0;
  }
};

/// Upper bound on C(n, small_cap) for the exhaustive phase.
inline constexpr double kMaxExhaustiveSets = 1e7;

/// Throws InputError for max_fraction outside (0, 1] or an infeasible small_cap.
ExpansionReport check_expansion(const Graph& g, const ExpansionOptions& opts, Seed seed);

}  // namespace rpg
