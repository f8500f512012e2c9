#pragma once

// Model constants of the perturbed-graph model and the edge/color budgets
// derived from them. All logarithms are natural.

#include <cstddef>

#include "rpg/graph.hpp"
#include "rpg/rng.hpp"

namespace rpg {

/// theta = -ln(delta).
double theta_of(double delta);

/// t = floor(min{delta n / 260, n / (1000 + 200 theta)}), clamped to >= 1.
std::size_t cycle_count_t(std::size_t n, double delta);

/// Edge budget (435 + 75 theta) t n for t edge-disjoint rainbow Hamilton cycles.
std::size_t packing_edge_budget(std::size_t n, double delta, std::size_t t);
/// Color budget (120 + 20 theta) n.
std::size_t packing_color_budget(std::size_t n, double delta);
/// Per-part chunk size (435 + 75 theta) n of the shuffled H'' u R sequence.
std::size_t chunk_size(std::size_t n, double delta);
/// Random-edge budget |Q| = (81 + 15 theta) n handed to each part.
std::size_t booster_budget(std::size_t n, double delta);
/// |Q1| = (45 + 15 theta) n.
std::size_t q1_size(std::size_t n, double delta);
/// |Q2| = 36 n.
std::size_t q2_size(std::size_t n);
/// Share of |Q| that goes to Q1: (45 + 15 theta) / (81 + 15 theta).
double q1_fraction(double delta);

/// Random edges for 3-color rainbow connectivity: ceil(60 delta^-2 ln n).
std::size_t three_color_edge_budget(std::size_t n, double delta);

/// Probability with which a host edge is placed in H'.
inline constexpr double kSplitProbability = 1.0 / 20.0;
/// Out-degree of the k-out subgraph taken from H'.
inline constexpr std::size_t kOutDegree = 6;

/// Perturbation parameters plus the derived theta and t.
struct PerturbConfig {
  std::size_t m = 0;
  Color r = 0;
  Seed seed = kDefaultSeed;
  double delta = 0.0;
  double theta = 0.0;
  std::size_t t = 1;

  /// Validates delta in (0, 0.5) and clamps m to the complement size.
  static PerturbConfig make(std::size_t n, double delta, std::size_t m, Color r, Seed seed,
                            std::size_t complement);
};

}  // namespace rpg
