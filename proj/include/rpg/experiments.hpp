#pragma once

// Seeded Monte Carlo sweeps over the perturbed-graph model. Each (point, trial)
// pair gets its own RNG streams derived from the master seed, so results do not
// depend on thread count or completion order.

#include <cstddef>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rpg/expansion.hpp"
#include "rpg/generators.hpp"
#include "rpg/graph.hpp"
#include "rpg/packing.hpp"
#include "rpg/rng.hpp"

namespace rpg {

enum class Property { hamiltonian, rainbow_hamiltonian, rainbow_pack_t, rainbow_connected, expansion_ok };
enum class SweepVar { m, r, n };

std::string_view to_string(Property p);
Property parse_property(std::string_view name);
std::string_view to_string(SweepVar v);
SweepVar parse_sweep_var(std::string_view name);

/// k-out base from H' plus booster sequences Q1, Q2 (uncolored instance).
struct BoosterInstance {
  Graph h_prime;
  Graph base;
  EdgeSet q1;
  EdgeSet q2;
};

/// Q1 and Q2 drawn uniformly without replacement from the non-edges of H'.
/// Sizes are clamped to the number of non-edges (Q1 first).
BoosterInstance uniform_booster_instance(const Graph& host, std::size_t q1, std::size_t q2,
                                         Seed seed, std::size_t k = kOutDegree,
                                         double split_probability = kSplitProbability);

/// Q1 ++ Q2 is a uniform shuffle of (H'' u R) minus the base edges, cut at
/// ceil(share * size).
BoosterInstance pooled_booster_instance(const Graph& host, const EdgeSet& random_edges,
                                        double q1_share, Seed seed, std::size_t k = kOutDegree,
                                        double split_probability = kSplitProbability);

struct ExperimentPlan {
  Property property = Property::rainbow_connected;
  HostSpec host;
  SweepVar sweep = SweepVar::m;
  std::vector<std::size_t> values;
  std::size_t m = 0;
  Color r = 0;
  std::size_t trials = 1;
  Seed master_seed = kDefaultSeed;
  unsigned threads = 1;

  std::size_t t = 0;  // rainbow_pack_t; 0 means cycle_count_t(n, delta)
  PackOptions pack;
  ExpansionOptions expansion;

  /// Throws InputError on an empty value list, zero trials or a bad host.
  void validate() const;
};

struct ExperimentPoint {
  HostSpec host;
  std::size_t m = 0;
  Color r = 0;
};

struct ExperimentRecord {
  Property property = Property::rainbow_connected;
  ExperimentPoint point;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double mean_ms = 0.0;
  Seed seed = 0;
  std::vector<Seed> trial_seeds;
  bool skipped = false;
  std::string reason;

  double fraction() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

/// The sweep point for values[index].
ExperimentPoint point_at(const ExperimentPlan& plan, std::size_t index);

/// One trial of the plan's property at a point. Throws InputError when the
/// point is infeasible.
bool run_trial(const ExperimentPlan& plan, const ExperimentPoint& point, Seed trial_seed);

std::vector<ExperimentRecord> run_plan(const ExperimentPlan& plan);

/// Header plus one row per record. The trailing status column is "ok" or
/// "skipped: <reason>".
std::string emit_csv(std::span<const ExperimentRecord> records);

/// Line-oriented key=value plan. '#' starts a comment. Throws InputError with
/// the line number on unknown keys or malformed values.
ExperimentPlan parse_plan(std::istream& in);

}  // namespace rpg
