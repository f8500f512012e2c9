#pragma once

// Posa rotation-extension Hamilton cycle search with booster-edge consumption.
//
// The solver keeps a path P with a fixed head x. When neither end can be
// extended it computes END(x; P), the tails reachable by rotations, and for
// each z in END(x; P) the set END(z; P(x, z)). A booster {z, z'} joining the
// two families closes a cycle; a booster from a family into an off-path vertex
// extends the path. Non-Hamilton cycles are reopened into longer paths through
// an off-cycle neighbor, which exists while the working graph is connected.
//
// The search is one-sided: Exhausted is not a proof of non-Hamiltonicity.

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "rpg/graph.hpp"

namespace rpg {

struct HamiltonCycle {
  /// Every vertex once; the closing edge order.back() -> order.front() is implicit.
  std::vector<Vertex> order;

  friend bool operator==(const HamiltonCycle&, const HamiltonCycle&) = default;
};

/// The n cycle edges, canonical.
std::vector<Edge> cycle_edges(const HamiltonCycle& cycle);

/// Rotates to start at the smallest vertex and orients so that the second
/// vertex is smaller than the last.
HamiltonCycle normalized(HamiltonCycle cycle);

enum class CycleDefect { none, wrong_length, vertex_out_of_range, repeated_vertex, missing_edge, repeated_color };

const char* to_string(CycleDefect d);

/// Checks the cycle visits all n vertices of `certifying` once and uses only its edges.
CycleDefect verify_hamilton_cycle(const HamiltonCycle& cycle, const Graph& certifying);
/// As above against cg's graph, and additionally that the n edge colors are distinct.
CycleDefect verify_rainbow_cycle(const HamiltonCycle& cycle, const ColoredGraph& cg);

struct DisconnectionCertificate {
  Vertex a = 0;  // a and b lie in different components
  Vertex b = 0;
  std::size_t components = 0;
};

struct Exhausted {
  std::size_t longest_path = 0;
  std::size_t boosters_consumed = 0;
  std::optional<DisconnectionCertificate> disconnected;
};

struct SolverOptions {
  /// Rotation states (new endpoints) explored in the second-level closure per
  /// booster consumed. 0 means n * n.
  std::size_t rotation_budget = 0;
  /// Re-check |N(END)| < 2|END| whenever a full closure ends without progress.
  bool check_posa_bound = true;
};

struct SolverStats {
  std::size_t extensions = 0;
  std::size_t rotations = 0;
  std::size_t cycle_closures = 0;
  std::size_t absorptions = 0;
  std::size_t stuck_phases = 0;
  std::size_t boosters_consumed = 0;
  std::size_t booster_hits = 0;
  std::size_t posa_checks = 0;
  std::size_t posa_violations = 0;
};

struct HamiltonResult {
  std::variant<HamiltonCycle, Exhausted> outcome;
  SolverStats stats;

  bool found() const { return std::holds_alternative<HamiltonCycle>(outcome); }
  const HamiltonCycle& cycle() const { return std::get<HamiltonCycle>(outcome); }
  const Exhausted& exhausted() const { return std::get<Exhausted>(outcome); }
};

namespace detail {
class PosaSearch;
}

/// Working state of the search: the base graph plus consumed boosters, and the
/// current path. Reusable across calls to rotations_close with further boosters.
class RotationState {
 public:
  explicit RotationState(const Graph& base);

  std::size_t vertex_count() const { return n_; }
  const Graph& base_graph() const { return base_; }
  std::span<const Vertex> path() const { return path_; }
  std::size_t boosters_consumed() const { return consumed_; }
  /// Boosters that were not already edges, in consumption order.
  std::span<const Edge> added_boosters() const { return added_; }

  bool has_edge(Vertex a, Vertex b) const { return bits_.test(a, b); }
  /// base plus every added booster.
  Graph working_graph() const;

 private:
  friend class detail::PosaSearch;

  void add_edge(Vertex a, Vertex b);

  std::size_t n_;
  Graph base_;
  std::vector<std::vector<Vertex>> adj_;
  BitMatrix bits_;
  std::vector<Vertex> path_;
  std::vector<Edge> added_;
  std::size_t consumed_ = 0;
};

/// Runs the search, consuming boosters in order until a Hamilton cycle is
/// found or the boosters run out. Throws InputError on an out-of-range booster.
HamiltonResult rotations_close(RotationState& state, std::span<const Edge> boosters,
                               const SolverOptions& opts = {});

/// rotations_close on g u q1 with boosters q2.
HamiltonResult find_hamilton(const Graph& g, const EdgeSet& q1, const EdgeSet& q2,
                             const SolverOptions& opts = {});

}  // namespace rpg
