#pragma once

// Host graphs, random perturbation, random coloring, the H'/H'' split and
// k-out sampling. Every function is a pure function of its inputs and seed.

#include <cstddef>
#include <string>
#include <string_view>

#include "rpg/graph.hpp"
#include "rpg/rng.hpp"

namespace rpg {

enum class HostKind { random_dense, complete_bipartite, two_blob };

std::string_view to_string(HostKind kind);
/// Accepts the names printed by to_string; throws InputError otherwise.
HostKind parse_host_kind(std::string_view name);

struct HostSpec {
  HostKind kind = HostKind::random_dense;
  std::size_t n = 0;
  double delta = 0.25;          // minimum-degree fraction, in (0, 0.5)
  double blob_edge_prob = 0.22;  // two_blob only

  /// ceil(delta n), the minimum degree the dense host guarantees.
  std::size_t min_degree_target() const;
  /// Throws InputError when the spec is infeasible.
  void validate() const;
};

/// Edge probability used for the random_dense base graph before repair.
double dense_edge_probability(std::size_t n, double delta);

Graph gen_host(const HostSpec& spec, Seed seed);

/// m distinct non-edges of h, uniform without replacement, in sampling order.
/// Throws InputError when m exceeds the number of non-edges.
EdgeSet perturb(const Graph& h, std::size_t m, Seed seed);

/// Independent uniform colors from 1..r. r = 0 is only valid for an edgeless graph.
ColoredGraph color_uniform(const Graph& g, Color r, Seed seed);

struct SplitResult {
  Graph h_prime;
  Graph h_double_prime;
};

/// Each edge goes to h_prime independently with probability p.
SplitResult split_host(const Graph& h, double p, Seed seed);

/// Every vertex picks k distinct incident edges uniformly; returns the union.
/// Throws InputError if some vertex has degree < k.
Graph k_out(const Graph& g, std::size_t k, Seed seed);

/// k-out where a vertex of degree below k takes all of its edges.
Graph k_out_capped(const Graph& g, std::size_t k, Seed seed);

}  // namespace rpg
