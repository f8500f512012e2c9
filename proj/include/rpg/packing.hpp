#pragma once

// Packing t edge-disjoint rainbow Hamilton cycles into G^r_{H,m}:
//
//   H  --split(p)-->  H' , H''
//   H' --greedy rainbow k-out-like extraction-->  H_1 .. H_t
//   shuffled H'' u R  --chunks of `chunk` edges-->  A_1 .. A_t
//       (each A_i rainbow, avoiding the colors of H_i)
//   A_i = Q1_i ++ Q2_i ;  find_hamilton(H_i, Q1_i, Q2_i)
//
// Parts are edge-disjoint by construction and every returned cycle is
// re-verified before it is reported.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rpg/constants.hpp"
#include "rpg/graph.hpp"
#include "rpg/hamiltonicity.hpp"
#include "rpg/rng.hpp"

namespace rpg {

struct RainbowPart {
  Graph graph;
  std::vector<Color> colors;        // ascending, one per edge
  std::vector<Vertex> deficient;    // vertices with part-degree < k
};

/// Up to t edge-disjoint rainbow subgraphs of h_prime, each with at most k n
/// edges. Part i is built by visiting vertices in random order and letting each
/// claim up to k unclaimed incident edges whose colors part i has not used.
std::vector<RainbowPart> extract_rainbow_parts(const ColoredGraph& h_prime, std::size_t t,
                                               std::size_t k, Seed seed);

struct FilteredChunk {
  EdgeSet selected;              // rainbow, avoids the part's forbidden colors
  std::size_t deficiency = 0;    // target - |selected|
};

/// Shuffles rest's edges, cuts the first t * chunk into consecutive chunks and
/// greedily keeps up to `target` edges of distinct admissible colors from each.
/// forbidden[i] lists the colors chunk i must avoid (may be empty / shorter
/// than t). Throws InputError when rest has fewer than t * chunk edges.
std::vector<FilteredChunk> chunk_and_filter(const ColoredGraph& rest, std::size_t t,
                                            std::size_t chunk, std::size_t target,
                                            std::span<const std::vector<Color>> forbidden,
                                            Seed seed);

struct PackOptions {
  std::size_t k = kOutDegree;
  double split_probability = kSplitProbability;
  std::size_t chunk = 0;                 // 0: (435 + 75 theta) n
  std::size_t target = 0;                // 0: (81 + 15 theta) n
  std::optional<double> q1_fraction;     // default (45 + 15 theta) / (81 + 15 theta)
  SolverOptions solver;
};

struct PartReport {
  std::size_t part_edges = 0;
  std::size_t deficient_vertices = 0;
  std::size_t selected_edges = 0;
  std::size_t chunk_deficiency = 0;
  std::size_t q1_edges = 0;
  std::size_t q2_edges = 0;
  bool solved = false;
  std::size_t longest_path = 0;
  SolverStats stats;
};

struct RainbowPacking {
  std::size_t requested = 0;
  std::vector<HamiltonCycle> cycles;
  std::vector<std::vector<Edge>> cycle_edge_sets;
  std::vector<std::vector<Color>> cycle_colors;
  std::vector<PartReport> parts;
  std::vector<std::string> notes;

  bool complete() const { return cycles.size() == requested; }
};

/// g must contain every edge of host (g = host u R, totally colored).
RainbowPacking pack_rainbow_hamilton(const ColoredGraph& g, const Graph& host, std::size_t t,
                                     const PerturbConfig& params, Seed seed,
                                     const PackOptions& opts = {});

}  // namespace rpg
