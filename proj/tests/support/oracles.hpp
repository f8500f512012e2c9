#pragma once

// Brute-force reference implementations used by the tests. They work on plain
// edge lists and deliberately share no code with the library algorithms.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected multigraph-free edge map: ordered pair (min, max) -> color.
struct EdgeMap {
  std::size_t n = 0;
  std::map<Pair, std::uint32_t> color;

  void add(std::uint32_t a, std::uint32_t b, std::uint32_t c = 0);
  bool has(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t at(std::uint32_t a, std::uint32_t b) const;
  std::vector<std::vector<std::uint32_t>> adjacency() const;
};

/// Empty string when `order` is a Hamilton cycle of g (and rainbow if
/// `rainbow`); otherwise a description of the first defect.
std::string cycle_defect(const std::vector<std::uint32_t>& order, const EdgeMap& g, bool rainbow);

/// reach[v] is true iff some simple path from u to v has pairwise distinct
/// colors. Enumerates every simple path.
std::vector<bool> rainbow_reach(const EdgeMap& g, std::uint32_t u);
bool rainbow_connected(const EdgeMap& g);

/// Number of component of each vertex, by DFS; labels are 0, 1, ...
std::vector<std::size_t> components(const EdgeMap& g);

/// Hamiltonicity by Held-Karp over subsets (n <= 16).
bool hamiltonian(const EdgeMap& g);

/// Paths u - a - b - v with a, b, u, v distinct, {u,a} and {b,v} in host,
/// {a,b} in random, and three distinct colors in g.
std::size_t short_rainbow_paths(const EdgeMap& g, const EdgeMap& host, const EdgeMap& random,
                                std::uint32_t u, std::uint32_t v);

/// |N(S) \ S| for the vertex set S.
std::size_t external_neighborhood(const EdgeMap& g, const std::vector<std::uint32_t>& s);

/// True iff every nonempty S with |S| <= cap has |N(S) \ S| > 2|S|.
bool small_sets_expand(const EdgeMap& g, std::size_t cap);

}  // namespace oracle
