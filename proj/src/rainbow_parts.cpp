#include <algorithm>
#include <numeric>
#include <string>

#include "rpg/errors.hpp"
#include "rpg/packing.hpp"

namespace rpg {

std::vector<RainbowPart> extract_rainbow_parts(const ColoredGraph& h_prime, std::size_t t,
                                               std::size_t k, Seed seed) {
  const Graph& g = h_prime.graph();
  const std::size_t n = g.vertex_count();
  std::vector<bool> claimed(g.edge_count(), false);
  std::vector<RainbowPart> parts;
  parts.reserve(t);

  std::vector<Vertex> order(n);
  std::vector<Vertex> nbrs;
  for (std::size_t i = 0; i < t; ++i) {
    Rng rng(derive_seed(seed, 0, i, "rainbow-part"));
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> used(static_cast<std::size_t>(h_prime.palette_size()) + 1, false);
    std::vector<std::size_t> degree(n, 0);
    std::vector<Edge> edges;
    for (Vertex v : order) {
      nbrs.assign(g.neighbors(v).begin(), g.neighbors(v).end());
      std::shuffle(nbrs.begin(), nbrs.end(), rng);
      std::size_t taken = 0;
      for (Vertex w : nbrs) {
        if (taken == k) break;
        const std::size_t idx = *g.edge_index(v, w);
        const Color c = h_prime.color_of(idx);
        if (claimed[idx] || used[c]) continue;
        claimed[idx] = true;
        used[c] = true;
        edges.push_back(Edge::of(v, w));
        ++degree[v];
        ++degree[w];
        ++taken;
      }
    }
    RainbowPart part{Graph(n, edges), {}, {}};
    for (const Edge& e : part.graph.edges()) part.colors.push_back(h_prime.color(e));
    std::sort(part.colors.begin(), part.colors.end());
    for (Vertex v = 0; v < n; ++v) {
      if (degree[v] < k) part.deficient.push_back(v);
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<FilteredChunk> chunk_and_filter(const ColoredGraph& rest, std::size_t t,
                                            std::size_t chunk, std::size_t target,
                                            std::span<const std::vector<Color>> forbidden,
                                            Seed seed) {
  const Graph& g = rest.graph();
  if (g.edge_count() < t * chunk) {
    throw InputError("chunking needs t * chunk = " + std::to_string(t * chunk) +
                     " edges but only " + std::to_string(g.edge_count()) + " are available");
  }
  std::vector<std::size_t> perm(g.edge_count());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<FilteredChunk> out;
  out.reserve(t);
  for (std::size_t i = 0; i < t; ++i) {
    std::vector<bool> blocked(static_cast<std::size_t>(rest.palette_size()) + 1, false);
    if (i < forbidden.size()) {
      for (Color c : forbidden[i]) {
        if (c < blocked.size()) blocked[c] = true;
      }
    }
    std::vector<Edge> picked;
    for (std::size_t j = i * chunk; j < (i + 1) * chunk && picked.size() < target; ++j) {
      const Color c = rest.color_of(perm[j]);
      if (blocked[c]) continue;
      blocked[c] = true;
      picked.push_back(g.edges()[perm[j]]);
    }
    const std::size_t got = picked.size();
    out.push_back({EdgeSet(std::move(picked)), target - got});
  }
  return out;
}

}  // namespace rpg
