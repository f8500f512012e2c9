#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "rpg/errors.hpp"
#include "rpg/generators.hpp"
#include "rpg/packing.hpp"

namespace rpg {

RainbowPacking pack_rainbow_hamilton(const ColoredGraph& g, const Graph& host, std::size_t t,
                                     const PerturbConfig& params, Seed seed,
                                     const PackOptions& opts) {
  const std::size_t n = g.graph().vertex_count();
  if (host.vertex_count() != n) throw InputError("host and colored graph differ in vertex count");
  for (const Edge& e : host.edges()) {
    if (!g.graph().has_edge(e.u, e.v)) {
      throw InputError("host edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} is missing from the colored graph");
    }
  }

  RainbowPacking out;
  out.requested = t;
  if (t == 0) return out;

  const SplitResult split = split_host(host, opts.split_probability, derive_seed(seed, "split"));

  std::vector<Edge> prime_edges(split.h_prime.edges().begin(), split.h_prime.edges().end());
  const ColoredGraph h_prime = restrict_to(g, prime_edges);
  std::vector<Edge> rest_edges;
  rest_edges.reserve(g.graph().edge_count());
  for (const Edge& e : g.graph().edges()) {
    if (!split.h_prime.has_edge(e.u, e.v)) rest_edges.push_back(e);
  }
  const ColoredGraph rest = restrict_to(g, rest_edges);

  const std::vector<RainbowPart> parts =
      extract_rainbow_parts(h_prime, t, opts.k, derive_seed(seed, "parts"));

  std::size_t chunk = opts.chunk ? opts.chunk : chunk_size(n, params.delta);
  const std::size_t target = opts.target ? opts.target : booster_budget(n, params.delta);
  if (chunk * t > rest.graph().edge_count()) {
    const std::size_t clamped = rest.graph().edge_count() / t;
    out.notes.push_back("chunk clamped from " + std::to_string(chunk) + " to " +
                        std::to_string(clamped) + " (H'' u R has " +
                        std::to_string(rest.graph().edge_count()) + " edges)");
    chunk = clamped;
  }

  std::vector<std::vector<Color>> forbidden;
  forbidden.reserve(parts.size());
  for (const RainbowPart& p : parts) forbidden.push_back(p.colors);
  const std::vector<FilteredChunk> chunks =
      chunk_and_filter(rest, t, chunk, target, forbidden, derive_seed(seed, "chunks"));

  const double q1_share = opts.q1_fraction.value_or(q1_fraction(params.delta));
  std::set<Edge> used;
  for (std::size_t i = 0; i < t; ++i) {
    PartReport rep;
    rep.part_edges = parts[i].graph.edge_count();
    rep.deficient_vertices = parts[i].deficient.size();
    rep.selected_edges = chunks[i].selected.size();
    rep.chunk_deficiency = chunks[i].deficiency;

    const EdgeSet& a = chunks[i].selected;
    const auto q1_count = std::min(
        a.size(), static_cast<std::size_t>(std::ceil(q1_share * static_cast<double>(a.size()))));
    const EdgeSet q1 = a.slice(0, q1_count);
    const EdgeSet q2 = a.slice(q1_count, a.size() - q1_count);
    rep.q1_edges = q1.size();
    rep.q2_edges = q2.size();

    const HamiltonResult res = find_hamilton(parts[i].graph, q1, q2, opts.solver);
    rep.stats = res.stats;
    if (res.found()) {
      const HamiltonCycle& cycle = res.cycle();
      const Graph certifying = graph_union(parts[i].graph, a);
      const std::vector<Edge> edges = cycle_edges(cycle);
      const bool disjoint =
          std::none_of(edges.begin(), edges.end(), [&](const Edge& e) { return used.count(e) > 0; });
      const CycleDefect d1 = verify_hamilton_cycle(cycle, certifying);
      const CycleDefect d2 = verify_rainbow_cycle(cycle, g);
      if (d1 == CycleDefect::none && d2 == CycleDefect::none && disjoint) {
        rep.solved = true;
        rep.longest_path = n;
        used.insert(edges.begin(), edges.end());
        std::vector<Color> colors;
        for (const Edge& e : edges) colors.push_back(g.color(e));
        std::sort(colors.begin(), colors.end());
        out.cycles.push_back(cycle);
        out.cycle_edge_sets.push_back(edges);
        out.cycle_colors.push_back(std::move(colors));
      } else {
        out.notes.push_back("part " + std::to_string(i) + ": cycle rejected by verifier (" +
                            to_string(d1 != CycleDefect::none ? d1 : d2) +
                            (disjoint ? "" : ", overlaps an earlier cycle") + ")");
      }
    } else {
      rep.longest_path = res.exhausted().longest_path;
      if (res.exhausted().disconnected) {
        out.notes.push_back("part " + std::to_string(i) + ": H_i u Q1_i is disconnected");
      }
    }
    out.parts.push_back(rep);
  }
  return out;
}

}  // namespace rpg
