#include "rpg/rainbow_connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rpg/errors.hpp"
#include "rpg/expansion.hpp"

namespace rpg {
namespace {

// Per-color adjacency rows: rows[c - 1].row(v) = neighbors w with color(v, w) = c.
struct ColorAdjacency {
  std::size_t n = 0;
  Color r = 0;
  std::vector<BitMatrix> rows;
  BitMatrix all;

  explicit ColorAdjacency(const ColoredGraph& cg)
      : n(cg.graph().vertex_count()), r(cg.palette_size()), all(cg.graph().adjacency_bits()) {
    rows.assign(r, BitMatrix(n, n));
    const auto edges = cg.graph().edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      BitMatrix& m = rows[cg.color_of(i) - 1];
      m.set(edges[i].u, edges[i].v);
      m.set(edges[i].v, edges[i].u);
    }
  }
};

void check_palette(const ColoredGraph& cg) {
  const Color r = cg.palette_size();
  if (r > ColorMask::kMaxColors) {
    throw InputError("rainbow DP supports r <= " + std::to_string(ColorMask::kMaxColors) +
                     " colors, got " + std::to_string(r) + "; use sampling for larger palettes");
  }
  if (r == 0 && cg.graph().edge_count() > 0) throw InputError("graph is uncolored (r = 0)");
  const std::size_t bytes =
      2 * (std::size_t{1} << r) * words_for(cg.graph().vertex_count()) * sizeof(Word);
  if (bytes > kMaxStateBytes) {
    throw InputError("rainbow DP state table needs " + std::to_string(bytes) + " bytes");
  }
}

// State tables reused across sources.
class RainbowDp {
 public:
  explicit RainbowDp(const ColorAdjacency& adj)
      : adj_(adj), full_(std::size_t{1} << adj.r), kept_(full_, Bitset(adj.n)),
        dominated_(full_, Bitset(adj.n)), reached_(adj.n) {}

  // Fills kept_ and reached_ from u. With stop_when_all, returns as soon as
  // every vertex is reached (tables are then incomplete).
  void run(Vertex u, bool stop_when_all) {
    for (auto& b : kept_) b.clear();
    reached_.clear();
    kept_[0].set(u);
    const std::size_t n = adj_.n;
    for (std::size_t mask = 0; mask < full_; ++mask) {
      Bitset& cur = kept_[mask];
      if (mask != 0) {
        Bitset& dom = dominated_[mask];
        dom.clear();
        for (Color c = 0; c < adj_.r; ++c) {
          const std::size_t bit = std::size_t{1} << c;
          if ((mask & bit) == 0) continue;
          simd::or_into(dom.words(), kept_[mask ^ bit].words());
          simd::or_into(dom.words(), dominated_[mask ^ bit].words());
        }
        simd::andnot_into(cur.words(), dom.words());
      }
      if (!cur.any()) continue;
      simd::or_into(reached_.words(), cur.words());
      if (stop_when_all && reached_.count() == n) return;
      cur.for_each([&](std::size_t v) {
        for (Color c = 0; c < adj_.r; ++c) {
          const std::size_t bit = std::size_t{1} << c;
          if (mask & bit) continue;
          simd::or_into(kept_[mask | bit].words(), adj_.rows[c].row(v));
        }
      });
    }
  }

  const Bitset& reached() const { return reached_; }
  std::vector<Bitset>& kept() { return kept_; }

 private:
  const ColorAdjacency& adj_;
  std::size_t full_;
  std::vector<Bitset> kept_;
  std::vector<Bitset> dominated_;
  Bitset reached_;
};

// Smallest vertex farther than `limit` hops from u, with its distance. The
// graph is assumed connected.
std::optional<std::pair<Vertex, std::size_t>> far_vertex(const BitMatrix& all, Vertex u,
                                                         std::size_t limit) {
  const std::size_t n = all.rows();
  std::vector<std::size_t> dist(n, 0);
  Bitset seen(n), frontier(n), next(n);
  seen.set(u);
  frontier.set(u);
  for (std::size_t depth = 1; frontier.any(); ++depth) {
    next.clear();
    frontier.for_each([&](std::size_t v) { simd::or_into(next.words(), all.row(v)); });
    simd::andnot_into(next.words(), seen.words());
    simd::or_into(seen.words(), next.words());
    next.for_each([&](std::size_t v) { dist[v] = depth; });
    std::swap(frontier, next);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] > limit) return std::pair{v, dist[v]};
  }
  return std::nullopt;
}

}  // namespace

std::vector<ColorMask> RainbowReach::minimal_masks(Vertex v) const {
  std::vector<ColorMask> out;
  for (std::size_t m = 0; m < kept.size(); ++m) {
    if (kept[m].test(v)) out.push_back(ColorMask::from_bits(static_cast<std::uint32_t>(m)));
  }
  return out;
}

RainbowReach rainbow_reachable(const ColoredGraph& cg, Vertex u) {
  check_palette(cg);
  if (u >= cg.graph().vertex_count()) throw InputError("source vertex out of range");
  const ColorAdjacency adj(cg);
  RainbowDp dp(adj);
  dp.run(u, false);
  return RainbowReach{u, cg.palette_size(), dp.reached(), std::move(dp.kept())};
}

std::vector<Vertex> rainbow_path(const ColoredGraph& cg, const RainbowReach& reach, Vertex v) {
  if (v >= reach.reached.size() || !reach.reaches(v)) return {};
  auto masks = reach.minimal_masks(v);
  const ColorMask start = *std::min_element(masks.begin(), masks.end(), [](ColorMask a, ColorMask b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  std::vector<Vertex> path{v};
  Vertex cur = v;
  std::uint32_t mask = start.bits();
  while (mask != 0) {
    std::optional<std::pair<Vertex, std::uint32_t>> best;
    for (Vertex w : cg.graph().neighbors(cur)) {
      const Color c = cg.color(cur, w);
      const std::uint32_t bit = 1U << (c - 1);
      if ((mask & bit) == 0 || !reach.kept[mask ^ bit].test(w)) continue;
      const std::pair cand{w, mask ^ bit};
      if (!best || cand < *best) best = cand;
    }
    if (!best) throw InternalError("rainbow DP state has no predecessor");
    cur = best->first;
    mask = best->second;
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

const char* to_string(RainbowVerdict::Reason reason) {
  switch (reason) {
    case RainbowVerdict::Reason::connected: return "connected";
    case RainbowVerdict::Reason::disconnected: return "disconnected";
    case RainbowVerdict::Reason::beyond_palette: return "distance exceeds palette size";
    case RainbowVerdict::Reason::no_rainbow_path: return "no rainbow path";
  }
  return "?";
}

RainbowVerdict is_rainbow_connected(const ColoredGraph& cg) {
  check_palette(cg);
  const Graph& g = cg.graph();
  const auto n = static_cast<Vertex>(g.vertex_count());
  RainbowVerdict verdict;
  if (n <= 1) return verdict;

  auto fail = [&](RainbowVerdict::Reason why, Vertex a, Vertex b) {
    verdict.connected = false;
    verdict.reason = why;
    verdict.witness = std::pair{a, b};
    return verdict;
  };

  const auto labels = component_labels(g);
  for (Vertex v = 1; v < n; ++v) {
    if (labels[v] != labels[0]) return fail(RainbowVerdict::Reason::disconnected, 0, v);
  }

  const ColorAdjacency adj(cg);
  for (Vertex u = 0; u < n; ++u) {
    if (auto far = far_vertex(adj.all, u, cg.palette_size())) {
      verdict.distance = far->second;
      return fail(RainbowVerdict::Reason::beyond_palette, u, far->first);
    }
  }
  RainbowDp dp(adj);
  for (Vertex u = 0; u < n; ++u) {
    dp.run(u, true);
    if (dp.reached().count() == n) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (!dp.reached().test(v)) return fail(RainbowVerdict::Reason::no_rainbow_path, u, v);
    }
  }
  return verdict;
}

HubSet build_hub_set(const Graph& h, double delta) {
  if (!(delta > 0.0 && delta <= 0.5)) throw InputError("delta must lie in (0, 0.5]");
  const std::size_t n = h.vertex_count();
  const auto need = static_cast<std::size_t>(std::ceil(delta * static_cast<double>(n) - 1e-9));
  if (n > 0 && h.min_degree() < need) {
    throw InputError("hub set needs min degree >= delta n = " + std::to_string(need) +
                     ", host has " + std::to_string(h.min_degree()));
  }
  HubSet out;
  out.threshold = delta * delta * static_cast<double>(n) / 4.0;
  out.hub_of.assign(n, 0);
  out.shared.assign(n, 0);
  const BitMatrix adj = h.adjacency_bits();
  auto shared = [&](Vertex a, Vertex b) { return simd::and_popcount(adj.row(a), adj.row(b)); };

  for (Vertex v = 0; v < n; ++v) {
    const bool independent = std::all_of(out.hubs.begin(), out.hubs.end(), [&](Vertex s) {
      return static_cast<double>(shared(v, s)) < out.threshold;
    });
    if (independent) out.hubs.push_back(v);
  }
  std::vector<bool> is_hub(n, false);
  for (Vertex s : out.hubs) {
    is_hub[s] = true;
    out.hub_of[s] = s;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_hub[v]) continue;
    std::size_t best = 0;
    Vertex best_hub = out.hubs.front();
    for (Vertex s : out.hubs) {
      const std::size_t c = shared(v, s);
      if (c > best) {
        best = c;
        best_hub = s;
      }
    }
    if (static_cast<double>(best) < out.threshold) {
      throw InternalError("vertex " + std::to_string(v) + " shares only " + std::to_string(best) +
                          " neighbors with every hub");
    }
    out.hub_of[v] = best_hub;
    out.shared[v] = best;
  }
  const auto bound = static_cast<std::size_t>(std::ceil(2.0 / delta - 1e-9));
  if (out.hubs.size() > bound) {
    throw InternalError("hub set has " + std::to_string(out.hubs.size()) +
                        " members, above the bound " + std::to_string(bound));
  }
  return out;
}

std::size_t count_short_rainbow_paths(const ColoredGraph& cg, Vertex u, Vertex v,
                                      const Graph& via_host, const EdgeSet& via_random) {
  std::size_t count = 0;
  for (const Edge& e : via_random) {
    for (auto [u0, v0] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (u == v || u0 == u || u0 == v || v0 == u || v0 == v) continue;
      if (!via_host.has_edge(u, u0) || !via_host.has_edge(v0, v)) continue;
      const Color a = cg.color(u, u0), b = cg.color(u0, v0), c = cg.color(v0, v);
      if (a != b && b != c && a != c) ++count;
    }
  }
  return count;
}

}  // namespace rpg
