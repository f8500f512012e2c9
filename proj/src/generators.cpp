#include "rpg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "rpg/errors.hpp"

namespace rpg {
namespace {

// Additive slack on top of 1.2 delta; the min-degree repair pass does the rest.
constexpr double kDenseSlack = 1.0;

std::uint64_t pair_key(const Edge& e) { return (std::uint64_t{e.u} << 32) | e.v; }

}  // namespace

std::string_view to_string(HostKind kind) {
  switch (kind) {
    case HostKind::random_dense: return "random_dense";
    case HostKind::complete_bipartite: return "complete_bipartite";
    case HostKind::two_blob: return "two_blob";
  }
  return "?";
}

HostKind parse_host_kind(std::string_view name) {
  for (HostKind k : {HostKind::random_dense, HostKind::complete_bipartite, HostKind::two_blob}) {
    if (to_string(k) == name) return k;
  }
  throw InputError("unknown host kind '" + std::string(name) + "'");
}

std::size_t HostSpec::min_degree_target() const {
  return static_cast<std::size_t>(std::ceil(delta * static_cast<double>(n) - 1e-9));
}

void HostSpec::validate() const {
  if (!(delta > 0.0 && delta < 0.5)) throw InputError("delta must lie in (0, 0.5)");
  if (n < 2) throw InputError("host needs at least 2 vertices");
  if (delta * static_cast<double>(n) < 1.0) {
    throw InputError("delta * n < 1: minimum degree target is empty");
  }
  if (kind == HostKind::two_blob) {
    if (n % 2 != 0) throw InputError("two_blob needs an even vertex count");
    if (!(blob_edge_prob >= 0.0 && blob_edge_prob <= 1.0)) {
      throw InputError("blob_edge_prob must lie in [0, 1]");
    }
  }
}

double dense_edge_probability(std::size_t n, double delta) {
  const double nn = static_cast<double>(n);
  return std::min(1.0, 1.2 * delta + kDenseSlack * std::sqrt(std::log(nn) / nn));
}

Graph gen_host(const HostSpec& spec, Seed seed) {
  spec.validate();
  Rng rng(seed);
  const auto n = static_cast<Vertex>(spec.n);
  std::vector<Edge> edges;

  switch (spec.kind) {
    case HostKind::complete_bipartite: {
      const auto a = static_cast<Vertex>(spec.min_degree_target());
      for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = a; v < n; ++v) edges.push_back({u, v});
      }
      break;
    }
    case HostKind::two_blob: {
      std::bernoulli_distribution coin(spec.blob_edge_prob);
      const Vertex half = n / 2;
      for (Vertex base : {Vertex{0}, half}) {
        for (Vertex u = base; u < base + half; ++u) {
          for (Vertex v = u + 1; v < base + half; ++v) {
            if (coin(rng)) edges.push_back({u, v});
          }
        }
      }
      break;
    }
    case HostKind::random_dense: {
      std::bernoulli_distribution coin(dense_edge_probability(spec.n, spec.delta));
      BitMatrix adj(n, n);
      std::vector<std::size_t> deg(n, 0);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (coin(rng)) {
            adj.set(u, v);
            adj.set(v, u);
            ++deg[u];
            ++deg[v];
          }
        }
      }
      const std::size_t need = spec.min_degree_target();
      std::vector<Vertex> candidates;
      for (Vertex v = 0; v < n; ++v) {
        if (deg[v] >= need) continue;
        candidates.clear();
        for (Vertex w = 0; w < n; ++w) {
          if (w != v && !adj.test(v, w)) candidates.push_back(w);
        }
        std::shuffle(candidates.begin(), candidates.end(), rng);
        for (std::size_t i = 0; deg[v] < need && i < candidates.size(); ++i) {
          const Vertex w = candidates[i];
          adj.set(v, w);
          adj.set(w, v);
          ++deg[v];
          ++deg[w];
        }
      }
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (adj.test(u, v)) edges.push_back({u, v});
        }
      }
      break;
    }
  }
  return Graph(spec.n, edges);
}

EdgeSet perturb(const Graph& h, std::size_t m, Seed seed) {
  const std::size_t available = complement_size(h);
  if (m > available) {
    throw InputError("cannot add " + std::to_string(m) + " random edges: only " +
                     std::to_string(available) + " non-edges exist");
  }
  Rng rng(seed);
  std::vector<Edge> out;
  out.reserve(m);
  if (m == 0) return EdgeSet{};

  if (available >= 2 * m) {
    // Rejection sampling: expected < 2 draws per accepted pair.
    const auto n = static_cast<Vertex>(h.vertex_count());
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(2 * m);
    while (out.size() < m) {
      const Vertex a = pick(rng), b = pick(rng);
      if (a == b) continue;
      const Edge e = Edge::of(a, b);
      if (h.has_edge(e.u, e.v) || !chosen.insert(pair_key(e)).second) continue;
      out.push_back(e);
    }
  } else {
    EdgeSet all = complement_pairs(h);
    std::vector<Edge> pool(all.begin(), all.end());
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
  }
  return EdgeSet(std::move(out));
}

ColoredGraph color_uniform(const Graph& g, Color r, Seed seed) {
  if (r == 0) {
    if (g.edge_count() != 0) throw InputError("cannot color a nonempty edge set with r = 0");
    return ColoredGraph::uncolored(g);
  }
  Rng rng(seed);
  std::uniform_int_distribution<Color> pick(1, r);
  std::vector<Color> colors(g.edge_count());
  for (Color& c : colors) c = pick(rng);
  return ColoredGraph(g, std::move(colors), r);
}

SplitResult split_host(const Graph& h, double p, Seed seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("split probability must lie in [0, 1]");
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> first, second;
  for (const Edge& e : h.edges()) (coin(rng) ? first : second).push_back(e);
  return {Graph(h.vertex_count(), first), Graph(h.vertex_count(), second)};
}

namespace {

Graph sample_out_edges(const Graph& g, std::size_t k, Seed seed) {
  Rng rng(seed);
  std::vector<Edge> picked;
  picked.reserve(g.vertex_count() * k);
  std::vector<Vertex> nbrs;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    nbrs.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    const std::size_t take = std::min(k, nbrs.size());
    for (std::size_t i = 0; i < take; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, nbrs.size() - 1);
      std::swap(nbrs[i], nbrs[pick(rng)]);
      picked.push_back(Edge::of(v, nbrs[i]));
    }
  }
  return Graph::from_pairs(g.vertex_count(), std::move(picked));
}

}  // namespace

Graph k_out(const Graph& g, std::size_t k, Seed seed) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < k) {
      throw InputError("k-out with k = " + std::to_string(k) + " needs min degree >= k; vertex " +
                       std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  return sample_out_edges(g, k, seed);
}

Graph k_out_capped(const Graph& g, std::size_t k, Seed seed) { return sample_out_edges(g, k, seed); }

}  // namespace rpg
