#include "rpg/graph.hpp"

#include <algorithm>
#include <string>

#include "rpg/errors.hpp"

namespace rpg {
namespace {

std::string pair_str(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

}  // namespace

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InputError("edge set contains self-loop at " + std::to_string(e.u));
    e = Edge::of(e.u, e.v);
  }
  std::vector<Edge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw InputError("edge set contains duplicate " + pair_str(dup->u, dup->v));
}

EdgeSet EdgeSet::slice(std::size_t first, std::size_t count) const {
  EdgeSet out;
  first = std::min(first, edges_.size());
  count = std::min(count, edges_.size() - first);
  out.edges_.assign(edges_.begin() + static_cast<std::ptrdiff_t>(first),
                    edges_.begin() + static_cast<std::ptrdiff_t>(first + count));
  return out;
}

Graph::Graph(std::size_t n) : n_(n) { build_adjacency(); }

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), edges_(edges.begin(), edges.end()) {
  for (Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw InputError("edge " + pair_str(e.u, e.v) + " has endpoint >= n = " + std::to_string(n_));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    e = Edge::of(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw InputError("duplicate edge " + pair_str(dup->u, dup->v));
  build_adjacency();
}

Graph Graph::from_pairs(std::size_t n, std::vector<Edge> edges) {
  for (Edge& e : edges) e = Edge::of(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adj_.assign(offsets_[n_], 0);
  adj_edge_.assign(offsets_[n_], 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list is filled in ascending order
  // except where a smaller neighbor arrives later via the .v side; sort after.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = static_cast<std::uint32_t>(i);
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::pair<Vertex, std::uint32_t>> scratch;
  for (std::size_t v = 0; v < n_; ++v) {
    const std::size_t lo = offsets_[v], hi = offsets_[v + 1];
    scratch.clear();
    for (std::size_t j = lo; j < hi; ++j) scratch.emplace_back(adj_[j], adj_edge_[j]);
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t j = lo; j < hi; ++j) {
      adj_[j] = scratch[j - lo].first;
      adj_edge_[j] = scratch[j - lo].second;
    }
  }
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nbrs = neighbors(a);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
  if (it == nbrs.end() || *it != b) return std::nullopt;
  return adj_edge_[offsets_[a] + static_cast<std::size_t>(it - nbrs.begin())];
}

BitMatrix Graph::adjacency_bits() const {
  BitMatrix m(n_, n_);
  for (const Edge& e : edges_) {
    m.set(e.u, e.v);
    m.set(e.v, e.u);
  }
  return m;
}

ColoredGraph::ColoredGraph(Graph graph, std::vector<Color> colors, Color r)
    : graph_(std::move(graph)), colors_(std::move(colors)), r_(r) {
  if (colors_.size() != graph_.edge_count()) {
    throw InputError("coloring has " + std::to_string(colors_.size()) + " entries for " +
                     std::to_string(graph_.edge_count()) + " edges");
  }
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    const Color c = colors_[i];
    const bool ok = r_ == 0 ? c == kUncolored : (c >= 1 && c <= r_);
    if (!ok) {
      const Edge& e = graph_.edges()[i];
      throw InputError("edge " + pair_str(e.u, e.v) + " has color " + std::to_string(c) +
                       " outside [1, " + std::to_string(r_) + "]");
    }
  }
}

ColoredGraph ColoredGraph::uncolored(Graph graph) {
  std::vector<Color> colors(graph.edge_count(), kUncolored);
  return ColoredGraph(std::move(graph), std::move(colors), 0);
}

Color ColoredGraph::color(Vertex a, Vertex b) const {
  auto idx = graph_.edge_index(a, b);
  if (!idx) throw InputError("edge " + pair_str(a, b) + " is not in the graph");
  return colors_[*idx];
}

Graph graph_union(const Graph& g, const EdgeSet& extra) {
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  for (const Edge& e : extra) {
    if (e.u >= g.vertex_count() || e.v >= g.vertex_count()) {
      throw InputError("edge " + pair_str(e.u, e.v) + " has endpoint >= n = " +
                       std::to_string(g.vertex_count()));
    }
    all.push_back(e);
  }
  return Graph::from_pairs(g.vertex_count(), std::move(all));
}

std::size_t complement_size(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n * (n - (n > 0 ? 1 : 0)) / 2 - g.edge_count();
}

EdgeSet complement_pairs(const Graph& g) {
  std::vector<Edge> out;
  out.reserve(complement_size(g));
  const auto n = static_cast<Vertex>(g.vertex_count());
  for (Vertex u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
        continue;
      }
      out.push_back({u, v});
    }
  }
  return EdgeSet(std::move(out));
}

bool is_rainbow(const ColoredGraph& cg, std::span<const Edge> edges) {
  std::vector<Color> seen;
  seen.reserve(edges.size());
  for (const Edge& e : edges) seen.push_back(cg.color(e));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

ColoredGraph restrict_to(const ColoredGraph& cg, std::span<const Edge> edges) {
  Graph sub(cg.graph().vertex_count(), edges);
  std::vector<Color> colors;
  colors.reserve(sub.edge_count());
  for (const Edge& e : sub.edges()) colors.push_back(cg.color(e));
  return ColoredGraph(std::move(sub), std::move(colors), cg.palette_size());
}

}  // namespace rpg
