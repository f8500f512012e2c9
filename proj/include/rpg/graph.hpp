#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rpg/bitset.hpp"

namespace rpg {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Color value of edges in an uncolored graph (r = 0).
inline constexpr Color kUncolored = 0;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Canonical edge for the unordered pair {a, b}. Does not reject a == b.
  static constexpr Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  constexpr bool touches(Vertex x) const { return u == x || v == x; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Ordered list of distinct undirected pairs. Order is preserved because it is
/// meaningful downstream (booster consumption order, chunking).
class EdgeSet {
 public:
  EdgeSet() = default;
  /// Canonicalizes every pair; throws InputError on a self-loop or duplicate.
  explicit EdgeSet(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  std::span<const Edge> view() const { return edges_; }

  /// Consecutive slice [first, first + count).
  EdgeSet slice(std::size_t first, std::size_t count) const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Edges are kept sorted
/// and adjacency is a CSR layout with ascending neighbor lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Throws InputError on out-of-range endpoints, self-loops or duplicates.
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Like the checked constructor but silently merges duplicate pairs.
  static Graph from_pairs(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
  /// Index into edges() of {a, b}, if present.
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  /// Dense adjacency rows, one bit per vertex.
  BitMatrix adjacency_bits() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<std::uint32_t> adj_edge_;
};

/// Graph plus a total edge coloring. With r >= 1 every color lies in [1, r];
/// with r = 0 the graph is uncolored and every color is kUncolored.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  /// colors[i] is the color of graph.edges()[i].
  ColoredGraph(Graph graph, std::vector<Color> colors, Color r);
  /// Uncolored view of a graph.
  static ColoredGraph uncolored(Graph graph);

  const Graph& graph() const { return graph_; }
  Color palette_size() const { return r_; }
  std::span<const Color> colors() const { return colors_; }

  Color color_of(std::size_t edge_index) const { return colors_[edge_index]; }
  /// Throws InputError if {a, b} is not an edge.
  Color color(Vertex a, Vertex b) const;
  Color color(const Edge& e) const { return color(e.u, e.v); }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  Graph graph_;
  std::vector<Color> colors_;
  Color r_ = 0;
};

/// g with every pair of `extra` added; pairs already in g are ignored.
Graph graph_union(const Graph& g, const EdgeSet& extra);

/// All pairs of distinct vertices that are not edges of g, in lexicographic order.
EdgeSet complement_pairs(const Graph& g);

/// Number of non-edges, n(n-1)/2 - |E|.
std::size_t complement_size(const Graph& g);

/// True iff the listed edges carry pairwise distinct colors. Throws InputError
/// if an edge is absent from cg.
bool is_rainbow(const ColoredGraph& cg, std::span<const Edge> edges);

/// Subgraph of cg's graph containing exactly `edges` (all must be present),
/// keeping their colors.
ColoredGraph restrict_to(const ColoredGraph& cg, std::span<const Edge> edges);

}  // namespace rpg
