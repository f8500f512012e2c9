#pragma once

// Rainbow reachability by dynamic programming over (vertex, color set) states.
//
// From a source u, a state (v, M) is kept when some rainbow u-v walk uses
// exactly the colors M and no proper subset of M already reaches v. Kept
// states are therefore the inclusion-minimal color sets of rainbow u-v paths
// (a minimal walk cannot repeat a vertex, or shortcutting it would use fewer
// colors). Dominated states are dropped: whatever (v, M') can reach, (v, M)
// with M a subset of M' can reach too. Vertex-level reachability is exact.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rpg/bitset.hpp"
#include "rpg/graph.hpp"

namespace rpg {

/// Set of colors drawn from 1..r (r <= kMaxColors); color c is bit c - 1.
class ColorMask {
 public:
  static constexpr Color kMaxColors = 24;

  constexpr ColorMask() = default;
  static constexpr ColorMask from_bits(std::uint32_t bits) {
    ColorMask m;
    m.bits_ = bits;
    return m;
  }

  constexpr bool contains(Color c) const { return c >= 1 && ((bits_ >> (c - 1)) & 1U); }
  constexpr ColorMask with(Color c) const { return from_bits(bits_ | (1U << (c - 1))); }
  constexpr std::uint32_t bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }

  friend constexpr bool operator==(ColorMask, ColorMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct RainbowReach {
  Vertex source = 0;
  Color r = 0;
  Bitset reached;
  /// kept[M] = vertices for which M is a minimal rainbow color set from source.
  std::vector<Bitset> kept;

  bool reaches(Vertex v) const { return reached.test(v); }
  /// Minimal color sets of rainbow source-v paths, ascending by mask value.
  std::vector<ColorMask> minimal_masks(Vertex v) const;
};

/// Throws InputError when r > 24, when the state table would exceed
/// kMaxStateBytes, or when an edge is uncolored while r > 0.
RainbowReach rainbow_reachable(const ColoredGraph& cg, Vertex u);

inline constexpr std::size_t kMaxStateBytes = std::size_t{1} << 30;

/// A rainbow path source..v (vertex sequence), or empty if v is not reached.
/// Uses the smallest minimal mask of v; ties broken by vertex then mask value.
std::vector<Vertex> rainbow_path(const ColoredGraph& cg, const RainbowReach& reach, Vertex v);

struct RainbowVerdict {
  enum class Reason { connected, disconnected, beyond_palette, no_rainbow_path };

  bool connected = true;
  Reason reason = Reason::connected;
  std::optional<std::pair<Vertex, Vertex>> witness;
  /// For beyond_palette: the graph distance of the witness pair (> r).
  std::size_t distance = 0;
};

const char* to_string(RainbowVerdict::Reason reason);

/// Exact decision. Fails fast on disconnection and on pairs at distance > r,
/// since a rainbow path has at most r edges.
RainbowVerdict is_rainbow_connected(const ColoredGraph& cg);

struct HubSet {
  std::vector<Vertex> hubs;            // ascending
  std::vector<Vertex> hub_of;          // per vertex; hubs map to themselves
  std::vector<std::size_t> shared;     // |N(v) n N(hub_of[v])|; 0 for hubs
  double threshold = 0.0;              // delta^2 n / 4
};

/// Greedy maximal set of vertices with pairwise shared neighborhoods below
/// delta^2 n / 4; every other vertex is assigned the hub it shares most with.
/// Throws InputError if min degree < delta n, InternalError if a bound fails.
HubSet build_hub_set(const Graph& h, double delta);

/// Paths u - u0 - v0 - v on four distinct vertices with {u,u0}, {v0,v} in
/// via_host, {u0,v0} in via_random and three distinct colors in cg.
std::size_t count_short_rainbow_paths(const ColoredGraph& cg, Vertex u, Vertex v,
                                      const Graph& via_host, const EdgeSet& via_random);

}  // namespace rpg
