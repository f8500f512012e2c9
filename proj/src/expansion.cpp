#include "rpg/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rpg/errors.hpp"
#include "rpg/union_find.hpp"

namespace rpg {
namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double acc = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    acc = acc * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return acc;
}

// |N(S)| for S given by its member list and bitset, using the adjacency rows.
std::size_t neighborhood_size(const BitMatrix& adj, std::span<const Vertex> members,
                              const Bitset& in_set, Bitset& scratch) {
  scratch.clear();
  for (Vertex v : members) simd::or_into(scratch.words(), adj.row(v));
  return simd::andnot_popcount(scratch.words(), in_set.words());
}

void record(std::vector<ExpansionViolation>& list, std::size_t& count, std::size_t cap,
            std::span<const Vertex> members, std::size_t size) {
  ++count;
  if (list.size() < cap) {
    std::vector<Vertex> s(members.begin(), members.end());
    std::sort(s.begin(), s.end());
    list.push_back({std::move(s), size});
  }
}

}  // namespace

std::vector<Vertex> external_neighborhood(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.vertex_count();
  Bitset in_set(n), hit(n);
  for (Vertex v : s) {
    if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    in_set.set(v);
  }
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) hit.set(w);
  }
  simd::andnot_into(hit.words(), in_set.words());
  std::vector<Vertex> out;
  hit.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
  return out;
}

std::vector<Vertex> component_labels(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<Vertex> label(g.vertex_count());
  std::vector<Vertex> smallest(g.vertex_count(), static_cast<Vertex>(-1));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::size_t root = uf.find(v);
    if (smallest[root] == static_cast<Vertex>(-1)) smallest[root] = v;
    label[v] = smallest[root];
  }
  return label;
}

bool is_connected(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  return uf.components() <= 1;
}

ExpansionReport check_expansion(const Graph& g, const ExpansionOptions& opts, Seed seed) {
  if (!(opts.max_fraction > 0.0 && opts.max_fraction <= 1.0)) {
    throw InputError("max_fraction must lie in (0, 1]");
  }
  const std::size_t n = g.vertex_count();
  if (binomial(n, opts.small_cap) > kMaxExhaustiveSets) {
    throw InputError("small_cap " + std::to_string(opts.small_cap) + " needs C(" +
                     std::to_string(n) + ", " + std::to_string(opts.small_cap) +
                     ") > 1e7 subsets; lower it");
  }

  ExpansionReport rep;
  rep.connected = is_connected(g);
  rep.small_cap = opts.small_cap;
  rep.samples = opts.samples;
  rep.large_limit = static_cast<std::size_t>(std::floor(opts.max_fraction * static_cast<double>(n)));

  const BitMatrix adj = g.adjacency_bits();
  const std::size_t cap = std::min(opts.small_cap, rep.large_limit);

  // Exhaustive phase: depth-first over increasing index tuples, carrying the
  // running neighborhood union per depth.
  if (cap > 0 && n > 0) {
    std::vector<Bitset> unions(cap + 1, Bitset(n));
    Bitset in_set(n);
    std::vector<Vertex> members;
    members.reserve(cap);
    auto visit = [&](auto&& self, Vertex start) -> void {
      const std::size_t depth = members.size();
      for (Vertex v = start; v < n; ++v) {
        Bitset& cur = unions[depth + 1];
        std::copy(unions[depth].words().begin(), unions[depth].words().end(), cur.words().begin());
        simd::or_into(cur.words(), adj.row(v));
        members.push_back(v);
        in_set.set(v);
        ++rep.small_sets_checked;
        const std::size_t size = simd::andnot_popcount(cur.words(), in_set.words());
        if (size <= 2 * members.size()) {
          record(rep.small_set_violations, rep.small_set_violation_count, opts.max_recorded,
                 members, size);
        }
        if (members.size() < cap) self(self, v + 1);
        in_set.reset(v);
        members.pop_back();
      }
    };
    visit(visit, 0);
  }

  // Sampled phase: sizes log-uniform on (cap, large_limit].
  if (rep.large_limit > cap && opts.samples > 0) {
    Rng rng(seed);
    const double lo = std::log(static_cast<double>(cap) + 1.0);
    const double hi = std::log(static_cast<double>(rep.large_limit) + 1.0);
    std::uniform_real_distribution<double> log_size(lo, hi);
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    Bitset in_set(n), scratch(n);
    for (std::size_t s = 0; s < opts.samples; ++s) {
      auto size = static_cast<std::size_t>(std::floor(std::exp(log_size(rng))));
      size = std::clamp(size, cap + 1, rep.large_limit);
      for (std::size_t i = 0; i < size; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
      }
      std::span<const Vertex> members(pool.data(), size);
      in_set.clear();
      for (Vertex v : members) in_set.set(v);
      const std::size_t nb = neighborhood_size(adj, members, in_set, scratch);
      if (nb <= 2 * size) {
        record(rep.sampled_violations, rep.sampled_violation_count, opts.max_recorded, members, nb);
      }
    }
  }
  return rep;
}

}  // namespace rpg
