#include <algorithm>
#include <string>

#include "rpg/errors.hpp"
#include "rpg/expansion.hpp"
#include "rpg/hamiltonicity.hpp"

namespace rpg {

std::vector<Edge> cycle_edges(const HamiltonCycle& cycle) {
  std::vector<Edge> out;
  const auto& c = cycle.order;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(Edge::of(c[i], c[(i + 1) % c.size()]));
  return out;
}

HamiltonCycle normalized(HamiltonCycle cycle) {
  auto& c = cycle.order;
  if (c.size() < 3) return cycle;
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
  return cycle;
}

const char* to_string(CycleDefect d) {
  switch (d) {
    case CycleDefect::none: return "ok";
    case CycleDefect::wrong_length: return "wrong length";
    case CycleDefect::vertex_out_of_range: return "vertex out of range";
    case CycleDefect::repeated_vertex: return "repeated vertex";
    case CycleDefect::missing_edge: return "missing edge";
    case CycleDefect::repeated_color: return "repeated color";
  }
  return "?";
}

CycleDefect verify_hamilton_cycle(const HamiltonCycle& cycle, const Graph& certifying) {
  const std::size_t n = certifying.vertex_count();
  if (n < 3 || cycle.order.size() != n) return CycleDefect::wrong_length;
  std::vector<bool> seen(n, false);
  for (Vertex v : cycle.order) {
    if (v >= n) return CycleDefect::vertex_out_of_range;
    if (seen[v]) return CycleDefect::repeated_vertex;
    seen[v] = true;
  }
  for (const Edge& e : cycle_edges(cycle)) {
    if (!certifying.has_edge(e.u, e.v)) return CycleDefect::missing_edge;
  }
  return CycleDefect::none;
}

CycleDefect verify_rainbow_cycle(const HamiltonCycle& cycle, const ColoredGraph& cg) {
  if (auto d = verify_hamilton_cycle(cycle, cg.graph()); d != CycleDefect::none) return d;
  return is_rainbow(cg, cycle_edges(cycle)) ? CycleDefect::none : CycleDefect::repeated_color;
}

RotationState::RotationState(const Graph& base)
    : n_(base.vertex_count()), base_(base), adj_(n_), bits_(base.adjacency_bits()) {
  for (Vertex v = 0; v < n_; ++v) adj_[v].assign(base.neighbors(v).begin(), base.neighbors(v).end());
}

Graph RotationState::working_graph() const {
  std::vector<Edge> all(base_.edges().begin(), base_.edges().end());
  all.insert(all.end(), added_.begin(), added_.end());
  return Graph(n_, all);
}

void RotationState::add_edge(Vertex a, Vertex b) {
  bits_.set(a, b);
  bits_.set(b, a);
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  added_.push_back(Edge::of(a, b));
}

namespace detail {

using Path = std::vector<Vertex>;

constexpr std::size_t kUnlimited = static_cast<std::size_t>(-1);

/// What a closure found: a path to extend by one vertex, or a path whose
/// endpoints are adjacent.
struct Action {
  enum Kind { extend, cycle } kind;
  Path path;  // for extend, already includes the new vertex
};

/// Endpoints reachable by rotations with path.front() fixed, in BFS order,
/// with one witness path each.
struct Closure {
  std::vector<Vertex> ends;
  std::vector<Path> paths;
  std::vector<std::int32_t> index;   // vertex -> position in ends, or -1
  std::vector<std::int32_t> parent;  // per end: end it was rotated from, -1 at the root
  std::vector<Vertex> pivot;         // per end: interior vertex of that rotation
  Bitset end_bits;
};

/// Second-level family END(z; P(x, z)) kept as a rotation tree so any member's
/// path can be replayed later; replay stays valid because edges are only added.
struct RotationTree {
  std::vector<std::int32_t> index;
  std::vector<std::int32_t> parent;
  std::vector<Vertex> pivot;

  bool contains(Vertex v) const { return index[v] >= 0; }
};

class PosaSearch {
 public:
  PosaSearch(RotationState& st, const SolverOptions& opts)
      : st_(st), n_(st.n_), budget_(opts.rotation_budget ? opts.rotation_budget : n_ * n_),
        check_posa_(opts.check_posa_bound), on_path_(n_) {}

  HamiltonResult run(std::span<const Edge> boosters) {
    HamiltonResult res;
    if (n_ < 3) return give_up(res);
    const auto labels = component_labels(st_.working_graph());
    for (Vertex v = 1; v < n_; ++v) {
      if (labels[v] != labels[0]) {
        std::size_t comps = 0;
        for (Vertex w = 0; w < n_; ++w) comps += labels[w] == w;
        Exhausted ex{st_.path_.size(), st_.consumed_, DisconnectionCertificate{0, v, comps}};
        res.outcome = ex;
        res.stats = stats_;
        return res;
      }
    }
    if (st_.path_.empty()) st_.path_ = {0};
    set_path(std::move(st_.path_));

    std::size_t next = 0;
    for (;;) {
      greedy_extend();
      // A full-length path whose ends touch is done without any rotation.
      if (path().size() == n_ && st_.has_edge(path().front(), path().back())) {
        return found(res, path());
      }
      Closure first = closure(path(), kUnlimited);
      if (pending_) {
        if (auto done = apply(res)) return *done;
        continue;
      }
      posa_check(first);
      ++stats_.stuck_phases;

      std::vector<std::optional<RotationTree>> second(first.ends.size());
      std::size_t explored = 0;
      explore_second(first, second, explored);
      bool progressed = pending_.has_value();
      while (!progressed && next < boosters.size()) {
        const Edge e = boosters[next++];
        ++st_.consumed_;
        ++stats_.boosters_consumed;
        if (e.u >= n_ || e.v >= n_ || e.u == e.v) {
          throw InputError("booster {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} is not a valid pair on " + std::to_string(n_) + " vertices");
        }
        if (st_.has_edge(e.u, e.v)) continue;
        st_.add_edge(e.u, e.v);
        classify_booster(e, first, second);
        if (pending_) {
          ++stats_.booster_hits;
        } else {
          explore_second(first, second, explored);
        }
        progressed = pending_.has_value();
      }
      if (!progressed) return give_up(res);
      if (auto done = apply(res)) return *done;
    }
  }

 private:
  const Path& path() const { return st_.path_; }

  void set_path(Path p) {
    for (Vertex v : st_.path_) on_path_.reset(v);
    st_.path_ = std::move(p);
    for (Vertex v : st_.path_) on_path_.set(v);
  }

  std::optional<Vertex> off_path_neighbor(Vertex v) const {
    for (Vertex w : st_.adj_[v]) {
      if (!on_path_.test(w)) return w;
    }
    return std::nullopt;
  }

  void extend_tail() {
    while (auto w = off_path_neighbor(st_.path_.back())) {
      on_path_.set(*w);
      st_.path_.push_back(*w);
      ++stats_.extensions;
    }
  }

  void greedy_extend() {
    extend_tail();
    std::reverse(st_.path_.begin(), st_.path_.end());
    extend_tail();
  }

  // Breadth-first rotation closure of `start` with start.front() fixed. Stops
  // at the first endpoint that can be extended or closed into a cycle (stored
  // in pending_), or after `limit` new states.
  Closure closure(const Path& start, std::size_t limit) {
    Closure c;
    c.index.assign(n_, -1);
    c.end_bits = Bitset(n_);
    const Vertex head = start.front();
    auto admit = [&](Path p, std::int32_t parent, Vertex pivot) -> bool {
      const Vertex z = p.back();
      c.index[z] = static_cast<std::int32_t>(c.ends.size());
      c.end_bits.set(z);
      c.ends.push_back(z);
      c.parent.push_back(parent);
      c.pivot.push_back(pivot);
      c.paths.push_back(std::move(p));
      const Path& q = c.paths.back();
      if (auto w = off_path_neighbor(z)) {
        Path ext = q;
        ext.push_back(*w);
        pending_ = Action{Action::extend, std::move(ext)};
        return true;
      }
      if (q.size() >= 3 && st_.has_edge(z, head)) {
        pending_ = Action{Action::cycle, q};
        return true;
      }
      return false;
    };

    if (admit(start, -1, 0)) return c;
    std::vector<std::int32_t> qpos(n_, -1);
    for (std::size_t head_idx = 0; head_idx < c.paths.size() && limit > 0; ++head_idx) {
      // Copy: admit() may reallocate c.paths.
      const Path q = c.paths[head_idx];
      const std::size_t len = q.size();
      for (std::size_t i = 0; i < len; ++i) qpos[q[i]] = static_cast<std::int32_t>(i);
      const Vertex y = q.back();
      bool stop = false;
      for (Vertex v : st_.adj_[y]) {
        const std::int32_t j = qpos[v];
        if (j < 0 || static_cast<std::size_t>(j) + 2 >= len) continue;
        const Vertex w = q[static_cast<std::size_t>(j) + 1];
        if (c.index[w] >= 0) continue;
        Path rotated(q.begin(), q.begin() + j + 1);
        rotated.insert(rotated.end(), q.rbegin(), q.rbegin() + static_cast<std::ptrdiff_t>(len - 1 - static_cast<std::size_t>(j)));
        ++stats_.rotations;
        --limit;
        if (admit(std::move(rotated), static_cast<std::int32_t>(head_idx), v) || limit == 0) {
          stop = true;
          break;
        }
      }
      for (Vertex v : q) qpos[v] = -1;
      if (stop) break;
    }
    return c;
  }

  void posa_check(const Closure& c) {
    if (!check_posa_) return;
    ++stats_.posa_checks;
    Bitset nb(n_);
    for (Vertex z : c.ends) simd::or_into(nb.words(), st_.bits_.row(z));
    const std::size_t size = simd::andnot_popcount(nb.words(), c.end_bits.words());
    if (size >= 2 * c.ends.size()) ++stats_.posa_violations;
  }

  Path reversed(const Path& p) const { return Path(p.rbegin(), p.rend()); }

  // Computes END(z; P(x, z)) for further z in BFS order until the budget for
  // this round is used up or an extension/cycle turns up.
  void explore_second(const Closure& first, std::vector<std::optional<RotationTree>>& second,
                      std::size_t& explored) {
    std::size_t budget = budget_;
    while (!pending_ && explored < first.ends.size() && budget > 0) {
      const std::size_t before = stats_.rotations;
      Closure c = closure(reversed(first.paths[explored]), kUnlimited);
      const std::size_t used = stats_.rotations - before + 1;
      budget = used >= budget ? 0 : budget - used;
      if (pending_) return;
      posa_check(c);
      second[explored] = RotationTree{std::move(c.index), std::move(c.parent), std::move(c.pivot)};
      ++explored;
    }
  }

  // Path from z to `to` by replaying the recorded rotations of reversed P(x, z).
  Path rotate_to(const Path& px_z, const RotationTree& tree, Vertex to) const {
    std::vector<Vertex> pivots;
    for (std::int32_t i = tree.index[to]; i >= 0 && tree.parent[static_cast<std::size_t>(i)] >= 0;
         i = tree.parent[static_cast<std::size_t>(i)]) {
      pivots.push_back(tree.pivot[static_cast<std::size_t>(i)]);
    }
    Path p = reversed(px_z);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto j = std::find(p.begin(), p.end(), *it);
      if (j == p.end() || !st_.has_edge(p.back(), *it)) {
        throw InternalError("rotation replay diverged from the recorded tree");
      }
      std::reverse(j + 1, p.end());
    }
    if (p.back() != to) throw InternalError("rotation replay ended at the wrong vertex");
    return p;
  }

  void classify_booster(const Edge& e, const Closure& first,
                        const std::vector<std::optional<RotationTree>>& second) {
    const Vertex head = path().front();
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const bool b_off = !on_path_.test(b);
      if (a == head && b_off) {
        Path p = reversed(path());
        p.push_back(b);
        pending_ = Action{Action::extend, std::move(p)};
        return;
      }
      const std::int32_t ia = first.index[a];
      if (ia >= 0) {
        const Path& pa = first.paths[static_cast<std::size_t>(ia)];
        if (b_off) {
          Path p = pa;
          p.push_back(b);
          pending_ = Action{Action::extend, std::move(p)};
          return;
        }
        if (b == head) {
          pending_ = Action{Action::cycle, pa};
          return;
        }
        const auto& family = second[static_cast<std::size_t>(ia)];
        if (family && family->contains(b)) {
          pending_ = Action{Action::cycle, rotate_to(pa, *family, b)};
          return;
        }
      }
      if (b_off) {
        for (std::size_t z = 0; z < second.size(); ++z) {
          if (second[z] && second[z]->contains(a)) {
            Path p = rotate_to(first.paths[z], *second[z], a);
            p.push_back(b);
            pending_ = Action{Action::extend, std::move(p)};
            return;
          }
        }
      }
    }
  }

  // Applies pending_. Returns the finished result when a Hamilton cycle closes.
  std::optional<HamiltonResult> apply(HamiltonResult& res) {
    Action act = std::move(*pending_);
    pending_.reset();
    if (act.kind == Action::extend) {
      ++stats_.extensions;
      set_path(std::move(act.path));
      return std::nullopt;
    }
    ++stats_.cycle_closures;
    const Path& cyc = act.path;
    if (cyc.size() == n_) return found(res, cyc);
    // Reopen through the lowest cycle vertex with an off-cycle neighbor.
    std::vector<Vertex> order(cyc);
    std::sort(order.begin(), order.end());
    for (Vertex w : order) {
      if (auto u = off_path_neighbor(w)) {
        const auto j = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), w) - cyc.begin());
        Path p{*u};
        for (std::size_t i = 0; i < cyc.size(); ++i) p.push_back(cyc[(j + i) % cyc.size()]);
        ++stats_.absorptions;
        set_path(std::move(p));
        return std::nullopt;
      }
    }
    throw InternalError("cycle has no off-cycle neighbor in a connected graph");
  }

  HamiltonResult& found(HamiltonResult& res, const Path& p) {
    res.outcome = normalized(HamiltonCycle{p});
    res.stats = stats_;
    return res;
  }

  HamiltonResult& give_up(HamiltonResult& res) {
    res.outcome = Exhausted{st_.path_.size(), st_.consumed_, std::nullopt};
    res.stats = stats_;
    return res;
  }

  RotationState& st_;
  std::size_t n_;
  std::size_t budget_;
  bool check_posa_;
  Bitset on_path_;
  std::optional<Action> pending_;
  SolverStats stats_;
};

}  // namespace detail

HamiltonResult rotations_close(RotationState& state, std::span<const Edge> boosters,
                               const SolverOptions& opts) {
  detail::PosaSearch search(state, opts);
  return search.run(boosters);
}

HamiltonResult find_hamilton(const Graph& g, const EdgeSet& q1, const EdgeSet& q2,
                             const SolverOptions& opts) {
  RotationState state(graph_union(g, q1));
  return rotations_close(state, q2.view(), opts);
}

}  // namespace rpg
