#include <doctest.h>

#include <cmath>
#include <set>

#include "rpg/constants.hpp"
#include "rpg/errors.hpp"
#include "rpg/generators.hpp"
#include "rpg/packing.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace rpg;
using namespace testing_support;

namespace {

ColoredGraph all_distinct(const Graph& g) {
  std::vector<Color> c(g.edge_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Color>(i + 1);
  return ColoredGraph(g, c, static_cast<Color>(c.size()));
}

}  // namespace

TEST_CASE("extract_rainbow_parts examples") {
  SUBCASE("rainbow K6, one part of 2-out") {
    auto parts = extract_rainbow_parts(all_distinct(complete_graph(6)), 1, 2, 1);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].graph.min_degree() >= 2);
    CHECK(parts[0].deficient.empty());
    CHECK(parts[0].graph.edge_count() <= 12);
  }
  SUBCASE("t = 0") { CHECK(extract_rainbow_parts(all_distinct(complete_graph(6)), 0, 2, 1).empty()); }
  SUBCASE("a single color allows one edge per part") {
    const Graph k6 = complete_graph(6);
    ColoredGraph mono(k6, std::vector<Color>(k6.edge_count(), 1), 1);
    auto parts = extract_rainbow_parts(mono, 3, 1, 4);
    for (const auto& p : parts) {
      CHECK(p.graph.edge_count() == 1);
      CHECK(p.deficient.size() == 4);
    }
  }
}

TEST_CASE("rainbow parts are disjoint rainbow subgraphs with at most k n edges") {
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const ColoredGraph h = random_colored(40, 0.4, 120, rng);
    const std::size_t t = 1 + trial % 3, k = 1 + trial % 4;
    auto parts = extract_rainbow_parts(h, t, k, static_cast<Seed>(trial));
    REQUIRE(parts.size() == t);
    std::set<Edge> seen;
    for (const auto& p : parts) {
      CHECK(p.graph.edge_count() <= k * 40);
      CHECK(is_rainbow(h, p.graph.edges()));
      std::vector<Color> colors;
      for (const auto& e : p.graph.edges()) {
        CHECK(h.graph().has_edge(e.u, e.v));
        CHECK(seen.insert(e).second);
        colors.push_back(h.color(e));
      }
      std::sort(colors.begin(), colors.end());
      CHECK(colors == p.colors);
      for (Vertex v = 0; v < 40; ++v) {
        const bool deficient = std::find(p.deficient.begin(), p.deficient.end(), v) != p.deficient.end();
        CHECK(deficient == (p.graph.degree(v) < k));
      }
    }
  }
}

TEST_CASE("chunk_and_filter examples") {
  SUBCASE("chunk = target with distinct colors keeps every chunk") {
    const Graph g = complete_graph(6);
    auto chunks = chunk_and_filter(all_distinct(g), 3, 5, 5, {}, 2);
    REQUIRE(chunks.size() == 3);
    std::set<Edge> all;
    for (const auto& c : chunks) {
      CHECK(c.selected.size() == 5);
      CHECK(c.deficiency == 0);
      all.insert(c.selected.begin(), c.selected.end());
    }
    CHECK(all.size() == 15);
  }
  SUBCASE("a monochromatic chunk yields one edge") {
    const Graph g = complete_graph(4);
    ColoredGraph mono(g, std::vector<Color>(6, 7), 7);
    auto chunks = chunk_and_filter(mono, 1, 5, 3, {}, 1);
    CHECK(chunks[0].selected.size() == 1);
    CHECK(chunks[0].deficiency == 2);
  }
  SUBCASE("forbidden colors are avoided") {
    const ColoredGraph g = all_distinct(complete_graph(6));
    const std::vector<std::vector<Color>> forbidden{{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}};
    auto chunks = chunk_and_filter(g, 1, 15, 15, forbidden, 3);
    CHECK(chunks[0].selected.size() == 5);
    for (const auto& e : chunks[0].selected) CHECK(g.color(e) > 10);
  }
  SUBCASE("too few edges") {
    CHECK_THROWS_AS(chunk_and_filter(all_distinct(complete_graph(4)), 2, 4, 1, {}, 1), InputError);
  }
}

TEST_CASE("desk-scale chunks fill their targets") {
  // n = 200, r = 4n, chunk = 10n. Coupon collector: a chunk of L edges over r
  // colors shows r (1 - (1 - 1/r)^L) distinct colors in expectation; the
  // target is set well below that.
  const std::size_t n = 200, chunk = 10 * n;
  const Color r = static_cast<Color>(4 * n);
  const double expected = r * (1.0 - std::pow(1.0 - 1.0 / r, static_cast<double>(chunk)));
  const auto target = static_cast<std::size_t>(0.9 * expected);
  CHECK(target >= 3 * n);
  std::size_t filled = 0;
  const std::size_t trials = 20;
  for (std::size_t i = 0; i < trials; ++i) {
    const Graph g = gen_host({HostKind::random_dense, n, 0.3}, derive_seed(3, 0, i, "host"));
    const ColoredGraph cg = color_uniform(g, r, derive_seed(3, 0, i, "color"));
    auto chunks = chunk_and_filter(cg, 2, chunk, target, {}, derive_seed(3, 0, i, "chunks"));
    bool all = true;
    for (const auto& c : chunks) {
      all &= c.deficiency == 0;
      CHECK(is_rainbow(cg, c.selected.view()));
    }
    filled += all;
  }
  CHECK(filled * 100 >= trials * 95);
}

TEST_CASE("packing at n = 150 with a rich palette gives a verified rainbow cycle") {
  const std::size_t n = 150;
  const double delta = 0.45;
  const Graph host = complete_graph(n);
  const ColoredGraph g = color_uniform(host, static_cast<Color>(100 * n), 5);
  const auto params = PerturbConfig::make(n, delta, 0, g.palette_size(), 5, complement_size(host));
  const auto pk = pack_rainbow_hamilton(g, host, 1, params, 6);
  REQUIRE(pk.complete());
  CHECK(pk.cycles.size() == 1);
  CHECK(oracle::cycle_defect(pk.cycles[0].order, to_oracle(g), true).empty());
  CHECK(pk.cycle_colors[0].size() == n);
}

TEST_CASE("one color cannot support a rainbow Hamilton cycle") {
  const std::size_t n = 12;
  const Graph host = complete_graph(n);
  const ColoredGraph g = color_uniform(host, 1, 1);
  const auto params = PerturbConfig::make(n, 0.4, 0, 1, 1, 0);
  PackOptions opts;
  opts.split_probability = 0.5;
  opts.k = 2;
  const auto pk = pack_rainbow_hamilton(g, host, 1, params, 2, opts);
  CHECK_FALSE(pk.complete());
  CHECK(pk.cycles.empty());
}

TEST_CASE("t = 2 packings are verified and pairwise edge-disjoint") {
  const std::size_t n = 200;
  const double delta = 0.3;
  PackOptions opts;
  opts.k = 2;
  opts.split_probability = 0.2;
  opts.chunk = 30 * n;
  opts.target = 2 * n;
  std::size_t complete = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const Seed s = derive_seed(11, 0, i, "pack");
    const Graph host = gen_host({HostKind::random_dense, n, delta}, derive_seed(s, "host"));
    const EdgeSet r = perturb(host, 40 * n, derive_seed(s, "perturb"));
    const ColoredGraph g = color_uniform(graph_union(host, r), static_cast<Color>(4 * n), derive_seed(s, "color"));
    const auto params = PerturbConfig::make(n, delta, 40 * n, g.palette_size(), s, complement_size(host));
    const auto pk = pack_rainbow_hamilton(g, host, 2, params, s, opts);
    std::set<Edge> used;
    const auto og = to_oracle(g);
    for (std::size_t c = 0; c < pk.cycles.size(); ++c) {
      CHECK(oracle::cycle_defect(pk.cycles[c].order, og, true).empty());
      for (const auto& e : cycle_edges(pk.cycles[c])) CHECK(used.insert(e).second);
      CHECK(pk.cycle_edge_sets[c].size() == n);
    }
    complete += pk.complete();
  }
  CHECK(complete >= 8);
}

TEST_CASE("packing validates its inputs") {
  const Graph host = complete_graph(10);
  const ColoredGraph g = color_uniform(cycle_graph(10), 5, 1);
  const auto params = PerturbConfig::make(10, 0.3, 0, 5, 1, 0);
  CHECK_THROWS_AS(pack_rainbow_hamilton(g, host, 1, params, 1), InputError);
  CHECK(pack_rainbow_hamilton(color_uniform(host, 5, 1), host, 0, params, 1).complete());
}
