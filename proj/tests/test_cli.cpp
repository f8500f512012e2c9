#include <doctest.h>

#include <fstream>
#include <sstream>

#include "rpg/cli.hpp"
#include "rpg/experiments.hpp"
#include "rpg/generators.hpp"
#include "rpg/graph_io.hpp"
#include "rpg/hamiltonicity.hpp"
#include "support/instances.hpp"

using namespace rpg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) { return std::string(RPG_TEST_TMPDIR) + "/cli_" + name; }

void save(const std::string& path, const ColoredGraph& cg) { save_colored_graph(path, cg); }

}  // namespace

TEST_CASE("usage errors exit 2") {
  auto none = invoke({});
  CHECK(none.code == cli::kUsage);
  CHECK(none.err.find("Usage") != std::string::npos);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"gen", "--n"}).code == cli::kUsage);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("infeasible input exits 3") {
  CHECK(invoke({"gen", "--n", "3", "--delta", "0.2"}).code == cli::kInfeasible);
  CHECK(invoke({"rc-check", "--in", tmp("does_not_exist")}).code == cli::kInfeasible);
}

TEST_CASE("rc-check") {
  save(tmp("k3"), ColoredGraph(testing_support::complete_graph(3), {1, 2, 3}, 3));
  auto ok = invoke({"rc-check", "--in", tmp("k3")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out == "rainbow connected\n");

  save(tmp("p5"), ColoredGraph(testing_support::path_graph(6), {1, 2, 3, 4, 1}, 4));
  auto no = invoke({"rc-check", "--in", tmp("p5")});
  CHECK(no.code == cli::kPropertyFalse);
  CHECK(no.out.find("witness 0 5") != std::string::npos);
}

TEST_CASE("generation pipeline matches direct module calls") {
  const HostSpec spec{HostKind::random_dense, 50, 0.3};
  REQUIRE(invoke({"gen", "--n", "50", "--delta", "0.3", "--seed", "4", "--out", tmp("h")}).code == 0);
  const Graph h = gen_host(spec, 4);
  CHECK(load_colored_graph(tmp("h")).graph() == h);

  REQUIRE(invoke({"perturb", "--in", tmp("h"), "--m", "30", "--seed", "5", "--out", tmp("g")}).code == 0);
  const Graph g = graph_union(h, perturb(h, 30, 5));
  CHECK(load_colored_graph(tmp("g")).graph() == g);

  REQUIRE(invoke({"color", "--in", tmp("g"), "--r", "7", "--seed", "6", "--out", tmp("c")}).code == 0);
  CHECK(load_colored_graph(tmp("c")) == color_uniform(g, 7, 6));

  auto only = invoke({"perturb", "--in", tmp("h"), "--m", "30", "--seed", "5", "--only-new"});
  std::istringstream only_in(only.out);
  CHECK(read_graph(only_in).edge_count() == 30);

  REQUIRE(invoke({"split", "--in", tmp("h"), "--seed", "2", "--out", tmp("h1"), "--out2", tmp("h2")}).code == 0);
  const auto parts = split_host(h, kSplitProbability, 2);
  CHECK(load_colored_graph(tmp("h1")).graph() == parts.h_prime);
  CHECK(load_colored_graph(tmp("h2")).graph() == parts.h_double_prime);

  auto kout = invoke({"kout", "--in", tmp("h"), "--k", "3", "--seed", "8"});
  REQUIRE(kout.code == 0);
  std::istringstream kin(kout.out);
  CHECK(read_graph(kin) == k_out(h, 3, 8));
  CHECK(invoke({"kout", "--in", tmp("h1"), "--k", "40"}).code == cli::kInfeasible);
}

TEST_CASE("expansion-check") {
  save(tmp("k10"), ColoredGraph::uncolored(testing_support::complete_graph(10)));
  auto ok = invoke({"expansion-check", "--in", tmp("k10"), "--small-cap", "2", "--samples", "50"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("connected yes") != std::string::npos);
  save(tmp("p10"), ColoredGraph::uncolored(testing_support::path_graph(10)));
  CHECK(invoke({"expansion-check", "--in", tmp("p10"), "--small-cap", "2"}).code == cli::kPropertyFalse);
}

TEST_CASE("ham prints a verified cycle") {
  save(tmp("p4"), ColoredGraph::uncolored(testing_support::path_graph(4)));
  save(tmp("b"), ColoredGraph::uncolored(Graph(4, std::vector<Edge>{{0, 3}})));
  auto r = invoke({"ham", "--in", tmp("p4"), "--boosters", tmp("b"), "--q1-frac", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0 1 2 3\n", 0) == 0);
  CHECK(r.out.find("verified: ok") != std::string::npos);
  CHECK(invoke({"ham", "--in", tmp("p4")}).code == cli::kPropertyFalse);

  REQUIRE(invoke({"gen", "--n", "120", "--delta", "0.3", "--out", tmp("hh")}).code == 0);
  auto host_mode = invoke({"ham", "--in", tmp("hh"), "--m", "500", "--rotation-budget", "5000"});
  CHECK(host_mode.code == 0);
  std::istringstream first_line(host_mode.out);
  std::vector<Vertex> order;
  for (Vertex v; first_line >> v;) order.push_back(v);
  CHECK(order.size() == 120);
  CHECK(invoke({"ham", "--in", tmp("hh"), "--q1-frac", "0.8", "--q2-frac", "0.5"}).code == cli::kInfeasible);
}

TEST_CASE("rainbow-pack") {
  const std::size_t n = 200;
  const Graph h = gen_host({HostKind::random_dense, n, 0.3}, 3);
  const EdgeSet r = perturb(h, 40 * n, 4);
  save(tmp("ph"), ColoredGraph::uncolored(h));
  save(tmp("pg"), color_uniform(graph_union(h, r), 4 * n, 5));
  auto res = invoke({"rainbow-pack", "--in", tmp("pg"), "--host", tmp("ph"), "--t", "2", "--k", "2", "--delta", "0.3",
                  "--chunk", "6000", "--target", "400", "--split-p", "0.2"});
  CHECK(res.code == 0);
  CHECK(res.out.find("verified rainbow Hamilton cycles: 2 of 2") != std::string::npos);
  auto missing = invoke({"rainbow-pack", "--in", tmp("pg")});
  CHECK(missing.code == cli::kUsage);
}

TEST_CASE("experiment") {
  auto flags = invoke({"experiment", "--property", "rainbow_connected", "--n", "30", "--delta", "0.3", "--r", "3",
                    "--sweep", "m", "--values", "0,20", "--trials", "2", "--seed", "3"});
  REQUIRE(flags.code == 0);
  std::istringstream csv(flags.out);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  CHECK(rows == 3);

  {
    std::ofstream plan(tmp("plan"));
    plan << "property=rainbow_connected\nn=30\ndelta=0.3\nr=3\nvalues=0,20\ntrials=2\nseed=3\n";
  }
  auto from_file = invoke({"experiment", "--plan", tmp("plan"), "--threads", "2", "--out", tmp("csv")});
  REQUIRE(from_file.code == 0);
  std::ifstream written(tmp("csv"));
  std::stringstream body;
  body << written.rdbuf();
  // Same plan, different thread count: identical apart from the timing column.
  auto strip = [](const std::string& text) {
    std::string out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
      std::vector<std::string> cols;
      std::stringstream ss(l);
      for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
      cols[9].clear();
      for (auto& c : cols) out += c + ",";
    }
    return out;
  };
  CHECK(strip(body.str()) == strip(flags.out));
}
