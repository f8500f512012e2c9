#include "rpg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rpg/constants.hpp"
#include "rpg/errors.hpp"
#include "rpg/expansion.hpp"
#include "rpg/experiments.hpp"
#include "rpg/generators.hpp"
#include "rpg/graph_io.hpp"
#include "rpg/hamiltonicity.hpp"
#include "rpg/packing.hpp"
#include "rpg/rainbow_connectivity.hpp"

namespace rpg::cli {

namespace {

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::string in_path;
  std::string out_path;
  Seed seed = kDefaultSeed;
  bool verbose = false;

  ColoredGraph read_colored() const {
    if (in_path.empty() || in_path == "-") return read_colored_graph(std::cin);
    return load_colored_graph(in_path);
  }
  Graph read() const { return read_colored().graph(); }

  /// Writes through `body` to --out or to `out`.
  void emit(const std::function<void(std::ostream&)>& body) const { emit_to(out_path, body); }

  void emit_to(const std::string& path, const std::function<void(std::ostream&)>& body) const {
    if (path.empty() || path == "-") {
      body(out);
      return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot open '" + path + "' for writing");
    body(file);
    if (!file) throw InputError("write to '" + path + "' failed");
  }
};

Graph load_plain(const std::string& path) { return load_colored_graph(path).graph(); }

void print_cycle(std::ostream& os, const HamiltonCycle& c) {
  for (std::size_t i = 0; i < c.order.size(); ++i) os << (i ? " " : "") << c.order[i];
  os << '\n';
}

void print_stats(std::ostream& os, const SolverStats& s) {
  os << "extensions=" << s.extensions << " rotations=" << s.rotations
     << " closures=" << s.cycle_closures << " absorptions=" << s.absorptions
     << " stuck=" << s.stuck_phases << " boosters=" << s.boosters_consumed
     << " booster_hits=" << s.booster_hits << " posa_checks=" << s.posa_checks << '\n';
}

/// Delta for an arbitrary host: its min-degree fraction, kept inside (0, 0.5).
double host_delta(const Graph& host) {
  const double d = static_cast<double>(host.min_degree()) / static_cast<double>(host.vertex_count());
  if (d <= 0.0) throw InputError("host has an isolated vertex; pass --delta explicitly");
  return std::min(d, 0.49);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Randomly perturbed graphs: generation, Hamilton cycles, rainbow connectivity", "rpg"};
  app.require_subcommand(1);
  Io io{out, err, {}, {}};

  auto shared = [&io](CLI::App* sub) {
    sub->add_option("--seed", io.seed, "RNG seed")->default_val(kDefaultSeed);
    sub->add_option("--in", io.in_path, "input graph file (default stdin)");
    sub->add_option("--out", io.out_path, "output file (default stdout)");
    sub->add_flag("-v,--verbose", io.verbose, "print diagnostics to stderr");
  };

  int status = kOk;
  std::function<void()> action;

  // gen
  HostSpec spec;
  std::string kind_name = "random_dense";
  auto* gen = app.add_subcommand("gen", "generate a host graph");
  shared(gen);
  gen->add_option("--kind", kind_name, "random_dense | complete_bipartite | two_blob")->capture_default_str();
  gen->add_option("--n", spec.n, "vertex count")->required();
  gen->add_option("--delta", spec.delta, "minimum-degree fraction")->capture_default_str();
  gen->add_option("--blob-p", spec.blob_edge_prob, "two_blob edge probability")->capture_default_str();
  gen->callback([&] {
    action = [&] {
      spec.kind = parse_host_kind(kind_name);
      Graph g = gen_host(spec, io.seed);
      io.emit([&](std::ostream& os) { write_graph(os, g); });
    };
  });

  // perturb
  std::size_t m = 0;
  bool only_new = false;
  auto* pert = app.add_subcommand("perturb", "add m uniformly random non-edges");
  shared(pert);
  pert->add_option("--m", m, "number of random edges")->required();
  pert->add_flag("--only-new", only_new, "write only the random edges");
  pert->callback([&] {
    action = [&] {
      Graph h = io.read();
      EdgeSet r = perturb(h, m, io.seed);
      Graph g = only_new ? Graph(h.vertex_count(), r.view()) : graph_union(h, r);
      io.emit([&](std::ostream& os) { write_graph(os, g); });
    };
  });

  // color
  Color r = 0;
  auto* color = app.add_subcommand("color", "color every edge uniformly from 1..r");
  shared(color);
  color->add_option("--r", r, "palette size")->required();
  color->callback([&] {
    action = [&] {
      ColoredGraph cg = color_uniform(io.read(), r, io.seed);
      io.emit([&](std::ostream& os) { write_colored_graph(os, cg); });
    };
  });

  // split
  double split_p = kSplitProbability;
  std::string second_path;
  auto* split = app.add_subcommand("split", "split H into H' (probability p) and H''");
  shared(split);
  split->add_option("--p", split_p, "probability an edge goes to H'")->capture_default_str();
  split->add_option("--out2", second_path, "file for H'' (default: appended after H')");
  split->callback([&] {
    action = [&] {
      auto parts = split_host(io.read(), split_p, io.seed);
      if (second_path.empty()) {
        io.emit([&](std::ostream& os) {
          write_graph(os, parts.h_prime);
          write_graph(os, parts.h_double_prime);
        });
      } else {
        io.emit([&](std::ostream& os) { write_graph(os, parts.h_prime); });
        io.emit_to(second_path, [&](std::ostream& os) { write_graph(os, parts.h_double_prime); });
      }
    };
  });

  // kout
  std::size_t k = kOutDegree;
  bool capped = false;
  auto* kout = app.add_subcommand("kout", "k-out random subgraph");
  shared(kout);
  kout->add_option("--k", k, "edges chosen per vertex")->capture_default_str();
  kout->add_flag("--capped", capped, "vertices of degree < k keep all their edges");
  kout->callback([&] {
    action = [&] {
      Graph g = io.read();
      Graph sub = capped ? k_out_capped(g, k, io.seed) : k_out(g, k, io.seed);
      io.emit([&](std::ostream& os) { write_graph(os, sub); });
    };
  });

  // expansion-check
  ExpansionOptions xopts;
  auto* xcheck = app.add_subcommand("expansion-check", "connectivity and |N(S)| >= 2|S| checks");
  shared(xcheck);
  xcheck->add_option("--small-cap", xopts.small_cap, "exhaustive set size bound")->capture_default_str();
  xcheck->add_option("--samples", xopts.samples, "sampled large sets")->capture_default_str();
  xcheck->add_option("--max-fraction", xopts.max_fraction, "largest set size as a fraction of n")
      ->capture_default_str();
  xcheck->callback([&] {
    action = [&] {
      auto rep = check_expansion(io.read(), xopts, io.seed);
      io.emit([&](std::ostream& os) {
        os << "connected " << (rep.connected ? "yes" : "no") << '\n'
           << "small_sets_checked " << rep.small_sets_checked << '\n'
           << "small_set_violations " << rep.small_set_violation_count << '\n'
           << "samples " << rep.samples << '\n'
           << "sampled_violations " << rep.sampled_violation_count << '\n';
        const auto& first = !rep.small_set_violations.empty() ? rep.small_set_violations
                                                              : rep.sampled_violations;
        if (!first.empty()) {
          os << "witness";
          for (Vertex v : first.front().set) os << ' ' << v;
          os << " | N=" << first.front().neighborhood_size << '\n';
        }
      });
      status = rep.ok() ? kOk : kPropertyFalse;
    };
  });

  // ham
  std::string boosters_path;
  std::size_t extra_m = 0;
  std::optional<double> q1_frac, q2_frac;
  SolverOptions solver;
  std::size_t ham_k = kOutDegree;
  auto* ham = app.add_subcommand("ham", "Hamilton cycle by rotation-extension with boosters");
  shared(ham);
  ham->add_option("--boosters", boosters_path,
                  "booster edges (graph file, sequence order); --in is then the base graph");
  ham->add_option("--m", extra_m, "random edges added to H'' before pooling (host mode)");
  ham->add_option("--k", ham_k, "k-out degree taken from H' (host mode)")->capture_default_str();
  ham->add_option("--q1-frac", q1_frac, "share of the booster pool used as Q1");
  ham->add_option("--q2-frac", q2_frac, "share of the booster pool used as Q2 (default: the rest)");
  ham->add_option("--rotation-budget", solver.rotation_budget, "states per booster, 0 = n^2")
      ->capture_default_str();
  ham->callback([&] {
    action = [&] {
      Graph base;
      std::vector<Edge> pool;
      double default_share = 0.0;
      if (!boosters_path.empty()) {
        base = io.read();
        Graph b = load_plain(boosters_path);
        if (b.vertex_count() != base.vertex_count()) throw InputError("booster file has a different n");
        pool.assign(b.edges().begin(), b.edges().end());
        Rng rng(derive_seed(io.seed, "order"));
        std::shuffle(pool.begin(), pool.end(), rng);
      } else {
        Graph host = io.read();
        default_share = q1_fraction(host_delta(host));
        EdgeSet extra = perturb(host, extra_m, derive_seed(io.seed, "perturb"));
        auto inst = pooled_booster_instance(host, extra, 1.0, io.seed, ham_k);
        base = inst.base;
        pool.assign(inst.q1.begin(), inst.q1.end());
      }
      const double total = static_cast<double>(pool.size());
      const double f1 = q1_frac.value_or(default_share);
      const double f2 = q2_frac.value_or(1.0 - f1);
      if (f1 < 0 || f2 < 0 || f1 + f2 > 1.0 + 1e-9) throw InputError("--q1-frac + --q2-frac must lie in [0, 1]");
      const auto n1 = std::min(pool.size(), static_cast<std::size_t>(std::ceil(f1 * total - 1e-9)));
      const auto n2 = std::min(pool.size() - n1, static_cast<std::size_t>(std::floor(f2 * total + 1e-9)));
      EdgeSet all(std::move(pool));
      EdgeSet q1 = all.slice(0, n1), q2 = all.slice(n1, n2);
      auto res = find_hamilton(base, q1, q2, solver);
      if (io.verbose) print_stats(io.err, res.stats);
      if (res.found()) {
        Graph certifying = graph_union(graph_union(base, q1), q2);
        const auto defect = verify_hamilton_cycle(res.cycle(), certifying);
        io.emit([&](std::ostream& os) {
          print_cycle(os, res.cycle());
          os << "# verified: " << to_string(defect) << ", q1=" << q1.size() << " q2=" << q2.size()
             << " boosters_used=" << res.stats.boosters_consumed << '\n';
        });
        if (defect != CycleDefect::none) throw InternalError("solver cycle failed verification");
        status = kOk;
      } else {
        const auto& ex = res.exhausted();
        io.emit([&](std::ostream& os) {
          os << "# no Hamilton cycle found: longest path " << ex.longest_path << " of "
             << base.vertex_count() << ", boosters " << ex.boosters_consumed;
          if (ex.disconnected) {
            os << ", disconnected (" << ex.disconnected->a << " | " << ex.disconnected->b << ")";
          }
          os << '\n';
        });
        status = kPropertyFalse;
      }
    };
  });

  // rainbow-pack
  std::string host_path;
  std::size_t t = 0;
  std::optional<double> delta_opt;
  PackOptions pack;
  auto* rpack = app.add_subcommand("rainbow-pack", "edge-disjoint rainbow Hamilton cycles");
  shared(rpack);
  rpack->add_option("--host", host_path, "host graph H contained in the input")->required();
  rpack->add_option("--t", t, "cycles requested (default from delta)");
  rpack->add_option("--delta", delta_opt, "host min-degree fraction (default from the host)");
  rpack->add_option("--k", pack.k, "k-out degree of the parts")->capture_default_str();
  rpack->add_option("--split-p", pack.split_probability, "probability a host edge goes to H'")
      ->capture_default_str();
  rpack->add_option("--chunk", pack.chunk, "chunk length, 0 = default")->capture_default_str();
  rpack->add_option("--target", pack.target, "booster edges kept per chunk, 0 = default")
      ->capture_default_str();
  rpack->add_option("--q1-frac", pack.q1_fraction, "share of each chunk used as Q1");
  rpack->add_option("--q2-frac", q2_frac, "share used as Q2; must equal 1 - q1-frac");
  rpack->add_option("--rotation-budget", pack.solver.rotation_budget, "states per booster, 0 = n^2")
      ->capture_default_str();
  rpack->callback([&] {
    action = [&] {
      ColoredGraph g = io.read_colored();
      Graph host = load_plain(host_path);
      if (host.vertex_count() != g.graph().vertex_count()) throw InputError("host has a different n");
      const std::size_t n = host.vertex_count();
      const double delta = delta_opt.value_or(host_delta(host));
      if (q2_frac && pack.q1_fraction && std::abs(*q2_frac + *pack.q1_fraction - 1.0) > 1e-9) {
        throw InputError("--q1-frac and --q2-frac must sum to 1 for rainbow-pack");
      }
      if (q2_frac && !pack.q1_fraction) pack.q1_fraction = 1.0 - *q2_frac;
      const std::size_t cycles = t != 0 ? t : cycle_count_t(n, delta);
      const std::size_t extra = g.graph().edge_count() >= host.edge_count()
                                    ? g.graph().edge_count() - host.edge_count()
                                    : 0;
      auto params = PerturbConfig::make(n, delta, extra, g.palette_size(), io.seed, complement_size(host));
      auto packing = pack_rainbow_hamilton(g, host, cycles, params, io.seed, pack);
      io.emit([&](std::ostream& os) {
        for (const auto& c : packing.cycles) print_cycle(os, c);
        os << "# verified rainbow Hamilton cycles: " << packing.cycles.size() << " of "
           << packing.requested << ", pairwise edge-disjoint\n";
        for (const auto& note : packing.notes) os << "# note: " << note << '\n';
      });
      if (io.verbose) {
        for (std::size_t i = 0; i < packing.parts.size(); ++i) {
          const auto& p = packing.parts[i];
          io.err << "part " << i << ": edges=" << p.part_edges << " deficient=" << p.deficient_vertices
                 << " selected=" << p.selected_edges << " q1=" << p.q1_edges << " q2=" << p.q2_edges
                 << " solved=" << p.solved << " longest=" << p.longest_path << '\n';
          print_stats(io.err, p.stats);
        }
      }
      status = packing.complete() ? kOk : kPropertyFalse;
    };
  });

  // rc-check
  auto* rc = app.add_subcommand("rc-check", "exact rainbow connectivity");
  shared(rc);
  rc->callback([&] {
    action = [&] {
      ColoredGraph cg = io.read_colored();
      auto verdict = is_rainbow_connected(cg);
      io.emit([&](std::ostream& os) {
        if (verdict.connected) {
          os << "rainbow connected\n";
          return;
        }
        os << "not rainbow connected: " << to_string(verdict.reason);
        if (verdict.witness) os << " witness " << verdict.witness->first << ' ' << verdict.witness->second;
        if (verdict.reason == RainbowVerdict::Reason::beyond_palette) os << " distance " << verdict.distance;
        os << '\n';
      });
      status = verdict.connected ? kOk : kPropertyFalse;
    };
  });

  // experiment
  std::string plan_path, property_name = "rainbow_connected", sweep_name = "m", host_kind = "random_dense";
  std::vector<std::size_t> values;
  ExperimentPlan plan;
  unsigned threads = 1;
  auto* exp = app.add_subcommand("experiment", "Monte Carlo sweep, CSV output");
  shared(exp);
  exp->add_option("--plan", plan_path, "key=value plan file; other flags are ignored");
  exp->add_option("--property", property_name)->capture_default_str();
  exp->add_option("--host", host_kind)->capture_default_str();
  exp->add_option("--n", plan.host.n);
  exp->add_option("--delta", plan.host.delta)->capture_default_str();
  exp->add_option("--m", plan.m);
  exp->add_option("--r", plan.r);
  exp->add_option("--t", plan.t);
  exp->add_option("--sweep", sweep_name, "m | r | n")->capture_default_str();
  exp->add_option("--values", values, "sweep values")->delimiter(',');
  exp->add_option("--trials", plan.trials)->capture_default_str();
  exp->add_option("--threads", threads, "worker threads (results do not depend on it)")
      ->capture_default_str();
  exp->callback([&] {
    action = [&] {
      if (!plan_path.empty()) {
        std::ifstream file(plan_path);
        if (!file) throw InputError("cannot open plan '" + plan_path + "'");
        plan = parse_plan(file);
        if (exp->count("--seed")) plan.master_seed = io.seed;
      } else {
        plan.property = parse_property(property_name);
        plan.host.kind = parse_host_kind(host_kind);
        plan.sweep = parse_sweep_var(sweep_name);
        plan.master_seed = io.seed;
        plan.values = values;
        if (plan.values.empty()) {
          plan.values = {plan.sweep == SweepVar::m   ? plan.m
                         : plan.sweep == SweepVar::r ? std::size_t{plan.r}
                                                     : plan.host.n};
        }
      }
      if (exp->count("--threads")) plan.threads = threads;
      auto records = run_plan(plan);
      io.emit([&](std::ostream& os) { os << emit_csv(records); });
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (action) action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
  return status;
}

}  // namespace rpg::cli
