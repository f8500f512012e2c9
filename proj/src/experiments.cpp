#include "rpg/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "rpg/constants.hpp"
#include "rpg/errors.hpp"
#include "rpg/hamiltonicity.hpp"
#include "rpg/rainbow_connectivity.hpp"

namespace rpg {

namespace {

constexpr std::string_view kPropertyNames[] = {"hamiltonian", "rainbow_hamiltonian", "rainbow_pack_t",
                                               "rainbow_connected", "expansion_ok"};
constexpr std::string_view kSweepNames[] = {"m", "r", "n"};

std::uint64_t pair_key(const Edge& e) { return (std::uint64_t{e.u} << 32) | e.v; }

}  // namespace

std::string_view to_string(Property p) { return kPropertyNames[static_cast<int>(p)]; }

Property parse_property(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kPropertyNames); ++i) {
    if (kPropertyNames[i] == name) return static_cast<Property>(i);
  }
  throw InputError("unknown property '" + std::string(name) + "'");
}

std::string_view to_string(SweepVar v) { return kSweepNames[static_cast<int>(v)]; }

SweepVar parse_sweep_var(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kSweepNames); ++i) {
    if (kSweepNames[i] == name) return static_cast<SweepVar>(i);
  }
  throw InputError("unknown sweep variable '" + std::string(name) + "' (expected m, r or n)");
}

BoosterInstance uniform_booster_instance(const Graph& host, std::size_t q1, std::size_t q2,
                                         Seed seed, std::size_t k, double split_probability) {
  auto split = split_host(host, split_probability, derive_seed(seed, "split"));
  Graph base = k_out_capped(split.h_prime, k, derive_seed(seed, "kout"));
  const std::size_t room = complement_size(split.h_prime);
  q1 = std::min(q1, room);
  q2 = std::min(q2, room - q1);
  EdgeSet q = perturb(split.h_prime, q1 + q2, derive_seed(seed, "boosters"));
  return {std::move(split.h_prime), std::move(base), q.slice(0, q1), q.slice(q1, q2)};
}

BoosterInstance pooled_booster_instance(const Graph& host, const EdgeSet& random_edges,
                                        double q1_share, Seed seed, std::size_t k,
                                        double split_probability) {
  if (!(q1_share >= 0.0 && q1_share <= 1.0)) throw InputError("Q1 share must lie in [0, 1]");
  auto split = split_host(host, split_probability, derive_seed(seed, "split"));
  Graph base = k_out_capped(split.h_prime, k, derive_seed(seed, "kout"));

  std::unordered_set<std::uint64_t> taken;
  for (const Edge& e : base.edges()) taken.insert(pair_key(e));
  std::vector<Edge> pool;
  pool.reserve(split.h_double_prime.edge_count() + random_edges.size());
  for (const Edge& e : split.h_double_prime.edges()) {
    if (taken.insert(pair_key(e)).second) pool.push_back(e);
  }
  for (const Edge& e : random_edges) {
    if (taken.insert(pair_key(e)).second) pool.push_back(e);
  }
  Rng rng(derive_seed(seed, "pool"));
  std::shuffle(pool.begin(), pool.end(), rng);

  const auto q1 = std::min(pool.size(), static_cast<std::size_t>(
                                            std::ceil(q1_share * static_cast<double>(pool.size()) - 1e-9)));
  EdgeSet all(std::move(pool));
  return {std::move(split.h_prime), std::move(base), all.slice(0, q1), all.slice(q1, all.size() - q1)};
}

void ExperimentPlan::validate() const {
  if (values.empty()) throw InputError("experiment plan needs at least one sweep value");
  if (trials == 0) throw InputError("experiment plan needs trials >= 1");
  if (threads == 0) throw InputError("threads must be >= 1");
  for (std::size_t i = 0; i < values.size(); ++i) point_at(*this, i).host.validate();
}

ExperimentPoint point_at(const ExperimentPlan& plan, std::size_t index) {
  ExperimentPoint p{plan.host, plan.m, plan.r};
  const std::size_t v = plan.values.at(index);
  switch (plan.sweep) {
    case SweepVar::m: p.m = v; break;
    case SweepVar::r: p.r = static_cast<Color>(v); break;
    case SweepVar::n: p.host.n = v; break;
  }
  return p;
}

bool run_trial(const ExperimentPlan& plan, const ExperimentPoint& point, Seed trial_seed) {
  const std::size_t n = point.host.n;
  Graph host = gen_host(point.host, derive_seed(trial_seed, "host"));
  const std::size_t room = complement_size(host);
  if (point.m > room) {
    throw InputError("m = " + std::to_string(point.m) + " exceeds the " + std::to_string(room) +
                     " non-edges of the host");
  }
  EdgeSet random_edges = perturb(host, point.m, derive_seed(trial_seed, "perturb"));

  switch (plan.property) {
    case Property::rainbow_connected: {
      ColoredGraph cg = color_uniform(graph_union(host, random_edges), point.r,
                                      derive_seed(trial_seed, "color"));
      return is_rainbow_connected(cg).connected;
    }
    case Property::hamiltonian:
    case Property::expansion_ok: {
      const double share = plan.pack.q1_fraction.value_or(q1_fraction(point.host.delta));
      auto inst = pooled_booster_instance(host, random_edges, share, derive_seed(trial_seed, "boosters"),
                                          plan.pack.k, plan.pack.split_probability);
      if (plan.property == Property::hamiltonian) {
        auto res = find_hamilton(inst.base, inst.q1, inst.q2, plan.pack.solver);
        if (!res.found()) return false;
        Graph certifying = graph_union(graph_union(inst.base, inst.q1), inst.q2);
        if (verify_hamilton_cycle(res.cycle(), certifying) != CycleDefect::none) {
          throw InternalError("solver returned an invalid Hamilton cycle");
        }
        return true;
      }
      return check_expansion(graph_union(inst.base, inst.q1), plan.expansion,
                             derive_seed(trial_seed, "expansion"))
          .ok();
    }
    case Property::rainbow_hamiltonian:
    case Property::rainbow_pack_t: {
      if (point.r == 0) throw InputError("rainbow properties need r >= 1");
      Graph g = graph_union(host, random_edges);
      ColoredGraph cg = color_uniform(g, point.r, derive_seed(trial_seed, "color"));
      const std::size_t t = plan.property == Property::rainbow_hamiltonian
                                ? 1
                                : (plan.t != 0 ? plan.t : cycle_count_t(n, point.host.delta));
      auto params = PerturbConfig::make(n, point.host.delta, point.m, point.r, trial_seed, room);
      return pack_rainbow_hamilton(cg, host, t, params, derive_seed(trial_seed, "pack"), plan.pack)
          .complete();
    }
  }
  throw InternalError("unhandled property");
}

std::vector<ExperimentRecord> run_plan(const ExperimentPlan& plan) {
  plan.validate();
  const std::size_t points = plan.values.size();
  const std::size_t jobs = points * plan.trials;

  struct Outcome {
    bool success = false;
    double ms = 0.0;
    std::optional<std::string> skip;
  };
  std::vector<Outcome> outcomes(jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t job; (job = next.fetch_add(1)) < jobs;) {
      const std::size_t pi = job / plan.trials;
      const std::size_t ti = job % plan.trials;
      const Seed seed = derive_seed(plan.master_seed, pi, ti, "trial");
      auto start = std::chrono::steady_clock::now();
      try {
        outcomes[job].success = run_trial(plan, point_at(plan, pi), seed);
      } catch (const InputError& e) {
        outcomes[job].skip = e.what();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
      outcomes[job].ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(plan.threads, jobs));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRecord> records;
  records.reserve(points);
  for (std::size_t pi = 0; pi < points; ++pi) {
    ExperimentRecord rec;
    rec.property = plan.property;
    rec.point = point_at(plan, pi);
    rec.seed = plan.master_seed;
    rec.trials = plan.trials;
    double total = 0.0;
    for (std::size_t ti = 0; ti < plan.trials; ++ti) {
      const Outcome& o = outcomes[pi * plan.trials + ti];
      rec.trial_seeds.push_back(derive_seed(plan.master_seed, pi, ti, "trial"));
      total += o.ms;
      if (o.skip && !rec.skipped) {
        rec.skipped = true;
        rec.reason = *o.skip;
      }
      rec.successes += o.success ? 1 : 0;
    }
    if (rec.skipped) rec.successes = 0;
    rec.mean_ms = total / static_cast<double>(plan.trials);
    records.push_back(std::move(rec));
  }
  return records;
}

std::string emit_csv(std::span<const ExperimentRecord> records) {
  std::ostringstream out;
  out << "property,host_kind,n,delta,m,r,trials,successes,fraction,mean_ms,seed,status\n";
  char buf[64];
  for (const auto& rec : records) {
    out << to_string(rec.property) << ',' << to_string(rec.point.host.kind) << ',' << rec.point.host.n
        << ',';
    std::snprintf(buf, sizeof buf, "%g", rec.point.host.delta);
    out << buf << ',' << rec.point.m << ',' << rec.point.r << ',' << rec.trials << ',' << rec.successes
        << ',';
    std::snprintf(buf, sizeof buf, "%.4f", rec.fraction());
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.3f", rec.mean_ms);
    out << buf << ',' << rec.seed << ',';
    if (rec.skipped) {
      std::string reason = rec.reason;
      std::replace(reason.begin(), reason.end(), ',', ';');
      std::replace(reason.begin(), reason.end(), '\n', ' ');
      out << "skipped: " << reason;
    } else {
      out << "ok";
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
  T value{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw InputError("plan line " + std::to_string(line) + ": bad value '" + std::string(text) +
                     "' for " + std::string(key));
  }
  return value;
}

}  // namespace

ExperimentPlan parse_plan(std::istream& in) {
  ExperimentPlan plan;
  std::string raw;
  bool have_values = false;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("plan line " + std::to_string(line) + ": expected key=value");
    }
    const std::string key(trim(text.substr(0, eq)));
    const std::string_view value = trim(text.substr(eq + 1));
    auto size = [&] { return parse_number<std::size_t>(value, line, key); };
    auto real = [&] { return parse_number<double>(value, line, key); };

    if (key == "property") {
      plan.property = parse_property(value);
    } else if (key == "host") {
      plan.host.kind = parse_host_kind(value);
    } else if (key == "n") {
      plan.host.n = size();
    } else if (key == "delta") {
      plan.host.delta = real();
    } else if (key == "blob_edge_prob") {
      plan.host.blob_edge_prob = real();
    } else if (key == "m") {
      plan.m = size();
    } else if (key == "r") {
      plan.r = static_cast<Color>(size());
    } else if (key == "trials") {
      plan.trials = size();
    } else if (key == "seed") {
      plan.master_seed = parse_number<Seed>(value, line, key);
    } else if (key == "threads") {
      plan.threads = static_cast<unsigned>(size());
    } else if (key == "sweep") {
      plan.sweep = parse_sweep_var(value);
    } else if (key == "values") {
      plan.values.clear();
      std::string_view rest = value;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        plan.values.push_back(parse_number<std::size_t>(trim(rest.substr(0, comma)), line, key));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
      have_values = true;
    } else if (key == "t") {
      plan.t = size();
    } else if (key == "k") {
      plan.pack.k = size();
    } else if (key == "split_p") {
      plan.pack.split_probability = real();
    } else if (key == "chunk") {
      plan.pack.chunk = size();
    } else if (key == "target") {
      plan.pack.target = size();
    } else if (key == "q1_frac") {
      plan.pack.q1_fraction = real();
    } else if (key == "rotation_budget") {
      plan.pack.solver.rotation_budget = size();
    } else if (key == "small_cap") {
      plan.expansion.small_cap = size();
    } else if (key == "samples") {
      plan.expansion.samples = size();
    } else if (key == "max_fraction") {
      plan.expansion.max_fraction = real();
    } else {
      throw InputError("plan line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
  }
  if (!have_values) {
    // A plan without a sweep is a single point at the fixed value.
    switch (plan.sweep) {
      case SweepVar::m: plan.values = {plan.m}; break;
      case SweepVar::r: plan.values = {plan.r}; break;
      case SweepVar::n: plan.values = {plan.host.n}; break;
    }
  }
  plan.validate();
  return plan;
}

}  // namespace rpg
