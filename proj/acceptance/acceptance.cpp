// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "symcut/brute.hpp"
#include "symcut/graph.hpp"
#include "symcut/hypergraph.hpp"
#include "symcut/instance_io.hpp"
#include "symcut/optimal_set.hpp"
#include "symcut/round_checks.hpp"
#include "symcut/set_function.hpp"
#include "symcut/threshold_queue.hpp"

#ifndef SYMCUT_CLI_PATH
#error "SYMCUT_CLI_PATH must point at the symcut executable"
#endif

namespace {

using namespace symcut;
using I = std::int64_t;
using V = Value<I>;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct NamedConfig {
  std::string name;
  MinimizeConfig config;
};

std::vector<NamedConfig> laxback_configs() {
  std::vector<NamedConfig> out;
  const std::array<std::pair<const char*, std::pair<OrderBuilder, QueueKind>>, 3> builders{{
      {"scan", {OrderBuilder::scan, QueueKind::heap}},
      {"queue-heap", {OrderBuilder::queue, QueueKind::heap}},
      {"queue-bucket", {OrderBuilder::queue, QueueKind::bucket}},
  }};
  for (const auto& [name, bq] : builders) {
    for (auto init : {InitThreshold::infinity, InitThreshold::min_singleton}) {
      MinimizeConfig c;
      c.order_builder = bq.first;
      c.queue_kind = bq.second;
      c.init_threshold = init;
      out.push_back({std::string(name) + (init == InitThreshold::infinity ? "/inf" : "/min-singleton"), c});
    }
  }
  return out;
}

std::vector<NamedConfig> maxback_configs() {
  std::vector<NamedConfig> out;
  for (auto b : {OrderBuilder::scan, OrderBuilder::queue}) {
    MinimizeConfig c;
    c.algorithm = Algorithm::maxback;
    c.order_builder = b;
    out.push_back({b == OrderBuilder::scan ? "maxback/scan" : "maxback/queue", c});
  }
  return out;
}

std::string instance_label(std::size_t i, const GraphGenParams& p) {
  return "instance " + std::to_string(i) + " (n=" + std::to_string(p.n) + ", seed=" + std::to_string(p.seed) + ")";
}

// Criteria 1, 2, 4 and 5 share one pass over the corpus.
struct CorpusPass {
  Outcome oracle_equivalence;
  Outcome baseline_equivalence;
  Outcome round_properties;
  Outcome call_bound;
  std::size_t instances = 0;
  std::size_t runs = 0;
  std::size_t property_checks = 0;
  std::size_t scan_rounds = 0;
};

CorpusPass run_corpus() {
  CorpusPass pass;
  const CorpusParams corpus;
  const auto lax = laxback_configs();
  const auto maxback = maxback_configs();
  for (std::size_t i = 0; i < corpus.count; ++i) {
    const auto params = corpus_instance(corpus, i);
    const GraphCutOracle<I> d(gen_random_graph(params));
    const std::size_t n = params.n;
    const auto truth = brute_min_bipartition(d);
    const std::string label = instance_label(i, params);
    ++pass.instances;

    auto run = [&](const NamedConfig& nc, Outcome& equivalence) {
      RoundChecker<I> checker(d);
      checker.enable_only({RoundProperty::order_validity, RoundProperty::tau_good_last_pair,
                           RoundProperty::pair_lambda_bound, RoundProperty::contraction_safety,
                           RoundProperty::lambda_triangle, RoundProperty::loop_invariant});
      const auto r = optimal_set<I>(d, nc.config, std::ref(checker));
      ++pass.runs;
      if (r.value != truth.best_value) {
        equivalence.fail(label + " " + nc.name + ": lambda " + r.value.str() + " != brute " +
                         truth.best_value.str());
      }
      if (d.eval(r.set, r.set.complement()) != r.value) {
        equivalence.fail(label + " " + nc.name + ": returned set does not achieve lambda");
      }
      const auto& t = checker.tally();
      for (auto c : t.checked) pass.property_checks += c;
      if (!t.ok()) pass.round_properties.fail(label + " " + nc.name + ": " + t.messages.front());
      if (nc.config.order_builder == OrderBuilder::scan) {
        for (std::size_t round = 0; round < r.stats.rounds; ++round) {
          const std::size_t k = r.stats.classes_per_round[round];
          ++pass.scan_rounds;
          if (r.stats.calls_per_round[round] > k * (k - 1) / 2) {
            pass.call_bound.fail(label + " " + nc.name + " round " + std::to_string(round) + ": " +
                                 std::to_string(r.stats.calls_per_round[round]) + " calls on " +
                                 std::to_string(k) + " classes");
          }
        }
      }
      return r;
    };

    for (const auto& nc : lax) run(nc, pass.oracle_equivalence);
    for (const auto& nc : maxback) {
      const auto r = run(nc, pass.baseline_equivalence);
      const bool single_joins =
          std::all_of(r.stats.joins_per_round.begin(), r.stats.joins_per_round.end(), [](auto j) { return j == 1; });
      if (r.stats.rounds != n - 1 || !single_joins) {
        pass.baseline_equivalence.fail(label + " " + nc.name + ": " + std::to_string(r.stats.rounds) +
                                       " rounds, expected " + std::to_string(n - 1) + " single joins");
      }
    }
  }
  return pass;
}

Outcome criterion_thresholded_axioms(std::size_t& checked) {
  Outcome out;
  const CorpusParams corpus;
  std::mt19937_64 rng(2024);
  for (std::size_t i = 0; i < corpus.count; ++i) {
    const auto params = corpus_instance(corpus, i);
    if (params.n > 5) continue;
    const GraphCutOracle<I> d(gen_random_graph(params));
    const I top = d.key_upper_bound().value();
    const std::array<V, 5> taus{V(0), V(top), V::infinity(), V(static_cast<I>(rng() % (top + 1))),
                                brute_min_bipartition(d).best_value};
    for (const V tau : taus) {
      const ThresholdedOracle<I> capped(d, tau);
      const auto m = check_monotone(capped);
      const auto c = check_consistent(capped);
      checked += 2;
      if (!m) out.fail(instance_label(i, params) + " tau=" + tau.str() + " monotone: " + m.witness);
      if (!c) out.fail(instance_label(i, params) + " tau=" + tau.str() + " consistent: " + c.witness);
    }
  }
  return out;
}

Outcome criterion_submodular_path(std::size_t& count) {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 3 + seed % 4;
    const auto f = gen_symmetric_submodular_table(n, 8, seed);
    const auto report = check_symmetric_submodular(f);
    if (!report.symmetric || !report.submodular) {
      out.fail("table seed " + std::to_string(seed) + " is not symmetric submodular: " + report.witness);
      continue;
    }
    const ConnectivityOracle<I> c(f);
    const auto r = optimal_set(c);
    I best = f(1);
    for (Mask a = 1; a < f.full_mask(); ++a) best = std::min(best, f(a));
    const I got = f(static_cast<Mask>(r.set.to_mask()));
    ++count;
    if (got != best) {
      out.fail("table seed " + std::to_string(seed) + ": f(S)=" + std::to_string(got) + " but min f=" +
               std::to_string(best));
    }
  }
  return out;
}

Outcome criterion_hypergraphs(std::size_t& count) {
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 3 + seed % 5;
    const HypergraphCutOracle<I> d(gen_random_hypergraph({n, 2 * n, 4, 9, seed}));
    const auto truth = brute_min_bipartition(d);
    for (auto init : {InitThreshold::infinity, InitThreshold::min_singleton}) {
      MinimizeConfig c;
      c.init_threshold = init;
      const auto r = optimal_set(d, c);
      if (r.value != truth.best_value) {
        out.fail("hypergraph seed " + std::to_string(seed) + ": lambda " + r.value.str() + " != brute " +
                 truth.best_value.str());
      }
    }
    if (n <= 5) {
      if (const auto m = check_monotone(d); !m) out.fail("hypergraph seed " + std::to_string(seed) + ": " + m.witness);
      if (const auto k = check_consistent(d); !k) out.fail("hypergraph seed " + std::to_string(seed) + ": " + k.witness);
    }
    ++count;
  }
  return out;
}

Outcome criterion_queue_differential(std::size_t steps) {
  Outcome out;
  std::mt19937_64 rng(77);
  constexpr I kBound = 40;
  constexpr std::size_t kUniverse = 64;

  std::size_t step = 0;
  while (step < steps && out.ok) {
    const V tau = rng() % 4 == 0 ? V::infinity() : V(static_cast<I>(rng() % (kBound + 10)));
    HeapQueue<I> heap(tau);
    BucketQueue bucket(tau, kBound);
    std::map<ClassIndex, V> model;
    std::vector<ClassIndex> used;

    auto random_key = [&](I lo) {
      // Mostly in range, sometimes above the bound when tau allows it.
      if (!tau.is_positive_infinity() && rng() % 5 == 0) return V(std::max(lo, tau.finite() + static_cast<I>(rng() % 20)));
      return V(lo + static_cast<I>(rng() % (kBound - lo + 1)));
    };

    for (std::size_t epoch_step = 0; epoch_step < 500 && step < steps; ++epoch_step, ++step) {
      const auto where = "step " + std::to_string(step) + " (tau=" + tau.str() + ")";
      const unsigned op = rng() % 3;
      if (op == 0 && model.size() < kUniverse) {
        ClassIndex v = rng() % kUniverse;
        while (model.contains(v)) v = (v + 1) % kUniverse;
        const V key = random_key(0);
        heap.insert(v, key);
        bucket.insert(v, key);
        model[v] = key;
      } else if (op == 1 && !model.empty()) {
        auto it = model.begin();
        std::advance(it, rng() % model.size());
        const I lo = it->second.finite();
        if (lo > kBound) continue;
        const V key = random_key(lo);
        heap.update_key(it->first, key);
        bucket.update_key(it->first, key);
        it->second = key;
      } else if (!model.empty()) {
        V best = V::negative_infinity();
        for (const auto& [v, k] : model) best = max(best, min(tau, k));
        const auto h = heap.del_max();
        const auto b = bucket.del_max();
        if (h != b) {
          out.fail(where + ": heap returned (" + std::to_string(h.first) + "," + h.second.str() + "), bucket (" +
                   std::to_string(b.first) + "," + b.second.str() + ")");
          break;
        }
        if (!model.contains(h.first) || model.at(h.first) != h.second) {
          out.fail(where + ": returned entry not in the queue");
          break;
        }
        if (min(tau, h.second) < best) {
          out.fail(where + ": returned key " + h.second.str() + " below min{tau, max}=" + best.str());
          break;
        }
        model.erase(h.first);
      }
      if (heap.size() != model.size() || bucket.size() != model.size()) {
        out.fail(where + ": size mismatch");
        break;
      }
    }
    if (bucket.levels_scanned() > bucket.cap() + 1 + bucket.level_raises() + bucket.del_max_count()) {
      out.fail("bucket scanned " + std::to_string(bucket.levels_scanned()) + " levels, over its bound");
    }
  }
  return out;
}

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(SYMCUT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return {};
  }
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  status = pclose(pipe);
  return out;
}

Outcome criterion_determinism(std::size_t& compared) {
  Outcome out;
  const auto dir = std::filesystem::temp_directory_path();
  const std::vector<std::pair<std::string, std::string>> files{
      {"graph", "--kind graph --n 12 --p 0.4 --seed 5"},
      {"hypergraph", "--kind hypergraph --n 9 --seed 6"},
      {"table", "--kind table --n 6 --seed 7"},
  };
  const std::vector<std::string> flags{"", "--builder queue", "--builder queue --queue bucket",
                                       "--algorithm maxback", "--init min-singleton --check", "--first 3"};
  for (const auto& [kind, gen_args] : files) {
    int status = 0;
    const auto text = run_cli("gen " + gen_args, status);
    if (status != 0) {
      out.fail("gen " + gen_args + " exited with " + std::to_string(status));
      continue;
    }
    const auto path = (dir / ("symcut_acceptance_" + kind + ".txt")).string();
    std::ofstream(path) << text;
    for (const auto& f : flags) {
      if (kind != "graph" && f.find("queue") != std::string::npos) continue;
      const std::string args = kind == "table" ? "minimize --table " + path + " --json " + f
                                               : "mincut " + path + (kind == "hypergraph" ? " --format hypergraph" : "") +
                                                     " --json " + f;
      int s1 = 0, s2 = 0;
      const auto a = run_cli(args, s1);
      const auto b = run_cli(args, s2);
      if (s1 != 0 || s2 != 0) {
        out.fail("'" + args + "' exited with " + std::to_string(s1) + "/" + std::to_string(s2) + ": " + a);
        continue;
      }
      auto ja = nlohmann::ordered_json::parse(a, nullptr, false);
      auto jb = nlohmann::ordered_json::parse(b, nullptr, false);
      if (ja.is_discarded() || jb.is_discarded() || !ja.contains("wall_ns")) {
        out.fail("'" + args + "' did not print a JSON report");
        continue;
      }
      ja.erase("wall_ns");
      jb.erase("wall_ns");
      if (ja.dump() != jb.dump()) out.fail("'" + args + "' reports differ");
      ++compared;
    }
  }
  return out;
}

Outcome criterion_round_reduction(std::size_t& instances, std::size_t& strictly_fewer) {
  Outcome out;
  int status = 0;
  const auto csv = run_cli("bench --variants maxback,laxback", status);
  if (status != 0) {
    out.fail("bench exited with " + std::to_string(status));
    return out;
  }
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  if (line != "n,m,variant,rounds,oracle_calls,joins_total,lambda,wall_ns") {
    out.fail("unexpected CSV header '" + line + "'");
    return out;
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(lines, line)) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    if (cols.size() != 8) {
      out.fail("malformed CSV row '" + line + "'");
      return out;
    }
    rows.push_back(std::move(cols));
  }
  if (rows.size() % 2 != 0) {
    out.fail("odd number of CSV rows");
    return out;
  }
  for (std::size_t i = 0; i < rows.size(); i += 2) {
    const auto& mb = rows[i];
    const auto& lb = rows[i + 1];
    if (mb[2] != "maxback" || lb[2] != "laxback") {
      out.fail("unexpected variant order at row " + std::to_string(i + 1));
      return out;
    }
    const auto rounds_mb = std::stoul(mb[3]);
    const auto rounds_lb = std::stoul(lb[3]);
    ++instances;
    if (mb[6] != lb[6]) out.fail("instance " + std::to_string(i / 2) + ": lambda " + mb[6] + " vs " + lb[6]);
    if (rounds_lb > rounds_mb) {
      out.fail("instance " + std::to_string(i / 2) + ": laxback " + lb[3] + " rounds > maxback " + mb[3]);
    }
    if (rounds_lb < rounds_mb) ++strictly_fewer;
  }
  if (instances < CorpusParams{}.count) out.fail("bench reported only " + std::to_string(instances) + " instances");
  if (strictly_fewer == 0) out.fail("laxback never used fewer rounds than maxback");
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int number, const std::string& name, const Outcome& o, const std::string& summary,
                    double seconds) {
    std::ostringstream line;
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << number << " " << name << ": "
         << (o.ok ? summary : o.detail);
    line.precision(2);
    line << std::fixed << " [" << seconds << "s]";
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  };
  using Clock = std::chrono::steady_clock;
  auto seconds_since = [](Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
  };

  auto t = Clock::now();
  const CorpusPass pass = run_corpus();
  const double corpus_seconds = seconds_since(t);
  report(1, "oracle equivalence", pass.oracle_equivalence,
         std::to_string(pass.instances) + " graphs, 6 laxback configurations each, all match brute force",
         corpus_seconds);
  report(2, "maxback baseline", pass.baseline_equivalence,
         "same lambda, n-1 rounds of one join on every instance", 0.0);

  t = Clock::now();
  std::size_t axiom_checks = 0;
  const auto c3 = criterion_thresholded_axioms(axiom_checks);
  report(3, "thresholded oracle axioms", c3,
         std::to_string(axiom_checks) + " exhaustive monotone/consistent checks", seconds_since(t));

  report(4, "round properties", pass.round_properties,
         std::to_string(pass.property_checks) + " property checks over " + std::to_string(pass.runs) +
             " runs, zero violations",
         0.0);
  report(5, "scan call bound", pass.call_bound,
         std::to_string(pass.scan_rounds) + " scan-built orders within k(k-1)/2 calls", 0.0);

  t = Clock::now();
  std::size_t tables = 0;
  const auto c6 = criterion_submodular_path(tables);
  report(6, "symmetric submodular minimization", c6,
         std::to_string(tables) + " tables minimized exactly", seconds_since(t));

  t = Clock::now();
  std::size_t hypergraphs = 0;
  const auto c7 = criterion_hypergraphs(hypergraphs);
  report(7, "hypergraph cuts", c7, std::to_string(hypergraphs) + " hypergraphs match brute force",
         seconds_since(t));

  t = Clock::now();
  constexpr std::size_t kSteps = 10000;
  const auto c8 = criterion_queue_differential(kSteps);
  report(8, "queue contract", c8, std::to_string(kSteps) + " differential steps, heap and bucket agree",
         seconds_since(t));

  t = Clock::now();
  std::size_t compared = 0;
  const auto c9 = criterion_determinism(compared);
  report(9, "determinism", c9, std::to_string(compared) + " repeated CLI invocations byte-identical",
         seconds_since(t));

  t = Clock::now();
  std::size_t bench_instances = 0, fewer = 0;
  const auto c10 = criterion_round_reduction(bench_instances, fewer);
  report(10, "round reduction", c10,
         "laxback <= maxback rounds on all " + std::to_string(bench_instances) + " instances, fewer on " +
             std::to_string(fewer),
         seconds_since(t));

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
