#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symcut/brute.hpp"
#include "symcut/graph.hpp"
#include "symcut/hypergraph.hpp"
#include "symcut/instance_io.hpp"
#include "symcut/optimal_set.hpp"
#include "symcut/round_checks.hpp"
#include "symcut/set_function.hpp"

namespace symcut::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for bad input that maps to the usage exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgorithmFlags {
  std::string algorithm = "laxback";
  std::string builder = "scan";
  std::string queue = "heap";
  std::string init = "inf";
  std::optional<std::size_t> first;  // 1-based
  bool debug_checks = false;

  MinimizeConfig config() const {
    MinimizeConfig c;
    c.algorithm = algorithm == "maxback" ? Algorithm::maxback : Algorithm::laxback;
    c.order_builder = builder == "queue" ? OrderBuilder::queue : OrderBuilder::scan;
    c.queue_kind = queue == "bucket" ? QueueKind::bucket : QueueKind::heap;
    c.init_threshold = init == "min-singleton" ? InitThreshold::min_singleton : InitThreshold::infinity;
    if (first) {
      if (*first == 0) throw UsageError("--first is 1-based");
      c.first_element = *first - 1;
    }
    c.debug_checks = debug_checks;
    return c;
  }
};

struct GenFlags {
  std::size_t n = 8;
  std::size_t min_n = 3;
  double p = 0.5;
  std::int64_t wmax = 10;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t m = 0;  // hyperedges; 0 means 2n
  std::size_t max_pins = 3;
  bool connected = false;
  std::string kind = "graph";
};

void add_algorithm_options(CLI::App* cmd, AlgorithmFlags& f) {
  cmd->add_option("--algorithm", f.algorithm, "Round structure")
      ->check(CLI::IsMember({"laxback", "maxback"}));
  cmd->add_option("--builder", f.builder, "Order builder")->check(CLI::IsMember({"scan", "queue"}));
  cmd->add_option("--queue", f.queue, "Queue used by the queue builder")
      ->check(CLI::IsMember({"heap", "bucket"}));
  cmd->add_option("--init", f.init, "Initial threshold")->check(CLI::IsMember({"inf", "min-singleton"}));
  cmd->add_option("--first", f.first, "Element (1-based) that starts every order");
  cmd->add_flag("--debug-checks", f.debug_checks, "Brute-force invariant checks after every round");
}

void add_gen_options(CLI::App* cmd, GenFlags& f) {
  cmd->add_option("--n", f.n, "Vertex count (upper end of the range with --count > 1)");
  cmd->add_option("--min-n", f.min_n, "Lower end of the vertex range with --count > 1");
  cmd->add_option("--p", f.p, "Edge probability");
  cmd->add_option("--wmax", f.wmax, "Maximum integer weight");
  cmd->add_option("--seed", f.seed, "Random seed");
  cmd->add_option("--count", f.count, "Number of generated instances");
  cmd->add_option("--m", f.m, "Hyperedge count (default 2n)");
  cmd->add_option("--max-pins", f.max_pins, "Maximum pins per hyperedge");
  cmd->add_flag("--connected", f.connected, "Redraw graphs until connected");
}

template <Weight W>
Json value_json(const Value<W>& v) {
  if (v.is_finite()) return v.finite();
  return v.str();
}

Json set_json(const ElementSet& s) {
  Json arr = Json::array();
  for (Element e : s.sorted()) arr.push_back(e + 1);
  return arr;
}

template <Weight W>
Json stats_json(const RunStats<W>& s) {
  return Json{{"rounds", s.rounds},
              {"oracle_calls", s.oracle_calls},
              {"init_calls", s.init_calls},
              {"joins_per_round", s.joins_per_round},
              {"calls_per_round", s.calls_per_round},
              {"classes_per_round", s.classes_per_round},
              {"final_value", value_json(s.final_value)}};
}

Json config_json(const AlgorithmFlags& f) {
  Json j{{"algorithm", f.algorithm}, {"builder", f.builder}, {"queue", f.queue}, {"init", f.init}};
  j["first"] = f.first ? Json(*f.first) : Json(1);
  return j;
}

std::string join_counts(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

/// Negated oracle, -d(S, T). Breaks monotonicity; used as a negative control
/// for `verify`.
template <Weight W>
class NegatedOracle final : public LaxOracle<W> {
 public:
  explicit NegatedOracle(const LaxOracle<W>& inner) : inner_(&inner) {}
  std::size_t ground_size() const override { return inner_->ground_size(); }
  Value<W> eval(const ElementSet& s, const ElementSet& t, Value<W> tau) const override {
    const Value<W> v = inner_->eval(s, t);
    return min(tau, Value<W>(-v.finite()));
  }
  using LaxOracle<W>::eval;

 private:
  const LaxOracle<W>* inner_;
};

struct InstanceSummary {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  WeightMode weights = WeightMode::integer;
  std::string source;
};

Json summary_json(const InstanceSummary& s) {
  return Json{{"kind", s.kind}, {"source", s.source}, {"n", s.n}, {"m", s.m}, {"weights", to_string(s.weights)}};
}

using ExtraFields = std::function<void(const ElementSet&, Json&, std::ostream&)>;

template <Weight W>
int solve_and_report(const LaxOracle<W>& oracle, const InstanceSummary& summary, const AlgorithmFlags& flags,
                     bool check, bool json, std::ostream& out, std::ostream& err,
                     const ExtraFields& extra = {}) {
  const MinimizeConfig config = flags.config();
  if (config.first_element && *config.first_element >= oracle.ground_size()) {
    throw UsageError("--first " + std::to_string(*flags.first) + " outside 1.." +
                     std::to_string(oracle.ground_size()));
  }
  if (oracle.ground_size() < 2) throw UsageError("instance needs at least 2 elements");

  const auto start = std::chrono::steady_clock::now();
  MinimizeResult<W> result = [&] {
    try {
      return optimal_set(oracle, config);
    } catch (const CapabilityError& e) {
      throw UsageError(std::string(e.what()) + " (instance weights: " + to_string(summary.weights) + ")");
    }
  }();
  const auto wall_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();

  int code = kExitOk;
  Json check_json;
  std::string check_line;
  if (check) {
    if (oracle.ground_size() <= kMaxBruteElements) {
      const auto truth = brute_min_bipartition(oracle);
      const bool ok = values_match(truth.best_value, result.value);
      check_json = Json{{"brute_lambda", value_json(truth.best_value)}, {"ok", ok}};
      check_line = std::string("check: ") + (ok ? "ok" : "MISMATCH") + " brute_lambda=" + truth.best_value.str();
      if (!ok) code = kExitVerificationFailed;
    } else {
      check_json = Json{{"skipped", "n exceeds " + std::to_string(kMaxBruteElements)}};
      check_line = "check: skipped (n > " + std::to_string(kMaxBruteElements) + ")";
    }
  }

  if (json) {
    Json report{{"instance", summary_json(summary)},
                {"config", config_json(flags)},
                {"S", set_json(result.set)},
                {"lambda", value_json(result.value)}};
    std::ostringstream ignored;
    if (extra) extra(result.set, report, ignored);
    report["stats"] = stats_json(result.stats);
    if (check) report["check"] = check_json;
    report["wall_ns"] = wall_ns;
    out << report.dump() << '\n';
  } else {
    out << "lambda=" << result.value << " S=" << result.set.str(1);
    Json unused;
    if (extra) extra(result.set, unused, out);
    out << '\n';
    const auto& s = result.stats;
    out << "rounds=" << s.rounds << " oracle_calls=" << s.oracle_calls << " init_calls=" << s.init_calls
        << " joins_per_round=" << join_counts(s.joins_per_round) << " final_value=" << s.final_value
        << " wall_ns=" << wall_ns << '\n';
    if (check) out << check_line << '\n';
  }
  if (code != kExitOk) err << "verification failed: result differs from brute force\n";
  return code;
}

template <class Fn>
auto with_file(const std::string& path, Fn&& fn) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// verify

struct CheckCounter {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

class VerifyTally {
 public:
  void record(const std::string& name, bool ok, const std::string& detail) {
    auto& c = counters_[name];
    ++c.checked;
    if (!ok && c.failed++ == 0) c.first_failure = detail;
  }

  void skip(const std::string& name, const std::string& why) { skipped_.emplace(name, why); }

  void merge(const PropertyTally& t) {
    for (std::size_t i = 0; i < kRoundPropertyCount; ++i) {
      auto& c = counters_[to_string(static_cast<RoundProperty>(i))];
      c.checked += t.checked[i];
      if (t.violations[i] > 0 && c.failed == 0) {
        const std::string prefix = to_string(static_cast<RoundProperty>(i));
        for (const auto& m : t.messages) {
          if (m.rfind(prefix, 0) == 0) {
            c.first_failure = m;
            break;
          }
        }
      }
      c.failed += t.violations[i];
    }
  }

  bool ok() const {
    for (const auto& [name, c] : counters_) {
      if (c.failed > 0) return false;
    }
    return true;
  }

  void print(std::ostream& out) const {
    for (const auto& [name, c] : counters_) {
      if (c.failed == 0) {
        out << "PASS " << name << " (" << c.checked << " checks)\n";
      } else {
        out << "FAIL " << name << " (" << c.failed << "/" << c.checked << " failed): " << c.first_failure << '\n';
      }
    }
    for (const auto& [name, why] : skipped_) {
      if (!counters_.contains(name)) out << "SKIP " << name << " (" << why << ")\n";
    }
  }

 private:
  std::map<std::string, CheckCounter> counters_;
  std::map<std::string, std::string> skipped_;
};

struct VerifyRun {
  MinimizeConfig config;
  std::string label;
};

template <Weight W>
std::vector<VerifyRun> verify_runs(const LaxOracle<W>& oracle) {
  std::vector<VerifyRun> runs;
  const bool bucket_ok = std::is_integral_v<W> && oracle.key_upper_bound().has_value();
  for (auto builder : {OrderBuilder::scan, OrderBuilder::queue}) {
    if (builder == OrderBuilder::queue && !oracle.keyed()) continue;
    for (auto queue : {QueueKind::heap, QueueKind::bucket}) {
      if (queue == QueueKind::bucket && !bucket_ok) continue;
      for (auto init : {InitThreshold::infinity, InitThreshold::min_singleton}) {
        MinimizeConfig c;
        c.order_builder = builder;
        c.queue_kind = queue;
        c.init_threshold = init;
        runs.push_back({c, std::string("laxback/") + (builder == OrderBuilder::scan ? "scan" : "queue") + "/" +
                               (queue == QueueKind::heap ? "heap" : "bucket") + "/" +
                               (init == InitThreshold::infinity ? "inf" : "min-singleton")});
      }
    }
    MinimizeConfig baseline;
    baseline.algorithm = Algorithm::maxback;
    baseline.order_builder = builder;
    runs.push_back({baseline, std::string("maxback/") + (builder == OrderBuilder::scan ? "scan" : "queue")});
  }
  return runs;
}

template <Weight W>
void verify_instance(const LaxOracle<W>& oracle, const std::string& label, VerifyTally& tally) {
  const std::size_t n = oracle.ground_size();
  if (n < 2 || n > kMaxBruteElements) {
    throw UsageError(label + ": n = " + std::to_string(n) + " outside the verifiable range 2.." +
                     std::to_string(kMaxBruteElements));
  }
  const auto truth = brute_min_bipartition(oracle);

  for (const auto& run : verify_runs(oracle)) {
    const std::string where = label + " " + run.label;
    RoundChecker<W> checker(oracle);
    MinimizeResult<W> result;
    try {
      result = optimal_set<W>(oracle, run.config, std::ref(checker));
    } catch (const std::exception& e) {
      tally.record("run_completes", false, where + ": " + e.what());
      continue;
    }
    tally.record("run_completes", true, "");
    tally.merge(checker.tally());
    tally.record("lambda_matches_brute_force", values_match(result.value, truth.best_value),
                 where + ": lambda=" + result.value.str() + " brute=" + truth.best_value.str());
    const bool nontrivial = !result.set.empty() && result.set.size() < n;
    const Value<W> achieved =
        nontrivial ? oracle.eval(result.set, result.set.complement()) : Value<W>::infinity();
    tally.record("result_set_achieves_lambda", nontrivial && values_match(achieved, result.value),
                 where + ": d(S, V\\S)=" + achieved.str() + " lambda=" + result.value.str());
    const auto& s = result.stats;
    tally.record("joins_total", s.joins_total() == n - 1,
                 where + ": joins=" + std::to_string(s.joins_total()) + " expected " + std::to_string(n - 1));
    if (run.config.order_builder == OrderBuilder::scan) {
      for (std::size_t r = 0; r < s.rounds; ++r) {
        const std::size_t k = s.classes_per_round[r];
        tally.record("scan_call_bound", s.calls_per_round[r] <= k * (k - 1) / 2,
                     where + ": round " + std::to_string(r) + " used " + std::to_string(s.calls_per_round[r]) +
                         " calls on " + std::to_string(k) + " classes");
      }
    }
    if (run.config.algorithm == Algorithm::maxback) {
      bool one_join = true;
      for (auto j : s.joins_per_round) one_join = one_join && j == 1;
      tally.record("maxback_rounds", s.rounds == n - 1 && one_join,
                   where + ": rounds=" + std::to_string(s.rounds));
    }
  }

  if (n <= kMaxAxiomCheckElements) {
    const auto mono = check_monotone(oracle);
    tally.record("monotone", mono.ok, label + ": " + mono.witness);
    const auto cons = check_consistent(oracle);
    tally.record("consistent", cons.ok, label + ": " + cons.witness);
    for (const Value<W> cap : {Value<W>(W{0}), truth.best_value, Value<W>::infinity()}) {
      const ThresholdedOracle<W> capped(oracle, cap);
      const auto m2 = check_monotone(capped);
      tally.record("thresholded_monotone", m2.ok, label + " cap=" + cap.str() + ": " + m2.witness);
      const auto c2 = check_consistent(capped);
      tally.record("thresholded_consistent", c2.ok, label + " cap=" + cap.str() + ": " + c2.witness);
    }
  } else {
    tally.skip("monotone", "n > " + std::to_string(kMaxAxiomCheckElements));
    tally.skip("consistent", "n > " + std::to_string(kMaxAxiomCheckElements));
  }
}

template <Weight W>
void verify_oracle(const LaxOracle<W>& oracle, const std::string& label, bool inject_fault, VerifyTally& tally) {
  if (inject_fault) {
    const NegatedOracle<W> broken(oracle);
    verify_instance<W>(broken, label + " [fault]", tally);
  } else {
    verify_instance<W>(oracle, label, tally);
  }
}

template <Weight W>
void verify_table(const SetFunctionTable<W>& f, const std::string& label, bool inject_fault, VerifyTally& tally) {
  const auto report = check_symmetric_submodular(f);
  tally.record("table_symmetric", report.symmetric, label + ": " + report.witness);
  tally.record("table_submodular", report.submodular, label + ": " + report.witness);
  const ConnectivityOracle<W> oracle(f);
  verify_oracle<W>(oracle, label, inject_fault, tally);
  if (!inject_fault && f.size() >= 2 && report.symmetric) {
    // For symmetric f the minimum bipartition of c_f minimizes f.
    const auto result = optimal_set<W>(oracle);
    W best_f{};
    bool first = true;
    for (Mask a = 1; a < f.full_mask(); ++a) {
      if (first || f(a) < best_f) best_f = f(a);
      first = false;
    }
    const auto got = f(static_cast<Mask>(result.set.to_mask()));
    tally.record("minimizes_symmetric_function", values_match(Value<W>(got), Value<W>(best_f)),
                 label + ": f(S)=" + Value<W>(got).str() + " min f=" + Value<W>(best_f).str());
  }
}

int cmd_verify(const std::string& path, const std::string& format, const GenFlags& gen, bool inject_fault,
               std::ostream& out) {
  VerifyTally tally;
  std::size_t instances = 0;

  if (!path.empty()) {
    with_file(path, [&](const std::string& text) {
      if (format == "hypergraph") {
        std::visit([&](const auto& h) {
          using W = std::decay_t<decltype(h.edges().front().weight)>;
          verify_oracle<W>(HypergraphCutOracle<W>(h), path, inject_fault, tally);
        }, parse_hypergraph(text));
      } else if (format == "table") {
        std::visit([&](const auto& f) { verify_table(f, path, inject_fault, tally); }, parse_function_table(text));
      } else {
        std::visit([&](const auto& g) {
          using W = std::decay_t<decltype(g.edges().front().weight)>;
          verify_oracle<W>(GraphCutOracle<W>(g), path, inject_fault, tally);
        }, parse_graph(text));
      }
      return 0;
    });
    instances = 1;
  } else {
    if (gen.count == 0) throw UsageError("--count must be positive");
    const std::size_t lo = gen.count == 1 ? gen.n : gen.min_n;
    if (lo < 2 || gen.n < lo) throw UsageError("invalid vertex range");
    for (std::size_t i = 0; i < gen.count; ++i) {
      const std::size_t n = lo + i % (gen.n - lo + 1);
      const std::uint64_t seed = gen.seed + i;
      const std::string label = gen.kind + "#" + std::to_string(i) + "(n=" + std::to_string(n) +
                                ",seed=" + std::to_string(seed) + ")";
      try {
        if (gen.kind == "hypergraph") {
          const auto h = gen_random_hypergraph({n, gen.m ? gen.m : 2 * n, gen.max_pins, gen.wmax, seed});
          verify_oracle<std::int64_t>(HypergraphCutOracle<std::int64_t>(h), label, inject_fault, tally);
        } else if (gen.kind == "table") {
          verify_table(gen_symmetric_submodular_table(n, gen.wmax, seed), label, inject_fault, tally);
        } else {
          const auto g = gen_random_graph({n, gen.p, gen.wmax, seed, gen.connected});
          verify_oracle<std::int64_t>(GraphCutOracle<std::int64_t>(g), label, inject_fault, tally);
        }
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      ++instances;
    }
  }

  tally.print(out);
  out << "verify: " << instances << (instances == 1 ? " instance, " : " instances, ")
      << (tally.ok() ? "all checks passed" : "FAILURES") << '\n';
  return tally.ok() ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// bench

struct Variant {
  std::string name;
  MinimizeConfig config;
};

std::optional<MinimizeConfig> variant_config(const std::string& name) {
  MinimizeConfig c;
  if (name == "maxback") {
    c.algorithm = Algorithm::maxback;
  } else if (name == "maxback-queue") {
    c.algorithm = Algorithm::maxback;
    c.order_builder = OrderBuilder::queue;
  } else if (name == "laxback") {
  } else if (name == "laxback-queue") {
    c.order_builder = OrderBuilder::queue;
  } else if (name == "laxback-bucket") {
    c.order_builder = OrderBuilder::queue;
    c.queue_kind = QueueKind::bucket;
  } else if (name == "laxback-min-singleton") {
    c.init_threshold = InitThreshold::min_singleton;
  } else if (name == "laxback-bucket-min-singleton") {
    c.order_builder = OrderBuilder::queue;
    c.queue_kind = QueueKind::bucket;
    c.init_threshold = InitThreshold::min_singleton;
  } else {
    return std::nullopt;
  }
  return c;
}

const char* kVariantNames =
    "maxback, maxback-queue, laxback, laxback-queue, laxback-bucket, laxback-min-singleton, "
    "laxback-bucket-min-singleton";

int cmd_bench(const std::string& variants_arg, const GenFlags& gen, std::ostream& out, std::ostream& err) {
  std::vector<Variant> variants;
  std::stringstream ss(variants_arg);
  for (std::string name; std::getline(ss, name, ',');) {
    if (name.empty()) continue;
    auto c = variant_config(name);
    if (!c) throw UsageError("unknown variant '" + name + "' (known: " + kVariantNames + ")");
    variants.push_back({name, *c});
  }
  if (variants.empty()) throw UsageError("no variants given");
  if (gen.count == 0) throw UsageError("--count must be positive");

  CorpusParams corpus;
  corpus.count = gen.count;
  corpus.min_n = gen.count == 1 ? gen.n : gen.min_n;
  corpus.max_n = gen.n;
  corpus.edge_probability = gen.p;
  corpus.max_weight = gen.wmax;
  corpus.seed = gen.seed;
  if (corpus.min_n < 2 || corpus.max_n < corpus.min_n) throw UsageError("invalid vertex range");

  out << "n,m,variant,rounds,oracle_calls,joins_total,lambda,wall_ns\n";
  bool agree = true;
  for (std::size_t i = 0; i < corpus.count; ++i) {
    WeightedGraph<std::int64_t> g;
    try {
      g = gen_random_graph(corpus_instance(corpus, i));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const GraphCutOracle<std::int64_t> oracle(g);
    std::optional<Value<std::int64_t>> lambda;
    for (const auto& v : variants) {
      const auto start = std::chrono::steady_clock::now();
      const auto result = optimal_set(oracle, v.config);
      const auto wall_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
      out << g.vertex_count() << ',' << g.edge_count() << ',' << v.name << ',' << result.stats.rounds << ','
          << result.stats.oracle_calls << ',' << result.stats.joins_total() << ',' << result.value << ','
          << wall_ns << '\n';
      if (lambda && *lambda != result.value) {
        agree = false;
        err << "instance " << i << ": variant " << v.name << " lambda " << result.value << " != " << *lambda << '\n';
      }
      lambda = result.value;
    }
  }
  return agree ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------
// gen

int cmd_gen(const GenFlags& gen, std::ostream& out) {
  try {
    if (gen.kind == "hypergraph") {
      out << write_hypergraph(gen_random_hypergraph({gen.n, gen.m ? gen.m : 2 * gen.n, gen.max_pins, gen.wmax, gen.seed}));
    } else if (gen.kind == "table") {
      out << write_function_table(gen_symmetric_submodular_table(gen.n, gen.wmax, gen.seed));
    } else {
      out << write_graph(gen_random_graph({gen.n, gen.p, gen.wmax, gen.seed, gen.connected}));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum bipartitions of symmetric set functions via lax-back orders", "symcut"};
  app.require_subcommand(1);

  AlgorithmFlags algo;
  GenFlags gen;
  std::string path;
  std::string table_path;
  std::string format = "graph";
  std::string variants = "maxback,laxback";
  bool check = false;
  bool json = false;
  bool inject_fault = false;

  auto* mincut = app.add_subcommand("mincut", "Minimum cut of a graph or hypergraph file");
  mincut->add_option("path", path, "Instance file")->required();
  mincut->add_option("--format", format, "Instance format")->check(CLI::IsMember({"graph", "hypergraph"}));
  add_algorithm_options(mincut, algo);
  mincut->add_flag("--check", check, "Compare against brute force (n <= 24)");
  mincut->add_flag("--json", json, "Emit a single JSON report");

  auto* minimize = app.add_subcommand("minimize", "Minimize a symmetric submodular function table");
  minimize->add_option("--table", table_path, "Function table file")->required();
  add_algorithm_options(minimize, algo);
  minimize->add_flag("--check", check, "Compare against brute force (n <= 24)");
  minimize->add_flag("--json", json, "Emit a single JSON report");

  auto* verify = app.add_subcommand("verify", "Check every configuration and invariant against brute force");
  verify->add_option("path", path, "Instance file (omit to generate instances)");
  verify->add_option("--format", format, "Instance format")
      ->check(CLI::IsMember({"graph", "hypergraph", "table"}));
  verify->add_option("--kind", gen.kind, "Generated instance kind")
      ->check(CLI::IsMember({"graph", "hypergraph", "table"}));
  add_gen_options(verify, gen);
  verify->add_flag("--inject-fault", inject_fault, "Negate the oracle (negative control)")->group("");

  auto* bench = app.add_subcommand("bench", "Compare algorithm variants on a seeded corpus (CSV)");
  bench->add_option("--variants", variants, std::string("Comma-separated variants: ") + kVariantNames);
  add_gen_options(bench, gen);

  auto* gen_cmd = app.add_subcommand("gen", "Emit a generated instance");
  gen_cmd->add_option("--kind", gen.kind, "Instance kind")->check(CLI::IsMember({"graph", "hypergraph", "table"}));
  add_gen_options(gen_cmd, gen);

  std::vector<const char*> argv{"symcut"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // Generated defaults differ per command: bench runs a corpus by default.
  if (bench->parsed() && bench->count("--count") == 0) gen.count = CorpusParams{}.count;
  if (bench->parsed() && bench->count("--connected") == 0) gen.connected = true;

  try {
    if (mincut->parsed()) {
      return with_file(path, [&](const std::string& text) {
        if (format == "hypergraph") {
          return std::visit([&](const auto& h) {
            using W = std::decay_t<decltype(h.edges().front().weight)>;
            const InstanceSummary summary{"hypergraph", h.vertex_count(), h.edge_count(), weight_mode(parse_hypergraph(text)), path};
            return solve_and_report<W>(HypergraphCutOracle<W>(h), summary, algo, check, json, out, err);
          }, parse_hypergraph(text));
        }
        const AnyGraph parsed = parse_graph(text);
        return std::visit([&](const auto& g) {
          using W = std::decay_t<decltype(g.edges().front().weight)>;
          const InstanceSummary summary{"graph", g.vertex_count(), g.edge_count(), weight_mode(parsed), path};
          return solve_and_report<W>(GraphCutOracle<W>(g), summary, algo, check, json, out, err);
        }, parsed);
      });
    }
    if (minimize->parsed()) {
      return with_file(table_path, [&](const std::string& text) {
        const AnyTable parsed = parse_function_table(text);
        return std::visit([&](const auto& f) {
          using W = std::decay_t<decltype(f(0))>;
          const InstanceSummary summary{"table", f.size(), f.values().size(), weight_mode(parsed), table_path};
          const auto report = check_symmetric_submodular(f);
          if (!report.symmetric || !report.submodular) {
            err << "warning: function is" << (report.symmetric ? "" : " not symmetric")
                << (report.symmetric || report.submodular ? "" : " and") << (report.submodular ? "" : " not submodular")
                << "; the result minimizes c_f but need not minimize f\n";
          }
          const ExtraFields extra = [&](const ElementSet& s, Json& j, std::ostream& line) {
            const Value<W> fs(f(static_cast<Mask>(s.to_mask())));
            j["f_of_S"] = value_json(fs);
            line << " f(S)=" << fs;
          };
          return solve_and_report<W>(ConnectivityOracle<W>(f), summary, algo, check, json, out, err, extra);
        }, parsed);
      });
    }
    if (verify->parsed()) return cmd_verify(path, format, gen, inject_fault, out);
    if (bench->parsed()) return cmd_bench(variants, gen, out, err);
    if (gen_cmd->parsed()) return cmd_gen(gen, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace symcut::cli
