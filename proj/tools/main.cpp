// jupart: generate instances, run the partitioners, check bounds, query the
// exact oracle, and hunt for joint-bound counterexamples.

#include "jp/bounds.hpp"
#include "jp/graph.hpp"
#include "jp/instances.hpp"
#include "jp/io.hpp"
#include "jp/oracle.hpp"
#include "jp/partitioners.hpp"
#include "jp/rational.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

using json = nlohmann::ordered_json;
using namespace jp;

namespace {

constexpr const char* kVersion = "1.0.0";

// exit codes: 0 ok, 2 usage/domain, 3 bound or claim violation, 4 cap refusal
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitViolation = 3;
constexpr int kExitCap = 4;

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto r = parse_rational(text);
  if (!r) throw CLI::ValidationError(flag, "not a rational: '" + text + "'");
  return *r;
}

json rational_json(const Rational& r) { return to_string(r); }

json interval_json(const Interval& iv) {
  if (iv.exact()) return rational_json(iv.lo);
  return json{{"lo", rational_json(iv.lo)}, {"hi", rational_json(iv.hi)}};
}

json partition_json(const Partition& p) {
  json parts = json::array();
  for (const auto& part : p.parts()) parts.push_back(part);
  return parts;
}

json metrics_json(const WeightedGraph& g, const Partition& p) {
  json pw = json::array();
  for (const auto& w : part_weights(g, p)) pw.push_back(rational_json(w));
  return json{{"w", rational_json(total_weight(g))},
              {"delta_w", rational_json(max_weighted_degree(g))},
              {"d_w", rational_json(avg_weighted_degree(g))},
              {"cut_weight", rational_json(cut_weight(g, p))},
              {"part_weights", pw}};
}

json bound_table_json(const BoundReport& rep) {
  json table = json::array();
  for (const auto& c : rep.checks) {
    json row{{"bound", bound_name(c.id)},
             {"kind", bound_kind(c.id) == BoundKind::Lower ? "lower" : "upper"},
             {"achieved", rational_json(c.achieved)},
             {"status", to_string(c.status)}};
    if (c.status != Satisfaction::NotApplicable)
      row["value"] = interval_json(c.value);
    if (c.slack) row["slack"] = rational_json(*c.slack);
    table.push_back(std::move(row));
  }
  return table;
}

json trace_json(const AlgorithmTrace& t) {
  json out{{"summary", t.describe()},
           {"seed_expectation", rational_json(t.seed_expectation)},
           {"refinement_moves", t.moves.size()},
           {"peeled", t.peel_sequence.size()}};
  if (t.n3 >= 0) out["n3"] = t.n3;
  if (!t.level_case.empty()) out["level_case"] = t.level_case;
  return out;
}

json graph_json(const WeightedGraph& g) {
  json edges = json::array();
  for (const auto& [e, w] : g.edges())
    edges.push_back(json{e.first, e.second, rational_json(w)});
  return json{{"n", g.order()}, {"edges", edges}};
}

void emit(const json& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << doc.dump(2) << '\n';
  }
}

// --- gen ---------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0, k = 0, q = 0;
  std::string c = "1/4", p = "1/2", law = "uniform";
  int clique = 0, isolated = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenArgs& a) {
  instances::InstanceSpec spec;
  if (a.family == "complete") {
    spec.family = instances::Family::Complete;
    spec.n = a.n;
  } else if (a.family == "complete-tight") {
    spec.family = instances::Family::CompleteTight;
    spec.k = a.k;
    spec.q = a.q;
  } else if (a.family == "apex") {
    spec.family = instances::Family::Apex;
    spec.c = parse_rational_arg(a.c, "--c");
    spec.n = a.n;
  } else if (a.family == "isolated-padding") {
    spec.family = instances::Family::IsolatedPadding;
    spec.n_clique = a.clique;
    spec.n_isolated = a.isolated;
  } else if (a.family == "random") {
    spec.family = instances::Family::RandomWeighted;
    spec.n = a.n;
    spec.edge_prob = parse_rational_arg(a.p, "--p");
    spec.seed = a.seed;
    if (a.law == "unit")
      spec.weight_law = instances::WeightLaw::Unit;
    else if (a.law == "uniform")
      spec.weight_law = instances::WeightLaw::UniformGrid;
    else if (a.law == "exp")
      spec.weight_law = instances::WeightLaw::ExponentialGrid;
    else
      throw CLI::ValidationError("--law", "must be unit, uniform or exp");
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + a.family + "'");
  }

  const WeightedGraph g = instances::generate(spec);
  io::write_wel_file(a.output, g);
  std::cout << spec.describe() << ": n=" << g.order() << " m=" << g.edge_count()
            << " w=" << to_string(total_weight(g))
            << " max_deg_w=" << to_string(max_weighted_degree(g)) << '\n';
  return kExitOk;
}

// --- partition -----------------------------------------------------------

struct PartitionArgs {
  std::string input, algo, output;
  int k = 0;
};

int cmd_partition(const PartitionArgs& a) {
  const WeightedGraph g = io::read_wel_file(a.input);
  int k = a.k;
  std::vector<BoundId> ids;
  const auto t0 = std::chrono::steady_clock::now();
  PartitionOutcome outcome = [&] {
    if (a.algo == "maxd") {
      if (k && k != 2) throw std::invalid_argument("maxd is a bipartition");
      k = 2;
      ids = {BoundId::MaxdCutLower, BoundId::MaxdPartUpper};
      return judicious_bipartition(g);
    }
    if (a.algo == "max32") {
      if (k && k != 3) throw std::invalid_argument("max32 is a 3-partition");
      k = 3;
      ids = {BoundId::Max32CutLower, BoundId::Max32PartUpper};
      return judicious_3partition(g);
    }
    if (k < 2) throw std::invalid_argument("--k >= 2 required for " + a.algo);
    if (a.algo == "maxk") {
      ids = {BoundId::MaxkPartUpper};
      return judicious_kpartition(g, k);
    }
    if (a.algo == "balanced") {
      ids = {BoundId::KkkkCutLower};
      if (k == 2) ids.push_back(BoundId::Lemma1CutLower);
      return balanced_kcut(g, k);
    }
    throw std::invalid_argument("unknown algorithm '" + a.algo + "'");
  }();

  const BoundReport rep = report(g, outcome.partition, ids);
  const auto wall = std::chrono::steady_clock::now() - t0;

  json doc{{"version", kVersion},
           {"instance", json{{"path", a.input},
                             {"n", g.order()},
                             {"m", g.edge_count()}}},
           {"algorithm", a.algo},
           {"k", k},
           {"partition", partition_json(outcome.partition)},
           {"metrics", metrics_json(g, outcome.partition)},
           {"bounds", bound_table_json(rep)},
           {"trace", trace_json(outcome.trace)},
           {"wall_ms",
            std::chrono::duration_cast<std::chrono::milliseconds>(wall)
                .count()}};
  emit(doc, a.output);
  return rep.all_satisfied() ? kExitOk : kExitViolation;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string input, partition, output;
  std::vector<std::string> bounds;
};

std::vector<BoundId> expand_bounds(const std::vector<std::string>& names,
                                   int k) {
  std::vector<BoundId> ids;
  auto push_group = [&](std::initializer_list<BoundId> group) {
    for (BoundId id : group) ids.push_back(id);
  };
  if (names.empty()) {
    if (k == 2) push_group({BoundId::MaxdCutLower, BoundId::MaxdPartUpper,
                            BoundId::Lemma1CutLower});
    if (k == 3) push_group({BoundId::Max32CutLower, BoundId::Max32PartUpper});
    push_group({BoundId::MaxkPartUpper, BoundId::KkkkCutLower});
    return ids;
  }
  for (const auto& name : names) {
    if (name == "maxd")
      push_group({BoundId::MaxdCutLower, BoundId::MaxdPartUpper});
    else if (name == "max32")
      push_group({BoundId::Max32CutLower, BoundId::Max32PartUpper});
    else if (name == "conjecture")
      push_group({BoundId::ConjectureCutLower, BoundId::ConjecturePartUpper});
    else if (auto id = bound_from_name(name))
      ids.push_back(*id);
    else
      throw std::invalid_argument("unknown bound '" + name + "'");
  }
  return ids;
}

int cmd_verify(const VerifyArgs& a) {
  const WeightedGraph g = io::read_wel_file(a.input);
  const Partition p = io::read_partition_file(a.partition, g.order());
  const std::vector<BoundId> ids = expand_bounds(a.bounds, p.part_count());
  const BoundReport rep = report(g, p, ids);
  json doc{{"version", kVersion},
           {"instance", json{{"path", a.input},
                             {"n", g.order()},
                             {"m", g.edge_count()}}},
           {"k", p.part_count()},
           {"partition", partition_json(p)},
           {"metrics", metrics_json(g, p)},
           {"bounds", bound_table_json(rep)}};
  emit(doc, a.output);
  return rep.all_satisfied() ? kExitOk : kExitViolation;
}

// --- oracle ---------------------------------------------------------------

struct OracleArgs {
  std::string input, mode, output;
  int k = 2;
  int cap = 0;
  std::string cut_lower, part_upper;
};

int cmd_oracle(const OracleArgs& a) {
  const WeightedGraph g = io::read_wel_file(a.input);
  const int cap = a.cap > 0 ? a.cap : oracle::cap_from_env();
  json doc{{"version", kVersion},
           {"instance", json{{"path", a.input},
                             {"n", g.order()},
                             {"m", g.edge_count()}}},
           {"mode", a.mode},
           {"k", a.k}};
  if (a.mode == "maxcut" || a.mode == "minmax") {
    const oracle::OracleResult res =
        a.mode == "maxcut" ? oracle::exact_max_kcut(g, a.k, cap)
                           : oracle::exact_min_max_part(g, a.k, cap);
    doc["optimum"] = rational_json(res.optimum);
    doc["witness"] = partition_json(res.witness);
    doc["enumerated"] = res.enumerated;
  } else if (a.mode == "joint") {
    if (a.cut_lower.empty() || a.part_upper.empty())
      throw std::invalid_argument(
          "joint mode needs --cut-lower and --part-upper");
    const Rational lo = parse_rational_arg(a.cut_lower, "--cut-lower");
    const Rational hi = parse_rational_arg(a.part_upper, "--part-upper");
    const oracle::JointScan scan =
        oracle::joint_scan(g, a.k, lo, hi, /*stop_at_first=*/true, cap);
    doc["cut_lower"] = rational_json(lo);
    doc["part_upper"] = rational_json(hi);
    doc["enumerated"] = scan.enumerated;
    if (scan.witness) {
      doc["witness"] = partition_json(*scan.witness);
      doc["verdict"] = "witness";
    } else {
      doc["witness"] = nullptr;
      doc["verdict"] = "NONE (exhausted)";
    }
  } else {
    throw std::invalid_argument("mode must be maxcut, minmax or joint");
  }
  emit(doc, a.output);
  return kExitOk;
}

// --- hunt -----------------------------------------------------------------

struct HuntArgs {
  int k = 4;
  int n_min = 4, n_max = 13;
  int trials = 0;
  std::uint64_t seed = 1;
  std::string family = "complete";
  std::string p = "1/2";
  int jobs = 0;
  int cap = 0;
};

struct HuntInstance {
  instances::InstanceSpec spec;
  WeightedGraph graph;
};

json hunt_verdict(const HuntInstance& inst, int k, int cap) {
  const WeightedGraph& g = inst.graph;
  const BoundParams params = bound_params(g, k);
  const Rational cut_lower = eval_bound(BoundId::ConjectureCutLower, params).lo;
  const Rational part_upper =
      eval_bound(BoundId::ConjecturePartUpper, params).lo;
  const oracle::JointScan scan =
      oracle::joint_scan(g, k, cut_lower, part_upper,
                         /*stop_at_first=*/false, cap);
  const bool trivial = total_weight(g) == 0;  // both bounds degenerate to 0
  json v{{"instance", inst.spec.describe()},
         {"n", g.order()},
         {"k", k},
         {"cut_lower", rational_json(cut_lower)},
         {"part_upper", rational_json(part_upper)},
         {"enumerated", scan.enumerated},
         {"definitive_none", !scan.witness && scan.exhausted},
         {"tight_pair", scan.tight_pair_found && !trivial},
         {"trivial", trivial}};
  if (scan.min_joint_slack)
    v["min_joint_slack"] = rational_json(*scan.min_joint_slack);
  if (scan.witness) v["witness"] = partition_json(*scan.witness);
  if (!scan.witness && scan.exhausted) {
    // full counterexample artifact: graph, bounds, exhaustion certificate
    v["counterexample"] = json{{"graph", graph_json(g)},
                               {"cut_lower", rational_json(cut_lower)},
                               {"part_upper", rational_json(part_upper)},
                               {"partitions_exhausted", scan.enumerated}};
  }
  return v;
}

int cmd_hunt(const HuntArgs& a) {
  if (a.k < 2) throw std::invalid_argument("--k >= 2 required");
  const int cap = a.cap > 0 ? a.cap : oracle::cap_from_env();
  const Rational edge_prob = parse_rational_arg(a.p, "--p");

  std::vector<HuntInstance> work;
  auto add_complete = [&] {
    for (int n = std::max(a.n_min, a.k); n <= a.n_max; ++n) {
      instances::InstanceSpec spec;
      spec.family = instances::Family::Complete;
      spec.n = n;
      work.push_back({spec, instances::generate(spec)});
    }
  };
  auto add_random = [&] {
    std::mt19937_64 master(a.seed);
    const int lo = std::max(a.n_min, a.k);
    for (int t = 0; t < a.trials; ++t) {
      instances::InstanceSpec spec;
      spec.family = instances::Family::RandomWeighted;
      spec.n = lo + static_cast<int>(master() % (a.n_max - lo + 1));
      spec.edge_prob = edge_prob;
      spec.weight_law = instances::WeightLaw::UniformGrid;
      spec.seed = master();
      work.push_back({spec, instances::generate(spec)});
    }
  };
  if (a.family == "complete")
    add_complete();
  else if (a.family == "random")
    add_random();
  else if (a.family == "both") {
    add_complete();
    add_random();
  } else {
    throw std::invalid_argument("family must be complete, random or both");
  }

  for (const auto& inst : work)
    if (inst.graph.order() > cap)
      throw oracle::CapExceeded(inst.graph.order(), cap);

  const int jobs =
      a.jobs > 0 ? a.jobs
                 : std::max(1u, std::min(std::thread::hardware_concurrency(),
                                         8u));

  std::mutex mu;
  std::condition_variable cv;
  std::vector<std::optional<json>> results(work.size());
  std::exception_ptr failure;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      try {
        json v = hunt_verdict(work[i], a.k, cap);
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(v);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        results[i] = json{};  // unblock the printer
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

  std::uint64_t none_count = 0, tight_count = 0;
  std::optional<Rational> min_slack;
  json min_slack_instance;
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return results[i].has_value(); });
    if (failure) break;
    const json& v = *results[i];
    std::cout << v.dump() << '\n' << std::flush;
    if (v["definitive_none"].get<bool>()) ++none_count;
    if (v["tight_pair"].get<bool>()) ++tight_count;
    if (v.contains("min_joint_slack") && !v["trivial"].get<bool>()) {
      const Rational s = *parse_rational(v["min_joint_slack"].get<std::string>());
      if (!min_slack || s < *min_slack) {
        min_slack = s;
        min_slack_instance = v["instance"];
      }
    }
    results[i] = json{};  // drop the payload, keep the slot "ready"
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  json summary{{"summary", true},
               {"instances", work.size()},
               {"definitive_none", none_count},
               {"tight_pairs", tight_count}};
  if (min_slack) {
    summary["min_joint_slack"] = rational_json(*min_slack);
    summary["min_joint_slack_instance"] = min_slack_instance;
  }
  std::cout << summary.dump() << '\n';
  return none_count == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"judicious k-partition toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* cgen = app.add_subcommand("gen", "generate an instance file");
  cgen->add_option("--family", gen.family,
                   "complete | complete-tight | apex | isolated-padding | "
                   "random")
      ->required();
  cgen->add_option("--n", gen.n, "vertex count");
  cgen->add_option("--k", gen.k, "parts (complete-tight)");
  cgen->add_option("--q", gen.q, "multiplier (complete-tight)");
  cgen->add_option("--c", gen.c, "apex constant, rational");
  cgen->add_option("--clique", gen.clique, "clique size (isolated-padding)");
  cgen->add_option("--isolated", gen.isolated,
                   "isolated vertices (isolated-padding)");
  cgen->add_option("--p", gen.p, "edge probability, rational");
  cgen->add_option("--law", gen.law, "weight law: unit | uniform | exp");
  cgen->add_option("--seed", gen.seed, "random seed");
  cgen->add_option("-o,--output", gen.output, "output file")->required();

  PartitionArgs part;
  auto* cpart = app.add_subcommand("partition", "run a partition constructor");
  cpart->add_option("input", part.input, "edge-list file")->required();
  cpart->add_option("--algo", part.algo, "maxd | max32 | maxk | balanced")
      ->required();
  cpart->add_option("--k", part.k, "part count (maxk, balanced)");
  cpart->add_option("-o,--output", part.output, "report file (default stdout)");

  VerifyArgs verify;
  auto* cverify = app.add_subcommand("verify", "check bounds on a partition");
  cverify->add_option("input", verify.input, "edge-list file")->required();
  cverify->add_option("partition", verify.partition, "partition file")
      ->required();
  cverify->add_option("--bounds", verify.bounds,
                      "bound names or groups (maxd, max32, conjecture)")
      ->delimiter(',');
  cverify->add_option("-o,--output", verify.output, "report file");

  OracleArgs orc;
  auto* corc = app.add_subcommand("oracle", "exhaustive small-instance oracle");
  corc->add_option("input", orc.input, "edge-list file")->required();
  corc->add_option("--mode", orc.mode, "maxcut | minmax | joint")->required();
  corc->add_option("--k", orc.k, "part count");
  corc->add_option("--cut-lower", orc.cut_lower, "joint: cut lower bound");
  corc->add_option("--part-upper", orc.part_upper, "joint: part upper bound");
  corc->add_option("--cap", orc.cap, "vertex cap override");
  corc->add_option("-o,--output", orc.output, "report file");

  HuntArgs hunt;
  auto* chunt = app.add_subcommand("hunt", "scan instances for joint-bound "
                                           "counterexamples");
  chunt->add_option("--k", hunt.k, "part count")->required();
  chunt->add_option("--n-min", hunt.n_min, "smallest order");
  chunt->add_option("--n-max", hunt.n_max, "largest order");
  chunt->add_option("--trials", hunt.trials, "random instances to draw");
  chunt->add_option("--seed", hunt.seed, "random seed");
  chunt->add_option("--family", hunt.family, "complete | random | both");
  chunt->add_option("--p", hunt.p, "edge probability, rational");
  chunt->add_option("--jobs", hunt.jobs, "worker threads");
  chunt->add_option("--cap", hunt.cap, "vertex cap override");

  try {
    app.parse(argc, argv);
    if (cgen->parsed()) return cmd_gen(gen);
    if (cpart->parsed()) return cmd_partition(part);
    if (cverify->parsed()) return cmd_verify(verify);
    if (corc->parsed()) return cmd_oracle(orc);
    if (chunt->parsed()) return cmd_hunt(hunt);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const oracle::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const ClaimViolation& e) {
    std::cerr << "claim violation: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
