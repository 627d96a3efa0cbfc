// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. argv[1] must be the path to the jupart binary (criteria 9, 10).

#include "jp/bounds.hpp"
#include "jp/graph.hpp"
#include "jp/instances.hpp"
#include "jp/oracle.hpp"
#include "jp/partitioners.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace jp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void verdict(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << detail << std::endl;
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<WeightedGraph> random_suite(int count, int max_n,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightedGraph> suite;
  suite.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % (max_n - 1));
    suite.push_back(instances::random_weighted(
        n, Rational(1, 2), instances::WeightLaw::UniformGrid, rng()));
  }
  return suite;
}

std::string run_command(const std::string& cmd, int& exit_code) {
  std::array<char, 4096> buf;
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  exit_code = pclose(pipe);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// drop volatile fields before byte comparison
std::string strip_wall_ms(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (line.find("\"wall_ms\"") == std::string::npos) out += line + "\n";
  return out;
}

std::string extract_bounds_block(const std::string& text) {
  const auto start = text.find("\"bounds\"");
  if (start == std::string::npos) return "";
  const auto open = text.find('[', start);
  int depth = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']' && --depth == 0) return text.substr(open, i - open + 1);
  }
  return "";
}

void criterion1() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (int n : {3, 5, 7, 9, 11}) {
    const WeightedGraph g = instances::complete_graph(n);
    const Rational w = total_weight(g);
    const PartitionOutcome out = judicious_bipartition(g);
    const bool cut_tight = out.cut == w / 2 + avg_weighted_degree(g) / 4;
    const bool part_tight = max_part_weight(g, out.partition) ==
                            w / 4 + max_weighted_degree(g) / 8;
    if (!cut_tight || !part_tight) {
      ok = false;
      detail = "slack nonzero on K_" + std::to_string(n);
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 1.0) ok = false;
  if (ok)
    detail = "bipartition tight on odd K_n, n=3..11, " +
             std::to_string(secs) + "s";
  verdict(1, ok, detail);
}

void criterion2() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (int q = 1; q <= 4; ++q) {
    const WeightedGraph g = instances::complete_tight(3, q);
    const Rational w = total_weight(g);
    const PartitionOutcome out = judicious_3partition(g);
    const bool cut_tight = out.cut == 2 * w / 3 + avg_weighted_degree(g) / 3;
    const bool part_tight =
        max_part_weight(g, out.partition) == Rational(q * q + q, 2) &&
        Rational(q * q + q, 2) == (w + max_weighted_degree(g)) / 9;
    if (!cut_tight || !part_tight) {
      ok = false;
      detail = "slack nonzero on K_" + std::to_string(3 * q + 1);
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 1.0) ok = false;
  if (ok)
    detail = "3-partition tight on K_{3q+1}, q=1..4, " + std::to_string(secs) +
             "s";
  verdict(2, ok, detail);
}

void criterion3() {
  bool ok = true;
  std::string detail = "k-partition tight on K_{qk+1}, k=2..5, q=1..3";
  for (int k = 2; k <= 5 && ok; ++k) {
    for (int q = 1; q <= 3 && ok; ++q) {
      const WeightedGraph g = instances::complete_tight(k, q);
      const BoundParams params = bound_params(g, k);
      const Rational bound = eval_bound(BoundId::MaxkPartUpper, params).lo;
      const PartitionOutcome out = judicious_kpartition(g, k);
      if (max_part_weight(g, out.partition) != Rational(q * q + q, 2) ||
          bound != Rational(q * q + q, 2)) {
        ok = false;
        detail = "not tight at k=" + std::to_string(k) +
                 " q=" + std::to_string(q);
      }
    }
  }
  verdict(3, ok, detail);
}

void criterion4(const std::vector<WeightedGraph>& suite) {
  const auto t0 = Clock::now();
  long violations = 0;
  for (const WeightedGraph& g : suite) {
    const int n = g.order();
    const Rational w = total_weight(g);
    const Rational dw = avg_weighted_degree(g);
    const Rational delta = max_weighted_degree(g);

    const PartitionOutcome bi = judicious_bipartition(g);
    if (bi.cut < w / 2 + dw / 4) ++violations;
    if (max_part_weight(g, bi.partition) > w / 4 + delta / 8) ++violations;

    if (n >= 3) {
      const PartitionOutcome tri = judicious_3partition(g);
      if (tri.cut < 2 * w / 3 + dw / 3) ++violations;
      if (max_part_weight(g, tri.partition) > (w + delta) / 9) ++violations;
    }
    for (int k = 2; k <= std::min(n, 6); ++k) {
      const PartitionOutcome jk = judicious_kpartition(g, k);
      if (max_part_weight(g, jk.partition) >
          w / (k * k) + Rational(k - 1, 2L * k * k) * delta)
        ++violations;
      const PartitionOutcome bk = balanced_kcut(g, k);
      const Rational h = kkkk_lower_order_term(k, n);
      if (bk.cut <
          Rational(k - 1, k) * w + Rational(k - 1, 2L * k) * (1 - h) * dw)
        ++violations;
    }
  }
  const double secs = seconds_since(t0);
  const bool ok = violations == 0 && secs < 300.0;
  verdict(4, ok,
          std::to_string(suite.size()) + " random graphs, " +
              std::to_string(violations) + " violations, " +
              std::to_string(secs) + "s");
}

void criterion5(const std::vector<WeightedGraph>& suite) {
  long failures_here = 0, checked = 0;
  for (const WeightedGraph& g : suite) {
    const int n = g.order();
    if (n > 10) continue;
    ++checked;
    for (int k = 2; k <= std::min(n, 5); ++k) {
      const BoundParams params = bound_params(g, k);
      if (oracle::exact_min_max_part(g, k).optimum >
          eval_bound(BoundId::MaxkPartUpper, params).lo)
        ++failures_here;
    }
    {
      const BoundParams p2 = bound_params(g, 2);
      if (!oracle::exists_joint(g, 2,
                                eval_bound(BoundId::MaxdCutLower, p2).lo,
                                eval_bound(BoundId::MaxdPartUpper, p2).lo))
        ++failures_here;
    }
    if (n >= 3) {
      const BoundParams p3 = bound_params(g, 3);
      if (!oracle::exists_joint(g, 3,
                                eval_bound(BoundId::Max32CutLower, p3).lo,
                                eval_bound(BoundId::Max32PartUpper, p3).lo))
        ++failures_here;
    }
  }
  verdict(5, failures_here == 0,
          "oracle cross-check on " + std::to_string(checked) +
              " graphs with n <= 10, " + std::to_string(failures_here) +
              " failures");
}

void criterion6() {
  const auto t0 = Clock::now();
  bool ok = false;
  std::string detail = "proposition 1 exhaustion failed";
  try {
    const auto res = oracle::verify_proposition1(Rational(1, 4), 5);
    ok = res.holds && res.max_cut == 14 &&
         res.threshold == Rational(115, 8) && res.cuts_checked == 64 &&
         seconds_since(t0) < 1.0;
    if (ok)
      detail = "max cut 14 < 115/8 over 2^6 bipartitions, " +
               std::to_string(seconds_since(t0)) + "s";
  } catch (const std::exception& e) {
    detail = e.what();
  }
  verdict(6, ok, detail);
}

void criterion7(const std::vector<WeightedGraph>& suite) {
  long violations = 0;
  for (const WeightedGraph& g : suite) {
    const long n = g.order();
    const long t = n % 2 == 0 ? 1 : 0;
    const Partition p = derandomized_balanced_partition(g, 2);
    if (cut_weight(g, p) <
        (Rational(1, 2) + Rational(1, 2 * (n - t))) * total_weight(g))
      ++violations;
  }
  const WeightedGraph k4 = instances::complete_graph(4);
  const bool k4_exact =
      cut_weight(k4, derandomized_balanced_partition(k4, 2)) == 4;
  verdict(7, violations == 0 && k4_exact,
          "seed bound on " + std::to_string(suite.size()) +
              " graphs, K_4 cut exactly 4: " + (k4_exact ? "yes" : "no"));
}

void criterion8() {
  bool ok = true;
  std::string detail = "kkkk tight exactly at residues floor/ceil(k/2) mod k";
  for (int k : {4, 5}) {
    for (int n = k; n <= 13 && ok; ++n) {
      const WeightedGraph g = instances::complete_graph(n);
      const Rational bound =
          eval_bound(BoundId::KkkkCutLower, bound_params(g, k)).lo;
      const Rational best = oracle::exact_max_kcut(g, k).optimum;
      const int res = n % k;
      const bool at_residue = res == k / 2 || res == (k + 1) / 2;
      if (at_residue ? best != bound : best <= bound) {
        ok = false;
        detail = "residue mismatch at k=" + std::to_string(k) +
                 " n=" + std::to_string(n);
      }
    }
  }
  verdict(8, ok, detail);
}

void criterion9(const std::string& jupart) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (const std::string args :
       {std::string("hunt --k 4 --family complete --n-min 4 --n-max 13"),
        std::string(
            "hunt --k 4 --family random --n-min 4 --n-max 12 --trials 200 "
            "--seed 1")}) {
    int code = 0;
    const std::string out = run_command(jupart + " " + args + " 2>&1", code);
    const auto summary = out.rfind("{\"summary\"");
    if (code != 0 || summary == std::string::npos) {
      ok = false;
      detail = "hunt run failed: " + args;
      break;
    }
    const std::string tail = out.substr(summary);
    if (tail.find("\"definitive_none\":0") == std::string::npos ||
        tail.find("\"tight_pairs\":0") == std::string::npos) {
      ok = false;
      detail = "hunt summary reports a counterexample or tight pair: " + tail;
      break;
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 1800.0) ok = false;
  if (ok)
    detail = "k=4 hunt over K_4..K_13 + 200 random graphs, no "
             "definitive-none, no tight pairs, " +
             std::to_string(secs) + "s";
  verdict(9, ok, detail);
}

void criterion10(const std::string& jupart) {
  bool ok = true;
  std::string detail = "reports bit-stable and self-verifying";
  int code = 0;

  run_command(jupart + " gen --family complete --n 7 -o acc_k7.wel", code);
  if (code != 0) ok = false;
  run_command(jupart +
                  " partition acc_k7.wel --algo maxd -o acc_rep1.json",
              code);
  if (code != 0) ok = false;
  run_command(jupart +
                  " partition acc_k7.wel --algo maxd -o acc_rep2.json",
              code);
  if (code != 0) ok = false;

  const std::string rep1 = slurp("acc_rep1.json");
  if (strip_wall_ms(rep1) != strip_wall_ms(slurp("acc_rep2.json"))) {
    ok = false;
    detail = "identical runs produced different reports";
  }

  // rebuild the partition file from the report and re-verify
  {
    std::ofstream part("acc_part.txt");
    const WeightedGraph k7 = instances::complete_graph(7);
    const PartitionOutcome out = judicious_bipartition(k7);
    for (Vertex v = 0; v < 7; ++v)
      part << v << ' ' << out.partition.part(v) << '\n';
  }
  const std::string verify_out = run_command(
      jupart + " verify acc_k7.wel acc_part.txt --bounds maxd", code);
  if (code != 0) ok = false;
  if (extract_bounds_block(rep1).empty() ||
      extract_bounds_block(rep1) != extract_bounds_block(verify_out)) {
    ok = false;
    detail = "verify did not reproduce the report's bound table";
  }

  // in-process determinism of every constructor
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 10);
    const WeightedGraph g = instances::random_weighted(
        n, Rational(1, 2), instances::WeightLaw::UniformGrid, rng());
    if (!(judicious_bipartition(g).partition ==
          judicious_bipartition(g).partition) ||
        !(judicious_3partition(g).partition ==
          judicious_3partition(g).partition) ||
        !(judicious_kpartition(g, 4).partition ==
          judicious_kpartition(g, 4).partition) ||
        !(balanced_kcut(g, 3).partition == balanced_kcut(g, 3).partition)) {
      ok = false;
      detail = "constructor output differed between identical runs";
    }
  }
  std::remove("acc_k7.wel");
  std::remove("acc_rep1.json");
  std::remove("acc_rep2.json");
  std::remove("acc_part.txt");
  verdict(10, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string jupart = argc > 1 ? argv[1] : "";

  const std::vector<WeightedGraph> suite = random_suite(500, 40, 20240817);

  criterion1();
  criterion2();
  criterion3();
  criterion4(suite);
  criterion5(suite);
  criterion6();
  criterion7(suite);
  criterion8();
  if (jupart.empty()) {
    verdict(9, false, "jupart path not supplied");
    verdict(10, false, "jupart path not supplied");
  } else {
    criterion9(jupart);
    criterion10(jupart);
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASS"
                              : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
