#pragma once

#include "jp/graph.hpp"
#include "jp/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace jp::oracle {

inline constexpr int kDefaultCap = 13;

// Exhaustive enumeration refused above the vertex cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(int n, int cap)
      : std::runtime_error("oracle refuses n=" + std::to_string(n) +
                           " vertices (cap " + std::to_string(cap) + ")") {}
};

// Honors JP_ORACLE_CAP, otherwise kDefaultCap.
int cap_from_env();

struct OracleResult {
  Rational optimum;
  Partition witness;
  std::uint64_t enumerated = 0;
};

// Every set partition of [0, n) into exactly k non-empty unlabeled blocks,
// once each, in restricted-growth-string order.
void enumerate_kpartitions(int n, int k,
                           const std::function<void(const Partition&)>& fn,
                           int cap = kDefaultCap);
std::uint64_t count_kpartitions(int n, int k, int cap = kDefaultCap);

OracleResult exact_max_kcut(const WeightedGraph& g, int k,
                            int cap = kDefaultCap);
OracleResult exact_min_max_part(const WeightedGraph& g, int k,
                                int cap = kDefaultCap);
// Max cut over bipartitions with part sizes differing by at most one.
OracleResult exact_max_bisection(const WeightedGraph& g, int cap = kDefaultCap);

struct JointScan {
  std::optional<Partition> witness;  // cut >= cut_lower and max part <= part_upper
  // min over feasible partitions of (cut - cut_lower) + (part_upper - max part)
  std::optional<Rational> min_joint_slack;
  bool tight_pair_found = false;  // some feasible partition has slack 0 on both
  std::uint64_t enumerated = 0;
  bool exhausted = false;  // full enumeration completed (definitive when no witness)
};

// stop_at_first: return as soon as any witness is found. Otherwise the scan
// is exhaustive and min_joint_slack / tight_pair_found are definitive.
JointScan joint_scan(const WeightedGraph& g, int k, const Rational& cut_lower,
                     const Rational& part_upper, bool stop_at_first = true,
                     int cap = kDefaultCap);

std::optional<Partition> exists_joint(const WeightedGraph& g, int k,
                                      const Rational& cut_lower,
                                      const Rational& part_upper,
                                      int cap = kDefaultCap);

struct Prop1Result {
  bool holds;  // every cut weight < w/2 + c * Delta_w
  Rational max_cut;
  Rational threshold;
  std::uint64_t cuts_checked = 0;
};

// Builds the apex instance for (c, n) and exhausts all bipartitions.
Prop1Result verify_proposition1(const Rational& c, int n, int cap = kDefaultCap);

}  // namespace jp::oracle
