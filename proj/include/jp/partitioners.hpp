#pragma once

#include "jp/graph.hpp"
#include "jp/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jp {

// A proof-claim assertion failed at runtime. Either an implementation bug or
// a counterexample event; the run aborts with the serialized trace.
struct ClaimViolation : std::runtime_error {
  explicit ClaimViolation(const std::string& diag) : std::runtime_error(diag) {}
};

struct Move {
  Vertex v;
  int from;
  int to;
  Rational gain;  // strictly positive cut increase
};

// Internal proof quantities recorded during construction.
struct AlgorithmTrace {
  std::vector<Vertex> peel_sequence;  // removed from the heavy part, in order
  std::optional<Vertex> pivot;        // condition-(b) vertex / x / last transfer
  Rational r{0};
  Rational c{0};      // r = (c/9) Delta_w, 3-partition peel path only
  Rational theta{0};  // cut surplus of X3'
  int n3 = -1;        // |X3'|, -1 when the peel path did not fire
  std::vector<Move> moves;
  Rational seed_expectation{0};
  std::vector<Rational> level_r;  // per recursion level (k-partition)
  std::vector<int> level_case;    // 0 = no peel, 1 or 2 = proof case

  std::string describe() const;
};

// margin[v][j] = w_{X_j}(v) - w_{X_{part(v)}}(v); all >= 0 at a local optimum.
struct LocalOptimalityCertificate {
  std::vector<std::vector<Rational>> margin;

  bool locally_optimal() const;
};

struct PartitionOutcome {
  Partition partition;
  Rational cut;
  std::vector<Rational> part_weights;
  AlgorithmTrace trace;
};

// Descending weighted degree, ties broken by lowest index.
std::vector<Vertex> default_seed_order(const WeightedGraph& g);

// Expected cut weight of a uniformly random balanced k-partition, exact.
Rational balanced_partition_expected_cut(const WeightedGraph& g, int k);

// Deterministic sequential assignment by conditional expectations. Part sizes
// are floor(n/k) or ceil(n/k), with exactly n mod k parts of the larger size.
// The resulting cut weight is >= balanced_partition_expected_cut(g, k).
Partition derandomized_balanced_partition(const WeightedGraph& g, int k);
Partition derandomized_balanced_partition(const WeightedGraph& g, int k,
                                          const std::vector<Vertex>& seed_order);

// Single-vertex local search: scans vertices in index order, applies the
// first strictly improving move, restarts. Never decreases the cut weight.
// Moves that would empty a part are skipped unless allow_empty (such a move
// is never strictly improving, so the flag does not change the fixed point).
std::pair<Partition, LocalOptimalityCertificate> local_search_refine(
    const WeightedGraph& g, const Partition& p, bool allow_empty = false,
    std::vector<Move>* moves = nullptr);

// Bipartition with cut >= w/2 + d_w/4 and heaviest part <= w/4 + Delta_w/8.
PartitionOutcome judicious_bipartition(const WeightedGraph& g);

// 3-partition with cut >= 2w/3 + d_w/3 and heaviest part <= (w + Delta_w)/9.
PartitionOutcome judicious_3partition(const WeightedGraph& g);

// k-partition with heaviest part <= w/k^2 + (k-1)/(2k^2) Delta_w.
PartitionOutcome judicious_kpartition(const WeightedGraph& g, int k);

// k-partition whose cut meets the balanced k-cut lower bound.
PartitionOutcome balanced_kcut(const WeightedGraph& g, int k);

}  // namespace jp
