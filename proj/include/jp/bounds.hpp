#pragma once

#include "jp/graph.hpp"
#include "jp/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jp {

// One id per closed-form bound. Cut bounds are lower bounds on the k-cut
// weight; part bounds are upper bounds on the heaviest induced part.
enum class BoundId {
  EdwardsLower,        // e/2 + sqrt(e/8 + 1/64) - 1/8
  BSPartUpper,         // e/4 + sqrt(e/32 + 1/256) - 1/16
  BSkPartUpper,        // e/k^2 + (k-1)/(2k^2) (sqrt(2e + 1/4) - 1/2)
  EdwardskCutLower,    // (k-1)/k e + (k-1)/(2k)(sqrt(2e+1/4) - 1/2) - (k-2)^2/(8k)
  XuYuCutLower,        // (k-1)/k e + (k-1)/(2k)(sqrt(2e+1/4) - 1/2) - 17k/8
  OddDegCutLower,      // (D+1)/(2D) e, unweighted with odd max degree D
  OddDegPartUpper,     // (D-1)/(4D) e + (D-1)/4
  MaxdCutLower,        // w/2 + d_w/4
  MaxdPartUpper,       // w/4 + Delta_w/8
  Max32CutLower,       // 2w/3 + d_w/3
  Max32PartUpper,      // w/9 + Delta_w/9
  MaxkPartUpper,       // w/k^2 + (k-1)/(2k^2) Delta_w
  Lemma1CutLower,      // (1/2 + 1/(2(n-t))) w, t = [n even]
  KkkkCutLower,        // (k-1)/k w + (k-1)/(2k) (1-h) d_w, h by parity of k
  ConjectureCutLower,  // same formula as KkkkCutLower
  ConjecturePartUpper  // same formula as MaxkPartUpper
};

enum class BoundKind { Lower, Upper };

BoundKind bound_kind(BoundId id);
bool is_cut_bound(BoundId id);
// Part count the bound is stated for, or 0 when the formula takes k itself.
int fixed_k(BoundId id);
std::string bound_name(BoundId id);
std::optional<BoundId> bound_from_name(const std::string& name);
std::vector<BoundId> all_bound_ids();

struct BoundParams {
  Rational wG;      // total weight
  Rational eG;      // edge count
  long n = 0;       // order
  long k = 0;       // part count
  Rational deltaW;  // max weighted degree
  Rational dW;      // average weighted degree
  bool unweighted = false;
  long max_degree = 0;  // unweighted max degree (odd-degree theorem)
};

BoundParams bound_params(const WeightedGraph& g, long k);

// Exact value, or a certified enclosure of width <= 2^-64 for the
// square-root formulas.
Interval eval_bound(BoundId id, const BoundParams& params);

// Lower-order term of the balanced k-cut bound; zero exactly for k in {2,3}.
Rational kkkk_lower_order_term(long k, long n);

bool bound_applicable(BoundId id, const BoundParams& params);

enum class Satisfaction { Satisfied, Violated, Indeterminate, NotApplicable };
std::string to_string(Satisfaction s);

struct BoundCheck {
  BoundId id;
  Interval value;
  Rational achieved;
  Satisfaction status;
  // achieved - value; present only when the value is exact.
  std::optional<Rational> slack;
};

struct BoundReport {
  std::vector<BoundCheck> checks;

  bool all_satisfied() const;  // no Violated and no Indeterminate
};

BoundReport report(const WeightedGraph& g, const Partition& p,
                   const std::vector<BoundId>& ids);

}  // namespace jp
