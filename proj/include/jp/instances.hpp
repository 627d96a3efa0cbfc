#pragma once

#include "jp/graph.hpp"
#include "jp/rational.hpp"

#include <cstdint>
#include <string>

namespace jp::instances {

enum class Family {
  Complete,
  CompleteTight,    // unweighted K_{qk+1}
  Apex,             // unit K_n plus an apex joined to all with weight 2cn
  IsolatedPadding,  // unweighted K_m plus isolated vertices
  RandomWeighted,
  FromFile,
};

enum class WeightLaw { Unit, UniformGrid, ExponentialGrid };

struct InstanceSpec {
  Family family = Family::Complete;
  int n = 0;  // Complete / Apex (clique size) / RandomWeighted
  int k = 0, q = 0;                  // CompleteTight
  Rational c{0};                     // Apex
  int n_clique = 0, n_isolated = 0;  // IsolatedPadding
  Rational edge_prob{0};             // RandomWeighted
  WeightLaw weight_law = WeightLaw::UniformGrid;
  std::uint64_t seed = 0;
  std::string path;  // FromFile

  std::string describe() const;
};

WeightedGraph generate(const InstanceSpec& spec);

WeightedGraph complete_graph(int n);
WeightedGraph complete_tight(int k, int q);  // K_{qk+1}
// Requires 0 < c <= 1/4 and n > 1/(4c^2).
WeightedGraph apex_graph(const Rational& c, int n);
WeightedGraph isolated_padding(int n_clique, int n_isolated);
// Weights land on the 1/2^16 grid; edge presence decided by an exact
// comparison of a uniform draw against edge_prob. Bit-reproducible from seed.
WeightedGraph random_weighted(int n, const Rational& edge_prob, WeightLaw law,
                              std::uint64_t seed);

// A graph on which no bipartition keeps the heavier side at or below
// w/4 + c * d_w: a triangle padded with enough isolated vertices.
struct Prop2Result {
  WeightedGraph graph;
  int clique_size;
  int isolated;
  Rational min_max_side;  // min over bipartitions of max(w[X], w[Y])
  Rational threshold;     // w/4 + c * d_w
  bool exhaustive;        // oracle-verified; otherwise the closed form stands
  std::uint64_t cuts_checked;
};

Prop2Result proposition2_search(const Rational& c, int cap);

}  // namespace jp::instances
