#pragma once

#include "jp/rational.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace jp {

using Vertex = int;
using VertexSet = std::set<Vertex>;

// Undirected graph with exact non-negative rational edge weights.
// No self-loops; parallel edges are accumulated; an absent pair has weight 0.
// Immutable once built (all free functions below are pure).
class WeightedGraph {
 public:
  explicit WeightedGraph(int n);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  void add_edge(Vertex u, Vertex v, const Rational& w);
  Rational edge_weight(Vertex u, Vertex v) const;

  const std::map<std::pair<Vertex, Vertex>, Rational>& edges() const {
    return edges_;
  }
  const std::vector<std::pair<Vertex, Rational>>& neighbors(Vertex v) const;

  // All stored weights equal to 1.
  bool unweighted() const;

 private:
  int n_;
  std::map<std::pair<Vertex, Vertex>, Rational> edges_;
  std::vector<std::vector<std::pair<Vertex, Rational>>> adj_;
};

// Surjective assignment of [0, n) onto k non-empty parts.
class Partition {
 public:
  Partition(std::vector<int> assignment, int k);

  int part(Vertex v) const { return assignment_[v]; }
  int part_count() const { return k_; }
  int size() const { return static_cast<int>(assignment_.size()); }
  const std::vector<int>& assignment() const { return assignment_; }
  std::vector<std::vector<Vertex>> parts() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> assignment_;
  int k_;
};

Rational total_weight(const WeightedGraph& g);
Rational induced_weight(const WeightedGraph& g, const VertexSet& s);
Rational cut_weight(const WeightedGraph& g, const Partition& p);

// w_S(v) = sum of w(vx) over x in s (v itself contributes nothing).
Rational weight_to_set(const WeightedGraph& g, Vertex v, const VertexSet& s);

Rational weighted_degree(const WeightedGraph& g, Vertex v);
Rational max_weighted_degree(const WeightedGraph& g);
Rational avg_weighted_degree(const WeightedGraph& g);

std::vector<Rational> part_weights(const WeightedGraph& g, const Partition& p);
Rational max_part_weight(const WeightedGraph& g, const Partition& p);

struct DeleteResult {
  WeightedGraph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;
};

// Removes s (a proper subset of the vertices) and re-indexes the rest.
DeleteResult delete_vertices(const WeightedGraph& g, const VertexSet& s);

}  // namespace jp
