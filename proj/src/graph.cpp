#include "jp/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace jp {

WeightedGraph::WeightedGraph(int n) : n_(n), adj_(std::max(n, 0)) {
  if (n <= 0) throw std::invalid_argument("graph order must be positive");
}

void WeightedGraph::add_edge(Vertex u, Vertex v, const Rational& w) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::out_of_range("vertex index out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (w < 0) throw std::invalid_argument("edge weights must be non-negative");
  if (w == 0) return;
  if (u > v) std::swap(u, v);
  auto [it, inserted] = edges_.try_emplace({u, v}, w);
  if (inserted) {
    adj_[u].emplace_back(v, w);
    adj_[v].emplace_back(u, w);
    return;
  }
  it->second += w;
  for (auto& [x, wx] : adj_[u])
    if (x == v) wx = it->second;
  for (auto& [x, wx] : adj_[v])
    if (x == u) wx = it->second;
}

Rational WeightedGraph::edge_weight(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = edges_.find({u, v});
  return it == edges_.end() ? Rational(0) : it->second;
}

const std::vector<std::pair<Vertex, Rational>>& WeightedGraph::neighbors(
    Vertex v) const {
  return adj_.at(v);
}

bool WeightedGraph::unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const auto& e) { return e.second == 1; });
}

Partition::Partition(std::vector<int> assignment, int k)
    : assignment_(std::move(assignment)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("part count must be positive");
  if (static_cast<std::size_t>(k_) > assignment_.size())
    throw std::invalid_argument("more parts than vertices");
  std::vector<bool> used(k_, false);
  for (int p : assignment_) {
    if (p < 0 || p >= k_) throw std::invalid_argument("part index out of range");
    used[p] = true;
  }
  if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
    throw std::invalid_argument("every part must be non-empty");
}

std::vector<std::vector<Vertex>> Partition::parts() const {
  std::vector<std::vector<Vertex>> out(k_);
  for (Vertex v = 0; v < size(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

Rational total_weight(const WeightedGraph& g) {
  Rational sum = 0;
  for (const auto& [e, w] : g.edges()) sum += w;
  return sum;
}

Rational induced_weight(const WeightedGraph& g, const VertexSet& s) {
  Rational sum = 0;
  for (const auto& [e, w] : g.edges())
    if (s.count(e.first) && s.count(e.second)) sum += w;
  return sum;
}

Rational cut_weight(const WeightedGraph& g, const Partition& p) {
  Rational sum = 0;
  for (const auto& [e, w] : g.edges())
    if (p.part(e.first) != p.part(e.second)) sum += w;
  return sum;
}

Rational weight_to_set(const WeightedGraph& g, Vertex v, const VertexSet& s) {
  Rational sum = 0;
  for (const auto& [u, w] : g.neighbors(v))
    if (s.count(u)) sum += w;
  return sum;
}

Rational weighted_degree(const WeightedGraph& g, Vertex v) {
  Rational sum = 0;
  for (const auto& [u, w] : g.neighbors(v)) sum += w;
  return sum;
}

Rational max_weighted_degree(const WeightedGraph& g) {
  Rational best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::max(best, weighted_degree(g, v));
  return best;
}

Rational avg_weighted_degree(const WeightedGraph& g) {
  return 2 * total_weight(g) / g.order();
}

std::vector<Rational> part_weights(const WeightedGraph& g, const Partition& p) {
  std::vector<Rational> out(p.part_count(), Rational(0));
  for (const auto& [e, w] : g.edges())
    if (p.part(e.first) == p.part(e.second)) out[p.part(e.first)] += w;
  return out;
}

Rational max_part_weight(const WeightedGraph& g, const Partition& p) {
  const auto weights = part_weights(g, p);
  return *std::max_element(weights.begin(), weights.end());
}

DeleteResult delete_vertices(const WeightedGraph& g, const VertexSet& s) {
  if (static_cast<int>(s.size()) >= g.order())
    throw std::invalid_argument("cannot delete every vertex");
  std::vector<Vertex> old_to_new(g.order(), -1);
  std::vector<Vertex> new_to_old;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.count(v)) continue;
    old_to_new[v] = static_cast<Vertex>(new_to_old.size());
    new_to_old.push_back(v);
  }
  WeightedGraph out(static_cast<int>(new_to_old.size()));
  for (const auto& [e, w] : g.edges()) {
    const Vertex u = old_to_new[e.first];
    const Vertex v = old_to_new[e.second];
    if (u >= 0 && v >= 0) out.add_edge(u, v, w);
  }
  return {std::move(out), std::move(old_to_new), std::move(new_to_old)};
}

}  // namespace jp
