#include "jp/partitioners.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jp {

namespace {

// Vertex subset with incrementally maintained internal weight and, for every
// vertex of the host graph, its weight towards the subset.
struct Subset {
  const WeightedGraph* g;
  VertexSet members;
  Rational internal{0};
  std::vector<Rational> deg;  // deg[v] = w(v -> members \ {v})

  Subset(const WeightedGraph& graph, const VertexSet& s)
      : g(&graph), members(s), deg(graph.order(), Rational(0)) {
    for (Vertex v : members)
      for (const auto& [u, w] : graph.neighbors(v)) deg[u] += w;
    for (Vertex v : members) internal += deg[v];
    internal /= 2;
  }

  void remove(Vertex v) {
    members.erase(v);
    internal -= deg[v];
    for (const auto& [u, w] : g->neighbors(v)) deg[u] -= w;
  }

  void add(Vertex v) {
    internal += deg[v];
    members.insert(v);
    for (const auto& [u, w] : g->neighbors(v)) deg[u] += w;
  }

  Vertex argmax_deg() const {
    Vertex best = -1;
    for (Vertex v : members)
      if (best < 0 || deg[v] > deg[best]) best = v;
    return best;
  }

  Vertex argmin_deg() const {
    Vertex best = -1;
    for (Vertex v : members)
      if (best < 0 || deg[v] < deg[best]) best = v;
    return best;
  }
};

void claim(bool ok, const char* what, const AlgorithmTrace& trace) {
  if (ok) return;
  throw ClaimViolation(std::string("claim violated: ") + what + "\n" +
                       trace.describe());
}

Partition partition_from_sets(int n, const std::vector<const VertexSet*>& sets) {
  std::vector<int> a(n, -1);
  for (std::size_t p = 0; p < sets.size(); ++p)
    for (Vertex v : *sets[p]) a[v] = static_cast<int>(p);
  return Partition(std::move(a), static_cast<int>(sets.size()));
}

PartitionOutcome finalize(const WeightedGraph& g, Partition p,
                          AlgorithmTrace trace,
                          const std::optional<Rational>& cut_lower,
                          const std::optional<Rational>& part_upper) {
  Rational cut = cut_weight(g, p);
  std::vector<Rational> weights = part_weights(g, p);
  PartitionOutcome out{std::move(p), std::move(cut), std::move(weights),
                       std::move(trace)};
  if (cut_lower)
    claim(out.cut >= *cut_lower, "guaranteed cut lower bound", out.trace);
  if (part_upper) {
    const Rational heaviest =
        *std::max_element(out.part_weights.begin(), out.part_weights.end());
    claim(heaviest <= *part_upper, "guaranteed part upper bound", out.trace);
  }
  return out;
}

Partition singleton_partition(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  return Partition(std::move(a), n);
}

Partition refined_seed(const WeightedGraph& g, int k, std::vector<Move>* moves) {
  return local_search_refine(g, derandomized_balanced_partition(g, k), false,
                             moves)
      .first;
}

std::vector<int> balanced_capacities(int n, int k) {
  std::vector<int> caps(k, n / k);
  for (int p = 0; p < n % k; ++p) ++caps[p];
  return caps;
}

}  // namespace

std::string AlgorithmTrace::describe() const {
  std::ostringstream os;
  os << "trace{r=" << to_string(r) << " c=" << to_string(c)
     << " theta=" << to_string(theta) << " n3=" << n3
     << " seed_expectation=" << to_string(seed_expectation) << " peeled=[";
  for (std::size_t i = 0; i < peel_sequence.size(); ++i)
    os << (i ? "," : "") << peel_sequence[i];
  os << "]";
  if (pivot) os << " pivot=" << *pivot;
  os << " moves=" << moves.size() << " cases=[";
  for (std::size_t i = 0; i < level_case.size(); ++i)
    os << (i ? "," : "") << level_case[i];
  os << "]}";
  return os.str();
}

bool LocalOptimalityCertificate::locally_optimal() const {
  for (const auto& row : margin)
    for (const auto& m : row)
      if (m < 0) return false;
  return true;
}

std::vector<Vertex> default_seed_order(const WeightedGraph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> deg(g.order());
  for (Vertex v = 0; v < g.order(); ++v) deg[v] = weighted_degree(g, v);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  return order;
}

Rational balanced_partition_expected_cut(const WeightedGraph& g, int k) {
  const int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");
  const auto caps = balanced_capacities(n, k);
  Rational same = 0;
  for (int c : caps) same += Rational(static_cast<long>(c) * (c - 1));
  same /= Rational(static_cast<long>(n) * (n - 1));
  return total_weight(g) * (1 - same);
}

Partition derandomized_balanced_partition(const WeightedGraph& g, int k) {
  return derandomized_balanced_partition(g, k, default_seed_order(g));
}

Partition derandomized_balanced_partition(const WeightedGraph& g, int k,
                                          const std::vector<Vertex>& seed_order) {
  const int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");
  {
    std::vector<bool> seen(n, false);
    if (static_cast<int>(seed_order.size()) != n)
      throw std::invalid_argument("seed order must list every vertex once");
    for (Vertex v : seed_order) {
      if (v < 0 || v >= n || seen[v])
        throw std::invalid_argument("seed order must list every vertex once");
      seen[v] = true;
    }
  }

  auto caps = balanced_capacities(n, k);
  int slots = n;
  std::vector<int> assign(n, -1);

  // Conditional-expectation state (see header): weight from each unassigned
  // vertex to each part, to the unassigned rest, and the per-part totals.
  std::vector<std::vector<Rational>> to_part(n, std::vector<Rational>(k, 0));
  std::vector<Rational> to_assigned(n, Rational(0));
  std::vector<Rational> to_unassigned(n);
  for (Vertex v = 0; v < n; ++v) to_unassigned[v] = weighted_degree(g, v);
  std::vector<Rational> part_totals(k, Rational(0));
  Rational unassigned_pairs = total_weight(g);
  Rational realized = 0;

  for (Vertex v : seed_order) {
    int best = -1;
    Rational best_expect;
    for (int p = 0; p < k; ++p) {
      if (caps[p] == 0) continue;
      const int s1 = slots - 1;
      Rational expect = realized + (to_assigned[v] - to_part[v][p]);
      if (s1 >= 1) {
        for (int q = 0; q < k; ++q) {
          Rational sq = part_totals[q] - to_part[v][q];
          if (q == p) sq += to_unassigned[v];
          const int cq = caps[q] - (q == p ? 1 : 0);
          expect += sq * Rational(s1 - cq, s1);
        }
      }
      if (s1 >= 2) {
        Rational same = 0;
        for (int q = 0; q < k; ++q) {
          const long cq = caps[q] - (q == p ? 1 : 0);
          same += Rational(cq * (cq - 1));
        }
        same /= Rational(static_cast<long>(s1) * (s1 - 1));
        expect += (unassigned_pairs - to_unassigned[v]) * (1 - same);
      }
      if (best < 0 || expect > best_expect) {
        best = p;
        best_expect = std::move(expect);
      }
    }
    assign[v] = best;
    realized += to_assigned[v] - to_part[v][best];
    for (int q = 0; q < k; ++q) part_totals[q] -= to_part[v][q];
    part_totals[best] += to_unassigned[v];
    unassigned_pairs -= to_unassigned[v];
    --caps[best];
    --slots;
    for (const auto& [u, w] : g.neighbors(v)) {
      if (assign[u] != -1) continue;
      to_part[u][best] += w;
      to_assigned[u] += w;
      to_unassigned[u] -= w;
    }
  }
  return Partition(std::move(assign), k);
}

std::pair<Partition, LocalOptimalityCertificate> local_search_refine(
    const WeightedGraph& g, const Partition& p, bool allow_empty,
    std::vector<Move>* moves) {
  const int n = g.order();
  const int k = p.part_count();
  std::vector<int> a = p.assignment();
  std::vector<std::vector<Rational>> to_part(n, std::vector<Rational>(k, 0));
  for (const auto& [e, w] : g.edges()) {
    to_part[e.first][a[e.second]] += w;
    to_part[e.second][a[e.first]] += w;
  }
  std::vector<int> sizes(k, 0);
  for (int q : a) ++sizes[q];

  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex v = 0; v < n && !improved; ++v) {
      const int own = a[v];
      if (sizes[own] == 1 && !allow_empty) continue;
      for (int j = 0; j < k; ++j) {
        if (j == own || to_part[v][own] <= to_part[v][j]) continue;
        if (moves) moves->push_back({v, own, j, to_part[v][own] - to_part[v][j]});
        a[v] = j;
        --sizes[own];
        ++sizes[j];
        for (const auto& [u, w] : g.neighbors(v)) {
          to_part[u][own] -= w;
          to_part[u][j] += w;
        }
        improved = true;
        break;
      }
    }
  }

  LocalOptimalityCertificate cert;
  cert.margin.assign(n, std::vector<Rational>(k, 0));
  for (Vertex v = 0; v < n; ++v)
    for (int j = 0; j < k; ++j)
      cert.margin[v][j] = to_part[v][j] - to_part[v][a[v]];
  return {Partition(std::move(a), k), std::move(cert)};
}

PartitionOutcome judicious_bipartition(const WeightedGraph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("bipartition needs n >= 2");
  const Rational w = total_weight(g);
  const Rational delta = max_weighted_degree(g);
  const Rational cut_lower = w / 2 + avg_weighted_degree(g) / 4;
  const Rational part_upper = w / 4 + delta / 8;

  AlgorithmTrace trace;
  trace.seed_expectation = balanced_partition_expected_cut(g, 2);
  if (n == 2)
    return finalize(g, singleton_partition(2), std::move(trace), cut_lower,
                    part_upper);

  Partition p = refined_seed(g, 2, &trace.moves);
  claim(cut_weight(g, p) >= trace.seed_expectation, "derandomized seed bound",
        trace);
  const auto weights = part_weights(g, p);
  const int heavy = weights[0] >= weights[1] ? 0 : 1;
  if (weights[heavy] <= part_upper)
    return finalize(g, std::move(p), std::move(trace), cut_lower, part_upper);

  // Peel the heavy side, largest w_X(v) first, until conditions (a)/(b) hold;
  // the condition-(b) pivot then crosses over as well.
  VertexSet heavy_set;
  for (Vertex v = 0; v < n; ++v)
    if (p.part(v) == heavy) heavy_set.insert(v);
  Subset x(g, heavy_set);
  while (true) {
    const Vertex v = x.argmax_deg();
    claim(v >= 0, "heavy part exhausted before conditions (a)/(b)", trace);
    if (x.internal - x.deg[v] <= part_upper) {
      trace.pivot = v;
      x.remove(v);
      break;
    }
    x.remove(v);
    trace.peel_sequence.push_back(v);
  }
  claim(!x.members.empty(), "peeled part must stay non-empty", trace);

  std::vector<int> a(n, 1);
  for (Vertex v : x.members) a[v] = 0;
  return finalize(g, Partition(std::move(a), 2), std::move(trace), cut_lower,
                  part_upper);
}

PartitionOutcome judicious_3partition(const WeightedGraph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("3-partition needs n >= 3");
  const Rational w = total_weight(g);
  const Rational delta = max_weighted_degree(g);
  const Rational cut_lower = 2 * w / 3 + avg_weighted_degree(g) / 3;
  const Rational part_upper = (w + delta) / 9;

  AlgorithmTrace trace;
  trace.seed_expectation = balanced_partition_expected_cut(g, 3);
  if (n == 3)
    return finalize(g, singleton_partition(3), std::move(trace), cut_lower,
                    part_upper);

  Partition p = refined_seed(g, 3, &trace.moves);
  claim(cut_weight(g, p) >= cut_lower, "max-3-cut seed bound", trace);
  const auto weights = part_weights(g, p);
  const int heavy = static_cast<int>(
      std::max_element(weights.begin(), weights.end()) - weights.begin());
  if (weights[heavy] <= part_upper)
    return finalize(g, std::move(p), std::move(trace), cut_lower, part_upper);

  // Peel the heavy part down to X3*: remove the vertex of minimum internal
  // degree while some single removal still leaves the weight above the
  // target, so (a) stays true throughout and the loop exits exactly when (b)
  // holds for every remaining vertex.
  VertexSet heavy_set;
  for (Vertex v = 0; v < n; ++v)
    if (p.part(v) == heavy) heavy_set.insert(v);
  Subset x3(g, heavy_set);
  while (true) {
    const Vertex y = x3.argmin_deg();
    claim(y >= 0, "heavy part exhausted before conditions (a)/(b)", trace);
    if (x3.internal - x3.deg[y] <= part_upper) break;
    x3.remove(y);
    trace.peel_sequence.push_back(y);
  }
  claim(x3.internal > part_upper, "condition (a) on X3*", trace);

  const Vertex x = x3.argmax_deg();
  trace.pivot = x;
  x3.remove(x);  // x3 is now X3'
  const int n3 = static_cast<int>(x3.members.size());
  trace.n3 = n3;
  const Rational wx = x3.deg[x];  // w_{X3'}(x)

  trace.r = part_upper - x3.internal;
  claim(trace.r >= 0, "deficit r must be non-negative", trace);
  claim(trace.r < wx, "deficit r must be < w_{X3'}(x)", trace);
  claim(3 * wx <= delta, "w_{X3'}(x) <= Delta_w/3", trace);
  trace.c = delta > 0 ? 9 * trace.r / delta : Rational(0);
  claim(trace.c >= 0 && trace.c < 3, "0 <= c < 3", trace);

  Rational x3_cut = -2 * x3.internal;
  for (Vertex v : x3.members) x3_cut += weighted_degree(g, v);
  trace.theta = x3_cut - (4 * w / 9 + 4 * delta / 9 - trace.r);
  claim(trace.theta >= 3 * (wx - trace.r), "cut surplus theta >= 3(w_{X3'}(x) - r)", trace);
  claim(n - n3 >= 3, "n - n3 >= 3", trace);

  // Cut the rest: G' = G - X3', locally optimal bipartition meeting the
  // balanced-cut expectation bound.
  const auto del = delete_vertices(g, x3.members);
  const Partition sub = refined_seed(del.graph, 2, nullptr);
  claim(cut_weight(del.graph, sub) >=
            balanced_partition_expected_cut(del.graph, 2),
        "balanced-cut bound on G'", trace);
  VertexSet x1, x2;
  for (Vertex i = 0; i < del.graph.order(); ++i)
    (sub.part(i) == 0 ? x1 : x2).insert(del.new_to_old[i]);

  {
    const Partition candidate =
        partition_from_sets(n, {&x1, &x2, &x3.members});
    claim(cut_weight(g, candidate) >= cut_lower, "3-cut lower bound on (X1,X2,X3')", trace);
    const Rational i1 = induced_weight(g, x1);
    const Rational i2 = induced_weight(g, x2);
    if (std::max(i1, i2) <= part_upper)
      return finalize(g, candidate, std::move(trace), cut_lower, part_upper);
    if (i1 > i2) std::swap(x1, x2);
  }

  // Transfer loop: shift vertices from the heavy side of the cut of G' into
  // the light side until the heavy side drops to the target.
  Subset x2s(g, x2);
  Vertex last = -1;
  while (x2s.internal > part_upper) {
    const Vertex u = x2s.argmax_deg();
    claim(u >= 0, "transfer source exhausted", trace);
    x2s.remove(u);
    x1.insert(u);
    trace.peel_sequence.push_back(u);
    last = u;
  }
  claim(last >= 0 && !x2s.members.empty(), "transfer loop sanity", trace);
  trace.pivot = last;

  const Rational r_prime = part_upper - x2s.internal;
  claim(r_prime >= 0, "r' >= 0", trace);
  claim(weight_to_set(g, last, x2s.members) >= r_prime, "w_{X2''}(u) >= r'",
        trace);
  Rational cut12 = 0;
  for (Vertex v : x2s.members) cut12 += weight_to_set(g, v, x1);
  claim(cut12 >= 2 * w / 9 + 2 * delta / 9,
        "w(X2'',X1'') >= 2w/9 + 2Delta_w/9", trace);

  {
    const Partition candidate =
        partition_from_sets(n, {&x1, &x2s.members, &x3.members});
    claim(cut_weight(g, candidate) >=
              6 * w / 9 + 6 * delta / 9 - trace.r + trace.theta,
          "3-cut lower chain after transfers", trace);
    if (induced_weight(g, x1) <= part_upper)
      return finalize(g, candidate, std::move(trace), cut_lower, part_upper);
  }

  // Last resort: the final transfer of u into X3'.
  claim(r_prime > (delta - trace.r) / 2, "r' > (Delta_w - r)/2 branch", trace);
  claim(weight_to_set(g, last, x3.members) < trace.r, "w_{X3'}(u) < r", trace);
  x1.erase(last);
  claim(!x1.empty(), "X1* must stay non-empty", trace);
  x3.add(last);
  claim(x3.internal < part_upper, "w(G[X3*]) < (w + Delta_w)/9", trace);
  claim(induced_weight(g, x1) <= w / 9, "w(G[X1*]) <= w/9", trace);

  return finalize(g, partition_from_sets(n, {&x1, &x2s.members, &x3.members}),
                  std::move(trace), cut_lower, part_upper);
}

PartitionOutcome judicious_kpartition(const WeightedGraph& g, int k) {
  const int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");
  if (k == 2) return judicious_bipartition(g);

  const Rational w = total_weight(g);
  const Rational delta = max_weighted_degree(g);
  const Rational part_upper =
      w / (static_cast<long>(k) * k) + Rational(k - 1, 2L * k * k) * delta;

  AlgorithmTrace trace;
  trace.seed_expectation = balanced_partition_expected_cut(g, k);
  if (k == n)
    return finalize(g, singleton_partition(n), std::move(trace), std::nullopt,
                    part_upper);

  Partition p = refined_seed(g, k, &trace.moves);
  const auto weights = part_weights(g, p);
  const int heavy = static_cast<int>(
      std::max_element(weights.begin(), weights.end()) - weights.begin());
  if (weights[heavy] <= part_upper) {
    trace.level_case.push_back(0);
    return finalize(g, std::move(p), std::move(trace), std::nullopt,
                    part_upper);
  }

  // Peel the heaviest part, largest w_{X1}(v) first; x is the last removal.
  VertexSet heavy_set;
  for (Vertex v = 0; v < n; ++v)
    if (p.part(v) == heavy) heavy_set.insert(v);
  Subset x1(g, heavy_set);
  Vertex x = -1;
  while (x1.internal > part_upper) {
    x = x1.argmax_deg();
    claim(x >= 0, "heavy part exhausted during peel", trace);
    x1.remove(x);
    trace.peel_sequence.push_back(x);
  }
  claim(x >= 0 && !x1.members.empty(), "peel sanity", trace);
  trace.pivot = x;

  const Rational r = part_upper - x1.internal;
  trace.r = r;
  trace.level_r.push_back(r);
  claim(r >= 0, "r >= 0", trace);
  claim(r < x1.deg[x], "r < w_{X1'}(x)", trace);
  claim(r * k <= delta, "r <= Delta_w/k", trace);

  DeleteResult del = delete_vertices(g, x1.members);
  const Rational delta_rest = max_weighted_degree(del.graph);
  if (delta_rest <= delta - r) {
    trace.level_case.push_back(1);
  } else {
    trace.level_case.push_back(2);
    Vertex y = 0;
    Rational y_deg = weighted_degree(del.graph, 0);
    for (Vertex v = 1; v < del.graph.order(); ++v) {
      const Rational d = weighted_degree(del.graph, v);
      if (d > y_deg) {
        y = v;
        y_deg = d;
      }
    }
    claim(y_deg > delta - r, "Case 2 witness w_{G'}(y) > Delta_w - r", trace);
    const Vertex y_old = del.new_to_old[y];
    claim(weight_to_set(g, y_old, x1.members) < r, "w_{X1''}(y) < r", trace);
    x1.add(y_old);
    claim(x1.internal < part_upper, "w(G[X1'']) < bound", trace);
    del = delete_vertices(g, x1.members);
  }

  PartitionOutcome sub = judicious_kpartition(del.graph, k - 1);
  trace.level_r.insert(trace.level_r.end(), sub.trace.level_r.begin(),
                       sub.trace.level_r.end());
  trace.level_case.insert(trace.level_case.end(), sub.trace.level_case.begin(),
                          sub.trace.level_case.end());

  std::vector<int> a(n, -1);
  for (Vertex v : x1.members) a[v] = 0;
  for (Vertex i = 0; i < del.graph.order(); ++i)
    a[del.new_to_old[i]] = 1 + sub.partition.part(i);
  return finalize(g, Partition(std::move(a), k), std::move(trace),
                  std::nullopt, part_upper);
}

PartitionOutcome balanced_kcut(const WeightedGraph& g, int k) {
  const int n = g.order();
  if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");
  const Rational w = total_weight(g);
  const Rational h = k % 2 == 0
                         ? Rational((k - 2L) * (k - 2), 4L * (n - 1) * (k - 1))
                         : Rational(k - 3, 4L * (n - 1));
  const Rational cut_lower =
      Rational(k - 1, k) * w +
      Rational(k - 1, 2L * k) * (1 - h) * avg_weighted_degree(g);

  AlgorithmTrace trace;
  trace.seed_expectation = balanced_partition_expected_cut(g, k);
  Partition p = refined_seed(g, k, &trace.moves);
  claim(cut_weight(g, p) >= trace.seed_expectation, "derandomized seed bound",
        trace);
  return finalize(g, std::move(p), std::move(trace), cut_lower, std::nullopt);
}

}  // namespace jp
