#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/graph.hpp"
#include "jp/instances.hpp"

#include <random>

using namespace jp;

namespace {

WeightedGraph k7() { return instances::complete_graph(7); }

WeightedGraph apex_14_5() { return instances::apex_graph(Rational(1, 4), 5); }

}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(WeightedGraph(0), std::invalid_argument);
  WeightedGraph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0, 1), std::invalid_argument);   // self-loop
  CHECK_THROWS_AS(g.add_edge(0, 1, -1), std::invalid_argument);  // negative
  CHECK_THROWS_AS(g.add_edge(0, 3, 1), std::out_of_range);       // range
}

TEST_CASE("parallel edges accumulate, zero weights are not stored") {
  WeightedGraph g(3);
  g.add_edge(0, 1, Rational(1, 2));
  g.add_edge(1, 0, Rational(1, 3));
  g.add_edge(1, 2, 0);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge_weight(0, 1) == Rational(5, 6));
  CHECK(g.edge_weight(1, 2) == 0);
  CHECK(g.edge_weight(0, 2) == 0);
}

TEST_CASE("total_weight") {
  CHECK(total_weight(k7()) == 21);
  CHECK(total_weight(WeightedGraph(5)) == 0);
  CHECK(total_weight(apex_14_5()) == Rational(45, 2));
}

TEST_CASE("induced_weight") {
  const WeightedGraph g = k7();
  CHECK(induced_weight(g, {0, 1, 2, 3}) == 6);
  CHECK(induced_weight(g, {4}) == 0);
  CHECK(induced_weight(g, {}) == 0);
  CHECK(induced_weight(g, {0, 1, 2}) == 3);  // K_{3q+1}, q=2, |s|=q+1
}

TEST_CASE("cut_weight") {
  const WeightedGraph g4 = instances::complete_graph(4);
  CHECK(cut_weight(g4, Partition({0, 0, 1, 2}, 3)) == 5);
  CHECK(cut_weight(g4, Partition({0, 1, 2, 3}, 4)) == total_weight(g4));
  CHECK(cut_weight(k7(), Partition({0, 0, 0, 1, 1, 1, 1}, 2)) == 12);
}

TEST_CASE("weight_to_set") {
  const WeightedGraph g5 = instances::complete_graph(5);
  CHECK(weight_to_set(g5, 0, {1, 2}) == 2);
  CHECK(weight_to_set(g5, 0, {}) == 0);
  CHECK(weight_to_set(g5, 0, {0, 1}) == 1);  // v inside s contributes nothing
  const WeightedGraph a = apex_14_5();
  CHECK(weight_to_set(a, 5, {0, 1, 2, 3, 4}) == Rational(25, 2));
}

TEST_CASE("degrees") {
  const WeightedGraph g = k7();
  CHECK(weighted_degree(g, 3) == 6);
  CHECK(max_weighted_degree(g) == 6);
  CHECK(avg_weighted_degree(g) == 6);
  CHECK(max_weighted_degree(apex_14_5()) == Rational(25, 2));
}

TEST_CASE("delete_vertices") {
  const auto res = delete_vertices(k7(), {4, 5, 6});
  CHECK(res.graph.order() == 4);
  CHECK(total_weight(res.graph) == 6);  // K_4
  CHECK(res.old_to_new[4] == -1);
  CHECK(res.new_to_old.size() == 4);

  const auto id = delete_vertices(k7(), {});
  CHECK(total_weight(id.graph) == 21);

  const auto peeled = delete_vertices(apex_14_5(), {5});
  CHECK(total_weight(peeled.graph) == 10);  // unit K_5
  CHECK(peeled.graph.unweighted());

  CHECK_THROWS_AS(delete_vertices(instances::complete_graph(2), {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({0, 0, 2}, 3), std::invalid_argument);  // empty 1
  CHECK_THROWS_AS(Partition({0, 1, 3}, 3), std::invalid_argument);  // range
  const Partition p({0, 1, 1, 0}, 2);
  CHECK(p.parts() == std::vector<std::vector<Vertex>>{{0, 3}, {1, 2}});
}

TEST_CASE("weight bookkeeping identities on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const WeightedGraph g = instances::random_weighted(
        n, Rational(1, 2), instances::WeightLaw::UniformGrid, rng());

    // degree sum identity
    Rational degsum = 0;
    for (Vertex v = 0; v < n; ++v) degsum += weighted_degree(g, v);
    CHECK(degsum == 2 * total_weight(g));

    // cut + per-part induced = total
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    std::vector<int> a(n);
    for (int i = 0; i < k; ++i) a[i] = i;
    for (int i = k; i < n; ++i) a[i] = static_cast<int>(rng() % k);
    const Partition p(a, k);
    Rational internal = 0;
    for (const Rational& pw : part_weights(g, p)) internal += pw;
    CHECK(cut_weight(g, p) + internal == total_weight(g));

    // delete_vertices bookkeeping
    VertexSet s;
    for (Vertex v = 0; v < n - 1; ++v)
      if (rng() % 2) s.insert(v);
    const auto del = delete_vertices(g, s);
    Rational degsum_s = 0;
    for (Vertex v : s) degsum_s += weighted_degree(g, v);
    const Rational inside = induced_weight(g, s);
    const Rational cut_to_rest = degsum_s - 2 * inside;
    CHECK(total_weight(del.graph) ==
          total_weight(g) - inside - cut_to_rest);

    // weight_to_set additive over disjoint union
    VertexSet t;
    for (Vertex v = 0; v < n; ++v)
      if (!s.count(v)) t.insert(v);
    VertexSet both = s;
    both.insert(t.begin(), t.end());
    const Vertex probe = static_cast<Vertex>(rng() % n);
    CHECK(weight_to_set(g, probe, both) ==
          weight_to_set(g, probe, s) + weight_to_set(g, probe, t));
  }
}
