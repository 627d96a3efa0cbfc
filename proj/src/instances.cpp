#include "jp/instances.hpp"

#include "jp/io.hpp"
#include "jp/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace jp::instances {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// floor for a non-negative rational
long floor_nonneg(const Rational& x) {
  return static_cast<long>(boost::multiprecision::numerator(x) /
                           boost::multiprecision::denominator(x));
}

}  // namespace

std::string InstanceSpec::describe() const {
  std::ostringstream ss;
  switch (family) {
    case Family::Complete:
      ss << "complete n=" << n;
      break;
    case Family::CompleteTight:
      ss << "complete-tight k=" << k << " q=" << q;
      break;
    case Family::Apex:
      ss << "apex c=" << to_string(c) << " n=" << n;
      break;
    case Family::IsolatedPadding:
      ss << "isolated-padding clique=" << n_clique
         << " isolated=" << n_isolated;
      break;
    case Family::RandomWeighted:
      ss << "random n=" << n << " p=" << to_string(edge_prob) << " law="
         << (weight_law == WeightLaw::Unit
                 ? "unit"
                 : weight_law == WeightLaw::UniformGrid ? "uniform" : "exp")
         << " seed=" << seed;
      break;
    case Family::FromFile:
      ss << "file " << path;
      break;
  }
  return ss.str();
}

WeightedGraph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
  return g;
}

WeightedGraph complete_tight(int k, int q) {
  require(k >= 2 && q >= 1, "complete-tight needs k >= 2 and q >= 1");
  return complete_graph(q * k + 1);
}

WeightedGraph apex_graph(const Rational& c, int n) {
  require(c > 0 && c <= Rational(1, 4), "apex needs 0 < c <= 1/4");
  require(4 * c * c * n > 1, "apex needs n > 1/(4c^2)");
  WeightedGraph g(n + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v, 1);
  const Rational apex_w = 2 * c * n;
  for (int u = 0; u < n; ++u) g.add_edge(u, n, apex_w);
  return g;
}

WeightedGraph isolated_padding(int n_clique, int n_isolated) {
  require(n_clique >= 1 && n_isolated >= 0,
          "isolated-padding needs clique >= 1 and isolated >= 0");
  WeightedGraph g(n_clique + n_isolated);
  for (int u = 0; u < n_clique; ++u)
    for (int v = u + 1; v < n_clique; ++v) g.add_edge(u, v, 1);
  return g;
}

WeightedGraph random_weighted(int n, const Rational& edge_prob, WeightLaw law,
                              std::uint64_t seed) {
  require(n >= 1, "random graph needs n >= 1");
  require(edge_prob >= 0 && edge_prob <= 1, "edge_prob must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  WeightedGraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const std::uint64_t roll = rng() >> 44;  // 20 bits
      if (Rational(static_cast<long>(roll), 1 << 20) >= edge_prob) continue;
      Rational w;
      switch (law) {
        case WeightLaw::Unit:
          w = 1;
          break;
        case WeightLaw::UniformGrid: {
          const long j = static_cast<long>(rng() >> 48) + 1;  // [1, 2^16]
          w = Rational(j, 1L << 16);
          break;
        }
        case WeightLaw::ExponentialGrid: {
          // halve the range once per leading coin-flip success
          const std::uint64_t coins = rng();
          int t = 0;
          while (t < 15 && ((coins >> t) & 1)) ++t;
          const long span = 1L << (16 - t);
          const long j = static_cast<long>(rng() % span) + 1;
          w = Rational(j, 1L << 16);
          break;
        }
      }
      g.add_edge(u, v, w);
    }
  }
  return g;
}

WeightedGraph generate(const InstanceSpec& spec) {
  switch (spec.family) {
    case Family::Complete:
      return complete_graph(spec.n);
    case Family::CompleteTight:
      return complete_tight(spec.k, spec.q);
    case Family::Apex:
      return apex_graph(spec.c, spec.n);
    case Family::IsolatedPadding:
      return isolated_padding(spec.n_clique, spec.n_isolated);
    case Family::RandomWeighted:
      return random_weighted(spec.n, spec.edge_prob, spec.weight_law,
                             spec.seed);
    case Family::FromFile:
      return io::read_wel_file(spec.path);
  }
  throw std::invalid_argument("unknown instance family");
}

Prop2Result proposition2_search(const Rational& c, int cap) {
  require(c > 0, "need c > 0");
  // On K_3 plus p isolated vertices every bipartition keeps the whole
  // triangle weight 1 on some side, while d_w = 6/(3+p). The side bound
  // w/4 + c*d_w = 3/4 + 6c/(3+p) drops below 1 once 3+p > 24c.
  const Rational excess = 24 * c - 3;
  const int p = excess < 0 ? 0 : static_cast<int>(floor_nonneg(excess)) + 1;
  const int n = 3 + p;
  WeightedGraph g = isolated_padding(3, p);
  const Rational threshold = Rational(3, 4) + c * avg_weighted_degree(g);

  Prop2Result out{std::move(g), 3, p, Rational(1), threshold, false, 0};
  if (n <= cap) {
    std::optional<Rational> best;
    std::uint64_t count = 0;
    oracle::enumerate_kpartitions(
        n, 2,
        [&](const Partition& part) {
          ++count;
          const std::vector<Rational> pw = part_weights(out.graph, part);
          const Rational m = std::max(pw[0], pw[1]);
          if (!best || m < *best) best = m;
        },
        cap);
    out.min_max_side = *best;
    out.exhaustive = true;
    out.cuts_checked = count;
  }
  if (out.min_max_side <= threshold)
    throw std::logic_error("proposition2_search produced a non-violator");
  return out;
}

}  // namespace jp::instances
