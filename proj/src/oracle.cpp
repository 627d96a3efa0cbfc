#include "jp/oracle.hpp"

#include "jp/instances.hpp"

#include <algorithm>
#include <cstdlib>

namespace jp::oracle {

namespace {

void check_cap(int n, int cap) {
  if (n > cap) throw CapExceeded(n, cap);
}

// DFS over restricted growth strings with exactly k blocks, maintaining the
// cut weight and per-block weights incrementally.
class Scanner {
 public:
  Scanner(const WeightedGraph& g, int k)
      : g_(g),
        n_(g.order()),
        k_(k),
        assign_(n_, -1),
        block_weight_(k, Rational(0)),
        suffix_(n_ + 1, Rational(0)) {
    for (const auto& [e, w] : g.edges())
      suffix_[std::max(e.first, e.second)] += w;
    for (int i = n_ - 1; i >= 0; --i) suffix_[i] += suffix_[i + 1];
  }

  // prune: called after each assignment, true = abandon this prefix.
  // leaf: called on complete k-block partitions, true = stop the scan.
  std::function<bool(const Scanner&)> prune;
  std::function<bool(const Scanner&)> leaf;

  void run() { recurse(0, 0); }

  const std::vector<int>& assignment() const { return assign_; }
  const std::vector<Rational>& block_weights() const { return block_weight_; }
  const Rational& cut() const { return cut_; }
  // Upper bound on the final cut from the current prefix.
  Rational cut_potential(int next) const { return cut_ + suffix_[next]; }
  int last_assigned() const { return depth_ - 1; }
  std::uint64_t leaves() const { return leaves_; }
  Partition partition() const { return Partition(assign_, k_); }

 private:
  void recurse(int i, int used) {
    if (stopped_) return;
    if (i == n_) {
      if (used != k_) return;
      ++leaves_;
      if (leaf && leaf(*this)) stopped_ = true;
      return;
    }
    if (used + (n_ - i) < k_) return;  // cannot reach k blocks
    const int pmax = used < k_ ? used : k_ - 1;
    for (int p = 0; p <= pmax && !stopped_; ++p) {
      Rational dcut = 0, dblock = 0;
      for (const auto& [u, w] : g_.neighbors(i)) {
        if (u >= i) continue;
        if (assign_[u] == p)
          dblock += w;
        else
          dcut += w;
      }
      assign_[i] = p;
      block_weight_[p] += dblock;
      cut_ += dcut;
      depth_ = i + 1;
      last_block_ = p;
      if (!prune || !prune(*this)) recurse(i + 1, used + (p == used ? 1 : 0));
      assign_[i] = -1;
      block_weight_[p] -= dblock;
      cut_ -= dcut;
      depth_ = i;
    }
  }

  const WeightedGraph& g_;
  int n_, k_;
  std::vector<int> assign_;
  std::vector<Rational> block_weight_;
  Rational cut_{0};
  std::vector<Rational> suffix_;
  int depth_ = 0;
  int last_block_ = 0;
  bool stopped_ = false;
  std::uint64_t leaves_ = 0;

  friend JointScan jp::oracle::joint_scan(const WeightedGraph&, int,
                                          const Rational&, const Rational&,
                                          bool, int);
};

void rgs_recurse(int n, int k, int i, int used, std::vector<int>& a,
                 const std::function<void(const Partition&)>& fn) {
  if (i == n) {
    if (used == k) fn(Partition(a, k));
    return;
  }
  if (used + (n - i) < k) return;
  const int pmax = used < k ? used : k - 1;
  for (int p = 0; p <= pmax; ++p) {
    a[i] = p;
    rgs_recurse(n, k, i + 1, used + (p == used ? 1 : 0), a, fn);
  }
}

}  // namespace

int cap_from_env() {
  if (const char* env = std::getenv("JP_ORACLE_CAP")) {
    const int cap = std::atoi(env);
    if (cap > 0) return cap;
  }
  return kDefaultCap;
}

void enumerate_kpartitions(int n, int k,
                           const std::function<void(const Partition&)>& fn,
                           int cap) {
  if (k < 2 || k > n) throw std::invalid_argument("need 2 <= k <= n");
  check_cap(n, cap);
  std::vector<int> a(n, -1);
  rgs_recurse(n, k, 0, 0, a, fn);
}

std::uint64_t count_kpartitions(int n, int k, int cap) {
  std::uint64_t count = 0;
  enumerate_kpartitions(n, k, [&](const Partition&) { ++count; }, cap);
  return count;
}

OracleResult exact_max_kcut(const WeightedGraph& g, int k, int cap) {
  if (k < 2 || k > g.order()) throw std::invalid_argument("need 2 <= k <= n");
  check_cap(g.order(), cap);
  Scanner scan(g, k);
  std::optional<Rational> best;
  std::optional<Partition> witness;
  // no pruning: `enumerated` doubles as the S(n,k) cross-check
  scan.leaf = [&](const Scanner& s) {
    if (!best || s.cut() > *best) {
      best = s.cut();
      witness = s.partition();
    }
    return false;
  };
  scan.run();
  return {*best, std::move(*witness), scan.leaves()};
}

OracleResult exact_min_max_part(const WeightedGraph& g, int k, int cap) {
  if (k < 2 || k > g.order()) throw std::invalid_argument("need 2 <= k <= n");
  check_cap(g.order(), cap);
  Scanner scan(g, k);
  std::optional<Rational> best;
  std::optional<Partition> witness;
  scan.leaf = [&](const Scanner& s) {
    const auto& bw = s.block_weights();
    const Rational m = *std::max_element(bw.begin(), bw.end());
    if (!best || m < *best) {
      best = m;
      witness = s.partition();
    }
    return false;
  };
  scan.run();
  return {*best, std::move(*witness), scan.leaves()};
}

OracleResult exact_max_bisection(const WeightedGraph& g, int cap) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("bisection needs n >= 2");
  check_cap(n, cap);
  const int big = (n + 1) / 2;
  std::optional<Rational> best;
  std::vector<int> witness;
  std::uint64_t count = 0;
  std::vector<int> a(n, 1);
  // choose the size-ceil(n/2) side; vertex 0 pinned when n is even to avoid
  // listing each bisection twice
  std::vector<int> chosen;
  auto evaluate = [&]() {
    ++count;
    Rational cut = 0;
    for (const auto& [e, w] : g.edges())
      if (a[e.first] != a[e.second]) cut += w;
    if (!best || cut > *best) {
      best = cut;
      witness = a;
    }
  };
  std::function<void(int, int)> choose = [&](int from, int left) {
    if (left == 0) {
      evaluate();
      return;
    }
    for (int v = from; v <= n - left; ++v) {
      a[v] = 0;
      choose(v + 1, left - 1);
      a[v] = 1;
    }
  };
  if (n % 2 == 0) {
    a[0] = 0;
    choose(1, big - 1);
  } else {
    choose(0, big);
  }
  return {*best, Partition(std::move(witness), 2), count};
}

JointScan joint_scan(const WeightedGraph& g, int k, const Rational& cut_lower,
                     const Rational& part_upper, bool stop_at_first, int cap) {
  if (k < 2 || k > g.order()) throw std::invalid_argument("need 2 <= k <= n");
  check_cap(g.order(), cap);
  JointScan result;
  Scanner scan(g, k);
  bool stopped = false;
  scan.prune = [&](const Scanner& s) {
    const auto& bw = s.block_weights();
    if (*std::max_element(bw.begin(), bw.end()) > part_upper) return true;
    return s.cut_potential(s.last_assigned() + 1) < cut_lower;
  };
  scan.leaf = [&](const Scanner& s) {
    if (s.cut() < cut_lower) return false;
    const auto& bw = s.block_weights();
    const Rational heaviest = *std::max_element(bw.begin(), bw.end());
    if (heaviest > part_upper) return false;
    const Rational slack = (s.cut() - cut_lower) + (part_upper - heaviest);
    if (!result.witness) result.witness = s.partition();
    if (!result.min_joint_slack || slack < *result.min_joint_slack) {
      result.min_joint_slack = slack;
      result.witness = s.partition();
    }
    if (slack == 0) result.tight_pair_found = true;
    if (stop_at_first) {
      stopped = true;
      return true;
    }
    return false;
  };
  scan.run();
  result.enumerated = scan.leaves();
  result.exhausted = !stopped;
  return result;
}

std::optional<Partition> exists_joint(const WeightedGraph& g, int k,
                                      const Rational& cut_lower,
                                      const Rational& part_upper, int cap) {
  return joint_scan(g, k, cut_lower, part_upper, true, cap).witness;
}

Prop1Result verify_proposition1(const Rational& c, int n, int cap) {
  if (c <= 0 || c > Rational(1, 4))
    throw std::invalid_argument("need 0 < c <= 1/4");
  if (4 * c * c * n <= 1)
    throw std::invalid_argument("need n > 1/(4c^2)");
  check_cap(n + 1, cap);
  const WeightedGraph g = instances::apex_graph(c, n);
  const Rational threshold =
      total_weight(g) / 2 + c * max_weighted_degree(g);
  Rational max_cut = 0;
  const int order = g.order();
  const std::uint64_t masks = std::uint64_t(1) << order;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    Rational cut = 0;
    for (const auto& [e, w] : g.edges()) {
      const bool a = (mask >> e.first) & 1;
      const bool b = (mask >> e.second) & 1;
      if (a != b) cut += w;
    }
    if (cut > max_cut) max_cut = cut;
  }
  return {max_cut < threshold, max_cut, threshold, masks};
}

}  // namespace jp::oracle
