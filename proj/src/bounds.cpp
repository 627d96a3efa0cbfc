#include "jp/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace jp {

namespace {

struct IdInfo {
  BoundId id;
  const char* name;
  BoundKind kind;
  bool cut;
  int fixed_k;  // 0 = takes k from params
};

constexpr IdInfo kIdTable[] = {
    {BoundId::EdwardsLower, "edwards-cut-lower", BoundKind::Lower, true, 2},
    {BoundId::BSPartUpper, "bs-part-upper", BoundKind::Upper, false, 2},
    {BoundId::BSkPartUpper, "bsk-part-upper", BoundKind::Upper, false, 0},
    {BoundId::EdwardskCutLower, "edwardsk-cut-lower", BoundKind::Lower, true, 0},
    {BoundId::XuYuCutLower, "xuyu-cut-lower", BoundKind::Lower, true, 0},
    {BoundId::OddDegCutLower, "odddeg-cut-lower", BoundKind::Lower, true, 2},
    {BoundId::OddDegPartUpper, "odddeg-part-upper", BoundKind::Upper, false, 2},
    {BoundId::MaxdCutLower, "maxd-cut-lower", BoundKind::Lower, true, 2},
    {BoundId::MaxdPartUpper, "maxd-part-upper", BoundKind::Upper, false, 2},
    {BoundId::Max32CutLower, "max32-cut-lower", BoundKind::Lower, true, 3},
    {BoundId::Max32PartUpper, "max32-part-upper", BoundKind::Upper, false, 3},
    {BoundId::MaxkPartUpper, "maxk-part-upper", BoundKind::Upper, false, 0},
    {BoundId::Lemma1CutLower, "lemma1-cut-lower", BoundKind::Lower, true, 2},
    {BoundId::KkkkCutLower, "kkkk-cut-lower", BoundKind::Lower, true, 0},
    {BoundId::ConjectureCutLower, "conjecture-cut-lower", BoundKind::Lower,
     true, 0},
    {BoundId::ConjecturePartUpper, "conjecture-part-upper", BoundKind::Upper,
     false, 0},
};

const IdInfo& info(BoundId id) {
  for (const auto& e : kIdTable)
    if (e.id == id) return e;
  throw std::invalid_argument("unknown bound id");
}

Interval exact(Rational v) { return {v, v}; }

Interval shift(Interval iv, const Rational& c) {
  return {iv.lo + c, iv.hi + c};
}

Interval scale(Interval iv, const Rational& c) {
  // c >= 0 for every use below
  return {iv.lo * c, iv.hi * c};
}

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

BoundKind bound_kind(BoundId id) { return info(id).kind; }
bool is_cut_bound(BoundId id) { return info(id).cut; }
int fixed_k(BoundId id) { return info(id).fixed_k; }
std::string bound_name(BoundId id) { return info(id).name; }

std::optional<BoundId> bound_from_name(const std::string& name) {
  for (const auto& e : kIdTable)
    if (name == e.name) return e.id;
  return std::nullopt;
}

std::vector<BoundId> all_bound_ids() {
  std::vector<BoundId> out;
  for (const auto& e : kIdTable) out.push_back(e.id);
  return out;
}

BoundParams bound_params(const WeightedGraph& g, long k) {
  BoundParams p;
  p.wG = total_weight(g);
  p.eG = Rational(static_cast<long>(g.edge_count()));
  p.n = g.order();
  p.k = k;
  p.deltaW = max_weighted_degree(g);
  p.dW = avg_weighted_degree(g);
  p.unweighted = g.unweighted();
  long max_deg = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    max_deg = std::max(max_deg, static_cast<long>(g.neighbors(v).size()));
  p.max_degree = max_deg;
  return p;
}

Rational kkkk_lower_order_term(long k, long n) {
  require(k >= 2, "k must be at least 2");
  require(n >= 2, "n must be at least 2");
  if (k % 2 == 0) return Rational((k - 2) * (k - 2), 4 * (n - 1) * (k - 1));
  return Rational(k - 3, 4 * (n - 1));
}

bool bound_applicable(BoundId id, const BoundParams& p) {
  if (id == BoundId::OddDegCutLower || id == BoundId::OddDegPartUpper)
    return p.unweighted && p.max_degree % 2 == 1;
  return true;
}

Interval eval_bound(BoundId id, const BoundParams& p) {
  const long k = fixed_k(id) == 0 ? p.k : fixed_k(id);
  require(k >= 2, "k must be at least 2");
  require(p.n >= k, "n must be at least k");
  const Rational& w = p.wG;
  const Rational& e = p.eG;
  const Rational& dw = p.deltaW;

  switch (id) {
    case BoundId::EdwardsLower:
      return shift(sqrt_enclosure(e / 8 + Rational(1, 64)),
                   e / 2 - Rational(1, 8));
    case BoundId::BSPartUpper:
      return shift(sqrt_enclosure(e / 32 + Rational(1, 256)),
                   e / 4 - Rational(1, 16));
    case BoundId::BSkPartUpper: {
      auto s = shift(sqrt_enclosure(2 * e + Rational(1, 4)), Rational(-1, 2));
      return shift(scale(s, Rational(k - 1, 2 * k * k)), e / (k * k));
    }
    case BoundId::EdwardskCutLower: {
      auto s = shift(sqrt_enclosure(2 * e + Rational(1, 4)), Rational(-1, 2));
      return shift(scale(s, Rational(k - 1, 2 * k)),
                   Rational(k - 1, k) * e - Rational((k - 2) * (k - 2), 8 * k));
    }
    case BoundId::XuYuCutLower: {
      auto s = shift(sqrt_enclosure(2 * e + Rational(1, 4)), Rational(-1, 2));
      return shift(scale(s, Rational(k - 1, 2 * k)),
                   Rational(k - 1, k) * e - Rational(17 * k, 8));
    }
    case BoundId::OddDegCutLower: {
      require(bound_applicable(id, p), "odd-degree bound needs an unweighted "
                                       "graph with odd maximum degree");
      const long d = p.max_degree;
      return exact(Rational(d + 1, 2 * d) * e);
    }
    case BoundId::OddDegPartUpper: {
      require(bound_applicable(id, p), "odd-degree bound needs an unweighted "
                                       "graph with odd maximum degree");
      const long d = p.max_degree;
      return exact(Rational(d - 1, 4 * d) * e + Rational(d - 1, 4));
    }
    case BoundId::MaxdCutLower:
      return exact(w / 2 + p.dW / 4);
    case BoundId::MaxdPartUpper:
      return exact(w / 4 + dw / 8);
    case BoundId::Max32CutLower:
      return exact(2 * w / 3 + p.dW / 3);
    case BoundId::Max32PartUpper:
      return exact(w / 9 + dw / 9);
    case BoundId::MaxkPartUpper:
    case BoundId::ConjecturePartUpper:
      return exact(w / (k * k) + Rational(k - 1, 2 * k * k) * dw);
    case BoundId::Lemma1CutLower: {
      const long t = (p.n % 2 == 0) ? 1 : 0;
      return exact((Rational(1, 2) + Rational(1, 2 * (p.n - t))) * w);
    }
    case BoundId::KkkkCutLower:
    case BoundId::ConjectureCutLower: {
      const Rational h = kkkk_lower_order_term(k, p.n);
      return exact(Rational(k - 1, k) * w +
                   Rational(k - 1, 2 * k) * (1 - h) * p.dW);
    }
  }
  throw std::invalid_argument("unknown bound id");
}

std::string to_string(Satisfaction s) {
  switch (s) {
    case Satisfaction::Satisfied: return "satisfied";
    case Satisfaction::Violated: return "violated";
    case Satisfaction::Indeterminate: return "indeterminate";
    case Satisfaction::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool BoundReport::all_satisfied() const {
  return std::none_of(checks.begin(), checks.end(), [](const BoundCheck& c) {
    return c.status == Satisfaction::Violated ||
           c.status == Satisfaction::Indeterminate;
  });
}

BoundReport report(const WeightedGraph& g, const Partition& p,
                   const std::vector<BoundId>& ids) {
  const BoundParams params = bound_params(g, p.part_count());
  const Rational cut = cut_weight(g, p);
  const Rational heaviest = max_part_weight(g, p);

  BoundReport out;
  for (BoundId id : ids) {
    if (fixed_k(id) != 0 && fixed_k(id) != p.part_count())
      throw std::invalid_argument("bound '" + bound_name(id) +
                                  "' requires a " +
                                  std::to_string(fixed_k(id)) +
                                  "-partition");
    BoundCheck check;
    check.id = id;
    check.achieved = is_cut_bound(id) ? cut : heaviest;
    if (!bound_applicable(id, params)) {
      check.status = Satisfaction::NotApplicable;
      out.checks.push_back(std::move(check));
      continue;
    }
    check.value = eval_bound(id, params);
    if (check.value.exact()) {
      check.slack = check.achieved - check.value.lo;
      const bool ok = bound_kind(id) == BoundKind::Lower
                          ? check.achieved >= check.value.lo
                          : check.achieved <= check.value.lo;
      check.status = ok ? Satisfaction::Satisfied : Satisfaction::Violated;
    } else if (bound_kind(id) == BoundKind::Lower) {
      check.status = check.achieved >= check.value.hi
                         ? Satisfaction::Satisfied
                         : (check.achieved < check.value.lo
                                ? Satisfaction::Violated
                                : Satisfaction::Indeterminate);
    } else {
      check.status = check.achieved <= check.value.lo
                         ? Satisfaction::Satisfied
                         : (check.achieved > check.value.hi
                                ? Satisfaction::Violated
                                : Satisfaction::Indeterminate);
    }
    out.checks.push_back(std::move(check));
  }
  return out;
}

}  // namespace jp
