#include "factorcover/factors.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace fcover {
namespace {

std::string edge_text(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

std::string set_text(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void check_matching_args(const Graph& g, int k) {
  const int n = g.order();
  if (k < 0 || k > n) throw std::invalid_argument("matching parameter k must satisfy 0 <= k <= n");
  if ((n - k) % 2 != 0) throw std::invalid_argument("matching parameter k must have the parity of n");
}

void check_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw std::invalid_argument("edge " + edge_text(e) + " is not in the graph");
}

// Maximum matching size on induced vertex subsets, memoised by subset.
class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : g_(g) {
    if (g.order() > kMaxMatchingOrder)
      throw std::invalid_argument("exact matching search supports n <= " + std::to_string(kMaxMatchingOrder));
  }

  int best(std::uint32_t rem) {
    if (std::popcount(rem) < 2) return 0;
    if (auto it = memo_.find(rem); it != memo_.end()) return it->second;
    const int v = std::countr_zero(rem);
    const std::uint32_t rest = rem & ~(std::uint32_t{1} << v);
    const int ceiling = std::popcount(rem) / 2;
    int result = 0;
    for (auto nb = static_cast<std::uint32_t>(g_.neighbors(v).bits()) & rest; nb != 0 && result < ceiling;
         nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      result = std::max(result, 1 + best(rest & ~(std::uint32_t{1} << w)));
    }
    if (result < std::popcount(rest) / 2) result = std::max(result, best(rest));
    memo_.emplace(rem, result);
    return result;
  }

  Matching extract(std::uint32_t rem) {
    Matching m;
    int target = best(rem);
    while (target > 0) {
      const int v = std::countr_zero(rem);
      const std::uint32_t rest = rem & ~(std::uint32_t{1} << v);
      bool taken = false;
      for (auto nb = static_cast<std::uint32_t>(g_.neighbors(v).bits()) & rest; nb != 0; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        const std::uint32_t after = rest & ~(std::uint32_t{1} << w);
        if (1 + best(after) == target) {
          m.edges.push_back({std::min(v, w), std::max(v, w)});
          rem = after;
          --target;
          taken = true;
          break;
        }
      }
      if (!taken) rem = rest;
    }
    return m;
  }

  std::uint32_t all() const { return static_cast<std::uint32_t>(g_.vertices().bits()); }

 private:
  const Graph& g_;
  std::unordered_map<std::uint32_t, int> memo_;
};

std::uint32_t without(std::uint32_t mask, Edge e) {
  return mask & ~(std::uint32_t{1} << e.u) & ~(std::uint32_t{1} << e.v);
}

// Backtracking search for spanning star forests with at most k leaves per star.
class StarSearch {
 public:
  StarSearch(const Graph& g, int k) : g_(g), k_(k) {
    order_.resize(g.order());
    for (int v = 0; v < g.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    center_of_.assign(g.order(), -1);
  }

  // Covers `unassigned`; `open` centres still accept leaves, `pending` centres have none yet.
  bool cover(VertexSet unassigned, VertexSet open, VertexSet pending, std::array<int, kMaxOrder>& leaves) {
    for (int c : pending.members())
      if ((g_.neighbors(c) & unassigned).empty()) return false;
    if (unassigned.empty()) return pending.empty();
    for (int x : unassigned.members())
      if ((g_.neighbors(x) & (unassigned | open)).empty()) return false;

    int x = -1;
    for (int v : order_)
      if (unassigned.contains(v)) {
        x = v;
        break;
      }
    const VertexSet rest = unassigned - VertexSet::single(x);

    // x joins an existing star.
    for (int c : (g_.neighbors(x) & open).members()) {
      ++leaves[c];
      center_of_[x] = c;
      VertexSet next_open = leaves[c] < k_ ? open : open - VertexSet::single(c);
      if (cover(rest, next_open, pending - VertexSet::single(c), leaves)) return true;
      --leaves[c];
      center_of_[x] = -1;
    }
    // x is a leaf of a new centre y.
    for (int y : (g_.neighbors(x) & rest).members()) {
      leaves[y] = 1;
      center_of_[x] = y;
      center_of_[y] = y;
      if (cover(rest - VertexSet::single(y), open | VertexSet::single(y), pending, leaves)) return true;
      leaves[y] = 0;
      center_of_[x] = -1;
      center_of_[y] = -1;
    }
    // x is a new centre whose leaves come later.
    leaves[x] = 0;
    center_of_[x] = x;
    if (cover(rest, open | VertexSet::single(x), pending | VertexSet::single(x), leaves)) return true;
    center_of_[x] = -1;
    return false;
  }

  std::optional<StarForest> through(Edge e) {
    std::fill(center_of_.begin(), center_of_.end(), -1);
    std::array<int, kMaxOrder> leaves{};
    const VertexSet all = g_.vertices();

    struct Seed {
      int center;
      VertexSet members;
    };
    std::vector<Seed> seeds;
    seeds.push_back({e.u, VertexSet::single(e.u) | VertexSet::single(e.v)});
    for (auto [c, l] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
      for (int w : (g_.neighbors(c) - VertexSet::single(l)).members())
        seeds.push_back({c, VertexSet::single(c) | VertexSet::single(l) | VertexSet::single(w)});

    for (const auto& seed : seeds) {
      for (int m : seed.members.members()) center_of_[m] = seed.center;
      if (cover(all - seed.members, VertexSet{}, VertexSet{}, leaves)) return forest();
      for (int m : seed.members.members()) center_of_[m] = -1;
    }
    return std::nullopt;
  }

 private:
  StarForest forest() const {
    StarForest f;
    std::vector<int> slot(g_.order(), -1);
    for (int v = 0; v < g_.order(); ++v)
      if (center_of_[v] == v) {
        slot[v] = static_cast<int>(f.stars.size());
        f.stars.push_back({v, VertexSet{}});
      }
    for (int v = 0; v < g_.order(); ++v)
      if (center_of_[v] != v) f.stars[slot[center_of_[v]]].leaves.insert(v);
    return f;
  }

  const Graph& g_;
  int k_;
  std::vector<int> order_;
  std::vector<int> center_of_;
};

void check_star_args(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("star factors need k >= 2");
  if (g.order() > kMaxStarOrder)
    throw std::invalid_argument("star-factor search supports n <= " + std::to_string(kMaxStarOrder));
}

void check_criterion_order(const Graph& g) {
  if (g.order() > kMaxCriterionOrder)
    throw std::invalid_argument("subset criteria support n <= " + std::to_string(kMaxCriterionOrder));
}

}  // namespace

void validate_matching(const Graph& g, const Matching& m) {
  VertexSet used;
  for (auto e : m.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
      throw std::logic_error("matching edge " + edge_text(e) + " is not a graph edge");
    if (used.contains(e.u) || used.contains(e.v))
      throw std::logic_error("matching edges are not vertex-disjoint");
    used.insert(e.u);
    used.insert(e.v);
  }
}

void validate_star_forest(const Graph& g, const StarForest& f, int k) {
  VertexSet covered;
  for (const auto& star : f.stars) {
    const VertexSet members = star.leaves | VertexSet::single(star.center);
    if (star.leaves.contains(star.center)) throw std::logic_error("star center listed as its own leaf");
    if (!(covered & members).empty()) throw std::logic_error("stars overlap");
    if (star.leaves.size() < 1 || star.leaves.size() > k)
      throw std::logic_error("star with " + std::to_string(star.leaves.size()) + " leaves outside [1, k]");
    if (!star.leaves.subset_of(g.neighbors(star.center)))
      throw std::logic_error("star leaf not adjacent to its center");
    covered = covered | members;
  }
  if (covered != g.vertices()) throw std::logic_error("star forest is not spanning");
}

Matching max_matching(const Graph& g) {
  MatchingSearch search(g);
  auto m = search.extract(search.all());
  validate_matching(g, m);
  return m;
}

bool has_matching_through_edge(const Graph& g, int k, Edge e) {
  check_matching_args(g, k);
  check_edge(g, e);
  MatchingSearch search(g);
  return 2 * (search.best(without(search.all(), e)) + 1) >= g.order() - k;
}

Verdict is_matching_covered(const Graph& g, int k) {
  check_matching_args(g, k);
  const int need = (g.order() - k) / 2;
  MatchingSearch search(g);
  Verdict v;
  for (auto e : g.edges()) {
    if (search.best(without(search.all(), e)) + 1 < need) {
      v.witness_edge = e;
      v.detail = "edge " + edge_text(e) + " lies in no matching of size " + std::to_string(need);
      return v;
    }
  }
  auto m = search.extract(search.all());
  if (m.size() < need) {
    v.witness_set = VertexSet{};
    v.detail = "no matching of size " + std::to_string(need) + " exists";
    return v;
  }
  validate_matching(g, m);
  v.holds = true;
  v.certificate = std::move(m);
  return v;
}

Verdict lemma_matching_criterion(const Graph& g, int k) {
  check_matching_args(g, k);
  check_criterion_order(g);
  const std::uint64_t full = g.vertices().bits();
  Verdict v;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    const VertexSet s(mask);
    const int odd = analyze_components(g, s).odd_count;
    const int bound = s.size() + k;
    if (odd > bound) {
      v.witness_set = s;
      v.detail = "S=" + set_text(s) + ": o(G-S)=" + std::to_string(odd) + " > |S|+k=" + std::to_string(bound);
      return v;
    }
    if (odd == bound && !is_independent(g, s)) {
      v.witness_set = s;
      v.detail = "S=" + set_text(s) + ": o(G-S)=|S|+k=" + std::to_string(bound) + " but S is not independent";
      return v;
    }
  }
  v.holds = true;
  return v;
}

std::optional<StarForest> find_star_factor_through_edge(const Graph& g, int k, Edge e) {
  check_star_args(g, k);
  check_edge(g, e);
  StarSearch search(g, k);
  auto f = search.through(e);
  if (f) validate_star_forest(g, *f, k);
  return f;
}

bool star_factor_through_edge(const Graph& g, int k, Edge e) {
  return find_star_factor_through_edge(g, k, e).has_value();
}

Verdict is_star_covered(const Graph& g, int k) {
  check_star_args(g, k);
  if (has_isolated_vertex(g)) throw std::invalid_argument("star-factor covering needs a graph without isolated vertices");
  StarSearch search(g, k);
  Verdict v;
  std::optional<StarForest> first;
  for (auto e : g.edges()) {
    auto f = search.through(e);
    if (!f) {
      v.witness_edge = e;
      v.detail = "edge " + edge_text(e) + " lies in no K_{1,1} or K_{1,2} component of an S(" + std::to_string(k) +
                 ")-factor";
      return v;
    }
    validate_star_forest(g, *f, k);
    if (!first) first = std::move(f);
  }
  v.holds = true;
  if (first) v.certificate = std::move(*first);
  return v;
}

Verdict cek_criterion(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("star factors need k >= 2");
  check_criterion_order(g);
  const std::uint64_t full = g.vertices().bits();
  Verdict v;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    const VertexSet s(mask);
    const int isolated = analyze_components(g, s).isolated_count;
    const bool independent = is_independent(g, s);
    const int bound = independent ? k * s.size() : k * s.size() - 2 * k + 1;
    if (isolated > bound) {
      v.witness_set = s;
      v.detail = "S=" + set_text(s) + (independent ? " (independent)" : " (not independent)") +
                 ": i(G-S)=" + std::to_string(isolated) + " > " + std::to_string(bound);
      return v;
    }
  }
  v.holds = true;
  return v;
}

}  // namespace fcover
