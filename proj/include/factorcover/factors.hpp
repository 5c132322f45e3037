#ifndef FACTORCOVER_FACTORS_HPP
#define FACTORCOVER_FACTORS_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "factorcover/graph.hpp"

namespace fcover {

/// Size limits of the exact deciders.
inline constexpr int kMaxMatchingOrder = 24;
inline constexpr int kMaxStarOrder = 12;
inline constexpr int kMaxCriterionOrder = 16;

struct Matching {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

struct Star {
  int center = 0;
  VertexSet leaves;
};

/// Spanning forest of stars K_{1,1}..K_{1,k}.
struct StarForest {
  std::vector<Star> stars;
};

using Certificate = std::variant<std::monostate, Matching, StarForest>;

struct Verdict {
  bool holds = false;
  Certificate certificate;
  std::optional<VertexSet> witness_set;
  std::optional<Edge> witness_edge;
  std::string detail;
};

/// Throws std::logic_error when m is not a matching of g.
void validate_matching(const Graph& g, const Matching& m);
/// Throws std::logic_error when f is not a spanning S(k) star forest of g.
void validate_star_forest(const Graph& g, const StarForest& f, int k);

/// Maximum-cardinality matching by memoised search over vertex bitsets (n <= 24).
Matching max_matching(const Graph& g);

/// Whether some matching of size >= (n-k)/2 contains e. Needs n = k mod 2,
/// 0 <= k <= n and e in E(g).
bool has_matching_through_edge(const Graph& g, int k, Edge e);

/// Every edge lies in a matching of size (n-k)/2, and such a matching exists.
/// Witness: first uncovered edge, or the empty set when g has no matching of
/// that size at all.
Verdict is_matching_covered(const Graph& g, int k);

/// For every proper S (including the empty set): o(G-S) <= |S|+k, with
/// equality only for independent S. n <= 16.
Verdict lemma_matching_criterion(const Graph& g, int k);

/// Searches for an S(k)-factor whose component containing e is K_{1,1} or
/// K_{1,2}. k >= 2, n <= 12. Returns the factor when one exists.
std::optional<StarForest> find_star_factor_through_edge(const Graph& g, int k, Edge e);
bool star_factor_through_edge(const Graph& g, int k, Edge e);

/// Star-factor covering for graphs without isolated vertices.
Verdict is_star_covered(const Graph& g, int k);

/// For every proper S: i(G-S) <= k|S| if G[S] has no edge, k|S|-2k+1 otherwise. n <= 16.
Verdict cek_criterion(const Graph& g, int k);

}  // namespace fcover

#endif  // FACTORCOVER_FACTORS_HPP
