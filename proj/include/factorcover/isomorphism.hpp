#ifndef FACTORCOVER_ISOMORPHISM_HPP
#define FACTORCOVER_ISOMORPHISM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factorcover/graph.hpp"

namespace fcover {

/// Orders up to which the general canonical form is available.
inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxEnumerationOrder = 8;

struct CanonicalForm {
  std::uint64_t code = 0;    // upper triangle of the relabeled graph, row-major
  std::vector<int> labeling; // labeling[v] = canonical label of v
};

/// Canonical labeling by colour refinement plus individualisation.
/// Twins inside a cell are branched on once. Requires order <= 10.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Cotree code of a cograph, or nullopt when g contains an induced P4.
/// Two cographs are isomorphic iff their codes agree. Works at any order.
std::optional<std::string> cograph_code(const Graph& g);

/// Exact isomorphism test. Orders <= 10 use the canonical form; larger
/// orders are decided when at least one side is a cograph (which covers
/// every join family used by the extremal constructions) and throw
/// std::domain_error otherwise.
bool is_isomorphic(const Graph& g1, const Graph& g2);

/// One representative per isomorphism class on n vertices, 1 <= n <= 8,
/// in canonical labeling, sorted by canonical code.
std::vector<Graph> enumerate_graphs(int n);

}  // namespace fcover

#endif  // FACTORCOVER_ISOMORPHISM_HPP
