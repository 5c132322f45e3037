#ifndef FACTORCOVER_GRAPH_HPP
#define FACTORCOVER_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcover {

/// Largest supported order. Adjacency rows are single 64-bit words.
inline constexpr int kMaxOrder = 64;

/// Subset of {0, ..., n-1} for some host graph of order n <= 64.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool operator==(const VertexSet&) const = default;

  /// Members in increasing order.
  std::vector<int> members() const;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Symmetry and looplessness are maintained by every mutator, so any
/// Graph value satisfies them.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const;  // edge count

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  int degree(int v) const { return std::popcount(rows_[v]); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<int> degrees() const;
  std::vector<Edge> edges() const;  // u < v, lexicographic

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  std::vector<std::uint64_t> rows_;
};

/// Components of G - S together with the counts used by the factor criteria.
struct ComponentReport {
  std::vector<VertexSet> components;
  int odd_count = 0;
  int isolated_count = 0;
};

Graph complete(int n);
Graph empty(int n);
/// K_{1,m}: vertex 0 is the center.
Graph star(int m);

/// Vertices of g1 come first, then those of g2.
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
Graph copies(int k, const Graph& g);

/// Subgraph induced by s, relabeled to 0..|s|-1 in increasing order.
Graph induced(const Graph& g, VertexSet s);
Graph remove(const Graph& g, VertexSet s);

ComponentReport analyze_components(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Graph with vertex v mapped to perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace fcover

#endif  // FACTORCOVER_GRAPH_HPP
