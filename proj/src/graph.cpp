#include "factorcover/graph.hpp"

namespace fcover {

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int n) {
  if (n < 0 || n > kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
  rows_.assign(n, 0);
}

int Graph::size() const {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order())
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(order()));
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order());
  for (int v = 0; v < order(); ++v) d[v] = degree(v);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v : (neighbors(u) - VertexSet::range(u + 1)).members()) out.push_back({u, v});
  return out;
}

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty(int n) { return Graph(n); }

Graph star(int m) {
  if (m < 1) throw std::invalid_argument("star K_{1,m} needs m >= 1");
  Graph g(m + 1);
  for (int v = 1; v <= m; ++v) g.add_edge(0, v);
  return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph g(n1 + g2.order());
  for (auto [u, v] : g1.edges()) g.add_edge(u, v);
  for (auto [u, v] : g2.edges()) g.add_edge(n1 + u, n1 + v);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const int n1 = g1.order();
  for (int u = 0; u < n1; ++u)
    for (int v = n1; v < g.order(); ++v) g.add_edge(u, v);
  return g;
}

Graph copies(int k, const Graph& g) {
  if (k < 1) throw std::invalid_argument("copies needs k >= 1");
  Graph out = g;
  for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

Graph induced(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph order");
  const auto keep = s.members();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  Graph h(static_cast<int>(keep.size()));
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int w : (g.neighbors(keep[i]) & s).members())
      if (index[w] > i) h.add_edge(i, index[w]);
  return h;
}

Graph remove(const Graph& g, VertexSet s) { return induced(g, g.vertices() - s); }

ComponentReport analyze_components(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw std::invalid_argument("vertex set exceeds graph order");
  ComponentReport report;
  VertexSet unseen = g.vertices() - s;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier.members()) next = next | g.neighbors(v);
      next = (next & unseen) - comp;
      comp = comp | next;
      frontier = next;
    }
    unseen = unseen - comp;
    if (comp.size() % 2 == 1) ++report.odd_count;
    if (comp.size() == 1) ++report.isolated_count;
    report.components.push_back(comp);
  }
  return report;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (int v : s.members())
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

bool is_connected(const Graph& g) {
  return analyze_components(g, VertexSet{}).components.size() <= 1;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("permutation length does not match graph order");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace fcover
