#include "factorcover/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace fcover {
namespace {

// Renumbers arbitrary integer colours to 0..c-1 preserving their order.
int normalize(std::vector<int>& color) {
  std::vector<int> values = color;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (auto& c : color) c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
  return static_cast<int>(values.size());
}

// Colour refinement to the coarsest equitable partition finer than `color`.
// The new colour order depends only on old colours and neighbour counts, so
// the result is invariant under isomorphism.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.order();
  int classes = normalize(color);
  while (classes < n) {
    std::vector<std::vector<int>> sig(n, std::vector<int>(classes + 1, 0));
    for (int v = 0; v < n; ++v) {
      sig[v][0] = color[v];
      for (int w : g.neighbors(v).members()) ++sig[v][1 + color[w]];
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    const int next = static_cast<int>(sorted.size());
    if (next == classes) break;
    classes = next;
  }
}

std::uint64_t code_of(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::vector<int> vertex_at(n);
  for (int v = 0; v < n; ++v) vertex_at[label[v]] = v;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(vertex_at[i], vertex_at[j]) ? 1 : 0);
  return code;
}

bool twins(const Graph& g, int u, int v) {
  VertexSet nu = g.neighbors(u) - VertexSet::single(v);
  VertexSet nv = g.neighbors(v) - VertexSet::single(u);
  return nu == nv;
}

void search(const Graph& g, std::vector<int> color, CanonicalForm& best, bool& have_best) {
  refine(g, color);
  const int n = g.order();
  std::vector<int> cell_size(n, 0);
  for (int c : color) ++cell_size[c];
  const auto target = std::find_if(cell_size.begin(), cell_size.end(), [](int s) { return s > 1; });
  if (target == cell_size.end()) {
    const auto code = code_of(g, color);
    if (!have_best || code > best.code) {
      best.code = code;
      best.labeling = color;
      have_best = true;
    }
    return;
  }
  const int cell = static_cast<int>(target - cell_size.begin());
  std::vector<int> branched;
  for (int v = 0; v < n; ++v) {
    if (color[v] != cell) continue;
    if (std::any_of(branched.begin(), branched.end(), [&](int u) { return twins(g, u, v); })) continue;
    branched.push_back(v);
    std::vector<int> next(n);
    for (int w = 0; w < n; ++w) next[w] = 2 * color[w] + (color[w] == cell && w != v ? 1 : 0);
    normalize(next);
    search(g, std::move(next), best, have_best);
  }
}

VertexSet component_of(const Graph& g, VertexSet within, int start, bool complement) {
  VertexSet comp = VertexSet::single(start);
  VertexSet frontier = comp;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier.members()) {
      VertexSet nb = complement ? (within - g.neighbors(v) - VertexSet::single(v)) : g.neighbors(v);
      next = next | nb;
    }
    next = (next & within) - comp;
    comp = comp | next;
    frontier = next;
  }
  return comp;
}

std::optional<std::string> cotree(const Graph& g, VertexSet s) {
  if (s.size() == 1) return "v";
  for (bool complement : {false, true}) {
    std::vector<VertexSet> parts;
    for (VertexSet rest = s; !rest.empty();) {
      parts.push_back(component_of(g, rest, rest.first(), complement));
      rest = rest - parts.back();
    }
    if (parts.size() == 1) continue;
    std::vector<std::string> children;
    for (auto part : parts) {
      auto child = cotree(g, part);
      if (!child) return std::nullopt;
      children.push_back(std::move(*child));
    }
    std::sort(children.begin(), children.end());
    std::string out = complement ? "J(" : "U(";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += ',';
      out += children[i];
    }
    return out + ')';
  }
  return std::nullopt;
}

Graph extend(const Graph& g, VertexSet neighbors) {
  const int n = g.order();
  Graph h(n + 1);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (int v : neighbors.members()) h.add_edge(v, n);
  return h;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::domain_error("canonical form supports order <= " + std::to_string(kMaxCanonicalOrder));
  CanonicalForm best;
  bool have_best = false;
  search(g, std::vector<int>(g.order(), 0), best, have_best);
  return best;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).labeling); }

std::optional<std::string> cograph_code(const Graph& g) {
  if (g.order() == 0) return std::string();
  return cotree(g, g.vertices());
}

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  auto d1 = g1.degrees();
  auto d2 = g2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  if (g1.order() <= kMaxCanonicalOrder) return canonical_form(g1).code == canonical_form(g2).code;
  const auto c1 = cograph_code(g1);
  const auto c2 = cograph_code(g2);
  if (c1 && c2) return *c1 == *c2;
  if (c1 || c2) return false;
  throw std::domain_error("isomorphism of non-cographs above order " + std::to_string(kMaxCanonicalOrder) +
                          " is not supported");
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumerate_graphs supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> found;
    for (const auto& g : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
        Graph h = extend(g, VertexSet(mask));
        auto cf = canonical_form(h);
        if (seen.insert(cf.code).second) found.emplace_back(cf.code, relabel(h, cf.labeling));
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, g] : found) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace fcover
