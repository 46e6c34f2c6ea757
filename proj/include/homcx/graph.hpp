#ifndef HOMCX_GRAPH_HPP
#define HOMCX_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homcx {

using Edge = std::pair<int, int>;

/// Vertex ordering whose first `prefix_size` entries form a maximal independent set.
struct VertexOrder {
  std::vector<int> order;  // 1-based vertex labels
  int prefix_size = 0;
};

/**
 * Finite simple undirected graph on vertices 1..p.
 *
 * Construction fixes a vertex ordering x_1..x_p (see maximal_independent_prefix):
 * cells of Hom(G, K_n) are tuples indexed by *positions* in this ordering, so
 * coordinate q of a cell is the color set of vertex order()[q].
 *
 * Immutable after construction.
 */
class Graph {
 public:
  Graph() = default;

  /// Rejects loops and out-of-range endpoints; duplicate and reversed edges collapse.
  static Graph from_edges(int p, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted, each edge once with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    const auto& nb = adj_.at(u - 1);
    return std::binary_search(nb.begin(), nb.end(), v);
  }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v - 1); }
  int degree(int v) const { return static_cast<int>(adj_.at(v - 1).size()); }

  const std::vector<int>& order() const { return order_.order; }
  int prefix_size() const { return order_.prefix_size; }

  /// 0-based position of vertex v in order().
  int position_of(int v) const { return position_.at(v - 1); }
  int vertex_at(int position) const { return order_.order.at(position); }

  /// Positions (0-based, ascending) adjacent to the vertex at `position`.
  const std::vector<int>& neighbors_at(int position) const { return position_adj_.at(position); }
  bool adjacent_positions(int a, int b) const {
    const auto& nb = position_adj_.at(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adj_.size() == b.adj_.size(); }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  VertexOrder order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> position_adj_;

  friend VertexOrder maximal_independent_prefix(const Graph& g);
};

/**
 * Greedy scan in ascending vertex label: a vertex joins the independent set iff
 * none of its neighbors has joined. Selected vertices come first (ascending),
 * the rest follow (ascending). The prefix is maximal, not necessarily maximum.
 */
inline VertexOrder maximal_independent_prefix(const Graph& g) {
  const int p = g.vertex_count();
  std::vector<char> chosen(p, 0);
  VertexOrder out;
  out.order.reserve(p);
  for (int v = 1; v <= p; ++v) {
    bool free = true;
    for (int w : g.adj_[v - 1]) {
      if (chosen[w - 1]) {
        free = false;
        break;
      }
    }
    if (free) {
      chosen[v - 1] = 1;
      out.order.push_back(v);
    }
  }
  out.prefix_size = static_cast<int>(out.order.size());
  for (int v = 1; v <= p; ++v)
    if (!chosen[v - 1]) out.order.push_back(v);
  return out;
}

inline Graph Graph::from_edges(int p, const std::vector<Edge>& edges) {
  if (p < 0) throw std::invalid_argument("vertex count must be nonnegative");
  Graph g;
  g.adj_.assign(p, {});
  for (auto [u, v] : edges) {
    if (u < 1 || u > p || v < 1 || v > p)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") has an endpoint outside 1.." + std::to_string(p));
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (auto [u, v] : g.edges_) {
    g.adj_[u - 1].push_back(v);
    g.adj_[v - 1].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

  g.order_ = maximal_independent_prefix(g);
  g.position_.assign(p, 0);
  for (int q = 0; q < p; ++q) g.position_[g.order_.order[q] - 1] = q;
  g.position_adj_.assign(p, {});
  for (int q = 0; q < p; ++q) {
    for (int w : g.adj_[g.order_.order[q] - 1]) g.position_adj_[q].push_back(g.position_[w - 1]);
    std::sort(g.position_adj_[q].begin(), g.position_adj_[q].end());
  }
  return g;
}

inline Graph make_graph(int p, const std::vector<Edge>& edges) { return Graph::from_edges(p, edges); }

inline int maxval(const Graph& g) {
  int d = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

/// n - maxval(G) - 1; may be negative.
inline int vgap(const Graph& g, int n) {
  if (n < 1) throw std::invalid_argument("color count must be at least 1");
  return n - maxval(g) - 1;
}

inline Graph complete_graph(int m) {
  if (m < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> e;
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) e.emplace_back(u, v);
  return Graph::from_edges(m, e);
}

inline Graph cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(m));
  std::vector<Edge> e;
  for (int u = 1; u <= m; ++u) e.emplace_back(u, u % m + 1);
  return Graph::from_edges(m, e);
}

inline Graph path_graph(int m) {
  if (m < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> e;
  for (int u = 1; u < m; ++u) e.emplace_back(u, u + 1);
  return Graph::from_edges(m, e);
}

/// K_{1,k}: vertex 1 is the center.
inline Graph star_graph(int k) {
  if (k < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<Edge> e;
  for (int v = 2; v <= k + 1; ++v) e.emplace_back(1, v);
  return Graph::from_edges(k + 1, e);
}

inline Graph edgeless_graph(int m) { return Graph::from_edges(m, {}); }

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  const int shift = g.vertex_count();
  for (auto [u, v] : h.edges()) e.emplace_back(u + shift, v + shift);
  return Graph::from_edges(g.vertex_count() + h.vertex_count(), e);
}

/// Parses the family names K<m>, C<m>, P<m>, Star<k>.
inline Graph graph_from_family(const std::string& name) {
  auto number_after = [&](std::size_t prefix) {
    const std::string digits = name.substr(prefix);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("malformed graph family '" + name + "'");
    return std::stoi(digits);
  };
  if (name.rfind("Star", 0) == 0) return star_graph(number_after(4));
  if (name.rfind("K", 0) == 0) return complete_graph(number_after(1));
  if (name.rfind("C", 0) == 0) return cycle_graph(number_after(1));
  if (name.rfind("P", 0) == 0) return path_graph(number_after(1));
  throw std::invalid_argument("unknown graph family '" + name + "' (expected K<m>, C<m>, P<m> or Star<k>)");
}

}  // namespace homcx

#endif  // HOMCX_GRAPH_HPP
