#ifndef HOMCX_FRAME_HPP
#define HOMCX_FRAME_HPP

#include <algorithm>
#include <vector>

#include "homcx/graph.hpp"

namespace homcx {

/**
 * One level of the valency induction, expressed on full-length cells.
 *
 * Instead of re-indexing coordinates into Hom(G - S, K_{n-1}), deeper levels
 * keep every coordinate and simply stop touching the pinned ones: positions
 * outside `active` hold the singleton of a color larger than `colors`, and
 * active positions only ever use colors 1..colors. The sub-complex is then a
 * face-closed subcomplex of Hom(G, K_n) carrying the same boundary operator.
 */
struct ReductionFrame {
  std::vector<int> active;       // 0-based positions, ascending
  std::vector<int> independent;  // greedy maximal independent subset of active, ascending
  std::vector<int> dependent;    // active minus independent, ascending
  int colors = 0;
  int max_degree = 0;            // maxval of the subgraph induced on active

  bool is_active(int pos) const { return std::binary_search(active.begin(), active.end(), pos); }

  /// The palette gap of this level: colors - max_degree - 1.
  int gap() const { return colors - max_degree - 1; }

  static ReductionFrame over(const Graph& g, std::vector<int> active, int colors) {
    std::vector<int> visit = active;
    return over_in_order(g, std::move(active), colors, visit);
  }

  /// Like over(), but the greedy independent set visits positions of larger induced degree first.
  static ReductionFrame over_by_degree(const Graph& g, std::vector<int> active, int colors) {
    std::vector<int> visit = active;
    std::vector<int> deg(g.vertex_count(), 0);
    for (int q : active)
      for (int r : g.neighbors_at(q)) deg[q] += std::binary_search(active.begin(), active.end(), r);
    std::stable_sort(visit.begin(), visit.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    return over_in_order(g, std::move(active), colors, visit);
  }

  /// Largest number of active neighbors of a dependent position.
  int dependent_degree(const Graph& g) const {
    int d = 0;
    for (int q : dependent) {
      int k = 0;
      for (int r : g.neighbors_at(q)) k += is_active(r);
      d = std::max(d, k);
    }
    return d;
  }

  /// Whole graph, palette [n]; the independent set is the graph's own prefix.
  static ReductionFrame top(const Graph& g, int n) {
    std::vector<int> all(g.vertex_count());
    for (int q = 0; q < g.vertex_count(); ++q) all[q] = q;
    return over(g, std::move(all), n);
  }

  /// Next level: the independent positions are pinned to `colors`, one color fewer remains.
  ReductionFrame next(const Graph& g) const { return over(g, dependent, colors - 1); }

 private:
  static ReductionFrame over_in_order(const Graph& g, std::vector<int> active, int colors, const std::vector<int>& visit) {
    ReductionFrame f;
    f.active = std::move(active);
    f.colors = colors;
    std::vector<char> in_active(g.vertex_count(), 0), chosen(g.vertex_count(), 0);
    for (int q : f.active) in_active[q] = 1;
    for (int q : visit) {
      int deg = 0;
      bool free = true;
      for (int r : g.neighbors_at(q)) {
        if (!in_active[r]) continue;
        ++deg;
        if (chosen[r]) free = false;
      }
      f.max_degree = std::max(f.max_degree, deg);
      if (free) chosen[q] = 1;
    }
    for (int q : f.active) (chosen[q] ? f.independent : f.dependent).push_back(q);
    return f;
  }
};

}  // namespace homcx

#endif  // HOMCX_FRAME_HPP
