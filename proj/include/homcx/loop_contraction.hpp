#ifndef HOMCX_LOOP_CONTRACTION_HPP
#define HOMCX_LOOP_CONTRACTION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcx/cell.hpp"
#include "homcx/frame.hpp"
#include "homcx/graph.hpp"

namespace homcx {

/// A proper coloring, one color per position of the graph ordering.
using Coloring = std::vector<int>;

/// Closed edge path in the 1-skeleton; the closing edge back to the first vertex is implicit.
struct EdgePath {
  std::vector<Coloring> vertices;

  std::size_t size() const { return vertices.size(); }
  bool is_constant() const {
    for (const auto& v : vertices)
      if (v != vertices.front()) return false;
    return true;
  }
  friend bool operator==(const EdgePath&, const EdgePath&) = default;
};

enum class MoveKind { DropRepeat, InsertPair, DeleteVertex };

inline const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::DropRepeat: return "DropRepeat";
    case MoveKind::InsertPair: return "InsertPair";
    case MoveKind::DeleteVertex: return "DeleteVertex";
  }
  return "?";
}

/**
 * One elementary homotopy of a closed path.
 *
 *  DropRepeat   removes vertex k, equal to its successor.
 *  InsertPair   inserts `vertices` (two colorings) between vertex k and its
 *               successor, across the square `support`.
 *  DeleteVertex removes vertex k, sliding across the 1- or 2-simplex `support`
 *               spanned at one position by the colors of k and its two neighbors.
 */
struct HomotopyMove {
  MoveKind kind = MoveKind::DropRepeat;
  std::size_t position = 0;
  std::vector<Coloring> vertices;
  Cell support;

  friend bool operator==(const HomotopyMove&, const HomotopyMove&) = default;
};

inline Cell vertex_cell(const Coloring& c) {
  Cell out;
  out.sets.reserve(c.size());
  for (int color : c) out.sets.push_back(color_bit(color));
  return out;
}

inline Coloring coloring_of(const Cell& c) {
  Coloring out;
  for (ColorMask m : c.sets) {
    if (color_count(m) != 1) throw std::invalid_argument("cell " + to_compact_string(c) + " is not a vertex");
    out.push_back(min_color(m));
  }
  return out;
}

inline bool is_coloring(const Graph& g, int n, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.vertex_count()) return false;
  for (int color : c)
    if (color < 1 || color > n) return false;
  return is_cell(g, n, vertex_cell(c));
}

inline int differing_positions(const Coloring& a, const Coloring& b) {
  int d = 0;
  for (std::size_t q = 0; q < a.size(); ++q) d += a[q] != b[q];
  return d;
}

inline bool in_closure(const Cell& support, const Coloring& v) {
  if (support.size() != v.size()) return false;
  for (std::size_t q = 0; q < v.size(); ++q)
    if (v[q] < 1 || v[q] > kMaxColors || !has_color(support[q], v[q])) return false;
  return true;
}

inline std::string to_compact_string(const Coloring& c) { return to_compact_string(vertex_cell(c)); }

namespace detail {

inline void require_path_shape(const EdgePath& p) {
  if (p.vertices.empty()) throw std::invalid_argument("edge path has no vertices");
  const std::size_t width = p.vertices.front().size();
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& a = p.vertices[k];
    const auto& b = p.vertices[(k + 1) % p.size()];
    if (a.size() != width || b.size() != width) throw std::invalid_argument("edge path vertices differ in length");
    if (differing_positions(a, b) > 1)
      throw std::invalid_argument("vertices " + std::to_string(k) + " and " + std::to_string((k + 1) % p.size()) +
                                  " differ in more than one coordinate: " + to_compact_string(a) + " -> " +
                                  to_compact_string(b));
  }
}

/// Applies moves to a path while recording them.
class PathEditor {
 public:
  PathEditor(EdgePath& path, std::vector<HomotopyMove>& log) : path_(path), log_(log) {}

  std::size_t size() const { return path_.size(); }
  const Coloring& at(std::size_t k) const { return path_.vertices[k % path_.size()]; }

  void drop_repeats() {
    bool changed = true;
    while (changed && path_.size() > 1) {
      changed = false;
      for (std::size_t k = 0; k < path_.size() && path_.size() > 1; ++k) {
        if (path_.vertices[k] == at(k + 1)) {
          log_.push_back({MoveKind::DropRepeat, k, {path_.vertices[k]}, vertex_cell(path_.vertices[k])});
          path_.vertices.erase(path_.vertices.begin() + k);
          changed = true;
          break;
        }
      }
    }
  }

  void insert_pair(std::size_t k, Coloring u, Coloring w, Cell support) {
    log_.push_back({MoveKind::InsertPair, k, {u, w}, std::move(support)});
    auto it = path_.vertices.begin() + k + 1;
    it = path_.vertices.insert(it, std::move(w));
    path_.vertices.insert(it, std::move(u));
  }

  void delete_vertex(std::size_t k, Cell support) {
    log_.push_back({MoveKind::DeleteVertex, k, {path_.vertices[k]}, std::move(support)});
    path_.vertices.erase(path_.vertices.begin() + k);
  }

 private:
  EdgePath& path_;
  std::vector<HomotopyMove>& log_;
};

/**
 * Clears every vertex whose color at `pos` is bad.
 *
 * First, every edge whose endpoints share the same bad color at `pos` (so the
 * edge changes some other position mu) is pushed across the square
 * {a_mu, b_mu} x {bad, z}, where z = replacement(a, b). Afterwards each edge at
 * a bad vertex changes `pos` only, so the bad vertex can be cut off across the
 * simplex spanned at `pos` by its own color and its neighbors' colors.
 */
template <typename Bad, typename Replacement>
void sweep_position(EdgePath& path, std::vector<HomotopyMove>& log, int pos, Bad bad, Replacement replacement) {
  PathEditor ed(path, log);
  ed.drop_repeats();
  if (path.size() < 2) return;

  for (std::size_t k = 0; k < path.size();) {
    const Coloring& a = path.vertices[k];
    const Coloring& b = ed.at(k + 1);
    if (bad(a[pos]) && a[pos] == b[pos] && a != b) {
      const int z = replacement(a, b);
      Coloring u = a, w = b;
      u[pos] = z;
      w[pos] = z;
      Cell support = vertex_cell(a);
      for (std::size_t q = 0; q < a.size(); ++q)
        if (a[q] != b[q]) support[q] |= color_bit(b[q]);
      support[pos] |= color_bit(z);
      ed.insert_pair(k, std::move(u), std::move(w), std::move(support));
      k += 3;
    } else {
      ++k;
    }
  }

  for (;;) {
    if (path.size() < 2) return;
    std::optional<std::size_t> victim;
    for (std::size_t k = 0; k < path.size(); ++k)
      if (bad(path.vertices[k][pos])) {
        victim = k;
        break;
      }
    if (!victim) return;
    const std::size_t k = *victim;
    const Coloring& cur = path.vertices[k];
    const Coloring& prev = ed.at(k + path.size() - 1);
    const Coloring& next = ed.at(k + 1);
    Cell support = vertex_cell(cur);
    for (const Coloring* nb : {&prev, &next}) {
      for (std::size_t q = 0; q < cur.size(); ++q)
        if (static_cast<int>(q) != pos && (*nb)[q] != cur[q])
          throw std::logic_error("vertex to delete has a neighbor differing away from the swept position");
      support[pos] |= color_bit((*nb)[pos]);
    }
    ed.delete_vertex(k, std::move(support));
    ed.drop_repeats();
  }
}

}  // namespace detail

/// Removes consecutive repeated vertices (cyclically).
inline std::pair<EdgePath, std::vector<HomotopyMove>> normalize_path(EdgePath p) {
  detail::require_path_shape(p);
  std::vector<HomotopyMove> moves;
  detail::PathEditor(p, moves).drop_repeats();
  return {std::move(p), std::move(moves)};
}

namespace detail {

inline void require_loop_in_frame(const Graph& g, int n, const EdgePath& p) {
  require_path_shape(p);
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!is_coloring(g, n, p.vertices[k]))
      throw std::invalid_argument("path vertex " + std::to_string(k) + " " + to_compact_string(p.vertices[k]) +
                                  " is not a proper coloring with " + std::to_string(n) + " colors");
}

/**
 * One lifting pass inside a frame: afterwards the independent positions use
 * colors in {i, ..., colors}. Dependent positions lose color i first (free
 * color z from the bounded neighborhood), then independent positions lose
 * i - 1 by lifting to i, which no neighbor uses at that point.
 */
inline void lift_in_frame(const Graph& g, const ReductionFrame& f, EdgePath& path, int i,
                          std::vector<HomotopyMove>& log) {
  if (path.size() < 2) return;
  for (int pos : f.dependent) {
    auto pick_free = [&](const Coloring& a, const Coloring& b) {
      ColorMask used = color_bit(i);
      for (int r : g.neighbors_at(pos)) used |= color_bit(a[r]) | color_bit(b[r]);
      const ColorMask free = palette_mask(f.colors) & ~used;
      if (free == 0) throw std::logic_error("no free color for position " + std::to_string(pos + 1));
      return min_color(free);
    };
    sweep_position(path, log, pos, [i](int c) { return c == i; }, pick_free);
  }
  for (int pos : f.independent) {
    auto lift = [&](const Coloring& a, const Coloring& b) {
      for (int r : g.neighbors_at(pos))
        if (a[r] == i || b[r] == i)
          throw std::logic_error("color " + std::to_string(i) + " still used next to position " + std::to_string(pos + 1));
      return i;
    };
    sweep_position(path, log, pos, [i](int c) { return c == i - 1; }, lift);
  }
}

}  // namespace detail

/**
 * Deforms a loop whose first prefix_size coordinates lie in {i-1, ..., n}
 * into one whose first prefix_size coordinates lie in {i, ..., n}.
 * A constant loop is returned unchanged, and a loop that shrinks to a
 * single vertex along the way stops there: it is already contracted.
 */
inline std::pair<EdgePath, std::vector<HomotopyMove>> lift_prefix_colors(const Graph& g, int n, EdgePath path, int i) {
  if (vgap(g, n) < 2)
    throw std::invalid_argument("loop lifting needs vgap >= 2, got " + std::to_string(vgap(g, n)));
  if (i < 2 || i > n) throw std::invalid_argument("target color must lie in 2..n");
  detail::require_loop_in_frame(g, n, path);
  for (std::size_t k = 0; k < path.size(); ++k)
    for (int q = 0; q < g.prefix_size(); ++q)
      if (path.vertices[k][q] < i - 1)
        throw std::invalid_argument("vertex " + std::to_string(k) + " uses color " +
                                    std::to_string(path.vertices[k][q]) + " at prefix position " +
                                    std::to_string(q + 1) + ", below " + std::to_string(i - 1));
  std::vector<HomotopyMove> moves;
  detail::PathEditor(path, moves).drop_repeats();
  detail::lift_in_frame(g, ReductionFrame::top(g, n), path, i, moves);
  return {std::move(path), std::move(moves)};
}

struct LoopContraction {
  std::vector<HomotopyMove> moves;
  EdgePath final_path;
};

/**
 * A frame in which every lifting step finds its free color: each dependent
 * position has at most colors - 3 active neighbors. The graph-order frame is
 * used when it qualifies (always the case when vgap >= 2); otherwise the
 * independent set is rebuilt favoring positions of large degree.
 */
inline std::optional<ReductionFrame> liftable_frame(const Graph& g, std::vector<int> active, int colors) {
  ReductionFrame f = ReductionFrame::over(g, active, colors);
  if (f.max_degree == 0 || f.dependent_degree(g) <= colors - 3) return f;
  f = ReductionFrame::over_by_degree(g, std::move(active), colors);
  if (f.dependent_degree(g) <= colors - 3) return f;
  return std::nullopt;
}

/**
 * Contracts a loop to a point. At each level the independent positions are
 * lifted color by color up to the top color of the level; the remaining
 * positions then form a graph over one color fewer. When no edges remain
 * among active positions the complex is a product of simplices and each
 * active position is swept to color 1 in turn.
 *
 * Every level is checked for liftability up front, so the function either
 * rejects the input or returns a full contraction.
 */
inline LoopContraction contract_loop(const Graph& g, int n, const EdgePath& start) {
  std::vector<ReductionFrame> frames;
  std::vector<int> all(g.vertex_count());
  for (int q = 0; q < g.vertex_count(); ++q) all[q] = q;
  for (std::optional<ReductionFrame> f = liftable_frame(g, all, n);; f = liftable_frame(g, f->dependent, f->colors - 1)) {
    if (!f)
      throw std::invalid_argument("loop contraction needs vgap >= 2 (got " + std::to_string(vgap(g, n)) +
                                  ") or an independent set leaving every other vertex with at most n - 3 neighbors");
    frames.push_back(*f);
    if (f->max_degree == 0 || f->active.empty()) break;
  }
  detail::require_loop_in_frame(g, n, start);
  LoopContraction out;
  out.final_path = start;
  EdgePath& path = out.final_path;
  detail::PathEditor(path, out.moves).drop_repeats();

  for (const ReductionFrame& f : frames) {
    if (path.size() < 2) break;
    if (f.max_degree == 0) {
      for (int pos : f.active)
        detail::sweep_position(path, out.moves, pos, [](int c) { return c != 1; },
                               [](const Coloring&, const Coloring&) { return 1; });
      break;
    }
    for (int i = 2; i <= f.colors && path.size() > 1; ++i) detail::lift_in_frame(g, f, path, i, out.moves);
  }
  if (!path.is_constant()) throw std::logic_error("loop contraction ended on a nonconstant loop");
  return out;
}

struct MoveCheck {
  bool ok = true;
  std::string diagnostic;
  EdgePath final_path;
};

/// Replays moves from `start`, checking each one against its support cell.
inline MoveCheck verify_moves(const Graph& g, int n, const EdgePath& start, const std::vector<HomotopyMove>& moves,
                              bool require_constant = true) {
  MoveCheck res;
  auto fail = [&](std::size_t idx, const std::string& why) {
    res.ok = false;
    res.diagnostic = (idx == SIZE_MAX ? std::string("start path: ") : "move " + std::to_string(idx) + ": ") + why;
    return res;
  };
  try {
    detail::require_loop_in_frame(g, n, start);
  } catch (const std::exception& e) {
    return fail(SIZE_MAX, e.what());
  }
  EdgePath path = start;
  for (std::size_t idx = 0; idx < moves.size(); ++idx) {
    const HomotopyMove& mv = moves[idx];
    const std::size_t m = path.size();
    if (mv.position >= m) return fail(idx, "position " + std::to_string(mv.position) + " out of range");
    if (m < 2) return fail(idx, "path is already a single vertex");
    const Coloring& cur = path.vertices[mv.position];
    const Coloring& next = path.vertices[(mv.position + 1) % m];
    const Coloring& prev = path.vertices[(mv.position + m - 1) % m];
    if (mv.support.size() != cur.size()) return fail(idx, "support has wrong length");
    if (!is_cell(g, n, mv.support)) return fail(idx, "support " + to_compact_string(mv.support) + " is not a cell");
    int wide = 0;
    for (ColorMask s : mv.support.sets) wide += color_count(s) > 1;
    const int dim = mv.support.dim();

    switch (mv.kind) {
      case MoveKind::DropRepeat:
        if (cur != next) return fail(idx, "DropRepeat on distinct consecutive vertices");
        if (mv.support != vertex_cell(cur)) return fail(idx, "DropRepeat support is not the repeated vertex");
        path.vertices.erase(path.vertices.begin() + mv.position);
        break;
      case MoveKind::InsertPair: {
        if (mv.vertices.size() != 2) return fail(idx, "InsertPair needs two vertices");
        if (dim != 2 || wide != 2) return fail(idx, "InsertPair support must be a square");
        const Coloring& u = mv.vertices[0];
        const Coloring& w = mv.vertices[1];
        for (const Coloring* v : {&cur, &u, &w, &next})
          if (!in_closure(mv.support, *v)) return fail(idx, to_compact_string(*v) + " not in the support square");
        if (differing_positions(cur, u) != 1 || differing_positions(u, w) != 1 || differing_positions(w, next) != 1)
          return fail(idx, "inserted vertices do not form edges");
        auto it = path.vertices.insert(path.vertices.begin() + mv.position + 1, w);
        path.vertices.insert(it, u);
        break;
      }
      case MoveKind::DeleteVertex: {
        if (mv.vertices.size() != 1 || mv.vertices[0] != cur) return fail(idx, "DeleteVertex names the wrong vertex");
        if (dim < 1 || dim > 2 || wide != 1) return fail(idx, "DeleteVertex support must be a 1- or 2-simplex");
        for (const Coloring* v : {&prev, &cur, &next})
          if (!in_closure(mv.support, *v)) return fail(idx, to_compact_string(*v) + " not in the support simplex");
        if (differing_positions(prev, next) > 1) return fail(idx, "neighbors of the deleted vertex are not adjacent");
        path.vertices.erase(path.vertices.begin() + mv.position);
        break;
      }
    }
  }
  res.final_path = path;
  if (require_constant && !path.is_constant()) return fail(moves.size(), "final path is not constant");
  return res;
}

/// Proper coloring using the smallest available color at each position.
inline Coloring greedy_coloring(const Graph& g, int n) {
  Coloring c(g.vertex_count(), 0);
  for (int q = 0; q < g.vertex_count(); ++q) {
    ColorMask used = 0;
    for (int r : g.neighbors_at(q))
      if (r < q) used |= color_bit(c[r]);
    const ColorMask free = palette_mask(n) & ~used;
    if (free == 0) throw std::invalid_argument("graph has no proper coloring found greedily with " + std::to_string(n) + " colors");
    c[q] = min_color(free);
  }
  return c;
}

inline std::vector<Coloring> coloring_neighbors(const Graph& g, int n, const Coloring& v) {
  std::vector<Coloring> out;
  for (int q = 0; q < g.vertex_count(); ++q) {
    ColorMask used = color_bit(v[q]);
    for (int r : g.neighbors_at(q)) used |= color_bit(v[r]);
    for (int c : to_colors(palette_mask(n) & ~used)) {
      Coloring w = v;
      w[q] = c;
      out.push_back(std::move(w));
    }
  }
  return out;
}

/**
 * Seeded random loop: a random walk of `steps` edges from a random vertex of
 * the component of the greedy coloring, closed up through a BFS spanning
 * tree of that component.
 */
inline EdgePath random_loop(const Graph& g, int n, std::size_t steps, std::uint64_t seed,
                            std::size_t vertex_cap = 2'000'000) {
  std::mt19937_64 rng(seed);
  const Coloring root = greedy_coloring(g, n);
  std::map<Coloring, Coloring> parent{{root, root}};
  std::vector<Coloring> order{root};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto& w : coloring_neighbors(g, n, order[head])) {
      if (parent.count(w)) continue;
      parent.emplace(w, order[head]);
      order.push_back(std::move(w));
      if (order.size() > vertex_cap) throw std::runtime_error("component too large for random loop generation");
    }
  }
  auto tree_path_to_root = [&](Coloring v) {
    std::vector<Coloring> up{v};
    while (v != root) {
      v = parent.at(v);
      up.push_back(v);
    }
    return up;
  };

  const Coloring start = order[rng() % order.size()];
  EdgePath loop;
  loop.vertices.push_back(start);
  Coloring cur = start;
  for (std::size_t s = 0; s < steps; ++s) {
    auto nbrs = coloring_neighbors(g, n, cur);
    if (nbrs.empty()) break;
    cur = nbrs[rng() % nbrs.size()];
    loop.vertices.push_back(cur);
  }
  auto up = tree_path_to_root(cur);
  auto down = tree_path_to_root(start);
  loop.vertices.insert(loop.vertices.end(), up.begin() + 1, up.end());
  for (std::size_t k = down.size() - 1; k-- > 1;) loop.vertices.push_back(down[k]);
  // the closing edge from the last vertex to `start` is implicit; fold the duplicate root when start == root
  if (loop.vertices.size() > 1 && loop.vertices.back() == start) loop.vertices.pop_back();
  return normalize_path(std::move(loop)).first;
}

}  // namespace homcx

#endif  // HOMCX_LOOP_CONTRACTION_HPP
