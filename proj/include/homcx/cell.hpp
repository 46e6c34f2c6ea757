#ifndef HOMCX_CELL_HPP
#define HOMCX_CELL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcx/color_set.hpp"
#include "homcx/graph.hpp"

namespace homcx {

/**
 * A cell of Hom(G, K_n): one nonempty color set per position of the graph
 * ordering, with the sets at adjacent positions disjoint.
 *
 * Ordering is lexicographic on the tuple of masks (each mask read as an
 * integer), which is the canonical cell order used everywhere.
 */
struct Cell {
  std::vector<ColorMask> sets;

  Cell() = default;
  explicit Cell(std::vector<ColorMask> s) : sets(std::move(s)) {}
  Cell(std::initializer_list<ColorMask> s) : sets(s) {}

  std::size_t size() const { return sets.size(); }
  ColorMask operator[](std::size_t q) const { return sets[q]; }
  ColorMask& operator[](std::size_t q) { return sets[q]; }

  int dim() const {
    int d = 0;
    for (ColorMask m : sets) d += color_count(m) - 1;
    return d;
  }

  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

inline int cell_dim(const Cell& c) { return c.dim(); }

/// Builds a cell from per-position color lists.
inline Cell cell_from_lists(const std::vector<std::vector<int>>& lists) {
  Cell c;
  c.sets.reserve(lists.size());
  for (const auto& l : lists) c.sets.push_back(to_mask(l));
  return c;
}

inline std::vector<std::vector<int>> cell_to_lists(const Cell& c) {
  std::vector<std::vector<int>> out;
  out.reserve(c.size());
  for (ColorMask m : c.sets) out.push_back(to_colors(m));
  return out;
}

/// "(1,67,234,2)" style rendering.
inline std::string to_compact_string(const Cell& c) {
  std::string s = "(";
  for (std::size_t q = 0; q < c.size(); ++q) {
    if (q) s += ',';
    s += compact_string(c[q]);
  }
  return s + ")";
}

/// Validity check on raw masks; `sets.size()` must equal the vertex count.
inline bool is_cell(const Graph& g, int n, std::span<const ColorMask> sets) {
  if (static_cast<int>(sets.size()) != g.vertex_count())
    throw std::invalid_argument("cell has " + std::to_string(sets.size()) + " coordinates, graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
  const ColorMask palette = palette_mask(n);
  for (std::size_t q = 0; q < sets.size(); ++q) {
    if (sets[q] == 0 || (sets[q] & ~palette) != 0) return false;
    for (int r : g.neighbors_at(static_cast<int>(q)))
      if (r > static_cast<int>(q) && (sets[q] & sets[r]) != 0) return false;
  }
  return true;
}

inline bool is_cell(const Graph& g, int n, const Cell& c) { return is_cell(g, n, std::span<const ColorMask>(c.sets)); }

/**
 * Cell test for Hom(G, H) with an arbitrary target graph H: every pair of
 * colors across an edge of G must be an edge of H. Colors are vertices of H.
 */
inline bool is_hom_cell(const Graph& g, const Graph& h, const Cell& c) {
  if (static_cast<int>(c.size()) != g.vertex_count())
    throw std::invalid_argument("cell length does not match the vertex count");
  const ColorMask palette = palette_mask(h.vertex_count());
  for (std::size_t q = 0; q < c.size(); ++q)
    if (c[q] == 0 || (c[q] & ~palette) != 0) return false;
  for (int q = 0; q < g.vertex_count(); ++q)
    for (int r : g.neighbors_at(q)) {
      if (r < q) continue;
      for (int a : to_colors(c[q]))
        for (int b : to_colors(c[r]))
          if (!h.adjacent(a, b)) return false;
    }
  return true;
}

/// Membership in X_i(j): positions 0..j-1 use only colors >= i.
inline bool in_X(const Cell& c, int i, int j) {
  if (j < 0 || j > static_cast<int>(c.size())) throw std::invalid_argument("prefix length out of range");
  const ColorMask low = palette_mask(i - 1);
  for (int q = 0; q < j; ++q)
    if ((c[q] & low) != 0) return false;
  return true;
}

// --- exact integer coefficients -------------------------------------------

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("chain coefficient overflow");
  return r;
}

/// Exponent c(x) of the incidence sign for removing `color` from position `pos`.
inline int incidence_exponent(std::span<const ColorMask> sets, int pos, int color) {
  int e = colors_below(sets[pos], color);
  for (int q = 0; q < pos; ++q) e += color_count(sets[q]);
  return e;
}

inline int incidence_sign(std::span<const ColorMask> sets, int pos, int color) {
  return (incidence_exponent(sets, pos, color) & 1) ? -1 : 1;
}

/// Finite integer combination of cells of one dimension; zero coefficients are never stored.
class Chain {
 public:
  using Terms = std::map<Cell, Coeff>;

  explicit Chain(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Coeff coefficient(const Cell& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Cell& c, Coeff k) {
    if (k == 0) return;
    if (c.dim() != dim_)
      throw std::invalid_argument("cell " + to_compact_string(c) + " has dimension " + std::to_string(c.dim()) +
                                  ", chain has dimension " + std::to_string(dim_));
    auto [it, inserted] = terms_.try_emplace(c, k);
    if (!inserted) {
      it->second = checked_add(it->second, k);
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const Chain& other, Coeff k) {
    if (k == 0) return;
    for (const auto& [c, v] : other.terms_) add(c, checked_mul(v, k));
  }

  Chain& operator+=(const Chain& other) {
    add_scaled(other, 1);
    return *this;
  }
  Chain& operator-=(const Chain& other) {
    add_scaled(other, -1);
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator*(Coeff k, const Chain& a) {
    Chain r(a.dim_);
    r.add_scaled(a, k);
    return r;
  }

  friend bool operator==(const Chain& a, const Chain& b) {
    if (a.empty() && b.empty()) return true;
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  Terms terms_;
};

inline std::string to_compact_string(const Chain& ch) {
  if (ch.empty()) return "0";
  std::string s;
  for (const auto& [c, k] : ch) {
    if (k < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (k != 1 && k != -1) s += std::to_string(k < 0 ? -k : k);
    s += to_compact_string(c);
  }
  return s;
}

/// Adds k * boundary(cell) into `out`.
inline void add_boundary(Chain& out, const Cell& c, Coeff k) {
  Cell face = c;
  for (int pos = 0; pos < static_cast<int>(c.size()); ++pos) {
    const ColorMask m = c[pos];
    if (color_count(m) < 2) continue;
    int e = 0;
    for (int q = 0; q < pos; ++q) e += color_count(c[q]);
    for (ColorMask rest = m; rest != 0; rest &= rest - 1, ++e) {
      const ColorMask bit = rest & (~rest + 1);
      face[pos] = m & ~bit;
      out.add(face, (e & 1) ? -k : k);
    }
    face[pos] = m;
  }
}

/**
 * Signed boundary: sum over removable colors x of (-1)^{c(x)} times the face
 * without x, where c(x) counts colors in earlier positions plus colors of the
 * same position below x. Vertices have zero boundary.
 */
inline Chain boundary(const Cell& c) {
  Chain out(c.dim() - 1);
  add_boundary(out, c, 1);
  return out;
}

inline Chain boundary_chain(const Chain& ch) {
  Chain out(ch.dim() - 1);
  for (const auto& [c, k] : ch) add_boundary(out, c, k);
  return out;
}

}  // namespace homcx

#endif  // HOMCX_CELL_HPP
