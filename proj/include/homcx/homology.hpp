#ifndef HOMCX_HOMOLOGY_HPP
#define HOMCX_HOMOLOGY_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "homcx/cell.hpp"
#include "homcx/skeleton.hpp"
#include "homcx/smith.hpp"

namespace homcx {

/// Matrix of the boundary map from t-cells (columns) to (t-1)-cells (rows), canonical order.
struct BoundaryMatrix {
  int dim = 0;
  SparseIntMatrix matrix;
};

/**
 * Assembles the t-th boundary matrix of a skeleton. Every face of an
 * enumerated cell is enumerated, so lookups cannot miss.
 */
inline BoundaryMatrix boundary_matrix(const ComplexSkeleton& sk, int t, int threads = 1) {
  if (t < 1 || t > sk.max_dim())
    throw std::invalid_argument("boundary dimension " + std::to_string(t) + " outside 1.." +
                                std::to_string(sk.max_dim()));
  BoundaryMatrix out;
  out.dim = t;
  const std::size_t ncols = sk.count(t);
  out.matrix = SparseIntMatrix(sk.count(t - 1), ncols);
  const int p = sk.width();

  auto fill = [&](std::size_t begin, std::size_t step) {
    std::vector<ColorMask> face(p);
    for (std::size_t col = begin; col < ncols; col += step) {
      auto sets = sk.cell_view(t, col);
      auto& entries = out.matrix.columns[col];
      std::copy(sets.begin(), sets.end(), face.begin());
      int e = 0;
      for (int pos = 0; pos < p; ++pos) {
        const ColorMask m = sets[pos];
        if (color_count(m) >= 2) {
          for (ColorMask rest = m; rest != 0; rest &= rest - 1) {
            face[pos] = m & ~(rest & (~rest + 1));
            auto row = sk.index_of(std::span<const ColorMask>(face));
            if (!row) throw std::logic_error("face missing from skeleton");
            entries.emplace_back(static_cast<std::uint32_t>(*row), ((e + colors_below(m, min_color(rest))) & 1) ? -1 : 1);
          }
          face[pos] = m;
        }
        e += color_count(m);
      }
      std::sort(entries.begin(), entries.end());
    }
  };

  if (threads <= 1) {
    fill(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(fill, static_cast<std::size_t>(k), static_cast<std::size_t>(threads));
    for (auto& th : pool) th.join();
  }
  return out;
}

inline SmithResult smith_normal_form(const BoundaryMatrix& m) { return smith_normal_form(m.matrix); }

/**
 * Transpose of the (t+1)-th boundary matrix, built column by column from the
 * cofaces of each t-cell: rows are (t+1)-cells, columns t-cells.
 */
inline SparseIntMatrix coboundary_matrix(const ComplexSkeleton& sk, int t, int threads = 1) {
  if (t < 0 || t + 1 > sk.max_dim())
    throw std::invalid_argument("coboundary dimension " + std::to_string(t) + " outside 0.." +
                                std::to_string(sk.max_dim() - 1));
  const std::size_t ncols = sk.count(t);
  SparseIntMatrix out(sk.count(t + 1), ncols);
  const int p = sk.width();
  const Graph& g = sk.graph();
  const ColorMask palette = palette_mask(sk.colors());

  auto fill = [&](std::size_t begin, std::size_t step) {
    std::vector<ColorMask> coface(p);
    for (std::size_t col = begin; col < ncols; col += step) {
      auto sets = sk.cell_view(t, col);
      auto& entries = out.columns[col];
      std::copy(sets.begin(), sets.end(), coface.begin());
      int e = 0;
      for (int pos = 0; pos < p; ++pos) {
        const ColorMask m = sets[pos];
        ColorMask blocked = m;
        for (int r : g.neighbors_at(pos)) blocked |= sets[r];
        for (ColorMask add = palette & ~blocked; add != 0; add &= add - 1) {
          const ColorMask bit = add & (~add + 1);
          coface[pos] = m | bit;
          auto row = sk.index_of(std::span<const ColorMask>(coface));
          if (!row) throw std::logic_error("coface missing from skeleton");
          const int exponent = e + colors_below(m, min_color(bit));
          entries.emplace_back(static_cast<std::uint32_t>(*row), (exponent & 1) ? -1 : 1);
        }
        coface[pos] = m;
        e += color_count(m);
      }
      std::sort(entries.begin(), entries.end());
    }
  };

  if (threads <= 1) {
    fill(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(fill, static_cast<std::size_t>(k), static_cast<std::size_t>(threads));
    for (auto& th : pool) th.join();
  }
  return out;
}

/// Integral homology in degrees 0..betti.size()-1; H_0 unreduced.
struct HomologySummary {
  std::vector<std::size_t> betti;
  std::vector<std::vector<BigInt>> torsion;

  int top_degree() const { return static_cast<int>(betti.size()) - 1; }
  bool vanishes(int t) const { return betti.at(t) == 0 && torsion.at(t).empty(); }
};

/**
 * H_t for 0 <= t <= t_max. Needs the (t_max + 1)-skeleton: without the
 * (t_max + 1)-cells the rank of the incoming boundary would be understated.
 *
 * The coboundary matrices are reduced from dimension 0 upward. A t-cell
 * consumed as a unit pivot row of the coboundary out of degree t - 1 spans,
 * together with the other columns, nothing new in the coboundary out of
 * degree t, so its column is dropped there. A matrix and its transpose
 * share rank and invariant factors.
 */
inline HomologySummary homology_summary(const ComplexSkeleton& sk, int t_max, int threads = 1) {
  if (t_max < 0) throw std::invalid_argument("t_max must be nonnegative");
  if (sk.max_dim() < t_max + 1)
    throw std::invalid_argument("H_" + std::to_string(t_max) + " needs the " + std::to_string(t_max + 1) +
                                "-skeleton, but only dimensions up to " + std::to_string(sk.max_dim()) +
                                " were enumerated");
  // rank[t] and factors[t] describe the boundary out of degree t
  std::vector<std::size_t> rank(t_max + 2, 0);
  std::vector<std::vector<BigInt>> factors(t_max + 2);
  std::vector<char> skip;
  for (int t = 0; t <= t_max; ++t) {
    SparseIntMatrix m = coboundary_matrix(sk, t, threads);
    detail::Reduction red = detail::reduce(m, skip.empty() ? nullptr : &skip);
    rank[t + 1] = red.smith.rank;
    factors[t + 1] = std::move(red.smith.nontrivial);
    skip.assign(sk.count(t + 1), 0);
    for (auto r : red.unit_pivot_rows) skip[r] = 1;
  }
  HomologySummary h;
  for (int t = 0; t <= t_max; ++t) {
    h.betti.push_back(sk.count(t) - rank[t] - rank[t + 1]);
    h.torsion.push_back(factors[t + 1]);
  }
  return h;
}

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Connected components of the 1-skeleton.
inline std::size_t component_count(const ComplexSkeleton& sk) {
  if (sk.max_dim() < 1) return sk.count(0);
  detail::DisjointSets ds(sk.count(0));
  std::size_t comps = sk.count(0);
  for (std::size_t e = 0; e < sk.count(1); ++e) {
    Chain b = boundary(sk.cell(1, e));
    std::vector<std::size_t> ends;
    for (const auto& [c, k] : b) ends.push_back(*sk.index_of(c));
    if (ds.unite(ends.at(0), ends.at(1))) --comps;
  }
  return comps;
}

/**
 * Free rank of pi_1 for a connected complex without 2-cells: contracting a
 * spanning tree of the graph leaves a bouquet of e - v + 1 circles.
 */
inline std::size_t pi1_free_rank(const ComplexSkeleton& sk) {
  if (sk.max_dim() < 2)
    throw std::invalid_argument("pi1 rank needs the 2-skeleton to confirm the complex has no 2-cells");
  if (sk.count(2) != 0)
    throw std::invalid_argument("complex has " + std::to_string(sk.count(2)) +
                                " cells of dimension 2; the free-rank formula applies only to graphs");
  if (sk.count(0) == 0) throw std::invalid_argument("complex is empty");
  const std::size_t comps = component_count(sk);
  if (comps != 1)
    throw std::invalid_argument("complex is disconnected (" + std::to_string(comps) + " components)");
  return sk.count(1) - sk.count(0) + 1;
}

}  // namespace homcx

#endif  // HOMCX_HOMOLOGY_HPP
