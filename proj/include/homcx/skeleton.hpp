#ifndef HOMCX_SKELETON_HPP
#define HOMCX_SKELETON_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "homcx/cell.hpp"
#include "homcx/color_set.hpp"
#include "homcx/graph.hpp"

namespace homcx {

inline constexpr std::size_t kDefaultCellCap = 10'000'000;

/// Thrown when an enumeration would exceed its cell budget.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(int dimension, std::size_t cap)
      : std::runtime_error("cell cap of " + std::to_string(cap) + " exceeded while enumerating dimension " +
                           std::to_string(dimension)),
        dimension_(dimension),
        cap_(cap) {}
  int dimension() const { return dimension_; }
  std::size_t cap() const { return cap_; }

 private:
  int dimension_;
  std::size_t cap_;
};

/**
 * All cells of Hom(G, K_n) of dimension <= max_dim, stored per dimension as a
 * flat array of masks in canonical (lexicographic) order. Closed under faces.
 */
class ComplexSkeleton {
 public:
  ComplexSkeleton(Graph g, int n, int max_dim, std::vector<std::vector<ColorMask>> flat)
      : graph_(std::move(g)), n_(n), max_dim_(max_dim), flat_(std::move(flat)) {}

  const Graph& graph() const { return graph_; }
  int colors() const { return n_; }
  int max_dim() const { return max_dim_; }
  int width() const { return graph_.vertex_count(); }

  std::size_t count(int d) const {
    if (d < 0 || d > max_dim_) return 0;
    const int p = width();
    return flat_[d].size() / p;
  }

  std::size_t total_cells() const {
    std::size_t s = 0;
    for (int d = 0; d <= max_dim_; ++d) s += count(d);
    return s;
  }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f(max_dim_ + 1);
    for (int d = 0; d <= max_dim_; ++d) f[d] = count(d);
    return f;
  }

  std::span<const ColorMask> cell_view(int d, std::size_t idx) const {
    const std::size_t p = width();
    return std::span<const ColorMask>(flat_[d]).subspan(idx * p, p);
  }

  Cell cell(int d, std::size_t idx) const {
    auto v = cell_view(d, idx);
    return Cell(std::vector<ColorMask>(v.begin(), v.end()));
  }

  /// Position of a cell within its dimension, if it was enumerated.
  std::optional<std::size_t> index_of(std::span<const ColorMask> sets) const {
    int d = 0;
    for (ColorMask m : sets) d += color_count(m) - 1;
    if (d < 0 || d > max_dim_ || static_cast<int>(sets.size()) != width()) return std::nullopt;
    std::size_t lo = 0, hi = count(d);
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      auto v = cell_view(d, mid);
      if (std::lexicographical_compare(v.begin(), v.end(), sets.begin(), sets.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count(d)) {
      auto v = cell_view(d, lo);
      if (std::equal(v.begin(), v.end(), sets.begin(), sets.end())) return lo;
    }
    return std::nullopt;
  }
  std::optional<std::size_t> index_of(const Cell& c) const { return index_of(std::span<const ColorMask>(c.sets)); }

 private:
  Graph graph_;
  int n_;
  int max_dim_;
  std::vector<std::vector<ColorMask>> flat_;
};

namespace detail {

class SkeletonEnumerator {
 public:
  SkeletonEnumerator(const Graph& g, int n, int max_dim, std::size_t cap, std::atomic<std::size_t>& total)
      : g_(g), n_(n), max_dim_(max_dim), cap_(cap), total_(total), current_(g.vertex_count(), 0), out_(max_dim + 1) {}

  void run_from(ColorMask first) {
    current_[0] = first;
    place(1, color_count(first) - 1);
  }

  void run_all() {
    place(0, 0);
  }

  std::vector<std::vector<ColorMask>> take() { return std::move(out_); }

 private:
  void place(int pos, int excess) {
    if (pos == g_.vertex_count()) {
      emit(excess);
      return;
    }
    ColorMask allowed = palette_mask(n_);
    for (int r : g_.neighbors_at(pos))
      if (r < pos) allowed &= ~current_[r];
    const int max_size = std::min(max_dim_ - excess + 1, color_count(allowed));
    for (int k = 1; k <= max_size; ++k) choose(pos, excess + k - 1, allowed, k, 0);
  }

  // Subsets of `rest` with `left` elements, each joined to `acc`.
  void choose(int pos, int excess, ColorMask rest, int left, ColorMask acc) {
    if (left == 0) {
      current_[pos] = acc;
      place(pos + 1, excess);
      return;
    }
    while (color_count(rest) >= left) {
      const ColorMask bit = rest & (~rest + 1);
      rest &= rest - 1;
      choose(pos, excess, rest, left - 1, acc | bit);
    }
  }

  void emit(int dim) {
    if (total_.fetch_add(1, std::memory_order_relaxed) + 1 > cap_) throw ResourceLimitError(dim, cap_);
    auto& buf = out_[dim];
    buf.insert(buf.end(), current_.begin(), current_.end());
  }

  const Graph& g_;
  int n_;
  int max_dim_;
  std::size_t cap_;
  std::atomic<std::size_t>& total_;
  std::vector<ColorMask> current_;
  std::vector<std::vector<ColorMask>> out_;
};

inline void sort_records(std::vector<ColorMask>& flat, std::size_t p) {
  if (p == 0) return;
  const std::size_t count = flat.size() / p;
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * p, flat.begin() + (a + 1) * p, flat.begin() + b * p,
                                        flat.begin() + (b + 1) * p);
  });
  std::vector<ColorMask> sorted;
  sorted.reserve(flat.size());
  for (std::size_t i : idx) sorted.insert(sorted.end(), flat.begin() + i * p, flat.begin() + (i + 1) * p);
  flat.swap(sorted);
}

}  // namespace detail

/**
 * Backtracking enumeration of the max_dim-skeleton. Positions are filled in
 * graph order; each receives a nonempty color set disjoint from its already
 * filled neighbors, and branches whose dimension would exceed max_dim are cut.
 *
 * With threads > 1 the search tree is split by the first position's color
 * set. The output is sorted, so the result does not depend on threads.
 */
inline ComplexSkeleton enumerate_skeleton(const Graph& g, int n, int max_dim, std::size_t cell_cap = kDefaultCellCap,
                                          int threads = 1) {
  if (n < 1) throw std::invalid_argument("color count must be at least 1");
  if (n > kMaxColors) throw std::invalid_argument("at most " + std::to_string(kMaxColors) + " colors are supported");
  if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
  if (cell_cap == 0) throw std::invalid_argument("cell cap must be positive");
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");

  std::atomic<std::size_t> total{0};
  std::vector<std::vector<ColorMask>> flat(max_dim + 1);
  const std::size_t p = g.vertex_count();

  if (threads <= 1) {
    detail::SkeletonEnumerator e(g, n, max_dim, cell_cap, total);
    e.run_all();
    flat = e.take();
  } else {
    std::vector<ColorMask> firsts;
    auto collect = [&](auto&& self, ColorMask rest, int left, ColorMask acc) -> void {
      if (left == 0) {
        firsts.push_back(acc);
        return;
      }
      while (color_count(rest) >= left) {
        const ColorMask bit = rest & (~rest + 1);
        rest &= rest - 1;
        self(self, rest, left - 1, acc | bit);
      }
    };
    for (int k = 1; k <= std::min(max_dim + 1, n); ++k) collect(collect, palette_mask(n), k, 0);
    std::vector<std::vector<std::vector<ColorMask>>> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          detail::SkeletonEnumerator e(g, n, max_dim, cell_cap, total);
          for (std::size_t k = t; k < firsts.size(); k += threads) e.run_from(firsts[k]);
          parts[t] = e.take();
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (auto& part : parts)
      for (int d = 0; d <= max_dim; ++d) flat[d].insert(flat[d].end(), part[d].begin(), part[d].end());
  }
  for (auto& f : flat) detail::sort_records(f, p);
  return ComplexSkeleton(g, n, max_dim, std::move(flat));
}

inline std::vector<std::size_t> f_vector(const ComplexSkeleton& sk) { return sk.f_vector(); }

}  // namespace homcx

#endif  // HOMCX_SKELETON_HPP
