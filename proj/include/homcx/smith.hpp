#ifndef HOMCX_SMITH_HPP
#define HOMCX_SMITH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace homcx {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; each column sorted by row, no zeros.
struct SparseIntMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> columns;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), columns(c) {}

  static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    SparseIntMatrix m(dense.size(), dense.empty() ? 0 : dense.front().size());
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j)
        if (dense[i][j] != 0) m.columns[j].emplace_back(static_cast<std::uint32_t>(i), dense[i][j]);
    return m;
  }

  std::size_t nonzeros() const {
    std::size_t s = 0;
    for (const auto& c : columns) s += c.size();
    return s;
  }

  std::int64_t at(std::size_t r, std::size_t c) const {
    const auto& col = columns[c];
    auto it = std::lower_bound(col.begin(), col.end(), Entry{static_cast<std::uint32_t>(r), INT64_MIN});
    return (it != col.end() && it->first == r) ? it->second : 0;
  }
};

/// Rank and the invariant factors d_1 | d_2 | ... | d_rank.
struct SmithResult {
  std::size_t rank = 0;
  std::vector<BigInt> nontrivial;  // factors > 1, in divisibility order

  std::size_t unit_factors() const { return rank - nontrivial.size(); }

  std::vector<BigInt> invariant_factors() const {
    std::vector<BigInt> f(unit_factors(), BigInt(1));
    f.insert(f.end(), nontrivial.begin(), nontrivial.end());
    return f;
  }
};

namespace detail {

struct OverflowSignal {};

inline std::int64_t sub_mul(std::int64_t a, std::int64_t k, std::int64_t b) {
  std::int64_t prod, res;
  if (__builtin_mul_overflow(k, b, &prod) || __builtin_sub_overflow(a, prod, &res)) throw OverflowSignal{};
  return res;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& k, const BigInt& b) { return a - k * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

/// Invariant factors of a diagonal: repeatedly replace (a, b) by (gcd, lcm).
inline std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      BigInt l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

/**
 * Dense Smith reduction over BigInt, smallest-magnitude pivot first.
 * Returns the nonzero diagonal (not yet normalized).
 */
inline std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    for (;;) {
      // smallest nonzero magnitude in the trailing block
      std::size_t pi = m, pj = n;
      BigInt best;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < best)) {
            best = abs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (pi == m) return diag;
      std::swap(a[k], a[pi]);
      for (auto& row : a) std::swap(row[k], row[pj]);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a[i][k] == 0) continue;
        BigInt q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < n; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j] == 0) continue;
        BigInt q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < m; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) clean = false;
      }
      if (clean) break;
    }
    diag.push_back(a[k][k]);
  }
  return diag;
}

/**
 * Sparse elimination with unit pivots (Markowitz-style: shortest column first,
 * sparsest row within it). Each step is a unimodular column operation followed
 * by deleting the pivot row and column, so rank grows by one and the invariant
 * factors of the remaining block are unchanged. What is left has no unit
 * entries and goes to the dense reduction.
 */
template <typename Int>
class UnitPivotEliminator {
 public:
  using Entry = std::pair<std::uint32_t, Int>;
  using Column = std::vector<Entry>;

  UnitPivotEliminator(const SparseIntMatrix& m, const std::vector<char>* skip) : rows_(m.rows) {
    columns_.resize(m.cols);
    col_alive_.assign(m.cols, 1);
    row_alive_.assign(m.rows, 1);
    row_lists_.resize(m.rows);
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (skip && (*skip)[c]) {
        col_alive_[c] = 0;
        continue;
      }
      columns_[c].reserve(m.columns[c].size());
      for (auto [r, v] : m.columns[c]) {
        columns_[c].emplace_back(r, Int(v));
        row_lists_[r].push_back(static_cast<std::uint32_t>(c));
      }
    }
  }

  void run() {
    using Item = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (std::size_t c = 0; c < columns_.size(); ++c)
      if (col_alive_[c]) queue.emplace(columns_[c].size(), static_cast<std::uint32_t>(c));

    Column scratch;
    while (!queue.empty()) {
      auto [len, c] = queue.top();
      queue.pop();
      if (!col_alive_[c] || columns_[c].size() != len) continue;
      if (len == 0) {
        col_alive_[c] = 0;
        continue;
      }
      // unit entry whose row is sparsest
      std::size_t best = SIZE_MAX;
      std::size_t best_cost = SIZE_MAX;
      for (std::size_t e = 0; e < columns_[c].size(); ++e) {
        if (!is_unit(columns_[c][e].second)) continue;
        const std::size_t cost = row_lists_[columns_[c][e].first].size();
        if (cost < best_cost) {
          best_cost = cost;
          best = e;
        }
      }
      if (best == SIZE_MAX) continue;  // parked until modified

      const std::uint32_t r = columns_[c][best].first;
      const Int a = columns_[c][best].second;
      auto& touched = row_lists_[r];
      std::vector<std::uint32_t> targets;
      targets.swap(touched);
      for (std::uint32_t c2 : targets) {
        if (c2 == c || !col_alive_[c2]) continue;
        auto& col2 = columns_[c2];
        auto it = std::lower_bound(col2.begin(), col2.end(), r, [](const Entry& x, std::uint32_t row) { return x.first < row; });
        if (it == col2.end() || it->first != r) continue;
        const Int factor = it->second * a;  // a is its own inverse
        axpy(col2, factor, columns_[c], c2, scratch);
        queue.emplace(col2.size(), c2);
      }
      row_alive_[r] = 0;
      col_alive_[c] = 0;
      pivot_rows_.push_back(r);
      ++rank_;
    }
  }

  std::size_t rank() const { return rank_; }
  const std::vector<std::uint32_t>& pivot_rows() const { return pivot_rows_; }

  /// Remaining nonzero block as a dense BigInt matrix.
  std::vector<std::vector<BigInt>> residual() const {
    std::vector<std::uint32_t> live_cols;
    std::vector<std::int64_t> row_index(rows_, -1);
    std::size_t nrows = 0;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (!col_alive_[c] || columns_[c].empty()) continue;
      live_cols.push_back(static_cast<std::uint32_t>(c));
      for (const auto& [r, v] : columns_[c])
        if (row_index[r] < 0) row_index[r] = static_cast<std::int64_t>(nrows++);
    }
    if (nrows * live_cols.size() > 50'000'000)
      throw std::runtime_error("residual block after unit-pivot elimination is too large for dense reduction");
    std::vector<std::vector<BigInt>> dense(nrows, std::vector<BigInt>(live_cols.size()));
    for (std::size_t k = 0; k < live_cols.size(); ++k)
      for (const auto& [r, v] : columns_[live_cols[k]]) dense[row_index[r]][k] = BigInt(v);
    return dense;
  }

 private:
  // col2 -= factor * pivot, registering new fill-in rows.
  void axpy(Column& col2, const Int& factor, const Column& pivot, std::uint32_t c2, Column& out) {
    out.clear();
    out.reserve(col2.size() + pivot.size());
    auto i = col2.begin();
    auto j = pivot.begin();
    while (i != col2.end() || j != pivot.end()) {
      if (j == pivot.end() || (i != col2.end() && i->first < j->first)) {
        out.push_back(*i++);
      } else if (i == col2.end() || j->first < i->first) {
        if (row_alive_[j->first]) {
          out.emplace_back(j->first, sub_mul(Int(0), factor, j->second));
          row_lists_[j->first].push_back(c2);
        }
        ++j;
      } else {
        Int v = sub_mul(i->second, factor, j->second);
        if (v != 0) out.emplace_back(i->first, std::move(v));
        ++i;
        ++j;
      }
    }
    col2.swap(out);
  }

  std::size_t rows_;
  std::vector<Column> columns_;
  std::vector<char> col_alive_;
  std::vector<char> row_alive_;
  std::vector<std::vector<std::uint32_t>> row_lists_;
  std::vector<std::uint32_t> pivot_rows_;
  std::size_t rank_ = 0;
};

struct Reduction {
  SmithResult smith;
  std::vector<std::uint32_t> unit_pivot_rows;
};

template <typename Int>
Reduction reduce_with(const SparseIntMatrix& m, const std::vector<char>* skip) {
  UnitPivotEliminator<Int> e(m, skip);
  e.run();
  Reduction out;
  out.unit_pivot_rows = e.pivot_rows();
  std::vector<BigInt> diag = normalize_diagonal(dense_diagonal(e.residual()));
  out.smith.rank = e.rank() + diag.size();
  for (auto& d : diag)
    if (d != 1) out.smith.nontrivial.push_back(d);
  return out;
}

/**
 * Smith reduction of `m` with the columns flagged in `skip` removed. The rows
 * eliminated by unit pivots are reported so the caller can drop the matching
 * columns of the next-lower boundary matrix: such a row is hit with unit
 * coefficient by a boundary, so its column is a unimodular combination of the
 * others and contributes nothing to that matrix's invariant factors.
 */
inline Reduction reduce(const SparseIntMatrix& m, const std::vector<char>* skip = nullptr) {
  try {
    return reduce_with<std::int64_t>(m, skip);
  } catch (const OverflowSignal&) {
    return reduce_with<BigInt>(m, skip);
  }
}

}  // namespace detail

inline SmithResult smith_normal_form(const SparseIntMatrix& m) { return detail::reduce(m).smith; }

}  // namespace homcx

#endif  // HOMCX_SMITH_HPP
