// Independent reference computations for the tests. Nothing here calls the
// library's enumeration, boundary or Smith code; cells are plain nested
// vectors of colors and all linear algebra is dense.
#ifndef HOMCX_TESTS_ORACLES_HPP
#define HOMCX_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Lists = std::vector<std::vector<int>>;  // one ascending color list per coordinate
using EdgeList = std::vector<std::pair<int, int>>;  // 0-based coordinates

inline bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  return true;
}

inline bool valid(const Lists& c, const EdgeList& edges) {
  for (const auto& l : c)
    if (l.empty()) return false;
  for (auto [u, v] : edges)
    if (!disjoint(c[u], c[v])) return false;
  return true;
}

inline int dim(const Lists& c) {
  int d = 0;
  for (const auto& l : c) d += static_cast<int>(l.size()) - 1;
  return d;
}

/// Proper colorings by trying all n^p assignments.
inline std::size_t count_colorings(int p, const EdgeList& edges, int n) {
  std::vector<int> c(p, 1);
  std::size_t count = 0;
  for (;;) {
    bool ok = true;
    for (auto [u, v] : edges) ok = ok && c[u] != c[v];
    count += ok;
    int q = 0;
    while (q < p && c[q] == n) c[q++] = 1;
    if (q == p) break;
    ++c[q];
  }
  return count;
}

/// Every cell of dimension <= max_dim, by trying all tuples of nonempty subsets.
inline std::vector<std::set<Lists>> all_cells(int p, const EdgeList& edges, int n, int max_dim) {
  std::vector<std::vector<int>> subsets;
  for (int m = 1; m < (1 << n); ++m) {
    std::vector<int> s;
    for (int c = 1; c <= n; ++c)
      if (m & (1 << (c - 1))) s.push_back(c);
    subsets.push_back(s);
  }
  std::vector<std::set<Lists>> out(max_dim + 1);
  std::vector<std::size_t> idx(p, 0);
  for (;;) {
    Lists c(p);
    for (int q = 0; q < p; ++q) c[q] = subsets[idx[q]];
    const int d = dim(c);
    if (d <= max_dim && valid(c, edges)) out[d].insert(c);
    int q = 0;
    while (q < p && idx[q] + 1 == subsets.size()) idx[q++] = 0;
    if (q == p) break;
    ++idx[q];
  }
  return out;
}

/// Signed faces straight from the incidence formula.
inline std::vector<std::pair<Lists, int>> faces(const Lists& c) {
  std::vector<std::pair<Lists, int>> out;
  int before = 0;
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s].size() >= 2) {
      for (std::size_t k = 0; k < c[s].size(); ++k) {
        Lists f = c;
        f[s].erase(f[s].begin() + k);
        out.emplace_back(f, ((before + static_cast<int>(k)) % 2) ? -1 : 1);
      }
    }
    before += static_cast<int>(c[s].size());
  }
  return out;
}

using Dense = std::vector<std::vector<Big>>;

/// Boundary matrix from dimension t to t-1 over the given cell lists.
inline Dense boundary_dense(const std::set<Lists>& lower, const std::set<Lists>& upper) {
  std::map<Lists, std::size_t> row_of;
  for (const auto& c : lower) row_of.emplace(c, row_of.size());
  Dense m(lower.size(), std::vector<Big>(upper.size(), 0));
  std::size_t col = 0;
  for (const auto& c : upper) {
    for (const auto& [f, s] : faces(c)) m[row_of.at(f)][col] += s;
    ++col;
  }
  return m;
}

/// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t rank_q(Dense a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  Big prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Rank over F_p.
inline std::size_t rank_mod(const Dense& in, long long p) {
  std::vector<std::vector<long long>> a(in.size());
  for (std::size_t i = 0; i < in.size(); ++i)
    for (const auto& v : in[i]) {
      Big m = v % p;
      if (m < 0) m += p;
      a[i].push_back(static_cast<long long>(m));
    }
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto inv = [&](long long x) {
    long long r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    const long long iv = inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const long long f = a[i][c] * iv % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Invariant factors from determinantal divisors (gcd of k x k minors); tiny matrices only.
inline std::vector<Big> invariant_factors_by_minors(const Dense& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto det = [](Dense m) {
    const std::size_t k = m.size();
    Big prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      while (piv < k && m[piv][c] == 0) ++piv;
      if (piv == k) return Big(0);
      if (piv != c) {
        std::swap(m[c], m[piv]);
        sign = -sign;
      }
      for (std::size_t i = c + 1; i < k; ++i) {
        for (std::size_t j = c + 1; j < k; ++j) m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
        m[i][c] = 0;
      }
      prev = m[c][c];
    }
    return Big(sign * m[k - 1][k - 1]);
  };
  std::vector<Big> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Big g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t depth, std::size_t from) {
      if (depth == k) {
        pick_cols(0, 0);
        return;
      }
      for (std::size_t i = from; i < rows; ++i) {
        ri[depth] = i;
        pick_rows(depth + 1, i + 1);
      }
    };
    pick_cols = [&](std::size_t depth, std::size_t from) {
      if (depth == k) {
        Dense m(k, std::vector<Big>(k));
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = 0; y < k; ++y) m[x][y] = a[ri[x]][ci[y]];
        g = gcd(g, abs(det(m)));
        return;
      }
      for (std::size_t j = from; j < cols; ++j) {
        ci[depth] = j;
        pick_cols(depth + 1, j + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Big> f;
  for (std::size_t k = 1; k < divisors.size(); ++k) f.push_back(divisors[k] / divisors[k - 1]);
  return f;
}

/// Components of the graph on proper colorings joined when they differ in one coordinate.
inline std::size_t coloring_components(int p, const EdgeList& edges, int n) {
  std::vector<std::vector<int>> verts;
  std::vector<int> c(p, 1);
  for (;;) {
    bool ok = true;
    for (auto [u, v] : edges) ok = ok && c[u] != c[v];
    if (ok) verts.push_back(c);
    int q = 0;
    while (q < p && c[q] == n) c[q++] = 1;
    if (q == p) break;
    ++c[q];
  }
  std::map<std::vector<int>, std::size_t> id;
  for (const auto& v : verts) id.emplace(v, id.size());
  std::vector<char> seen(verts.size(), 0);
  std::size_t comps = 0;
  for (std::size_t s = 0; s < verts.size(); ++s) {
    if (seen[s]) continue;
    ++comps;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      auto v = verts[q.front()];
      q.pop();
      for (int pos = 0; pos < p; ++pos)
        for (int col = 1; col <= n; ++col) {
          auto w = v;
          w[pos] = col;
          auto it = id.find(w);
          if (it != id.end() && !seen[it->second]) {
            seen[it->second] = 1;
            q.push(it->second);
          }
        }
    }
  }
  return comps;
}

/// Betti numbers over Q for degrees 0..t_max from a full brute-force cell list.
inline std::vector<std::size_t> betti_q(const std::vector<std::set<Lists>>& cells, int t_max) {
  std::vector<std::size_t> rk(t_max + 2, 0);
  for (int t = 1; t <= t_max + 1 && t < static_cast<int>(cells.size()); ++t)
    rk[t] = rank_q(boundary_dense(cells[t - 1], cells[t]));
  std::vector<std::size_t> b;
  for (int t = 0; t <= t_max; ++t) b.push_back(cells[t].size() - rk[t] - rk[t + 1]);
  return b;
}

/// Random simple graph on p vertices, 0-based edges.
inline EdgeList random_edges(std::mt19937_64& rng, int p, double density) {
  EdgeList e;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int a = 0; a < p; ++a)
    for (int b = a + 1; b < p; ++b)
      if (u(rng) < density) e.emplace_back(a, b);
  return e;
}

}  // namespace oracle

#endif  // HOMCX_TESTS_ORACLES_HPP
