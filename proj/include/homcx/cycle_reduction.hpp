#ifndef HOMCX_CYCLE_REDUCTION_HPP
#define HOMCX_CYCLE_REDUCTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "homcx/cell.hpp"
#include "homcx/frame.hpp"
#include "homcx/graph.hpp"

namespace homcx {

/// Raised when a property that the construction guarantees fails at run time.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * Witness that initial - final is a boundary: the sum of the recorded
 * (t+1)-cells, with their coefficients, has boundary initial - final.
 * Additions are kept in the order they were applied.
 */
struct ChainCertificate {
  int t = 0;
  std::vector<std::pair<Coeff, Cell>> additions;
  Chain initial;
  Chain final;

  /// The (t+1)-chain sum of all additions.
  Chain filling() const {
    Chain d(t + 1);
    for (const auto& [k, c] : additions) d.add(c, k);
    return d;
  }
};

/// Chain on the state after eliminating one color at one position.
struct PhaseSnapshot {
  int position = 0;  // 1-based position in graph order
  int color = 0;     // color that no longer occurs there
  Chain chain;
};

struct CycleReduction {
  Chain result;
  ChainCertificate certificate;
  std::vector<PhaseSnapshot> phases;
};

// --- chains of simplices --------------------------------------------------

/// Integer chain of ordered simplices on colors; a simplex is its vertex set, listed ascending.
using SimplexChain = std::map<ColorMask, Coeff>;

inline void add_term(SimplexChain& ch, ColorMask s, Coeff k) {
  if (k == 0) return;
  auto [it, inserted] = ch.try_emplace(s, k);
  if (!inserted) {
    it->second = checked_add(it->second, k);
    if (it->second == 0) ch.erase(it);
  }
}

inline SimplexChain simplex_boundary(const SimplexChain& z) {
  SimplexChain out;
  for (const auto& [s, k] : z) {
    if (color_count(s) < 2) continue;
    int rank = 0;
    for (ColorMask rest = s; rest != 0; rest &= rest - 1, ++rank) add_term(out, s & ~(rest & (~rest + 1)), (rank & 1) ? -k : k);
  }
  return out;
}

inline std::string to_compact_string(const SimplexChain& z) {
  if (z.empty()) return "0";
  std::string s;
  for (const auto& [simplex, k] : z) {
    if (k < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    if (k != 1 && k != -1) s += std::to_string(k < 0 ? -k : k);
    s += "[" + compact_string(simplex) + "]";
  }
  return s;
}

/**
 * Fills a nonzero simplicial cycle: the cone over z at the smallest vertex v
 * of its support, dropping the simplices that already contain v. Every vertex
 * of the result occurs in z.
 */
inline SimplexChain simplex_fill(const SimplexChain& z) {
  if (z.empty()) throw std::invalid_argument("cannot fill the zero chain");
  int dim = -1;
  ColorMask support = 0;
  for (const auto& [s, k] : z) {
    if (s == 0) throw std::invalid_argument("empty simplex in chain");
    if (dim < 0) dim = color_count(s) - 1;
    if (color_count(s) - 1 != dim) throw std::invalid_argument("simplices of mixed dimension");
    support |= s;
  }
  if (dim == 0) {
    Coeff total = 0;
    for (const auto& [s, k] : z) total = checked_add(total, k);
    if (total != 0) throw std::invalid_argument("0-chain " + to_compact_string(z) + " has nonzero augmentation");
  } else if (!simplex_boundary(z).empty()) {
    throw std::invalid_argument("chain " + to_compact_string(z) + " is not a cycle");
  }
  const ColorMask apex = support & (~support + 1);
  SimplexChain tau;
  for (const auto& [s, k] : z)
    if ((s & apex) == 0) add_term(tau, s | apex, k);
  return tau;
}

namespace detail {

inline int prefix_weight(const Cell& c, int j) {
  int w = 0;
  for (int q = 0; q < j; ++q) w += color_count(c[q]);
  return w;
}

class ColorEliminator {
 public:
  ColorEliminator(const Graph& g, int colors, Chain& chain, std::vector<std::pair<Coeff, Cell>>& additions)
      : g_(g), colors_(colors), chain_(chain), additions_(additions) {}

  /**
   * Removes `bad` from position j. Cells where it is the whole set are first
   * thickened by one color (`lift`, or the smallest admissible color when
   * unset); then cells containing it alongside others are cleared level by
   * level in the size l of the set at j.
   */
  void run(int j, int bad, std::optional<int> lift) {
    std::vector<ColorMask> before = position_unions();
    thicken_singletons(j, bad, lift);
    for (int l = 2; holds_color(j, bad); ++l) {
      if (l > colors_) throw InvariantBreach("color list length exceeded the palette at position " + std::to_string(j + 1));
      if (l == 2)
        pair_off(j, bad);
      else
        fill_level(j, bad, l);
      for (const auto& [c, k] : chain_)
        if (has_color(c[j], bad) && color_count(c[j]) <= l)
          throw InvariantBreach("level " + std::to_string(l) + " at position " + std::to_string(j + 1) +
                                " left cell " + to_compact_string(c));
    }
    std::vector<ColorMask> after = position_unions();
    for (std::size_t b = 0; b < after.size(); ++b)
      if (static_cast<int>(b) != j && (after[b] & ~before[b]) != 0)
        throw InvariantBreach("position " + std::to_string(b + 1) + " gained colors while clearing position " +
                              std::to_string(j + 1));
  }

 private:
  void apply(const Cell& c, Coeff k) {
    additions_.emplace_back(k, c);
    add_boundary(chain_, c, checked_mul(k, -1));
  }

  bool holds_color(int j, int color) const {
    for (const auto& [c, k] : chain_)
      if (has_color(c[j], color)) return true;
    return false;
  }

  std::vector<ColorMask> position_unions() const {
    std::vector<ColorMask> u(g_.vertex_count(), 0);
    for (const auto& [c, k] : chain_)
      for (std::size_t q = 0; q < u.size(); ++q) u[q] |= c[q];
    return u;
  }

  ColorMask neighbor_colors(const Cell& c, int j) const {
    ColorMask m = 0;
    for (int r : g_.neighbors_at(j)) m |= c[r];
    return m;
  }

  void thicken_singletons(int j, int bad, std::optional<int> lift) {
    std::vector<Cell> targets;
    for (const auto& [c, k] : chain_)
      if (c[j] == color_bit(bad)) targets.push_back(c);
    for (const Cell& eta : targets) {
      const Coeff k = chain_.coefficient(eta);
      if (k == 0) continue;
      const ColorMask blocked = neighbor_colors(eta, j) | color_bit(bad);
      int extra;
      if (lift) {
        if (blocked & color_bit(*lift))
          throw InvariantBreach("color " + std::to_string(*lift) + " is blocked next to position " + std::to_string(j + 1) +
                                " in " + to_compact_string(eta));
        extra = *lift;
      } else {
        const ColorMask free = palette_mask(colors_) & ~blocked;
        if (free == 0) throw InvariantBreach("no free color at position " + std::to_string(j + 1) + " of " + to_compact_string(eta));
        extra = min_color(free);
      }
      Cell thick = eta;
      thick[j] |= color_bit(extra);
      apply(thick, checked_mul(k, incidence_sign(thick.sets, j, extra)));
    }
  }

  // Cells of the given level, grouped by their coordinates away from j.
  std::map<Cell, std::vector<Cell>> level_groups(int j, int bad, int l) const {
    std::map<Cell, std::vector<Cell>> groups;
    for (const auto& [c, k] : chain_) {
      if (!has_color(c[j], bad) || color_count(c[j]) != l) continue;
      Cell key = c;
      key[j] = 0;
      groups[key].push_back(c);
    }
    return groups;
  }

  // Level 2: slide each cell {bad, x} onto the next one {bad, y} of its group across {bad, x, y}.
  void pair_off(int j, int bad) {
    for (const auto& [key, cells] : level_groups(j, bad, 2)) {
      for (std::size_t a = 0; a < cells.size(); ++a) {
        const Coeff k = chain_.coefficient(cells[a]);
        if (k == 0) continue;
        std::size_t b = a + 1;
        while (b < cells.size() && chain_.coefficient(cells[b]) == 0) ++b;
        if (b == cells.size())
          throw InvariantBreach("unpaired cell " + to_compact_string(cells[a]) + " at level 2, position " +
                                std::to_string(j + 1));
        const int y = min_color(cells[b][j] & ~color_bit(bad));
        Cell sigma = cells[a];
        sigma[j] |= color_bit(y);
        apply(sigma, checked_mul(k, incidence_sign(sigma.sets, j, y)));
      }
    }
  }

  // Level l >= 3: each group is a simplicial cycle once `bad` is dropped; fill it and pull the filling back.
  void fill_level(int j, int bad, int l) {
    for (const auto& [key, cells] : level_groups(j, bad, l)) {
      SimplexChain z;
      for (const Cell& c : cells) {
        const ColorMask rest = c[j] & ~color_bit(bad);
        const Coeff k = chain_.coefficient(c);
        add_term(z, rest, (colors_above(c[j], bad) & 1) ? -k : k);
      }
      if (z.empty()) continue;
      if (!simplex_boundary(z).empty())
        throw InvariantBreach("level " + std::to_string(l) + " group at position " + std::to_string(j + 1) +
                              " is not a cycle: " + to_compact_string(z));
      const SimplexChain tau = simplex_fill(z);
      const Coeff eps = (prefix_weight(key, j) & 1) ? -1 : 1;
      for (const auto& [s, k] : tau) {
        Cell eta = key;
        eta[j] = s | color_bit(bad);
        const Coeff f_sign = (colors_above(eta[j], bad) & 1) ? -1 : 1;
        apply(eta, checked_mul(checked_mul(k, f_sign), eps));
      }
    }
  }

  const Graph& g_;
  int colors_;
  Chain& chain_;
  std::vector<std::pair<Coeff, Cell>>& additions_;
};

/**
 * One lifting step inside a frame: afterwards no independent position uses a
 * color below i. Dependent positions give up i, then independent positions
 * trade i - 1 for i.
 */
inline void reduce_in_frame(const Graph& g, const ReductionFrame& f, Chain& chain, int i,
                            std::vector<std::pair<Coeff, Cell>>& additions, std::vector<PhaseSnapshot>* phases) {
  ColorEliminator elim(g, f.colors, chain, additions);
  for (int j : f.dependent) {
    elim.run(j, i, std::nullopt);
    if (phases) phases->push_back({j + 1, i, chain});
  }
  for (int j : f.independent) {
    elim.run(j, i - 1, i);
    if (phases) phases->push_back({j + 1, i - 1, chain});
  }
}

inline void require_cycle(const Graph& g, int n, const Chain& c) {
  for (const auto& [cell, k] : c) {
    if (cell.size() != static_cast<std::size_t>(g.vertex_count()))
      throw std::invalid_argument("cell " + to_compact_string(cell) + " has the wrong number of positions");
    if (!is_cell(g, n, cell)) throw std::invalid_argument(to_compact_string(cell) + " is not a cell of the complex");
  }
  if (!boundary_chain(c).empty()) throw std::invalid_argument("chain is not a cycle");
}

inline void require_dimension(const Graph& g, int n, int t) {
  const int gap = vgap(g, n);
  if (t < 1 || t > gap - 1)
    throw std::invalid_argument("cycle dimension " + std::to_string(t) + " outside 1.." + std::to_string(gap - 1) +
                                " where vanishing is guaranteed");
}

/// Cone from color 1 at position r, for positions whose neighbors all avoid color 1.
inline Chain cone_at(const Chain& c, int r, Chain& kept) {
  Chain h(c.dim() + 1);
  kept = Chain(c.dim());
  for (const auto& [cell, k] : c) {
    if (has_color(cell[r], 1)) {
      if (cell[r] == color_bit(1)) kept.add(cell, k);
      continue;
    }
    Cell up = cell;
    up[r] |= color_bit(1);
    h.add(up, checked_mul(k, incidence_sign(up.sets, r, 1)));
  }
  return h;
}

}  // namespace detail

/**
 * Moves a t-cycle of X_{i-1}(lambda) to a homologous cycle of X_i(lambda),
 * where lambda is the length of the independent prefix of the graph order.
 * Deterministic: free colors, pairings and cone apexes are always the smallest
 * eligible choice.
 */
inline CycleReduction reduce_cycle(const Graph& g, int n, const Chain& c, int i) {
  if (i < 2 || i > n) throw std::invalid_argument("target color must lie in 2..n");
  CycleReduction out;
  out.certificate.t = c.dim();
  out.certificate.initial = c;
  out.certificate.final = c;
  out.result = c;
  if (c.empty()) return out;
  detail::require_dimension(g, n, c.dim());
  detail::require_cycle(g, n, c);
  for (const auto& [cell, k] : c)
    if (!in_X(cell, i - 1, g.prefix_size()))
      throw std::invalid_argument("cell " + to_compact_string(cell) + " uses a color below " + std::to_string(i - 1) +
                                  " in the independent prefix");

  Chain work = c;
  detail::reduce_in_frame(g, ReductionFrame::top(g, n), work, i, out.certificate.additions, &out.phases);
  for (const auto& [cell, k] : work)
    if (!in_X(cell, i, g.prefix_size())) throw InvariantBreach("reduced cycle left X_i: " + to_compact_string(cell));
  if (!boundary_chain(work).empty()) throw InvariantBreach("reduced chain is not a cycle");
  out.certificate.final = work;
  out.result = std::move(work);
  return out;
}

/**
 * A (t+1)-chain whose boundary is the given t-cycle. Each level lifts the
 * independent positions to the top color of the level, pinning them; the
 * remaining positions carry a cycle of the same shape with one color fewer.
 * Once no edges remain among the active positions, each is coned off from
 * color 1 in turn, which leaves nothing in positive dimension.
 */
inline ChainCertificate nullify_cycle(const Graph& g, int n, const Chain& c) {
  ChainCertificate cert;
  cert.t = c.dim();
  cert.initial = c;
  cert.final = Chain(c.dim());
  if (c.empty()) return cert;
  detail::require_dimension(g, n, c.dim());
  detail::require_cycle(g, n, c);

  Chain work = c;
  ReductionFrame f = ReductionFrame::top(g, n);
  while (!work.empty() && f.max_degree > 0) {
    for (int i = 2; i <= f.colors; ++i) detail::reduce_in_frame(g, f, work, i, cert.additions, nullptr);
    for (const auto& [cell, k] : work)
      for (int q : f.independent)
        if (cell[q] != color_bit(f.colors))
          throw InvariantBreach("position " + std::to_string(q + 1) + " not pinned in " + to_compact_string(cell));
    f = f.next(g);
  }
  for (int r : f.active) {
    if (work.empty()) break;
    Chain kept;
    Chain h = detail::cone_at(work, r, kept);
    for (const auto& [cell, k] : h) cert.additions.emplace_back(k, cell);
    work = std::move(kept);
  }
  if (!work.empty()) throw InvariantBreach("cycle survived the final coning: " + to_compact_string(work));
  return cert;
}

struct CertificateCheck {
  bool ok = true;
  std::string diagnostic;
};

/// Checks that every addition is a (t+1)-cell of Hom(G, K_n) and that their boundary is initial - final.
inline CertificateCheck verify_certificate(const Graph& g, int n, const Chain& initial, const Chain& final,
                                           const ChainCertificate& cert) {
  CertificateCheck res;
  auto fail = [&](std::string why) {
    res.ok = false;
    res.diagnostic = std::move(why);
    return res;
  };
  for (const Chain* ch : {&initial, &final})
    for (const auto& [cell, k] : *ch) {
      if (cell.dim() != cert.t) return fail("chain cell " + to_compact_string(cell) + " is not of dimension t");
      if (!is_cell(g, n, cell)) return fail("chain cell " + to_compact_string(cell) + " is not a cell");
    }
  Chain sum(cert.t + 1);
  for (std::size_t a = 0; a < cert.additions.size(); ++a) {
    const auto& [k, cell] = cert.additions[a];
    const std::string where = "addition " + std::to_string(a) + " " + to_compact_string(cell);
    if (cell.size() != static_cast<std::size_t>(g.vertex_count())) return fail(where + " has the wrong length");
    if (cell.dim() != cert.t + 1) return fail(where + " is not of dimension t+1");
    if (!is_cell(g, n, cell)) return fail(where + " is not a cell");
    if (k == 0) return fail(where + " has coefficient 0");
    try {
      sum.add(cell, k);
    } catch (const std::exception& e) {
      return fail(where + ": " + e.what());
    }
  }
  try {
    Chain diff = boundary_chain(sum) - (initial - final);
    if (!diff.empty()) return fail("boundary of the additions differs from initial - final by " + to_compact_string(diff));
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return res;
}

}  // namespace homcx

#endif  // HOMCX_CYCLE_REDUCTION_HPP
