#ifndef HOMCX_COLOR_SET_HPP
#define HOMCX_COLOR_SET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace homcx {

/// A subset of the color palette [n], color c stored at bit c-1.
using ColorMask = std::uint64_t;

/// Largest palette a ColorMask can represent.
inline constexpr int kMaxColors = 62;

inline constexpr ColorMask color_bit(int color) { return ColorMask{1} << (color - 1); }

inline constexpr ColorMask palette_mask(int n) {
  return n <= 0 ? ColorMask{0} : (n >= 64 ? ~ColorMask{0} : (ColorMask{1} << n) - 1);
}

/// Colors {from, ..., n}.
inline constexpr ColorMask colors_from(int from, int n) {
  if (from < 1) from = 1;
  return from > n ? ColorMask{0} : palette_mask(n) & ~palette_mask(from - 1);
}

inline constexpr int color_count(ColorMask m) { return std::popcount(m); }

inline constexpr bool has_color(ColorMask m, int color) { return (m & color_bit(color)) != 0; }

/// Smallest color in a nonempty mask.
inline constexpr int min_color(ColorMask m) { return std::countr_zero(m) + 1; }

/// Number of colors in m strictly below `color`.
inline constexpr int colors_below(ColorMask m, int color) {
  return std::popcount(m & palette_mask(color - 1));
}

/// Number of colors in m strictly above `color`.
inline constexpr int colors_above(ColorMask m, int color) {
  return std::popcount(m & ~palette_mask(color));
}

inline std::vector<int> to_colors(ColorMask m) {
  std::vector<int> out;
  out.reserve(color_count(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

template <typename Range>
ColorMask to_mask(const Range& colors) {
  ColorMask m = 0;
  for (int c : colors) {
    if (c < 1 || c > kMaxColors)
      throw std::invalid_argument("color " + std::to_string(c) + " outside 1.." +
                                  std::to_string(kMaxColors));
    m |= color_bit(c);
  }
  return m;
}

inline ColorMask to_mask(std::initializer_list<int> colors) {
  return to_mask<std::initializer_list<int>>(colors);
}

/// Compact digit form used in the literature for small palettes, e.g. {2,3,4} -> "234".
inline std::string compact_string(ColorMask m) {
  std::string s;
  for (int c : to_colors(m)) {
    if (!s.empty() && c > 9) s += ' ';
    s += std::to_string(c);
  }
  return s;
}

}  // namespace homcx

#endif  // HOMCX_COLOR_SET_HPP
