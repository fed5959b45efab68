#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cayley2/intmath.hpp"

namespace cayley2 {

// L-shaped tile L(l,h,w,y): an l-by-h rectangle with a w-by-y notch cut
// from the top-right corner. Side conventions 0 <= w < l, 0 <= y < h.
// Area lh - wy is the order of any related digraph.
struct LShape {
  Int l, h, w, y;

  LShape(Int l_, Int h_, Int w_, Int y_);

  Int area() const { return l * h - w * y; }
  Int gcd() const { return gcd_many({l, h, w, y}); }

  auto operator<=>(const LShape&) const = default;
};

// Geometric admissibility: (l-y)(h-w) >= 0 and the two factors do not
// vanish simultaneously.
bool is_admissible(const LShape& s);

// d_L = l + h - min(w,y) - 2. Requires admissibility.
Int diameter(const LShape& s);

// Distances of the two dominant corner cells p = [l-1, h-y-1] and
// q = [l-w-1, h-1]; their max is the diameter.
std::pair<Int, Int> corner_distances(const LShape& s);

// diameter - lb(area); always >= 0 for admissible shapes.
Int tightness(const LShape& s);

// m-fold dilation L(ml, mh, mw, my).
LShape scale(const LShape& s, Int m);

// L(l/m, h/m, w/m, y/m); requires m | gcd(l,h,w,y).
LShape divide(const LShape& s, Int m);

struct TessellationVectors {
  std::array<Int, 2> u;  // (l, -y)
  std::array<Int, 2> v;  // (-w, h)
};

TessellationVectors tessellation_vectors(const LShape& s);

std::string to_string(const LShape& s);
std::ostream& operator<<(std::ostream& os, const LShape& s);

// Visits every admissible L-shape of area n in lexicographic (l,h,w,y)
// order; with a diameter cap, exactly those with diameter <= cap.
// The visitor returns false to stop enumeration early.
//
// For a fixed column pair (l,h) the notch product is pinned to
// p = lh - n, so candidates come from divisor pairs of p. A cap d
// restricts l,h <= d+2 since max(l,h)-1 <= diameter.
template <typename Visitor>
void for_each_lshape(Int n, std::optional<Int> max_diameter, Visitor&& visit) {
  if (n < 1) throw std::invalid_argument("for_each_lshape: requires area >= 1");
  const bool capped = max_diameter.has_value();
  if (capped && *max_diameter < 0) return;
  const Int side_cap = capped ? *max_diameter + 2 : n;

  auto emit = [&](Int l, Int h, Int w, Int y) -> bool {
    LShape s(l, h, w, y);
    if (!is_admissible(s)) return true;
    if (capped && diameter(s) > *max_diameter) return true;
    return visit(s);
  };

  std::vector<std::pair<Int, Int>> pairs;
  const Int l_max = std::min(n, side_cap);
  for (Int l = 1; l <= l_max; ++l) {
    const Int h_lo = std::max<Int>(1, (n + l - 1) / l);
    const Int h_hi = std::min<Int>(n + 1 - l, side_cap);
    for (Int h = h_lo; h <= h_hi; ++h) {
      const Int p = l * h - n;
      if (p == 0) {
        for (Int y = 0; y < h; ++y)
          if (!emit(l, h, 0, y)) return;
        for (Int w = 1; w < l; ++w)
          if (!emit(l, h, w, 0)) return;
      } else {
        pairs.clear();
        for (Int d = 1; d * d <= p; ++d) {
          if (p % d != 0) continue;
          const Int e = p / d;
          if (d < l && e < h) pairs.emplace_back(d, e);
          if (e != d && e < l && d < h) pairs.emplace_back(e, d);
        }
        std::sort(pairs.begin(), pairs.end());
        for (auto [w, y] : pairs)
          if (!emit(l, h, w, y)) return;
      }
    }
  }
}

std::vector<LShape> enumerate_lshapes(Int n,
                                      std::optional<Int> max_diameter = std::nullopt);

}  // namespace cayley2
