#include "cayley2/search.hpp"

#include <algorithm>

namespace cayley2 {

namespace {

// Smallest-diameter realizable diagram in one gcd class (gcd == 1 or
// gcd > 1), by iterative deepening on the diameter cap. Degenerate
// diagrams that admit no 2-generator digraph (digraph_of throws) are
// excluded from the minimum; they never win for N >= 3, but the filter
// keeps the equivalence with the digraph-side definition exact.
std::optional<OptimalityResult::Witness> class_minimum(Int n, bool cyclic_class) {
  for (Int cap = lower_bound_diameter(n); cap <= n; ++cap) {
    std::optional<OptimalityResult::Witness> best;
    Int best_diameter = 0;
    for_each_lshape(n, cap, [&](const LShape& s) {
      if ((s.gcd() == 1) != cyclic_class) return true;
      const Int d = diameter(s);
      if (best && best_diameter <= d) return true;
      try {
        CayleyDigraph2 dg = digraph_of(s);
        best = OptimalityResult::Witness{s, std::move(dg)};
        best_diameter = d;
      } catch (const DegenerateGenerators&) {
      }
      return true;
    });
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

OptimalityResult optimal_diameters(Int n) {
  if (n < 3) throw std::invalid_argument("optimal_diameters: requires N >= 3");
  OptimalityResult r;
  r.n = n;
  r.lb = lower_bound_diameter(n);

  r.witness_d1 = class_minimum(n, true);
  if (!r.witness_d1) throw std::logic_error("optimal_diameters: no cyclic witness found");
  r.d1 = diameter(r.witness_d1->shape);

  // gcd g > 1 requires g^2 | N, so the class is non-empty exactly for
  // non square-free orders.
  bool square_free = true;
  for (Int p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) {
      square_free = false;
      break;
    }
  if (!square_free) {
    r.witness_d2 = class_minimum(n, false);
    if (!r.witness_d2) throw std::logic_error("optimal_diameters: no non-cyclic witness found");
    r.d2 = diameter(r.witness_d2->shape);
  }

  r.d3 = r.d2 ? std::min(*r.d1, *r.d2) : *r.d1;
  return r;
}

void for_each_valid_digraph(Int n,
                            const std::function<void(const CayleyDigraph2&, Int)>& fn) {
  if (n < 3) throw std::invalid_argument("for_each_valid_digraph: requires N >= 3");
  BfsOracle oracle(n);
  for (Int s1 = 1; s1 * s1 <= n; ++s1) {
    if (n % (s1 * s1) != 0) continue;
    const Int s2 = n / s1;
    const AbelianGroup2 g(s1, s2);
    // Unordered pairs {a,b} of distinct nonzero elements, by element
    // index ia < ib with id = x*s2 + y.
    for (Int ia = 1; ia < n; ++ia) {
      const Coord2 a{ia / s2, ia % s2};
      for (Int ib = ia + 1; ib < n; ++ib) {
        const Coord2 b{ib / s2, ib % s2};
        try {
          CayleyDigraph2 d(g, a, b);
          fn(d, oracle.diameter(d));
        } catch (const DegenerateGenerators&) {
        }
      }
    }
  }
}

std::pair<std::optional<Int>, std::optional<Int>> brute_oracle(Int n, Int cap) {
  if (n > cap) throw std::invalid_argument("brute_oracle: order exceeds the small-order cap");
  std::optional<Int> d1, d2;
  for_each_valid_digraph(n, [&](const CayleyDigraph2& d, Int diam) {
    auto& slot = d.group().cyclic() ? d1 : d2;
    if (!slot || diam < *slot) slot = diam;
  });
  return {d1, d2};
}

std::optional<ImprovementRecord> qe_improve(Int n, Int k, std::optional<Int> current_diameter) {
  if (n < 4) throw std::invalid_argument("qe_improve: requires N >= 4");
  if (k < 0) throw std::invalid_argument("qe_improve: requires k >= 0");
  const Int lb = lower_bound_diameter(n);
  const Int current = current_diameter.value_or(lb + k);
  const Int bound = lb + k + 2;  // need m*(d+2) < bound

  for (Int m = isqrt(static_cast<std::uint64_t>(n)); m >= 2; --m) {
    if (n % (m * m) != 0) continue;
    const Int quotient_area = n / (m * m);
    if (quotient_area < 3) continue;  // no 2-generator digraph below order 3
    const Int cap = (bound + m - 1) / m - 2;
    if (cap < 0) continue;
    std::optional<ImprovementRecord> rec;
    for_each_lshape(quotient_area, cap, [&](const LShape& s) {
      const Int d = diameter(s);
      if (m * (d + 2) >= bound) return true;
      try {
        CayleyDigraph2 base = digraph_of(s);
        CayleyDigraph2 improved = extend(base, m);
        const Int improved_diameter = m * (d + 2) - 2;
        rec = ImprovementRecord{std::nullopt,
                                {n, lb, current, current - lb},
                                m,
                                quotient_area,
                                s,
                                std::move(improved),
                                make_report(n, improved_diameter)};
        return false;
      } catch (const DegenerateGenerators&) {
        return true;
      }
    });
    if (rec) {
      if (rec->improved_report.diameter >= current)
        throw std::logic_error("qe_improve: strict improvement invariant violated");
      return rec;
    }
  }
  return std::nullopt;
}

}  // namespace cayley2
