#include "cayley2/procedures.hpp"

#include <sstream>

namespace cayley2 {

namespace {

using U128 = unsigned __int128;

}  // namespace

TightnessReport make_report(Int order, Int diameter) {
  const Int lb = lower_bound_diameter(order);
  return {order, lb, diameter, diameter - lb};
}

CayleyDigraph2 extend(const CayleyDigraph2& d, Int m) {
  if (m < 1) throw std::invalid_argument("extend: requires m >= 1");
  const AbelianGroup2 g(m * d.group().s1, m * d.group().s2);
  return CayleyDigraph2(g, d.a_raw(), d.b_raw());
}

CayleyDigraph2 quotient(const CayleyDigraph2& d, Int m) {
  if (m < 1) throw std::invalid_argument("quotient: requires m >= 1");
  if (d.group().s1 % m != 0) {
    std::ostringstream os;
    os << "quotient: m = " << m << " does not divide s1 = " << d.group().s1;
    throw std::invalid_argument(os.str());
  }
  const AbelianGroup2 g(d.group().s1 / m, d.group().s2 / m);
  return CayleyDigraph2(g, d.a_raw(), d.b_raw());
}

bool is_tight_extension(Int n, Int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("is_tight_extension: requires N, m >= 1");
  const U128 c1 = ceil_sqrt(U128(3) * U128(n));
  constexpr Int kU128Safe = Int(1) << 40;
  if (n < kU128Safe && m < kU128Safe) {
    const U128 rhs = ceil_sqrt(U128(3) * U128(n) * U128(m) * U128(m));
    return U128(m) * c1 == rhs;
  }
  const BigInt rhs = ceil_sqrt(BigInt(3) * n * m * m);
  return BigInt(static_cast<std::uint64_t>(m)) * static_cast<std::uint64_t>(c1) == rhs;
}

bool has_infinite_tight_extensions(Int n) {
  if (n < 1) throw std::invalid_argument("has_infinite_tight_extensions: requires N >= 1");
  return n % 3 == 0 && is_perfect_square(static_cast<std::uint64_t>(n / 3));
}

Int extension_coefficient(Int n) {
  if (n < 2) throw std::invalid_argument("extension_coefficient: requires N >= 2");
  if (has_infinite_tight_extensions(n)) {
    std::ostringstream os;
    os << "extension_coefficient: infinite for N = " << n << " = 3*"
       << isqrt(static_cast<std::uint64_t>(n / 3)) << "^2";
    throw std::invalid_argument(os.str());
  }

  // Scan route: tight extensions form the interval [1, c(N)], and the
  // interval classification caps c at E_{t,i} <= 6t+3.
  const IntervalClass cls = interval_ceil(n);
  const Int stop = 6 * cls.t + 4;
  Int by_scan = 1;
  while (by_scan + 1 <= stop && is_tight_extension(n, by_scan + 1)) ++by_scan;
  if (by_scan + 1 > stop)
    throw std::logic_error("extension_coefficient: scan exceeded the proven bound");

  // Closed-form route: with c = ceil(sqrt(3N)) = s+1 and q = c^2 - 3N,
  // the largest k with (k*c - 1)^2 < 3N k^2 is floor((s + c) / q).
  const Int c = cls.ceil_value;
  const Int s = c - 1;
  const Int q = static_cast<Int>(U128(c) * U128(c) - U128(3) * U128(n));
  const Int by_formula = (s + c) / q;
  {
    // Verify the defining inequality at k and k+1.
    const BigInt k = by_formula;
    const BigInt n3 = BigInt(3) * n;
    const BigInt lhs_k = (k * c - 1) * (k * c - 1);
    const BigInt lhs_k1 = ((k + 1) * c - 1) * ((k + 1) * c - 1);
    if (!(lhs_k < n3 * k * k) || lhs_k1 < n3 * (k + 1) * (k + 1))
      throw std::logic_error("extension_coefficient: closed-form inequality check failed");
  }

  if (by_scan != by_formula) {
    std::ostringstream os;
    os << "extension_coefficient: scan " << by_scan << " != closed form " << by_formula
       << " at N = " << n;
    throw std::logic_error(os.str());
  }
  return by_scan;
}

IntervalClass interval_ceil(Int n) {
  if (n < 1) throw std::invalid_argument("interval_ceil: requires N >= 1");
  // Largest t with 3t^2 + 1 <= N.
  const Int t = static_cast<Int>(isqrt(static_cast<std::uint64_t>((n - 1) / 3)));
  const Int base = 3 * t * t;
  if (n <= base + 2 * t) return {t, 1, 3 * t + 1};
  if (n <= base + 4 * t + 1) return {t, 2, 3 * t + 2};
  return {t, 3, 3 * t + 3};
}

std::pair<Int, Int> max_coefficient(Int t, int i) {
  if (t < 1) throw std::invalid_argument("max_coefficient: requires t >= 1");
  switch (i) {
    case 1:
      return {3 * t * t + 2 * t, 6 * t + 1};
    case 2:
      return {3 * t * t + 4 * t + 1, 6 * t + 3};
    case 3:
      return {3 * t * t + 6 * t + 2, 2 * t + 1};
    default:
      throw std::invalid_argument("max_coefficient: i must be 1, 2 or 3");
  }
}

}  // namespace cayley2
