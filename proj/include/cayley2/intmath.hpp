#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

// Exact integer primitives. Every square-root ceiling/floor in this
// project goes through isqrt/ceil_sqrt below: the extension coefficient
// c(N) hinges on whether m*ceil(sqrt(3N)) - sqrt(3N m^2) crosses 1, a
// sub-ulp distinction for large N, so floating point is banned from any
// correctness-bearing path.

namespace cayley2 {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline int bit_length(std::uint64_t v) { return std::bit_width(v); }

inline int bit_length(unsigned __int128 v) {
  const auto hi = static_cast<std::uint64_t>(v >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<std::uint64_t>(v));
}

inline int bit_length(const BigInt& v) {
  if (v.is_zero()) return 0;
  return static_cast<int>(boost::multiprecision::msb(v)) + 1;
}

inline int bit_length(Int v) { return bit_length(static_cast<std::uint64_t>(v)); }

}  // namespace detail

// floor(sqrt(n)) by Newton iteration seeded from the bit length.
// The seed 2^ceil(bits/2) is >= sqrt(n); the iteration descends
// monotonically and stops exactly at floor(sqrt(n)).
template <typename I>
I isqrt(const I& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  if (n < 2) return n;
  I x0 = I(1) << ((detail::bit_length(n) + 1) / 2);
  I x1 = (x0 + n / x0) / 2;
  while (x1 < x0) {
    x0 = x1;
    x1 = (x0 + n / x0) / 2;
  }
  return x0;
}

// ceil(sqrt(n)): isqrt(n) when n is a perfect square, else isqrt(n)+1.
template <typename I>
I ceil_sqrt(const I& n) {
  I r = isqrt(n);
  return (r * r == n) ? r : r + 1;
}

template <typename I>
bool is_perfect_square(const I& n) {
  if (n < 0) return false;
  I r = isqrt(n);
  return r * r == n;
}

// lb(N) = ceil(sqrt(3N)) - 2, the sharp lower bound on the diameter of
// any 2-Cayley digraph of order N.
template <typename I>
I lower_bound_diameter(const I& n) {
  if (n < 1) throw std::invalid_argument("lower_bound_diameter: requires N >= 1");
  return ceil_sqrt(I(3) * n) - 2;
}

inline Int lower_bound_diameter(Int n) {
  if (n < 1) throw std::invalid_argument("lower_bound_diameter: requires N >= 1");
  if (n > std::numeric_limits<Int>::max() / 3)
    throw std::overflow_error("lower_bound_diameter: 3N overflows Int, use BigInt");
  return static_cast<Int>(ceil_sqrt(static_cast<std::uint64_t>(3) * n)) - 2;
}

inline Int gcd_many(std::span<const Int> values) {
  if (values.empty()) throw std::invalid_argument("gcd_many: empty list");
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

inline Int gcd_many(std::initializer_list<Int> values) {
  return gcd_many(std::span<const Int>(values.begin(), values.size()));
}

}  // namespace cayley2
