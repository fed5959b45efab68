#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley2/intmath.hpp"
#include "cayley2/lshape.hpp"

namespace cayley2 {

// Canonical rank-<=2 Abelian group Z_s1 (+) Z_s2 with s1 | s2.
struct AbelianGroup2 {
  Int s1, s2;

  AbelianGroup2(Int s1_, Int s2_);

  Int order() const { return s1 * s2; }
  bool cyclic() const { return s1 == 1; }
  bool operator==(const AbelianGroup2&) const = default;
};

// Residue pair: 0 <= x < s1, 0 <= y < s2.
struct Element {
  Int x = 0, y = 0;
  bool operator==(const Element&) const = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

// Raw integer coordinate pair, prior to reduction. Extensions and
// quotients reuse these tuples over the rescaled group, so digraphs
// retain them alongside the reduced residues.
struct Coord2 {
  Int x = 0, y = 0;
  bool operator==(const Coord2&) const = default;
};

// Isomorphism Z_m (+) Z_n -> Z_gcd (+) Z_lcm given by a unimodular
// change of coordinates: (x1,x2) |-> (u00 x1 + u01 x2, u10 x1 + u11 x2)
// reduced mod (gcd, lcm).
struct GroupIso {
  AbelianGroup2 group;
  Int u[2][2];

  Element apply(Coord2 c) const;
};

GroupIso canonicalize_group(Int m, Int n);

struct DegenerateGenerators : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BfsCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cay(Z_s1 (+) Z_s2, {a,b}) with arcs g -> g+a, g -> g+b.
// Construction validates a != b, a,b != 0 after reduction, and that
// {a,b} generates the group (gcd of the 2x2 minors of the relation
// matrix [a b | diag(s1,s2)] must be 1).
class CayleyDigraph2 {
 public:
  CayleyDigraph2(AbelianGroup2 group, Coord2 a_raw, Coord2 b_raw);

  const AbelianGroup2& group() const { return group_; }
  Element a() const { return a_; }
  Element b() const { return b_; }
  Coord2 a_raw() const { return a_raw_; }
  Coord2 b_raw() const { return b_raw_; }
  Int order() const { return group_.order(); }

  Element reduce(Coord2 c) const;

  // Structural equality: same canonical group and reduced generators.
  bool operator==(const CayleyDigraph2& o) const {
    return group_ == o.group_ && a_ == o.a_ && b_ == o.b_;
  }

 private:
  AbelianGroup2 group_;
  Coord2 a_raw_, b_raw_;
  Element a_, b_;
};

std::string to_string(const CayleyDigraph2& d);
std::ostream& operator<<(std::ostream& os, const CayleyDigraph2& d);

inline constexpr Int kDefaultBfsCap = 20'000'000;

// Reusable BFS workspace. Distances are stored in a flat array indexed
// by x*s2 + y; by vertex-transitivity the eccentricity of the root is
// the diameter.
class BfsOracle {
 public:
  explicit BfsOracle(Int max_order = kDefaultBfsCap) : cap_(max_order) {}

  const std::vector<std::int32_t>& distances(const CayleyDigraph2& d, Element root = {});
  Int diameter(const CayleyDigraph2& d);

 private:
  Int cap_;
  std::vector<std::int32_t> dist_;
  std::vector<std::int32_t> queue_;
};

std::vector<std::int32_t> bfs_distances(const CayleyDigraph2& d,
                                        Int max_order = kDefaultBfsCap);
Int bfs_diameter(const CayleyDigraph2& d, Int max_order = kDefaultBfsCap);

// Theorem-1 certificate: L is a minimum distance diagram for d iff
// area(L) = order, l*a = y*b and h*b = w*a in the group, and the
// geometric factor condition holds.
bool is_mdd_for(const LShape& s, const CayleyDigraph2& d);

// All MDDs of d, lexicographically sorted. Candidates (l,-y) and (-w,h)
// are lattice solutions of the Theorem-1 congruences with sides bounded
// by diameter+1, matched by element value; equivalent to filtering
// enumerate_lshapes(order, max_diameter = bfs diameter) through
// is_mdd_for, but without the divisor sweep.
std::vector<LShape> find_mdds_with_diameter(const CayleyDigraph2& d, Int diameter);
std::vector<LShape> find_mdds(const CayleyDigraph2& d, Int max_order = kDefaultBfsCap);

// Searches for a diagram of area order/m^2 whose m-dilation is an MDD of
// d. Any hit pins the diameter of d to m*(diameter(L)+2)-2 by pure
// integer arithmetic, independent of BFS; used to certify orders beyond
// the BFS cap. The quotient-diagram diameter is capped at
// lb(order/m^2) + slack.
std::optional<LShape> find_scaled_mdd(const CayleyDigraph2& d, Int m, Int slack = 3);

}  // namespace cayley2
