#pragma once

#include <optional>
#include <span>

#include "cayley2/digraph.hpp"

namespace cayley2 {

// Literal digraph data for the fixture tables, constructed on demand.
struct DigraphSpec {
  Int s1, s2;
  Coord2 a, b;

  CayleyDigraph2 make() const { return CayleyDigraph2(AbelianGroup2(s1, s2), a, b); }
};

// Optimal cyclic/non-cyclic diameters for small non square-free orders.
struct Table1Row {
  Int n, lb, d1, d2;
  DigraphSpec cyclic;
  DigraphSpec noncyclic;
};

// Published double-loop proposals and their quotient-extension
// improvements: original order and tightness T, improved digraph with
// tightness T' reached through an m-quotient / m-extension.
struct Table3Row {
  const char* source;  // literature family the original comes from
  Int order;
  std::optional<DigraphSpec> original;  // printed only for some rows
  Int t;                                // tightness of the original
  DigraphSpec improved;
  Int t_prime;  // tightness of the improvement
  Int m;
};

std::span<const Table1Row> table1_rows();
std::span<const Table3Row> table3_rows();

}  // namespace cayley2
