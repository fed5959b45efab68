#pragma once

#include <array>
#include <ostream>
#include <string>

#include "cayley2/digraph.hpp"
#include "cayley2/intmath.hpp"
#include "cayley2/lshape.hpp"

namespace cayley2 {

struct IntMatrix2 {
  std::array<std::array<Int, 2>, 2> m{{{0, 0}, {0, 0}}};

  static IntMatrix2 identity() { return {{{{1, 0}, {0, 1}}}}; }
  static IntMatrix2 diagonal(Int d0, Int d1) { return {{{{d0, 0}, {0, d1}}}}; }

  Int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
  IntMatrix2 operator*(const IntMatrix2& o) const;
  bool operator==(const IntMatrix2&) const = default;
};

std::string to_string(const IntMatrix2& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix2& m);

// S = U*M*V = diag(s1,s2) with U,V unimodular, s1 | s2, s1*s2 = |det M|
// and s1 = gcd of the entries of M.
struct SnfDecomposition {
  Int s1, s2;
  IntMatrix2 U, V;
};

// M(l,h,w,y) = [[l, -w], [-y, h]]; its columns are the tessellation
// vectors of the diagram, up to transposition of coordinates.
IntMatrix2 matrix_of(const LShape& s);

// Constructive 2x2 Smith normal form by unimodular row/column Euclidean
// reduction. U and V are not unique; only the decomposition invariants
// are contracted. Rejects singular matrices.
SnfDecomposition smith_normal_form(const IntMatrix2& m0);

// The 2-Cayley digraph related to an admissible diagram: group
// Z_s1 (+) Z_s2 from the SNF of M(l,h,w,y), generators the columns of U.
// Throws DegenerateGenerators when the reduced generators collide or
// vanish (no 2-generator digraph exists; e.g. strips with l=1 or h=1).
CayleyDigraph2 digraph_of(const LShape& s);

}  // namespace cayley2
