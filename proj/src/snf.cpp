#include "cayley2/snf.hpp"

#include <cstdlib>
#include <sstream>

namespace cayley2 {

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
  IntMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j];
  return r;
}

std::string to_string(const IntMatrix2& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix2& m) {
  return os << "[[" << m.m[0][0] << "," << m.m[0][1] << "],[" << m.m[1][0] << "," << m.m[1][1]
            << "]]";
}

IntMatrix2 matrix_of(const LShape& s) { return {{{{s.l, -s.w}, {-s.y, s.h}}}}; }

SnfDecomposition smith_normal_form(const IntMatrix2& m0) {
  if (m0.det() == 0) throw std::invalid_argument("smith_normal_form: singular matrix");

  IntMatrix2 m = m0;
  IntMatrix2 u = IntMatrix2::identity();
  IntMatrix2 v = IntMatrix2::identity();

  auto swap_rows = [&] {
    std::swap(m.m[0], m.m[1]);
    std::swap(u.m[0], u.m[1]);
  };
  auto swap_cols = [&] {
    std::swap(m.m[0][0], m.m[0][1]);
    std::swap(m.m[1][0], m.m[1][1]);
    std::swap(v.m[0][0], v.m[0][1]);
    std::swap(v.m[1][0], v.m[1][1]);
  };
  auto row_sub = [&](Int q) {  // row1 -= q * row0
    m.m[1][0] -= q * m.m[0][0];
    m.m[1][1] -= q * m.m[0][1];
    u.m[1][0] -= q * u.m[0][0];
    u.m[1][1] -= q * u.m[0][1];
  };
  auto col_sub = [&](Int q) {  // col1 -= q * col0
    m.m[0][1] -= q * m.m[0][0];
    m.m[1][1] -= q * m.m[1][0];
    v.m[0][1] -= q * v.m[0][0];
    v.m[1][1] -= q * v.m[1][0];
  };
  auto negate_col = [&](int j) {
    m.m[0][j] = -m.m[0][j];
    m.m[1][j] = -m.m[1][j];
    v.m[0][j] = -v.m[0][j];
    v.m[1][j] = -v.m[1][j];
  };

  // Clear the off-diagonal entries; column steps can refill m[1][0], so
  // iterate until both are zero. |m[0][0]| shrinks along the gcd chain,
  // so this terminates.
  while (m.m[1][0] != 0 || m.m[0][1] != 0) {
    if (m.m[0][0] == 0) {
      if (m.m[1][0] != 0)
        swap_rows();
      else
        swap_cols();
      continue;
    }
    while (m.m[1][0] != 0) {
      row_sub(m.m[1][0] / m.m[0][0]);
      if (m.m[1][0] != 0) swap_rows();
    }
    while (m.m[0][1] != 0) {
      col_sub(m.m[0][1] / m.m[0][0]);
      if (m.m[0][1] != 0) swap_cols();
    }
  }

  // Divisibility s1 | s2: fold m[1][1] into the pivot and rediagonalize.
  while (m.m[1][1] % m.m[0][0] != 0) {
    // col0 += col1
    m.m[0][0] += m.m[0][1];
    m.m[1][0] += m.m[1][1];
    v.m[0][0] += v.m[0][1];
    v.m[1][0] += v.m[1][1];
    while (m.m[1][0] != 0 || m.m[0][1] != 0) {
      if (m.m[0][0] == 0) {
        if (m.m[1][0] != 0)
          swap_rows();
        else
          swap_cols();
        continue;
      }
      while (m.m[1][0] != 0) {
        row_sub(m.m[1][0] / m.m[0][0]);
        if (m.m[1][0] != 0) swap_rows();
      }
      while (m.m[0][1] != 0) {
        col_sub(m.m[0][1] / m.m[0][0]);
        if (m.m[0][1] != 0) swap_cols();
      }
    }
  }

  if (m.m[0][0] < 0) negate_col(0);
  if (m.m[1][1] < 0) negate_col(1);

  SnfDecomposition snf{m.m[0][0], m.m[1][1], u, v};

  // Contract checks: cheap for 2x2, so always on.
  const Int ad = std::abs(m0.det());
  const Int g = gcd_many({m0.m[0][0], m0.m[0][1], m0.m[1][0], m0.m[1][1]});
  if (snf.s1 < 1 || snf.s2 % snf.s1 != 0 || snf.s1 * snf.s2 != ad || snf.s1 != g ||
      std::abs(u.det()) != 1 || std::abs(v.det()) != 1 ||
      !((u * m0) * v == IntMatrix2::diagonal(snf.s1, snf.s2)))
    throw std::logic_error("smith_normal_form: decomposition invariants violated for " +
                           to_string(m0));
  return snf;
}

CayleyDigraph2 digraph_of(const LShape& s) {
  if (!is_admissible(s)) throw std::invalid_argument("digraph_of: inadmissible " + to_string(s));
  const SnfDecomposition snf = smith_normal_form(matrix_of(s));
  const Coord2 a{snf.U.m[0][0], snf.U.m[1][0]};
  const Coord2 b{snf.U.m[0][1], snf.U.m[1][1]};
  CayleyDigraph2 d(AbelianGroup2(snf.s1, snf.s2), a, b);
  if (!is_mdd_for(s, d))
    throw std::logic_error("digraph_of: constructed digraph fails the Theorem-1 certificate for " +
                           to_string(s));
  return d;
}

}  // namespace cayley2
