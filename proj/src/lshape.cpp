#include "cayley2/lshape.hpp"

#include <sstream>
#include <stdexcept>

namespace cayley2 {

LShape::LShape(Int l_, Int h_, Int w_, Int y_) : l(l_), h(h_), w(w_), y(y_) {
  if (l < 1 || h < 1 || w < 0 || y < 0 || w >= l || y >= h) {
    std::ostringstream os;
    os << "LShape: side conventions 0 <= w < l, 0 <= y < h violated for L(" << l << "," << h
       << "," << w << "," << y << ")";
    throw std::invalid_argument(os.str());
  }
}

bool is_admissible(const LShape& s) {
  const Int fl = s.l - s.y;
  const Int fh = s.h - s.w;
  if (fl == 0 && fh == 0) return false;
  return fl * fh >= 0;
}

Int diameter(const LShape& s) {
  if (!is_admissible(s)) throw std::invalid_argument("diameter: inadmissible " + to_string(s));
  return s.l + s.h - std::min(s.w, s.y) - 2;
}

std::pair<Int, Int> corner_distances(const LShape& s) {
  if (!is_admissible(s))
    throw std::invalid_argument("corner_distances: inadmissible " + to_string(s));
  return {s.l - 1 + s.h - s.y - 1, s.l - s.w - 1 + s.h - 1};
}

Int tightness(const LShape& s) { return diameter(s) - lower_bound_diameter(s.area()); }

LShape scale(const LShape& s, Int m) {
  if (m < 1) throw std::invalid_argument("scale: requires m >= 1");
  if (!is_admissible(s)) throw std::invalid_argument("scale: inadmissible " + to_string(s));
  return LShape(m * s.l, m * s.h, m * s.w, m * s.y);
}

LShape divide(const LShape& s, Int m) {
  if (m < 1) throw std::invalid_argument("divide: requires m >= 1");
  if (s.gcd() % m != 0)
    throw std::invalid_argument("divide: " + std::to_string(m) + " does not divide gcd of " +
                                to_string(s));
  return LShape(s.l / m, s.h / m, s.w / m, s.y / m);
}

TessellationVectors tessellation_vectors(const LShape& s) {
  return {{s.l, -s.y}, {-s.w, s.h}};
}

std::string to_string(const LShape& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LShape& s) {
  return os << "L(" << s.l << "," << s.h << "," << s.w << "," << s.y << ")";
}

std::vector<LShape> enumerate_lshapes(Int n, std::optional<Int> max_diameter) {
  std::vector<LShape> out;
  for_each_lshape(n, max_diameter, [&](const LShape& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

}  // namespace cayley2
