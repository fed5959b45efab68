#include "cayley2/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cayley2 {

namespace {

Int mod(Int v, Int m) {
  Int r = v % m;
  return r < 0 ? r + m : r;
}

}  // namespace

AbelianGroup2::AbelianGroup2(Int s1_, Int s2_) : s1(s1_), s2(s2_) {
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("AbelianGroup2: orders must be >= 1");
  if (s2 % s1 != 0)
    throw std::invalid_argument("AbelianGroup2: s1 must divide s2; use canonicalize_group");
}

Element GroupIso::apply(Coord2 c) const {
  return {mod(u[0][0] * c.x + u[0][1] * c.y, group.s1),
          mod(u[1][0] * c.x + u[1][1] * c.y, group.s2)};
}

CayleyDigraph2::CayleyDigraph2(AbelianGroup2 group, Coord2 a_raw, Coord2 b_raw)
    : group_(group), a_raw_(a_raw), b_raw_(b_raw) {
  a_ = reduce(a_raw_);
  b_ = reduce(b_raw_);
  if (a_.is_zero() || b_.is_zero())
    throw DegenerateGenerators("generator reduces to zero in " + to_string(*this));
  if (a_ == b_) throw DegenerateGenerators("generators collide in " + to_string(*this));
  // {a,b} generates Z_s1 (+) Z_s2 iff the column lattice of
  // [a b (s1,0) (0,s2)] is all of Z^2, i.e. the gcd of its 2x2 minors is 1.
  const Int s1 = group_.s1, s2 = group_.s2;
  Int g = std::gcd(a_.x * b_.y - a_.y * b_.x, s1 * s2);
  g = std::gcd(g, std::gcd(a_.y * s1, a_.x * s2));
  g = std::gcd(g, std::gcd(b_.y * s1, b_.x * s2));
  if (g != 1)
    throw DegenerateGenerators("generators fail to generate the group in " + to_string(*this));
}

Element CayleyDigraph2::reduce(Coord2 c) const {
  return {mod(c.x, group_.s1), mod(c.y, group_.s2)};
}

std::string to_string(const CayleyDigraph2& d) {
  std::ostringstream os;
  os << d;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CayleyDigraph2& d) {
  const auto& g = d.group();
  os << "Cay(Z_" << g.s1 << "+Z_" << g.s2 << ",{(" << d.a().x << "," << d.a().y << "),("
     << d.b().x << "," << d.b().y << ")})";
  return os;
}

GroupIso canonicalize_group(Int m, Int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("canonicalize_group: orders must be >= 1");
  const Int g = std::gcd(m, n);
  const Int l = m / g * n;
  // Z_m (+) Z_n = Z^2 / <(m,0),(0,n)>; a unimodular U with
  // U*diag(m,n)*V = diag(g,l) maps that quotient onto Z_g (+) Z_l.
  // Bezout: pm + qn = g. Take U = [[p, q], [-n/g, m/g]]: det = 1.
  Int p = 1, q = 0, x = 0, y = 1, a = m, b = n;
  while (b != 0) {
    const Int t = a / b;
    a -= t * b;
    p -= t * x;
    q -= t * y;
    std::swap(a, b);
    std::swap(p, x);
    std::swap(q, y);
  }
  // Now p*m + q*n = a = g.
  GroupIso iso{AbelianGroup2(g, l), {}};
  iso.u[0][0] = p;
  iso.u[0][1] = q;
  iso.u[1][0] = -(n / g);
  iso.u[1][1] = m / g;
  return iso;
}

const std::vector<std::int32_t>& BfsOracle::distances(const CayleyDigraph2& d, Element root) {
  const Int n = d.order();
  if (n > cap_) {
    std::ostringstream os;
    os << "order " << n << " exceeds BFS cap " << cap_
       << "; use formula-based verification or raise the cap";
    throw BfsCapExceeded(os.str());
  }
  const Int s1 = d.group().s1, s2 = d.group().s2;
  const Int a1 = d.a().x, a2 = d.a().y, b1 = d.b().x, b2 = d.b().y;

  dist_.assign(static_cast<std::size_t>(n), -1);
  queue_.clear();
  queue_.reserve(static_cast<std::size_t>(n));

  const Int r = root.x * s2 + root.y;
  dist_[static_cast<std::size_t>(r)] = 0;
  queue_.push_back(static_cast<std::int32_t>(r));

  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Int cur = queue_[head];
    const Int x = cur / s2, y = cur % s2;
    const std::int32_t dn = dist_[static_cast<std::size_t>(cur)] + 1;

    Int nx = x + a1;
    if (nx >= s1) nx -= s1;
    Int ny = y + a2;
    if (ny >= s2) ny -= s2;
    Int ni = nx * s2 + ny;
    if (dist_[static_cast<std::size_t>(ni)] < 0) {
      dist_[static_cast<std::size_t>(ni)] = dn;
      queue_.push_back(static_cast<std::int32_t>(ni));
    }

    nx = x + b1;
    if (nx >= s1) nx -= s1;
    ny = y + b2;
    if (ny >= s2) ny -= s2;
    ni = nx * s2 + ny;
    if (dist_[static_cast<std::size_t>(ni)] < 0) {
      dist_[static_cast<std::size_t>(ni)] = dn;
      queue_.push_back(static_cast<std::int32_t>(ni));
    }
  }

  if (static_cast<Int>(queue_.size()) != n)
    throw std::logic_error("bfs: reach count below order, generation invariant violated for " +
                           to_string(d));
  return dist_;
}

Int BfsOracle::diameter(const CayleyDigraph2& d) {
  distances(d);
  return dist_[static_cast<std::size_t>(queue_.back())];
}

std::vector<std::int32_t> bfs_distances(const CayleyDigraph2& d, Int max_order) {
  BfsOracle oracle(max_order);
  return oracle.distances(d);
}

Int bfs_diameter(const CayleyDigraph2& d, Int max_order) {
  BfsOracle oracle(max_order);
  return oracle.diameter(d);
}

bool is_mdd_for(const LShape& s, const CayleyDigraph2& d) {
  if (s.area() != d.order()) return false;
  if (!is_admissible(s)) return false;
  const Int s1 = d.group().s1, s2 = d.group().s2;
  const Element a = d.a(), b = d.b();
  // l*a = y*b and h*b = w*a componentwise.
  if (mod(s.l * a.x - s.y * b.x, s1) != 0) return false;
  if (mod(s.l * a.y - s.y * b.y, s2) != 0) return false;
  if (mod(s.h * b.x - s.w * a.x, s1) != 0) return false;
  if (mod(s.h * b.y - s.w * a.y, s2) != 0) return false;
  return true;
}

std::vector<LShape> find_mdds_with_diameter(const CayleyDigraph2& d, Int diam) {
  const Int n = d.order();
  const Int side = diam + 1;  // max(l,h) - 1 <= diameter
  const Int s1 = d.group().s1, s2 = d.group().s2;
  const Element a = d.a(), b = d.b();

  // i -> element id of i*a and i*b for i in [0, side].
  std::vector<Int> ma(static_cast<std::size_t>(side) + 1), mb(ma.size());
  {
    Int ax = 0, ay = 0, bx = 0, by = 0;
    for (Int i = 0; i <= side; ++i) {
      ma[static_cast<std::size_t>(i)] = ax * s2 + ay;
      mb[static_cast<std::size_t>(i)] = bx * s2 + by;
      ax += a.x;
      if (ax >= s1) ax -= s1;
      ay += a.y;
      if (ay >= s2) ay -= s2;
      bx += b.x;
      if (bx >= s1) bx -= s1;
      by += b.y;
      if (by >= s2) by -= s2;
    }
  }

  auto sorted_by_element = [](const std::vector<Int>& mult) {
    std::vector<std::pair<Int, Int>> v;  // (element id, multiplier)
    v.reserve(mult.size());
    for (std::size_t i = 0; i < mult.size(); ++i) v.emplace_back(mult[i], static_cast<Int>(i));
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto sa = sorted_by_element(ma);
  const auto sb = sorted_by_element(mb);

  // Merge-join on element value. `lo_first` / `hi_second` bound the
  // multiplier on each side: U-pairs need l >= 1, y <= diam; V-pairs
  // need h >= 1, w <= diam.
  auto join = [&](const auto& left, const auto& right, Int left_min, Int right_max,
                  std::vector<std::pair<Int, Int>>& out) {
    out.clear();
    std::size_t i = 0, j = 0;
    while (i < left.size() && j < right.size()) {
      if (left[i].first < right[j].first) {
        ++i;
      } else if (left[i].first > right[j].first) {
        ++j;
      } else {
        std::size_t i2 = i, j2 = j;
        while (i2 < left.size() && left[i2].first == left[i].first) ++i2;
        while (j2 < right.size() && right[j2].first == right[j].first) ++j2;
        for (std::size_t ii = i; ii < i2; ++ii) {
          if (left[ii].second < left_min) continue;
          for (std::size_t jj = j; jj < j2; ++jj) {
            if (right[jj].second > right_max) continue;
            out.emplace_back(left[ii].second, right[jj].second);
          }
        }
        i = i2;
        j = j2;
      }
    }
  };

  std::vector<std::pair<Int, Int>> u_pairs;  // (l, y): l*a = y*b
  std::vector<std::pair<Int, Int>> v_pairs;  // (h, w): h*b = w*a
  join(sa, sb, 1, diam, u_pairs);
  join(sb, sa, 1, diam, v_pairs);

  std::vector<LShape> out;
  for (auto [l, y] : u_pairs) {
    for (auto [h, w] : v_pairs) {
      if (w >= l || y >= h) continue;
      if (l * h - w * y != n) continue;
      LShape s(l, h, w, y);
      if (!is_admissible(s)) continue;
      if (diameter(s) > diam) continue;
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  if (out.empty())
    throw std::logic_error("find_mdds: no minimum distance diagram found for " + to_string(d) +
                           "; diagram-digraph correspondence invariant violated");
  return out;
}

std::vector<LShape> find_mdds(const CayleyDigraph2& d, Int max_order) {
  return find_mdds_with_diameter(d, bfs_diameter(d, max_order));
}

std::optional<LShape> find_scaled_mdd(const CayleyDigraph2& d, Int m, Int slack) {
  if (m < 1) throw std::invalid_argument("find_scaled_mdd: requires m >= 1");
  const Int n = d.order();
  if (n % (m * m) != 0)
    throw std::invalid_argument("find_scaled_mdd: m^2 does not divide the order");
  const Int quotient_area = n / (m * m);
  const Int cap = lower_bound_diameter(quotient_area) + slack;
  std::optional<LShape> hit;
  for_each_lshape(quotient_area, cap, [&](const LShape& s) {
    if (is_mdd_for(scale(s, m), d)) {
      hit = s;
      return false;
    }
    return true;
  });
  return hit;
}

}  // namespace cayley2
