#include "cayley2/families.hpp"

#include <sstream>

namespace cayley2 {

namespace {

FamilyInstance certified_instance(CayleyDigraph2 d, LShape mdd) {
  if (!is_mdd_for(mdd, d))
    throw std::logic_error("family construction: " + to_string(mdd) +
                           " fails the Theorem-1 certificate for " + to_string(d));
  const Int diam = diameter(mdd);
  return {std::move(d), mdd, make_report(mdd.area(), diam)};
}

}  // namespace

std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::InfiniteTight: return "InfiniteTight";
    case FamilyId::MaxCoeff1: return "MaxCoeff1";
    case FamilyId::MaxCoeff2: return "MaxCoeff2";
    case FamilyId::MaxCoeff3: return "MaxCoeff3";
    case FamilyId::DL1: return "DL1";
    case FamilyId::DL2: return "DL2";
    case FamilyId::DL3: return "DL3";
    case FamilyId::LXZ1odd: return "LXZ1odd";
    case FamilyId::LXZ1even: return "LXZ1even";
    case FamilyId::LXZ2: return "LXZ2";
    case FamilyId::LXZ3: return "LXZ3";
  }
  throw std::logic_error("to_string(FamilyId): unknown id");
}

std::optional<FamilyId> parse_family_id(const std::string& name) {
  for (FamilyId id : {FamilyId::InfiniteTight, FamilyId::MaxCoeff1, FamilyId::MaxCoeff2,
                      FamilyId::MaxCoeff3, FamilyId::DL1, FamilyId::DL2, FamilyId::DL3,
                      FamilyId::LXZ1odd, FamilyId::LXZ1even, FamilyId::LXZ2, FamilyId::LXZ3})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

FamilyInstance gamma_infinite(Int t) {
  if (t < 1) throw std::invalid_argument("gamma_infinite: requires t >= 1");
  CayleyDigraph2 d(AbelianGroup2(t, 3 * t), {1, -1}, {0, 1});
  return certified_instance(std::move(d), LShape(2 * t, 2 * t, t, t));
}

FamilyInstance gamma_max_coeff(Int t, int i) {
  if (t < 1) throw std::invalid_argument("gamma_max_coeff: requires t >= 1");
  const Int n = max_coefficient(t, i).first;
  // Raw tuples are the unimodular SNF lifts, so m-extensions inherit a
  // generating pair directly.
  switch (i) {
    case 1:
      return certified_instance(CayleyDigraph2(AbelianGroup2(1, n), {1, t}, {2, 2 * t + 1}),
                                LShape(2 * t + 1, 2 * t, t, t));
    case 2:
      return certified_instance(CayleyDigraph2(AbelianGroup2(1, n), {1, t}, {2, 2 * t + 1}),
                                LShape(2 * t + 1, 2 * t + 1, t, t));
    case 3:
      return certified_instance(CayleyDigraph2(AbelianGroup2(1, n), {2, 2 * t + 1}, {1, t}),
                                LShape(2 * t + 2, 2 * t + 1, t, t));
    default:
      throw std::invalid_argument("gamma_max_coeff: i must be 1, 2 or 3");
  }
}

CayleyDigraph2 extended_family(Int t, int i, Int m) {
  const Int e = max_coefficient(t, i).second;
  if (m < 2 || m > e) {
    std::ostringstream os;
    os << "extended_family: m = " << m << " outside the tight range [2, " << e << "] for (t,i) = ("
       << t << "," << i << ")";
    throw std::invalid_argument(os.str());
  }
  return extend(gamma_max_coeff(t, i).digraph, m);
}

Table2Instance table2_family(int i, Int t) {
  if (t < 1) throw std::invalid_argument("table2_family: requires t >= 1");
  auto build = [&](Int order, Coord2 a, Coord2 b, LShape mdd) {
    FamilyInstance base =
        certified_instance(CayleyDigraph2(AbelianGroup2(1, order), a, b), mdd);
    FamilyInstance ext =
        certified_instance(extend(base.digraph, 2), scale(base.mdd, 2));
    return Table2Instance{std::move(base), std::move(ext)};
  };
  switch (i) {
    case 1:
      return build(12 * t * t + 1, {3 * t, -6 * t + 1}, {-1, 2},
                   LShape(4 * t, 4 * t, 2 * t - 1, 2 * t + 1));
    case 2:
      return build(3 * t * t + 2 * t + 1, {1, -3 * t}, {0, 1},
                   LShape(2 * t + 1, 2 * t + 1, t, t + 2));
    case 3:
      return build(3 * t * t + 4 * t + 2, {1, -3 * t - 2}, {0, 1},
                   LShape(2 * t + 1, 2 * t + 2, t, t + 2));
    default:
      throw std::invalid_argument("table2_family: i must be 1, 2 or 3");
  }
}

namespace {

// Certify an improvement: locate the quotient diagram behind `improved`,
// check the original/improved orders agree, and assemble the record.
ImprovementRecord make_improvement(CayleyDigraph2 original, Int claimed_original_k,
                                   CayleyDigraph2 improved, Int m,
                                   std::optional<LShape> quotient_mdd) {
  const Int n = original.order();
  if (improved.order() != n)
    throw std::logic_error("table4_family: improved order differs from original order");
  if (!quotient_mdd) {
    quotient_mdd = find_scaled_mdd(improved, m);
    if (!quotient_mdd)
      throw std::logic_error("table4_family: no quotient diagram certifies " +
                             to_string(improved));
  } else if (!is_mdd_for(scale(*quotient_mdd, m), improved)) {
    throw std::logic_error("table4_family: quotient diagram " + to_string(*quotient_mdd) +
                           " fails the Theorem-1 certificate for " + to_string(improved));
  }
  const Int improved_diameter = m * (diameter(*quotient_mdd) + 2) - 2;
  const Int lb = lower_bound_diameter(n);
  ImprovementRecord rec{std::move(original),
                        {n, lb, lb + claimed_original_k, claimed_original_k},
                        m,
                        quotient_mdd->area(),
                        quotient_mdd,
                        std::move(improved),
                        make_report(n, improved_diameter)};
  return rec;
}

}  // namespace

ImprovementRecord table4_family(FamilyId id, Int param) {
  switch (id) {
    case FamilyId::LXZ1odd: {
      const Int lambda = param;
      if (lambda < 0) throw std::invalid_argument("table4_family: LXZ1odd requires lambda >= 0");
      const Int e = 2 * lambda + 1;
      const Int t = 2 * e + 5;
      CayleyDigraph2 original(AbelianGroup2(1, 3 * t * t + 2 * t - 5), {0, 1}, {0, 3 * t - 2});
      CayleyDigraph2 improved(AbelianGroup2(2, 6 * e * e + 32 * e + 40),
                              {1, -6 * lambda * lambda - 25 * lambda - 24}, {0, 1});
      return make_improvement(std::move(original), 1, std::move(improved), 2,
                              LShape(2 * e + 6, 2 * e + 4, e + 2, e + 2));
    }
    case FamilyId::LXZ1even: {
      const Int lambda = param;
      if (lambda < 1) throw std::invalid_argument("table4_family: LXZ1even requires lambda >= 1");
      const Int e = 2 * lambda;
      const Int t = 2 * e + 5;
      CayleyDigraph2 original(AbelianGroup2(1, 3 * t * t + 2 * t - 5), {0, 1}, {0, 3 * t - 2});
      CayleyDigraph2 improved(AbelianGroup2(4, 12 * lambda * lambda + 32 * lambda + 20),
                              {1, -lambda - 1}, {-1, lambda + 2});
      return make_improvement(std::move(original), 1, std::move(improved), 2,
                              LShape(4 * lambda + 6, 4 * lambda + 4, 2 * lambda + 2,
                                     2 * lambda + 2));
    }
    case FamilyId::LXZ2: {
      const Int e = param;
      if (e < 1) throw std::invalid_argument("table4_family: LXZ2 requires e >= 1");
      const Int t = 2 * e;
      CayleyDigraph2 original(AbelianGroup2(1, 3 * t * t + 4 * t), {0, 1}, {0, 6 * e});
      CayleyDigraph2 improved(AbelianGroup2(2, 6 * e * e + 4 * e), {1, 3 * e + 1}, {0, 1});
      return make_improvement(std::move(original), 1, std::move(improved), 2, std::nullopt);
    }
    case FamilyId::LXZ3: {
      const Int t = param;
      if (t < 1) throw std::invalid_argument("table4_family: LXZ3 requires t >= 1");
      CayleyDigraph2 original(AbelianGroup2(1, 3 * t * t + 6 * t + 3), {0, 1}, {0, 3 * t + 5});
      FamilyInstance gamma = gamma_infinite(t + 1);
      return make_improvement(std::move(original), 1, std::move(gamma.digraph), 1, gamma.mdd);
    }
    default:
      throw std::invalid_argument("table4_family: id must be one of the LXZ improvements");
  }
}

Int ac_bound(Int k) {
  if (k < 0) throw std::invalid_argument("ac_bound: requires k >= 0");
  return (k + 2) * (k + 2) / 3;
}

}  // namespace cayley2
