#pragma once

#include <optional>
#include <string>

#include "cayley2/digraph.hpp"
#include "cayley2/procedures.hpp"

namespace cayley2 {

enum class FamilyId {
  InfiniteTight,  // order 3t^2, t-extensions of Cay(Z_3,{2,1})
  MaxCoeff1,      // cyclic families attaining the maximal extension
  MaxCoeff2,      //   coefficient E_{t,i} on each sub-interval
  MaxCoeff3,
  DL1,  // 2-extended double-loop families (with their base loops)
  DL2,
  DL3,
  LXZ1odd,  // diameter improvements of published double-loop proposals
  LXZ1even,
  LXZ2,
  LXZ3,
};

std::string to_string(FamilyId id);
std::optional<FamilyId> parse_family_id(const std::string& name);

struct FamilyInstance {
  CayleyDigraph2 digraph;
  LShape mdd;
  TightnessReport report;
};

// Tight digraphs of order 3t^2: Cay(Z_t (+) Z_3t, {(1,-1),(0,1)}) with
// diagram L(2t,2t,t,t) and diameter 3t-2.
FamilyInstance gamma_infinite(Int t);

// Cyclic tight digraphs of order N_{t,i} attaining c(N) = E_{t,i}:
// generators {t, 2t+1} (i=1,2) resp. {2t+1, t} (i=3), diagrams
// L(2t+1,2t,t,t), L(2t+1,2t+1,t,t), L(2t+2,2t+1,t,t).
FamilyInstance gamma_max_coeff(Int t, int i);

// The m-extensions of gamma_max_coeff over Z_m (+) Z_{m N_{t,i}},
// tight for 2 <= m <= E_{t,i}; out-of-range m is rejected with the
// boundary value in the message.
CayleyDigraph2 extended_family(Int t, int i, Int m);

struct Table2Instance {
  FamilyInstance base;       // tight double-loop network
  FamilyInstance extension;  // its 2-extension over Z_2 (+) Z_{2N}
};

// Double-loop rows i = 1,2,3: bases Cay(Z_{12t^2+1},{-6t+1,2}),
// Cay(Z_{3t^2+2t+1},{-3t,1}), Cay(Z_{3t^2+4t+2},{-3t-2,1}) with
// diameters 6t-1, 3t, 3t+1, and their 2-extensions with diameters
// 12t, 6t+2, 6t+4.
Table2Instance table2_family(int i, Int t);

// Diameter improvements of the published LXZ double-loop families.
// id in {LXZ1odd, LXZ1even, LXZ2, LXZ3}; param is lambda >= 0 (odd
// case), lambda >= 1 (even case), e >= 1, t >= 1 respectively.
// The originals are 1-tight literature digraphs reproduced as opaque
// inputs; the improved digraphs are certified tight at construction.
ImprovementRecord table4_family(FamilyId id, Int param);

// Moore-like bound AC_{2,k} = floor((k+2)^2 / 3) on the order of a
// 2-Cayley digraph of diameter k.
Int ac_bound(Int k);

}  // namespace cayley2
