#pragma once

#include <optional>

#include "cayley2/digraph.hpp"
#include "cayley2/intmath.hpp"
#include "cayley2/lshape.hpp"

namespace cayley2 {

struct TightnessReport {
  Int order = 0;
  Int lower_bound = 0;
  Int diameter = 0;
  Int k = 0;  // diameter - lower_bound
};

TightnessReport make_report(Int order, Int diameter);

// Before/after record for a diameter improvement at fixed order.
struct ImprovementRecord {
  std::optional<CayleyDigraph2> original;  // when a concrete digraph is known
  TightnessReport original_report;
  Int m = 1;
  Int intermediate_area = 0;
  std::optional<LShape> intermediate;  // the area-N' diagram behind the improvement
  CayleyDigraph2 improved;
  TightnessReport improved_report;
};

// Procedure E: digraph over Z_{m*s1} (+) Z_{m*s2} with the same raw
// generator tuples re-reduced. Scales any related diagram by m;
// diameter maps to m*(d+2)-2.
CayleyDigraph2 extend(const CayleyDigraph2& d, Int m);

// Procedure Q: requires m | s1; digraph over Z_{s1/m} (+) Z_{s2/m} with
// the same raw tuples re-reduced. Diameter maps to (d+2)/m - 2.
CayleyDigraph2 quotient(const CayleyDigraph2& d, Int m);

// m-extension of a tight area-N diagram stays tight iff
// m*ceil(sqrt(3N)) = ceil(sqrt(3N m^2)); evaluated purely in integers.
bool is_tight_extension(Int n, Int m);

// True iff N = 3t^2: the only orders whose tight digraphs have tight
// m-extensions for every m.
bool has_infinite_tight_extensions(Int n);

// c(N) = floor(1 / (ceil(sqrt(3N)) - sqrt(3N))), the largest m whose
// extension stays tight. Computed by scan with the proven O(sqrt(N))
// stopping bound and cross-checked against the closed form evaluated
// exactly as the largest k with (k*c - 1)^2 < 3N k^2.
// Requires N >= 2 and N != 3t^2.
Int extension_coefficient(Int n);

// Classification of N into the sub-intervals I_{t,1} = [3t^2+1, 3t^2+2t],
// I_{t,2} = [3t^2+2t+1, 3t^2+4t+1], I_{t,3} = [3t^2+4t+2, 3(t+1)^2],
// on which ceil(sqrt(3N)) equals 3t+1, 3t+2, 3t+3 respectively.
struct IntervalClass {
  Int t;
  int i;  // 1, 2 or 3
  Int ceil_value;
};

IntervalClass interval_ceil(Int n);

// The unique maximizer of c over I_{t,i} and its value:
// (N_{t,1}, 6t+1), (N_{t,2}, 6t+3), (N_{t,3}, 2t+1) with
// N_{t,1} = 3t^2+2t, N_{t,2} = 3t^2+4t+1, N_{t,3} = 3t^2+6t+2.
std::pair<Int, Int> max_coefficient(Int t, int i);

}  // namespace cayley2
