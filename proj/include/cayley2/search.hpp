#pragma once

#include <functional>
#include <optional>

#include "cayley2/digraph.hpp"
#include "cayley2/procedures.hpp"
#include "cayley2/snf.hpp"

namespace cayley2 {

// D1/D2/D3 for one order, with materialized witnesses.
struct OptimalityResult {
  Int n = 0;
  Int lb = 0;
  std::optional<Int> d1;       // minimum over cyclic digraphs
  std::optional<Int> d2;       // minimum over non-cyclic digraphs; only
                               // defined for non square-free orders
  Int d3 = 0;                  // overall optimum

  struct Witness {
    LShape shape;
    CayleyDigraph2 digraph;
  };
  std::optional<Witness> witness_d1;
  std::optional<Witness> witness_d2;
};

// Minima over admissible diagrams of area N, split by gcd class
// (gcd = 1 realizes cyclic groups, gcd > 1 non-cyclic ones), searched
// by iterative deepening from lb(N). Witnesses are the
// lexicographically smallest realizable diagrams per class.
OptimalityResult optimal_diameters(Int n);

// Independent oracle: exhausts every canonical group of the order and
// every generating pair, taking BFS diameters. Quadratic in N; capped.
std::pair<std::optional<Int>, std::optional<Int>> brute_oracle(Int n, Int cap = 300);

// Enumerates the valid digraphs counted by brute_oracle; fn receives
// each digraph together with its BFS diameter.
void for_each_valid_digraph(Int n,
                            const std::function<void(const CayleyDigraph2&, Int)>& fn);

// QE improvement of a k-tight order-N digraph: for each factorization
// N = N' m^2 (largest m first) search area-N' diagrams beating the
// quotient bound m*(d+2) < lb(N)+k+2 (exact integer comparison); the
// improved digraph is the m-extension of the first hit. Absence is a
// legitimate result (e.g. square-free N).
std::optional<ImprovementRecord> qe_improve(Int n, Int k,
                                            std::optional<Int> current_diameter = std::nullopt);

}  // namespace cayley2
