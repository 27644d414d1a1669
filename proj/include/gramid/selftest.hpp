#pragma once

#include <string>
#include <vector>

namespace gramid {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Runs the full acceptance suite: symbolic sweeps, oracle equivalence,
// span-sum identity, reductions, randomized exact-rational and float
// evaluations, the centroid biconditional, the cocircular-set identity and
// the polynomial model. Randomized checks draw from a generator seeded
// deterministically from `seed`, so identical seeds give identical results.
std::vector<CriterionResult> run_acceptance(unsigned seed = 1);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace gramid
