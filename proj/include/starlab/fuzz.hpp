// Seeded random small *-semigroups and the release-blocker battery run
// over them.  Instances are drawn from randomized constructions that are
// valid by construction (closures inside ambient gallery semigroups,
// meet-semilattices, relabelled Z_n, small products), then relabelled by
// a random permutation so that nothing depends on the zero sitting at
// index 0.

#ifndef STARLAB_FUZZ_HPP_
#define STARLAB_FUZZ_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "starlab/semigroup.hpp"

namespace starlab {

StarSemigroup random_star_semigroup(uint64_t seed, int max_n = 6);

struct FuzzOutcome {
  int total = 0;
  int proper_count = 0;
  int failures = 0;
  std::vector<std::string> failure_details;
};

// Runs every unconditional checker on every proper instance; conditional
// checkers may gate out but must never fail.  Any failure is a release
// blocker.
FuzzOutcome run_fuzz_battery(int count, uint64_t seed, int max_n = 6);

}  // namespace starlab

#endif  // STARLAB_FUZZ_HPP_
