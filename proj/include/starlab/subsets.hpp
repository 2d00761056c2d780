// Subset algebra over a *-semigroup: the maps sqrt(T), T^2, T_+, T cap T*,
// the subset predicates (ideals, rootedness, heredity), and the two
// correspondence theorems between left rooted left ideals and their
// positive / self-adjoint images, realized as computed bijections.

#ifndef STARLAB_SUBSETS_HPP_
#define STARLAB_SUBSETS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starlab/semigroup.hpp"

namespace starlab {

enum class SubsetPredicate {
  kSubsemigroup,
  kLeftIdeal,
  kRightIdeal,
  kIdeal,
  kQuasiIdeal,
  kBiIdeal,
  kSelfAdjoint,
  kStarSubsemigroup,
  kLeftRooted,
  kRightRooted,
  kRooted,
  kQuasiRooted,
  kPositiveRooted,
  kHereditary,
  kPositiveHereditary,
  kBiHereditary,
};

const char* predicate_name(SubsetPredicate p);

// sqrt(T) = { s : s*s in T }
Bitset sqrt_of(const StarSemigroup& s, const Bitset& t);
// T^2 = { t*t : t in T }
Bitset t_squared(const StarSemigroup& s, const Bitset& t);
// T_+ = T cap S_+
Bitset positive_part(const StarSemigroup& s, const Bitset& t);
// T* = { t* : t in T }
Bitset star_image(const StarSemigroup& s, const Bitset& t);
// T cap T*
Bitset sa_part(const StarSemigroup& s, const Bitset& t);

// Decides the predicate by its literal definition.  Positive rootedness
// reads as (sqrt T)_+ <= T, the reading forced by how it is used: for a
// positive rooted T, membership of s*s s*s in T must pull s*s into T.
bool holds(const StarSemigroup& s, SubsetPredicate p, const Bitset& t);

struct EnumerateOptions {
  // Exhaustive sweeps over all 2^n subsets require n <= 16; larger
  // carriers use seeded sampling instead.
  bool exhaustive = true;
  int sample_count = 128;
  uint64_t seed = 1;
};

std::vector<Bitset> enumerate_with(const StarSemigroup& s, SubsetPredicate p,
                                   const EnumerateOptions& opts = {});

// The subset families the correspondence theorems speak about.  Families
// range over subsets containing 0: every nonempty ideal or annihilator in
// a pointed semigroup contains 0, and admitting the empty set would just
// add a spurious bottom below {0}.
struct BijectionReport {
  bool ok = false;
  bool exhaustive = true;
  int size_left = 0;   // family A
  int size_right = 0;  // family B
  int sample_count = 0;
  std::string failure;           // empty when ok
  std::optional<Bitset> witness; // member where a clause failed
};

// Left rooted left ideals  <->  positive rooted positive hereditary
// subsets of S_+, via I -> I_+ (= I^2) and J -> sqrt(J).  Verifies the
// maps land in the right families, are mutually inverse, and preserve
// order in both directions.
BijectionReport correspondence_rooted_ideals(const StarSemigroup& s,
                                             const EnumerateOptions& opts = {});

// Left rooted left ideals  <->  quasi-rooted hereditary *-subsemigroups,
// via I -> I cap I* and J -> sqrt(J).  Also asserts every quasi-rooted
// hereditary *-subsemigroup is a quasi-ideal.
BijectionReport correspondence_hereditary(const StarSemigroup& s,
                                          const EnumerateOptions& opts = {});

struct PospartResult {
  bool ok = true;
  Bitset witness_i, witness_j;
};

// I <= J  <=>  I_+ <= J_+  over pairs of left rooted left ideals and,
// separately, pairs of quasi-rooted *-subsemigroups.
PospartResult pospart_inclusion_check(const StarSemigroup& s,
                                      const EnumerateOptions& opts = {});

// Seeded sample of subsets closed under the giving operations; used by the
// sampled modes on carriers too large for 2^n sweeps.
std::vector<Bitset> sample_left_rooted_left_ideals(const StarSemigroup& s,
                                                   int count, uint64_t seed);

}  // namespace starlab

#endif  // STARLAB_SUBSETS_HPP_
