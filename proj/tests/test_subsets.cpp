#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "starlab/generators.hpp"
#include "starlab/subsets.hpp"

using namespace starlab;

namespace {

// Literal definitional oracles, independent of the library path.
bool oracle_left_ideal(const StarSemigroup& s, const Bitset& t) {
  for (int x = 0; x < s.n(); ++x)
    for (int a = 0; a < s.n(); ++a)
      if (t.test(a) && !t.test(s.prod(x, a))) return false;
  return true;
}

bool oracle_left_rooted(const StarSemigroup& s, const Bitset& t) {
  for (int x = 0; x < s.n(); ++x)
    if (t.test(s.prod(s.star(x), x)) && !t.test(x)) return false;
  return true;
}

bool oracle_hereditary(const StarSemigroup& s, const Bitset& t) {
  for (int x = 0; x < s.n(); ++x) {
    if (!t.test(s.prod(s.star(x), x))) continue;
    for (int u = 0; u < s.n(); ++u)
      if (!t.test(s.prod(s.prod(s.star(x), u), x))) return false;
  }
  return true;
}

Bitset random_subset(const StarSemigroup& s, std::mt19937_64& rng) {
  Bitset t;
  for (int i = 0; i < s.n(); ++i)
    if (rng() & 1) t.set(i);
  return t;
}

}  // namespace

TEST_CASE("sqrt on Z_6 matches the squares-mod-6 oracle") {
  StarSemigroup s = gen_zn_mult(6);
  Bitset t = Bitset::from_mask(0b001001);  // {0,3}
  Bitset expect;
  for (int x = 0; x < 6; ++x)
    if (t.test((x * x) % 6)) expect.set(x);
  CHECK(sqrt_of(s, t) == expect);
  CHECK(sqrt_of(s, t) == t);  // {0,3} is its own square root set
  CHECK(sqrt_of(s, Bitset::universe(6)) == Bitset::universe(6));
  CHECK(sqrt_of(s, Bitset::single(0)) == Bitset::single(0));  // proper
}

TEST_CASE("the positive part of the whole carrier is S_+") {
  StarSemigroup s = gen_zn_mult(6);
  CHECK(positive_part(s, Bitset::universe(6)) == Bitset::from_mask(0b011011));
  CHECK(t_squared(s, Bitset::single(0)) == Bitset::single(0));
  CHECK(positive_part(s, Bitset::single(0)) == Bitset::single(0));
}

TEST_CASE("star_image is an involution on subsets") {
  std::mt19937_64 rng(7);
  for (const char* spec : {"zn:12", "bool:2"}) {
    StarSemigroup s = generate_from_spec(spec);
    for (int i = 0; i < 50; ++i) {
      Bitset t = random_subset(s, rng);
      CHECK(star_image(s, star_image(s, t)) == t);
      CHECK(sa_part(s, t) == (t & star_image(s, t)));
    }
  }
}

TEST_CASE("predicates agree with their definitional oracles on Z_6") {
  StarSemigroup s = gen_zn_mult(6);
  for (uint64_t mask = 0; mask < 64; ++mask) {
    Bitset t = Bitset::from_mask(mask);
    CHECK(holds(s, SubsetPredicate::kLeftIdeal, t) == oracle_left_ideal(s, t));
    CHECK(holds(s, SubsetPredicate::kLeftRooted, t) ==
          oracle_left_rooted(s, t));
    CHECK(holds(s, SubsetPredicate::kHereditary, t) ==
          oracle_hereditary(s, t));
  }
  CHECK(holds(s, SubsetPredicate::kLeftIdeal, Bitset::from_mask(0b010101)));
}

TEST_CASE("the absorbing singleton satisfies every predicate") {
  StarSemigroup s = gen_zn_mult(6);
  Bitset z = Bitset::single(0);
  for (int p = 0; p <= static_cast<int>(SubsetPredicate::kBiHereditary); ++p)
    CHECK(holds(s, static_cast<SubsetPredicate>(p), z));
}

TEST_CASE("upper-triangular boolean matrices form no *-subsemigroup") {
  StarSemigroup s = gen_boolean_matrices(2);
  Bitset upper;  // entry (1,0) is bit 2 of the mask encoding
  for (int m = 0; m < 16; ++m)
    if (!(m & 4)) upper.set(m);
  CHECK(holds(s, SubsetPredicate::kSubsemigroup, upper));
  CHECK_FALSE(holds(s, SubsetPredicate::kSelfAdjoint, upper));
  CHECK_FALSE(holds(s, SubsetPredicate::kStarSubsemigroup, upper));
}

TEST_CASE("enumerate_with matches a brute-force filter and honors the cap") {
  StarSemigroup s = gen_zn_mult(6);
  auto got = enumerate_with(s, SubsetPredicate::kLeftIdeal);
  std::vector<Bitset> expect;
  for (uint64_t mask = 0; mask < 64; ++mask) {
    Bitset t = Bitset::from_mask(mask);
    if (oracle_left_ideal(s, t)) expect.push_back(t);
  }
  CHECK(got == expect);  // canonical ascending-mask order
  CHECK_THROWS_AS((void)enumerate_with(gen_zn_mult(20),
                                       SubsetPredicate::kLeftIdeal),
                  CapExceeded);
}

TEST_CASE("rooted-ideal correspondence on Z_6 against brute-forced families") {
  StarSemigroup s = gen_zn_mult(6);
  BijectionReport rep = correspondence_rooted_ideals(s);
  CHECK(rep.ok);
  CHECK(rep.exhaustive);
  CHECK(rep.size_left == rep.size_right);
  int expect_left = 0;
  for (uint64_t mask = 1; mask < 64; mask += 2) {  // must contain 0
    Bitset t = Bitset::from_mask(mask);
    if (oracle_left_ideal(s, t) && oracle_left_rooted(s, t)) ++expect_left;
  }
  CHECK(rep.size_left == expect_left);
}

TEST_CASE("both correspondences hold across small instances") {
  for (const char* spec :
       {"zn:1", "zn:2", "zn:4", "zn:6", "zn:8", "zn:9", "zn:12"}) {
    StarSemigroup s = generate_from_spec(spec);
    CAPTURE(spec);
    CHECK(correspondence_rooted_ideals(s).ok);
    CHECK(correspondence_hereditary(s).ok);
    CHECK(pospart_inclusion_check(s).ok);
  }
  BijectionReport one = correspondence_rooted_ideals(gen_zn_mult(1));
  CHECK(one.size_left == 1);  // just {0}
  CHECK(one.size_right == 1);
}

TEST_CASE("boolean 2x2 correspondences, exhaustive at the 2^16 limit") {
  StarSemigroup s = gen_boolean_matrices(2);
  CHECK(correspondence_rooted_ideals(s).ok);
  CHECK(correspondence_hereditary(s).ok);
}

TEST_CASE("sampled correspondence mode on a 512-element carrier") {
  StarSemigroup s = gen_boolean_matrices(3);
  EnumerateOptions opts;
  opts.exhaustive = false;
  opts.sample_count = 24;
  opts.seed = 5;
  BijectionReport rep = correspondence_rooted_ideals(s, opts);
  CHECK(rep.ok);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.sample_count > 0);
  CHECK(correspondence_hereditary(s, opts).ok);
  CHECK(pospart_inclusion_check(s, opts).ok);
  for (const Bitset& i : sample_left_rooted_left_ideals(s, 24, 5)) {
    CHECK(holds(s, SubsetPredicate::kLeftIdeal, i));
    CHECK(holds(s, SubsetPredicate::kLeftRooted, i));
  }
}

TEST_CASE("sqrt maps positive-hereditary to left ideals and back") {
  // Exhaustive over all subsets on small carriers.
  for (const char* spec : {"zn:4", "zn:6", "zn:8", "zn:10"}) {
    StarSemigroup s = generate_from_spec(spec);
    const uint64_t limit = uint64_t{1} << s.n();
    for (uint64_t mask = 0; mask < limit; ++mask) {
      Bitset t = Bitset::from_mask(mask);
      if (holds(s, SubsetPredicate::kPositiveHereditary, t))
        CHECK(holds(s, SubsetPredicate::kLeftIdeal, sqrt_of(s, t)));
      if (holds(s, SubsetPredicate::kPositiveRooted, t))
        CHECK(holds(s, SubsetPredicate::kLeftRooted, sqrt_of(s, t)));
      if (holds(s, SubsetPredicate::kLeftRooted, t) &&
          holds(s, SubsetPredicate::kLeftIdeal, t)) {
        CHECK(positive_part(s, t) == t_squared(s, t));
        Bitset sa = sa_part(s, t);
        CHECK(holds(s, SubsetPredicate::kHereditary, sa));
        CHECK(holds(s, SubsetPredicate::kQuasiIdeal, sa));
      }
    }
  }
}
