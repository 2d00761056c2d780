#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "starlab/generators.hpp"
#include "starlab/structure.hpp"

using namespace starlab;

TEST_CASE("the relative lattice of the full carrier is the plain lattice") {
  for (const char* spec : {"zn:6", "bool:2", "matring:2,3"}) {
    StarSemigroup s = generate_from_spec(spec);
    for (RelKind kind : {RelKind::kPerp, RelKind::kNabla, RelKind::kL}) {
      PolarLattice whole = closed_lattice(s, kind, kClosureCapDefault, false);
      PolarLattice rel = relative_lattice(s, Bitset::universe(s.n()), kind,
                                          kClosureCapDefault, false);
      CAPTURE(spec);
      CAPTURE(rel_kind_name(kind));
      REQUIRE(rel.size() == whole.size());
      for (int i = 0; i < rel.size(); ++i) CHECK(rel.set(i) == whole.set(i));
    }
  }
}

TEST_CASE("the relative perp lattice of {0,2,4} inside Z_6") {
  StarSemigroup s = gen_zn_mult(6);
  Bitset a = Bitset::from_mask(0b010101);
  REQUIRE(is_star_subsemigroup_with_zero(s, a));
  PolarLattice rel = relative_lattice(s, a, RelKind::kPerp);
  // Within {0,2,4} no nonzero product vanishes, so the family is {{0}, A}.
  REQUIRE(rel.size() == 2);
  CHECK(rel.set(0) == Bitset::single(0));
  CHECK(rel.set(1) == a);
  PolarLattice one = relative_lattice(s, Bitset::single(0), RelKind::kPerp);
  CHECK(one.size() == 1);
}

TEST_CASE("nabla restricts along self-adjoint bi-ideals") {
  StarSemigroup s = gen_zn_mult(6);
  CHECK(tri_restriction_check(s, Bitset::from_mask(0b010101)).ok());
  CHECK(tri_restriction_check(s, Bitset::universe(6)).ok());
  CHECK(tri_restriction_check(s, Bitset::single(0)).ok());
  // Not a bi-ideal: gate, not a verdict.
  CHECK(tri_restriction_check(s, Bitset::from_mask(0b000011)).status ==
        CheckStatus::kHypothesisNotMet);
}

TEST_CASE("bi_ideal_closure yields self-adjoint bi-ideals") {
  for (const char* spec : {"zn:6", "bool:2", "matring:2,3"}) {
    StarSemigroup s = generate_from_spec(spec);
    for (int a = 0; a < s.n(); a += 3) {
      Bitset b = bi_ideal_closure(s, Bitset::single(a));
      CAPTURE(spec);
      CAPTURE(a);
      CHECK(holds(s, SubsetPredicate::kSelfAdjoint, b));
      CHECK(holds(s, SubsetPredicate::kBiIdeal, b));
      CHECK(b.test(a));
      CHECK(b.test(s.zero()));
    }
  }
}

TEST_CASE("the two-sided annihilator identity") {
  StarSemigroup s = gen_zn_mult(6);
  CHECK(annihilator_splitting_check(s, Bitset::universe(6), Bitset::from_mask(0b010101)).ok());
  CHECK(annihilator_splitting_check(s, Bitset::universe(6), Bitset::single(0)).ok());
  // {0,1} is a *-subsemigroup but not bi-hereditary in Z_6.
  CHECK(annihilator_splitting_check(s, Bitset::from_mask(0b000011),
                     Bitset::from_mask(0b010101)).status ==
        CheckStatus::kHypothesisNotMet);
  // Not an ideal: gate on the second hypothesis.
  CHECK(annihilator_splitting_check(s, Bitset::universe(6), Bitset::from_mask(0b000011))
            .status == CheckStatus::kHypothesisNotMet);
  for (const char* spec : {"zn:6", "zn:10", "bool:2"})
    CHECK(annihilator_splitting_sweep(generate_from_spec(spec)).ok());
}

TEST_CASE("nabla-ideals are central in the perp lattice") {
  for (const char* spec : {"zn:1", "zn:6", "zn:30", "bool:2", "matring:2,3"})
    CHECK(annideal_centre_check(generate_from_spec(spec)).ok());
}

TEST_CASE("the relative-centre correspondence") {
  StarSemigroup s = gen_zn_mult(6);
  CHECK(relative_centre_maps(s, Bitset::universe(6)).ok());
  CHECK(relative_centre_maps(s, Bitset::from_mask(0b001001)).ok());  // A = {0,3}
  CHECK(relative_centre_maps(s, Bitset::from_mask(0b010101)).ok());
  CHECK(relative_centre_maps(s, Bitset::single(0)).ok());
  for (const char* spec : {"zn:6", "zn:10", "bool:2"})
    CHECK(relative_centre_sweep(generate_from_spec(spec)).ok());
}

TEST_CASE("commutative subalgebra annihilators are ambient traces") {
  StarSemigroup s = gen_zn_mult(6);
  CHECK(commutative_annihilators_check(s, Bitset::from_mask(0b010101)).ok());
  CHECK(commutative_annihilators_check(s, Bitset::single(0)).ok());
  CHECK(commutative_annihilators_check(s, Bitset::universe(6)).ok());
  // The full boolean matrix monoid is not commutative: gate.
  StarSemigroup b = gen_boolean_matrices(2);
  CHECK(commutative_annihilators_check(b, Bitset::universe(16)).status ==
        CheckStatus::kHypothesisNotMet);
  // {0, e00, e11} is commutative and bi-hereditary; adjoining the
  // identity breaks bi-heredity (I S_+ I escapes), so that variant gates.
  Bitset diag;
  diag.set(0);
  diag.set(1);
  diag.set(8);
  CHECK(commutative_annihilators_check(b, diag).ok());
  Bitset with_identity = diag;
  with_identity.set(9);
  CHECK(commutative_annihilators_check(b, with_identity).status ==
        CheckStatus::kHypothesisNotMet);
  for (const char* spec : {"zn:6", "zn:10", "bool:2"})
    CHECK(commutative_annihilators_sweep(generate_from_spec(spec)).ok());
}

TEST_CASE("commutative annihilators are nabla-finite") {
  for (const char* spec : {"zn:6", "zn:15", "zn:30", "bool:2", "matring:2,3"})
    CHECK(commutative_nabla_finite_check(generate_from_spec(spec)).ok());
}

TEST_CASE("essential-ideal transfer") {
  for (const char* spec : {"zn:6", "zn:10", "bool:2", "matring:1,10"}) {
    CAPTURE(spec);
    CHECK(essential_checks(generate_from_spec(spec)).ok());
  }
  CHECK(essential_checks(gen_zn_mult(9)).status ==
        CheckStatus::kHypothesisNotMet);
}

TEST_CASE("Z_6 has the proper essential ideal {0,2,3,4}") {
  // A regression anchor for the orthoisomorphism clause: this ideal is
  // self-adjoint, essential and strictly smaller than S.
  StarSemigroup s = gen_zn_mult(6);
  Bitset i = Bitset::from_mask(0b011101);
  CHECK(holds(s, SubsetPredicate::kIdeal, i));
  CHECK(holds(s, SubsetPredicate::kSelfAdjoint, i));
  RelationMatrix perp = build_relation(s, RelKind::kPerp);
  CHECK(polar(perp, i) == Bitset::single(0));
  PolarLattice rel = relative_lattice(s, i, RelKind::kPerp);
  PolarLattice whole = closed_lattice(s, RelKind::kPerp);
  CHECK(rel.size() == whole.size());
}
