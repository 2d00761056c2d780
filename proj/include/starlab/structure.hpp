// Relative lattices inside sub-*-semigroups and the structural results
// about them: the two-sided annihilator identity for bi-hereditary
// subsemigroups, the relative-centre correspondence, commutative
// subalgebra annihilators, and essential-ideal transfer.

#ifndef STARLAB_STRUCTURE_HPP_
#define STARLAB_STRUCTURE_HPP_

#include <vector>

#include "starlab/checks.hpp"
#include "starlab/lattice.hpp"

namespace starlab {

// A *-subsemigroup containing 0, the carrier for relative analyses.
bool is_star_subsemigroup_with_zero(const StarSemigroup& s, const Bitset& a);

// Members of the families the structural theorems quantify over.
// Exhaustive for n <= 12; curated otherwise (the annihilator members,
// principal self-adjoint bi-ideals, {0} and S).
std::vector<Bitset> bi_hereditary_star_subsemigroups(const StarSemigroup& s,
                                                     const SubsetSample& sample = {});
std::vector<Bitset> self_adjoint_bi_ideals(const StarSemigroup& s,
                                           const SubsetSample& sample = {});
std::vector<Bitset> ideals(const StarSemigroup& s,
                           const SubsetSample& sample = {});

// Smallest self-adjoint bi-ideal containing the seed.
Bitset bi_ideal_closure(const StarSemigroup& s, Bitset seed);

// nabla computed within a self-adjoint bi-ideal agrees with nabla of the
// ambient semigroup.
CheckResult tri_restriction_check(const StarSemigroup& s, const Bitset& i);

// A^L = (A cap I)^L cap (A cap I^L)^L and the perp twin, for A a
// bi-hereditary *-subsemigroup and I an ideal.
CheckResult annihilator_splitting_check(const StarSemigroup& s, const Bitset& a,
                         const Bitset& i);
// ... over every qualifying pair (A, I).
CheckResult annihilator_splitting_sweep(const StarSemigroup& s, const SubsetSample& sample = {});

// P^nabla sits inside the centre of P^perp.
CheckResult annideal_centre_check(const StarSemigroup& s);

// For a self-adjoint bi-ideal A: J -> J^nabla nabla and I -> A cap I are
// mutually inverse orthoisomorphisms between P(A)^nabla_A and the members
// of P(S)^nabla below A^nabla nabla.  Under the weaker bi-hereditary
// hypothesis only the injection direction is claimed, and only that much
// is checked.
CheckResult relative_centre_maps(const StarSemigroup& s, const Bitset& a);
CheckResult relative_centre_sweep(const StarSemigroup& s, const SubsetSample& sample = {});

// For a commutative bi-hereditary *-subsemigroup A:
// P(A)^perp_A = { A cap I : I in P(S)^perp }; when A is itself a
// *-annihilator this is the interval [{0}, A] of P(S)^perp.
CheckResult commutative_annihilators_check(const StarSemigroup& s, const Bitset& a);
CheckResult commutative_annihilators_sweep(const StarSemigroup& s, const SubsetSample& sample = {});

// Commutative *-annihilators are nabla-finite.
CheckResult commutative_nabla_finite_check(const StarSemigroup& s);

// Essential-ideal transfer:
//   - essential right ideals I of a bi-hereditary *-subsemigroup A have
//     I^L = A^L, I^perp = A^perp, I^nabla = A^nabla
//   - A cap I is essential in A for every essential ideal I of S
//   - a self-adjoint essential ideal I induces mutually inverse
//     orthoisomorphisms P(I)^perp_I = P(S)^perp and P(I)^nabla_I =
//     P(S)^nabla via B -> B^perp perp and A -> A cap I
CheckResult essential_checks(const StarSemigroup& s,
                             const SubsetSample& sample = {});

}  // namespace starlab

#endif  // STARLAB_STRUCTURE_HPP_
