// Type decompositions of the *-annihilator ortholattice: for each kind,
// brute-force search over P^nabla for the member the theorem asserts to
// exist uniquely, with the certificate re-verified after the search.

#ifndef STARLAB_DECOMPOSITION_HPP_
#define STARLAB_DECOMPOSITION_HPP_

#include <optional>
#include <vector>

#include "starlab/equivalence.hpp"

namespace starlab {

enum class DecompositionKind { kTypeI, kTypeI1, kTypeIII, kFinite };

const char* decomposition_kind_name(DecompositionKind k);

struct DecompositionResult {
  DecompositionKind kind;
  CheckStatus status = CheckStatus::kPass;  // kFail = uniqueness violation
  std::string detail;
  Bitset a;                            // the unique member, when found
  std::optional<Bitset> certificate;   // B with A = B^nabla nabla
  bool unique = false;
  std::vector<Bitset> candidates;      // all, when not exactly one
};

// The unique A in P^nabla with A = B^nabla nabla for some nabla-finite
// annihilator B, such that A^perp contains no nonzero nabla-finite
// annihilator.
DecompositionResult type_I_decomposition(const EquivContext& ctx);

// The unique nabla-finite A in P^nabla whose perp contains no nonzero
// nabla-finite member of P^nabla.
DecompositionResult type_I1_decomposition(const EquivContext& ctx);

// As type I with ~-finite in place of nabla-finite; gated on reflexivity
// and the finite completeness reduction for ~.
DecompositionResult type_III_decomposition(const EquivContext& ctx);

// The unique ~-finite A in P^nabla whose perp contains no nonzero
// ~-finite member of P^nabla; same gates as type III.
DecompositionResult finite_decomposition(const EquivContext& ctx);

// The abelian-type part sits inside the type-I part.
CheckResult decomposition_cross_consistency(const EquivContext& ctx);

}  // namespace starlab

#endif  // STARLAB_DECOMPOSITION_HPP_
