#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "starlab/decomposition.hpp"
#include "starlab/generators.hpp"

using namespace starlab;

namespace {

StarSemigroup flat_semilattice() {
  RawTables raw;
  raw.name = "flat4";
  raw.n = 4;
  raw.mul.assign(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) raw.mul[i][i] = i;
  raw.star = {0, 1, 2, 3};
  raw.zero = 0;
  return make_semigroup(raw);
}

}  // namespace

TEST_CASE("Z_6: every decomposition is the whole semigroup") {
  EquivContext ctx(gen_zn_mult(6));
  for (auto d : {type_I_decomposition(ctx), type_I1_decomposition(ctx),
                 type_III_decomposition(ctx), finite_decomposition(ctx)}) {
    CAPTURE(decomposition_kind_name(d.kind));
    REQUIRE(d.status == CheckStatus::kPass);
    CHECK(d.unique);
    CHECK(d.a == Bitset::universe(6));
  }
  CHECK(decomposition_cross_consistency(ctx).ok());
}

TEST_CASE("the trivial semigroup decomposes trivially") {
  EquivContext ctx(gen_zn_mult(1));
  for (auto d : {type_I_decomposition(ctx), type_I1_decomposition(ctx),
                 type_III_decomposition(ctx), finite_decomposition(ctx)}) {
    REQUIRE(d.status == CheckStatus::kPass);
    CHECK(d.a == Bitset::single(0));
  }
}

TEST_CASE("boolean 2x2: hand-derived type parts") {
  EquivContext ctx(gen_boolean_matrices(2));
  DecompositionResult one = type_I_decomposition(ctx);
  REQUIRE(one.status == CheckStatus::kPass);
  CHECK(one.a == Bitset::universe(16));
  // The first nabla-finite certificate in canonical order is {0, e00}.
  REQUIRE(one.certificate.has_value());
  CHECK(*one.certificate == Bitset::from_mask(0b11));

  DecompositionResult abelian = type_I1_decomposition(ctx);
  REQUIRE(abelian.status == CheckStatus::kPass);
  CHECK(abelian.a == Bitset::single(0));

  DecompositionResult three = type_III_decomposition(ctx);
  REQUIRE(three.status == CheckStatus::kPass);
  CHECK(three.a == Bitset::universe(16));

  DecompositionResult fin = finite_decomposition(ctx);
  REQUIRE(fin.status == CheckStatus::kPass);
  CHECK(fin.a == Bitset::single(0));

  CHECK(decomposition_cross_consistency(ctx).ok());
}

TEST_CASE("M_2(Z_3): a finite simple ring is entirely finite") {
  EquivContext ctx(gen_matrix_ring(2, 3));
  DecompositionResult one = type_I_decomposition(ctx);
  REQUIRE(one.status == CheckStatus::kPass);
  CHECK(one.a == Bitset::universe(81));
  DecompositionResult abelian = type_I1_decomposition(ctx);
  REQUIRE(abelian.status == CheckStatus::kPass);
  CHECK(abelian.a == Bitset::single(0));  // no abelian central part
  DecompositionResult fin = finite_decomposition(ctx);
  REQUIRE(fin.status == CheckStatus::kPass);
  CHECK(fin.a == Bitset::universe(81));  // everything ~-finite
  CHECK(decomposition_cross_consistency(ctx).ok());
}

TEST_CASE("nabla decompositions run without reflexivity; ~ ones gate") {
  EquivContext ctx(flat_semilattice());
  DecompositionResult one = type_I_decomposition(ctx);
  REQUIRE(one.status == CheckStatus::kPass);
  CHECK(one.a == Bitset::universe(4));  // commutative: all nabla-finite
  DecompositionResult abelian = type_I1_decomposition(ctx);
  REQUIRE(abelian.status == CheckStatus::kPass);
  CHECK(abelian.a == Bitset::universe(4));
  CHECK(type_III_decomposition(ctx).status ==
        CheckStatus::kHypothesisNotMet);
  CHECK(finite_decomposition(ctx).status == CheckStatus::kHypothesisNotMet);
}

TEST_CASE("uniqueness and certificates re-verify across the gallery") {
  for (const auto& g : gallery()) {
    StarSemigroup s = generate_from_spec(g.spec);
    if (s.n() > 100) continue;
    EquivContext ctx(s);
    for (auto d : {type_I_decomposition(ctx), type_I1_decomposition(ctx),
                   type_III_decomposition(ctx), finite_decomposition(ctx)}) {
      CAPTURE(g.spec);
      CAPTURE(decomposition_kind_name(d.kind));
      CHECK(d.status != CheckStatus::kFail);
      if (d.status == CheckStatus::kPass) CHECK(d.unique);
    }
    CHECK_FALSE(decomposition_cross_consistency(ctx).failed());
  }
}
