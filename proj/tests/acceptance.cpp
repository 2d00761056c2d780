// Acceptance suite: one test case per criterion, each printing a
// [criterion N] PASS/FAIL line with its runtime.  Budgets are asserted in
// code; a budget or property violation fails the corresponding case.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <cstdio>

#include "starlab/decomposition.hpp"
#include "starlab/equivalence.hpp"
#include "starlab/fuzz.hpp"
#include "starlab/generators.hpp"
#include "starlab/io.hpp"
#include "starlab/lattice.hpp"
#include "starlab/structure.hpp"
#include "starlab/subsets.hpp"

using namespace starlab;

namespace {

struct Criterion {
  int number;
  const char* summary;
  std::chrono::steady_clock::time_point start;
  bool ok = true;

  Criterion(int n, const char* s)
      : number(n), summary(s), start(std::chrono::steady_clock::now()) {}

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }

  // Budget in seconds, asserted and reported.
  void finish(double budget) {
    const double elapsed = seconds();
    if (elapsed >= budget) ok = false;
    std::printf("[criterion %d] %s - %s (%.3fs, budget %.3fs)\n", number,
                ok ? "PASS" : "FAIL", summary, elapsed, budget);
    std::fflush(stdout);
    CHECK(ok);
    CHECK(elapsed < budget);
  }

  void expect(bool cond) { ok = ok && cond; }
};

bool squarefree(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

std::vector<StarSemigroup> gallery_instances() {
  std::vector<StarSemigroup> out;
  for (const auto& g : gallery()) out.push_back(generate_from_spec(g.spec));
  return out;
}

}  // namespace

TEST_CASE("criterion 1: the M_2(Z) counterexample pattern") {
  // Warm the code path once, then time the measured call.
  (void)qpns_counterexample(6);
  Criterion c(1, "q p^n s = 0 exactly at n 1, exact integers");
  std::vector<bool> z = qpns_counterexample(6);
  c.expect(z == std::vector<bool>{false, true, false, false, false, false,
                                  false});
  c.finish(0.001);
}

TEST_CASE("criterion 2: gallery validity and properness vs squarefreeness") {
  Criterion c(2, "gallery validates; zn proper iff squarefree up to 100");
  for (int n = 2; n <= 30; ++n) c.expect(validate(gen_zn_mult(n)).ok);
  c.expect(validate(gen_boolean_matrices(2)).ok);
  c.expect(validate(gen_boolean_matrices(3)).ok);
  c.expect(validate(gen_matrix_ring(2, 2)).ok);
  for (int n = 1; n <= 100; ++n)
    c.expect(is_proper(gen_zn_mult(n)).proper == squarefree(n));
  c.finish(5.0);
}

TEST_CASE("criterion 3: subset correspondences, exhaustive to n = 12") {
  Criterion c(3, "rooted/hereditary correspondences and positive-part order");
  for (const auto& s : gallery_instances()) {
    if (s.n() > 12) continue;
    c.expect(correspondence_rooted_ideals(s).ok);
    c.expect(correspondence_hereditary(s).ok);
    c.expect(pospart_inclusion_check(s).ok);
  }
  c.finish(30.0);
}

TEST_CASE("criterion 4: the polar lattice suite on every proper instance") {
  Criterion c(4, "polar-map clauses, lattice axioms, ortholattice theorem");
  for (const auto& s : gallery_instances()) {
    if (!is_proper(s).proper) continue;
    SubsetSample sample;
    sample.exhaustive = s.n() <= 12;
    sample.seed = 1;
    c.expect(polar_structure_check(s, sample).ok());
    c.expect(proper_product_facts(s).ok());
    for (RelKind kind : {RelKind::kPerp, RelKind::kL, RelKind::kR,
                         RelKind::kNabla, RelKind::kBot4}) {
      try {
        (void)closed_lattice(s, kind);  // axiom assertions built in
      } catch (const std::exception&) {
        c.expect(false);
      }
    }
    c.expect(ortholattice_comparison_check(s).ok());
  }
  c.finish(300.0);
}

TEST_CASE("criterion 5: the golden Z_6 lattice") {
  Criterion c(5, "Z_6 perp lattice golden values and byte-stable DOT");
  StarSemigroup s = gen_zn_mult(6);
  PolarLattice lat = closed_lattice(s, RelKind::kPerp);
  c.expect(lat.size() == 4);
  c.expect(lat.set(0) == Bitset::single(0));
  c.expect(lat.set(1) == Bitset::from_mask(0b001001));
  c.expect(lat.set(2) == Bitset::from_mask(0b010101));
  c.expect(lat.set(3) == Bitset::universe(6));
  c.expect(check_orthomodular(lat).ok);
  c.expect(check_modular(lat).ok);
  c.expect(centre(lat).size() == 4);
  const std::string expected =
      "digraph \"zn:6.perp\" {\n"
      "  rankdir=BT;\n"
      "  node [shape=box, fontname=\"monospace\"];\n"
      "  n0 [label=\"{0}\"];\n"
      "  n1 [label=\"{0,3}\"];\n"
      "  n2 [label=\"{0,2,4}\"];\n"
      "  n3 [label=\"{0,1,2,3,4,5}\"];\n"
      "  n0 -> n1;\n"
      "  n0 -> n2;\n"
      "  n1 -> n3;\n"
      "  n2 -> n3;\n"
      "}\n";
  c.expect(hasse_dot(lat, "zn:6.perp") == expected);
  c.expect(hasse_dot(lat, "zn:6.perp") == hasse_dot(lat, "zn:6.perp"));
  c.finish(0.1);
}

TEST_CASE("criterion 6: the annihilator-structure suite") {
  Criterion c(6, "centre, del, relative-centre, commutative and essential");
  for (const auto& s : gallery_instances()) {
    SubsetSample sample;
    sample.exhaustive = s.n() <= 12;
    sample.seed = 1;
    // Zero failures; non-proper members gate, which is not a failure.
    c.expect(!annideal_centre_check(s).failed());
    c.expect(!annihilator_splitting_sweep(s, sample).failed());
    c.expect(!relative_centre_sweep(s, sample).failed());
    c.expect(!commutative_annihilators_sweep(s, sample).failed());
    c.expect(!commutative_nabla_finite_check(s).failed());
    c.expect(!essential_checks(s, sample).failed());
    if (is_proper(s).proper) {
      PolarLattice perp = closed_lattice(s, RelKind::kPerp);
      c.expect(del_relation_check(s, perp).ok);
    }
  }
  c.finish(120.0);
}

TEST_CASE("criterion 7: the equivalence suite") {
  Criterion c(7, "equivalence theorems pass or gate, never vacuously");
  for (const auto& s : gallery_instances()) {
    EquivContext ctx(s);
    const bool proper = ctx.proper();
    // Unconditional under the standing properness assumption.
    if (proper) {
      c.expect(transitivity_check(ctx).ok());
      c.expect(closure_translation_check(ctx).ok());
      c.expect(nabla_monotonicity_check(ctx).ok());
      c.expect(sup_preservation_check(ctx).ok());
      c.expect(complementary_pair_check(ctx).ok());
      c.expect(reflexivity_check(ctx).check.ok());
    } else {
      c.expect(reflexivity_check(ctx).check.status ==
               CheckStatus::kHypothesisNotMet);
    }
    // Gated checks may gate but never fail, and when their gates hold
    // they must pass rather than report the gate.
    for (const CheckResult& r :
         {perspectivity_check(ctx), division_check(ctx), central_localization_check(ctx),
          csb_check(ctx), comparability_check(ctx), restriction_checks(ctx),
          modularity_theorem_check(ctx), mvn_vs_sim_check(ctx)}) {
      c.expect(!r.failed());
    }
    if (proper && ctx.reflexive()) {
      c.expect(perspectivity_check(ctx).ok());
      c.expect(division_check(ctx).ok());
      c.expect(central_localization_check(ctx).ok());
    }
    if (!proper) {
      c.expect(csb_check(ctx).status == CheckStatus::kHypothesisNotMet);
      c.expect(modularity_theorem_check(ctx).status ==
               CheckStatus::kHypothesisNotMet);
    }
  }
  c.finish(300.0);
}

TEST_CASE("criterion 8: the ring suite") {
  Criterion c(8, "additivity clauses on ring instances, gated where improper");
  // Proper *-rings: every clause holds, including quadruple additivity.
  for (const char* spec : {"matring:1,6", "matring:1,10", "matring:2,3"}) {
    AdditivityReport rep =
        additivity_checks(EquivContext(generate_from_spec(spec)));
    c.expect(rep.perp_additive);
    c.expect(rep.nabla_additive);
    c.expect(rep.completeness_lemma_perp.ok());
    c.expect(rep.completeness_lemma_nabla.ok());
    c.expect(rep.sum_rule.ok());
    c.expect(rep.perp_cancellative.ok());
    c.expect(rep.proj_closure_injective.ok());
    c.expect(rep.ring_route.ok());
  }
  // M_2(Z_2) is not a proper *-ring (the all-ones matrix squares to zero
  // under transpose-star), so the additivity guarantees do not apply; the
  // checker must gate with the observed outcomes recorded, and the sum
  // rule is observed to fail there.
  AdditivityReport m22 =
      additivity_checks(EquivContext(gen_matrix_ring(2, 2)));
  c.expect(m22.ring_route.status == CheckStatus::kHypothesisNotMet);
  c.expect(m22.sum_rule.status == CheckStatus::kHypothesisNotMet);
  c.expect(m22.sum_rule.detail.find("observed") != std::string::npos);
  c.expect(m22.perp_cancellative.detail.find("observed: holds") !=
           std::string::npos);
  c.expect(m22.proj_closure_injective.detail.find("observed: holds") !=
           std::string::npos);
  c.finish(60.0);
}

TEST_CASE("criterion 9: type decompositions with verified certificates") {
  Criterion c(9, "unique decompositions wherever the gates hold");
  for (const auto& s : gallery_instances()) {
    EquivContext ctx(s);
    for (auto d : {type_I_decomposition(ctx), type_I1_decomposition(ctx),
                   type_III_decomposition(ctx), finite_decomposition(ctx)}) {
      c.expect(d.status != CheckStatus::kFail);
      if (d.status == CheckStatus::kPass) c.expect(d.unique);
    }
    c.expect(!decomposition_cross_consistency(ctx).failed());
    if (ctx.proper()) {
      c.expect(type_I_decomposition(ctx).status == CheckStatus::kPass);
      c.expect(type_I1_decomposition(ctx).status == CheckStatus::kPass);
    }
  }
  c.finish(120.0);
}

TEST_CASE("criterion 10: the seeded fuzz battery") {
  Criterion c(10, "1000 seeded instances, no failing checker on proper ones");
  FuzzOutcome out = run_fuzz_battery(1000, /*seed=*/1);
  c.expect(out.total == 1000);
  c.expect(out.proper_count > 200);
  for (const auto& d : out.failure_details) MESSAGE(d);
  c.expect(out.failures == 0);
  c.finish(300.0);
}
