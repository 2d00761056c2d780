#include "starlab/fuzz.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "starlab/decomposition.hpp"
#include "starlab/equivalence.hpp"
#include "starlab/generators.hpp"
#include "starlab/lattice.hpp"
#include "starlab/structure.hpp"
#include "starlab/subsets.hpp"

namespace starlab {

namespace {

StarSemigroup relabel(const StarSemigroup& s, std::mt19937_64& rng) {
  const int n = s.n();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[p[i]] = i;
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n), star(n);
  for (int a = 0; a < n; ++a) {
    star[a] = static_cast<uint16_t>(p[s.star(inv[a])]);
    for (int b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<uint16_t>(p[s.prod(inv[a], inv[b])]);
  }
  std::optional<RingExtension> ring;
  if (s.has_ring()) {
    RingExtension r;
    r.add.resize(static_cast<size_t>(n) * n);
    r.neg.resize(n);
    for (int a = 0; a < n; ++a) {
      r.neg[a] = static_cast<uint16_t>(p[s.neg(inv[a])]);
      for (int b = 0; b < n; ++b)
        r.add[a * n + b] = static_cast<uint16_t>(p[s.add(inv[a], inv[b])]);
    }
    ring = std::move(r);
  }
  return StarSemigroup::unchecked(s.name() + "#", n, std::move(mul),
                                  std::move(star), p[s.zero()],
                                  std::move(ring));
}

// Sub-*-semigroup generated by a few random elements of an ambient.
StarSemigroup sub_closure(const StarSemigroup& ambient, std::mt19937_64& rng,
                          int max_n) {
  for (int attempt = 0; attempt < 24; ++attempt) {
    Bitset members = Bitset::single(ambient.zero());
    const int picks = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < picks; ++i)
      members.set(static_cast<int>(rng() % ambient.n()));
    for (;;) {
      Bitset grown = members | star_image(ambient, members);
      members.for_each([&](int a) {
        members.for_each([&](int b) { grown.set(ambient.prod(a, b)); });
      });
      if (grown == members) break;
      members = grown;
      if (members.count() > max_n) break;
    }
    if (members.count() > max_n) continue;
    std::vector<int> idx = members.to_indices();
    const int n = static_cast<int>(idx.size());
    std::vector<int> pos(ambient.n(), -1);
    for (int i = 0; i < n; ++i) pos[idx[i]] = i;
    std::vector<uint16_t> mul(static_cast<size_t>(n) * n), star(n);
    for (int a = 0; a < n; ++a) {
      star[a] = static_cast<uint16_t>(pos[ambient.star(idx[a])]);
      for (int b = 0; b < n; ++b)
        mul[a * n + b] =
            static_cast<uint16_t>(pos[ambient.prod(idx[a], idx[b])]);
    }
    return StarSemigroup::unchecked("sub(" + ambient.name() + ")", n,
                                    std::move(mul), std::move(star),
                                    pos[ambient.zero()], std::nullopt);
  }
  return gen_zn_mult(2 + static_cast<int>(rng() % (max_n - 1)));
}

// Random meet-semilattice: a family of subsets of a small ground set,
// closed under intersection, with the empty set as zero and star = id.
StarSemigroup random_semilattice(std::mt19937_64& rng, int max_n) {
  const int ground = 3;
  std::vector<int> family{0};
  const int extras = 1 + static_cast<int>(rng() % (max_n - 1));
  for (int i = 0; i < extras; ++i)
    family.push_back(static_cast<int>(rng() % (1 << ground)));
  for (;;) {
    bool grew = false;
    const size_t sz = family.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        int meet = family[i] & family[j];
        if (std::find(family.begin(), family.end(), meet) == family.end()) {
          family.push_back(meet);
          grew = true;
        }
      }
    if (!grew) break;
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  if (static_cast<int>(family.size()) > Bitset::kCapacity ||
      static_cast<int>(family.size()) > 8)
    family.resize(1);  // fall back to the trivial semilattice
  const int n = static_cast<int>(family.size());
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n), star(n);
  auto pos = [&](int m) {
    return static_cast<int>(std::lower_bound(family.begin(), family.end(), m) -
                            family.begin());
  };
  for (int a = 0; a < n; ++a) {
    star[a] = static_cast<uint16_t>(a);
    for (int b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<uint16_t>(pos(family[a] & family[b]));
  }
  return StarSemigroup::unchecked("semilattice", n, std::move(mul),
                                  std::move(star), pos(0), std::nullopt);
}

}  // namespace

StarSemigroup random_star_semigroup(uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  StarSemigroup s;
  switch (rng() % 4) {
    case 0: {
      static const char* ambients[] = {"bool:2", "matring:2,2", "matring:2,3",
                                       "zn:12", "zn:30"};
      s = sub_closure(generate_from_spec(ambients[rng() % 5]), rng, max_n);
      break;
    }
    case 1:
      s = gen_zn_mult(2 + static_cast<int>(rng() % (max_n - 1)));
      break;
    case 2:
      s = random_semilattice(rng, max_n);
      break;
    default: {
      StarSemigroup a = gen_zn_mult(2 + static_cast<int>(rng() % 2));
      StarSemigroup b = sub_closure(generate_from_spec("bool:2"), rng,
                                    max_n / a.n() > 1 ? max_n / a.n() : 1);
      if (a.n() * b.n() <= max_n)
        s = direct_product(a, b);
      else
        s = a;
      break;
    }
  }
  return relabel(s, rng);
}

FuzzOutcome run_fuzz_battery(int count, uint64_t seed, int max_n) {
  FuzzOutcome out;
  out.total = count;
  auto blocker = [&](uint64_t inst, const std::string& what) {
    ++out.failures;
    if (out.failure_details.size() < 32)
      out.failure_details.push_back("instance " + std::to_string(inst) + ": " +
                                    what);
  };
  for (int k = 0; k < count; ++k) {
    const uint64_t inst_seed = seed + static_cast<uint64_t>(k);
    StarSemigroup s = random_star_semigroup(inst_seed, max_n);
    if (!validate(s).ok) {
      blocker(inst_seed, "construction produced an invalid instance");
      continue;
    }
    ElementClasses c = classify_elements(s);
    if (c.projections != (c.self_adjoints & c.idempotents) ||
        c.projections != (c.positives & c.idempotents) ||
        !c.positives.is_subset_of(c.self_adjoints)) {
      blocker(inst_seed, "element class identities fail");
      continue;
    }
    if (!check_positive_powers(s)) {
      blocker(inst_seed, "positive powers escape S_+");
      continue;
    }
    const bool proper = is_proper(s).proper;
    if (check_star_cancellation(s).cancellative && !proper) {
      blocker(inst_seed, "*-cancellative instance that is not proper");
      continue;
    }
    // The correspondence theorems hold for arbitrary *-semigroups.
    if (!correspondence_rooted_ideals(s).ok ||
        !correspondence_hereditary(s).ok || !pospart_inclusion_check(s).ok) {
      blocker(inst_seed, "a subset correspondence fails");
      continue;
    }
    if (!proper) continue;
    ++out.proper_count;

    if (!relation_facts_check(s).ok) {
      blocker(inst_seed, "elementary relation facts fail");
      continue;
    }
    if (proper_product_facts(s).failed()) {
      blocker(inst_seed, "vanishing-product facts fail");
      continue;
    }
    try {
      for (RelKind kind : {RelKind::kPerp, RelKind::kL, RelKind::kR,
                           RelKind::kNabla, RelKind::kBot4})
        closed_lattice(s, kind);  // throws on an axiom failure
    } catch (const std::exception& e) {
      blocker(inst_seed, std::string("lattice axioms: ") + e.what());
      continue;
    }
    auto expect_no_fail = [&](const char* name, const CheckResult& r) {
      if (r.failed()) blocker(inst_seed, std::string(name) + ": " + r.detail);
    };
    expect_no_fail("polar_structure", polar_structure_check(s));
    expect_no_fail("ortholattice_comparison", ortholattice_comparison_check(s));
    expect_no_fail("annihilator_splitting", annihilator_splitting_sweep(s));
    expect_no_fail("annideal_centre", annideal_centre_check(s));
    expect_no_fail("relative_centre", relative_centre_sweep(s));
    expect_no_fail("commutative_annihilators", commutative_annihilators_sweep(s));
    expect_no_fail("commutative_nabla_finite",
                   commutative_nabla_finite_check(s));
    expect_no_fail("essential", essential_checks(s));
    PolarLattice perp = closed_lattice(s, RelKind::kPerp);
    LatticeLawResult del = del_relation_check(s, perp);
    if (!del.ok) blocker(inst_seed, "del relation fails");

    EquivContext ctx(s);
    expect_no_fail("reflexivity_cross", reflexivity_check(ctx).check);
    expect_no_fail("transitivity", transitivity_check(ctx));
    expect_no_fail("closure_translation", closure_translation_check(ctx));
    expect_no_fail("nabla_monotonicity", nabla_monotonicity_check(ctx));
    expect_no_fail("sup_preservation", sup_preservation_check(ctx));
    expect_no_fail("complementary_pairs", complementary_pair_check(ctx));
    expect_no_fail("mvn_vs_sim", mvn_vs_sim_check(ctx));
    expect_no_fail("perspectivity", perspectivity_check(ctx));
    expect_no_fail("division", division_check(ctx));
    expect_no_fail("central_localization", central_localization_check(ctx));
    expect_no_fail("csb", csb_check(ctx));
    expect_no_fail("comparability", comparability_check(ctx));
    expect_no_fail("restriction", restriction_checks(ctx));
    expect_no_fail("modularity_theorem", modularity_theorem_check(ctx));
    AdditivityReport add = additivity_checks(ctx);
    expect_no_fail("completeness_lemma_perp", add.completeness_lemma_perp);
    expect_no_fail("completeness_lemma_nabla", add.completeness_lemma_nabla);
    expect_no_fail("ring_route", add.ring_route);
    for (auto kind :
         {type_I_decomposition(ctx), type_I1_decomposition(ctx),
          type_III_decomposition(ctx), finite_decomposition(ctx)})
      if (kind.status == CheckStatus::kFail)
        blocker(inst_seed, std::string(decomposition_kind_name(kind.kind)) +
                               ": " + kind.detail);
    expect_no_fail("decomposition_cross",
                   decomposition_cross_consistency(ctx));
  }
  return out;
}

}  // namespace starlab
