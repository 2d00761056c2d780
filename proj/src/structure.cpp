#include "starlab/structure.hpp"

#include <algorithm>
#include <set>

namespace starlab {

bool is_star_subsemigroup_with_zero(const StarSemigroup& s, const Bitset& a) {
  return a.test(s.zero()) && holds(s, SubsetPredicate::kStarSubsemigroup, a);
}

Bitset bi_ideal_closure(const StarSemigroup& s, Bitset t) {
  t.set(s.zero());
  t |= star_image(s, t);
  for (;;) {
    Bitset grown = t;
    t.for_each([&](int a) {
      t.for_each([&](int b) { grown.set(s.prod(a, b)); });
    });
    // t S t staged as (t S) t to stay quadratic per round.
    Bitset ts;
    t.for_each([&](int a) {
      for (int x = 0; x < s.n(); ++x) ts.set(s.prod(a, x));
    });
    ts.for_each([&](int p) {
      t.for_each([&](int b) { grown.set(s.prod(p, b)); });
    });
    grown |= star_image(s, grown);
    if (grown == t) return t;
    t = grown;
  }
}

namespace {

std::vector<Bitset> exhaustive_masks_with_zero(const StarSemigroup& s) {
  std::vector<Bitset> out;
  const uint64_t limit = uint64_t{1} << s.n();
  const uint64_t zbit = uint64_t{1} << s.zero();
  for (uint64_t mask = 0; mask < limit; ++mask)
    if (mask & zbit) out.push_back(Bitset::from_mask(mask));
  return out;
}

// Curated candidates on carriers too large for mask sweeps: annihilator
// members, principal self-adjoint bi-ideals, {0} and S.  Principal seeds
// are subsampled evenly on large carriers.
std::vector<Bitset> curated_candidates(const StarSemigroup& s) {
  std::set<Bitset> out;
  out.insert(Bitset::single(s.zero()));
  out.insert(Bitset::universe(s.n()));
  PolarLattice perp = closed_lattice(s, RelKind::kPerp, kClosureCapDefault,
                                     /*require_axioms=*/false);
  for (const auto& t : perp.sets()) out.insert(t);
  const int seeds = std::min(s.n(), 48);
  for (int i = 0; i < seeds; ++i) {
    const int a = static_cast<int>(static_cast<long long>(i) * s.n() / seeds);
    out.insert(bi_ideal_closure(s, Bitset::single(a)));
  }
  return {out.begin(), out.end()};
}

std::vector<Bitset> filtered_family(const StarSemigroup& s,
                                    const SubsetSample& sample,
                                    bool (*pred)(const StarSemigroup&,
                                                 const Bitset&)) {
  std::vector<Bitset> out;
  auto candidates = (sample.exhaustive && s.n() <= 12)
                        ? exhaustive_masks_with_zero(s)
                        : curated_candidates(s);
  for (const auto& t : candidates)
    if (pred(s, t)) out.push_back(t);
  return out;
}

}  // namespace

std::vector<Bitset> bi_hereditary_star_subsemigroups(const StarSemigroup& s,
                                                     const SubsetSample& sample) {
  return filtered_family(s, sample, [](const StarSemigroup& sg, const Bitset& t) {
    return is_star_subsemigroup_with_zero(sg, t) &&
           holds(sg, SubsetPredicate::kBiHereditary, t);
  });
}

std::vector<Bitset> self_adjoint_bi_ideals(const StarSemigroup& s,
                                           const SubsetSample& sample) {
  return filtered_family(s, sample, [](const StarSemigroup& sg, const Bitset& t) {
    return t.test(sg.zero()) && holds(sg, SubsetPredicate::kSelfAdjoint, t) &&
           holds(sg, SubsetPredicate::kBiIdeal, t);
  });
}

std::vector<Bitset> ideals(const StarSemigroup& s, const SubsetSample& sample) {
  return filtered_family(s, sample, [](const StarSemigroup& sg, const Bitset& t) {
    return t.test(sg.zero()) && holds(sg, SubsetPredicate::kIdeal, t);
  });
}

CheckResult tri_restriction_check(const StarSemigroup& s, const Bitset& i) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  if (!is_star_subsemigroup_with_zero(s, i) ||
      !holds(s, SubsetPredicate::kBiIdeal, i))
    return CheckResult::gate("I is not a self-adjoint bi-ideal");
  RelationMatrix inner = build_relation(s, RelKind::kNabla, i);
  RelationMatrix outer = build_relation(s, RelKind::kNabla);
  bool ok = true;
  int ws = -1, wt = -1;
  i.for_each([&](int a) {
    i.for_each([&](int b) {
      if (ok && inner.at(a, b) != outer.at(a, b)) {
        ok = false;
        ws = a;
        wt = b;
      }
    });
  });
  if (!ok)
    return CheckResult::fail("nabla_I differs from nabla at (" +
                             std::to_string(ws) + "," + std::to_string(wt) +
                             ")");
  return CheckResult::pass();
}

CheckResult annihilator_splitting_check(const StarSemigroup& s, const Bitset& a,
                         const Bitset& i) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  if (!is_star_subsemigroup_with_zero(s, a) ||
      !holds(s, SubsetPredicate::kBiHereditary, a))
    return CheckResult::gate("A is not a bi-hereditary *-subsemigroup");
  if (!holds(s, SubsetPredicate::kIdeal, i))
    return CheckResult::gate("I is not an ideal");
  RelationMatrix lrel = build_relation(s, RelKind::kL);
  RelationMatrix perp = build_relation(s, RelKind::kPerp);
  const Bitset al = polar(lrel, a);
  const Bitset ap = polar(perp, a);
  const Bitset il = polar(lrel, i);
  const Bitset ip = polar(perp, i);
  if (al != (polar(lrel, a & i) & polar(lrel, a & il)))
    return CheckResult::fail("L identity fails, A = " + a.to_string() +
                             ", I = " + i.to_string());
  if (ap != (polar(perp, a & i) & polar(perp, a & ip)))
    return CheckResult::fail("perp identity fails, A = " + a.to_string() +
                             ", I = " + i.to_string());
  return CheckResult::pass();
}

CheckResult annihilator_splitting_sweep(const StarSemigroup& s, const SubsetSample& sample) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  auto as = bi_hereditary_star_subsemigroups(s, sample);
  auto is = ideals(s, sample);
  for (const auto& a : as)
    for (const auto& i : is) {
      CheckResult r = annihilator_splitting_check(s, a, i);
      if (r.failed()) return r;
    }
  return CheckResult::pass();
}

CheckResult annideal_centre_check(const StarSemigroup& s) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  PolarLattice perp = closed_lattice(s, RelKind::kPerp);
  PolarLattice nabla = closed_lattice(s, RelKind::kNabla);
  std::vector<int> c = centre(perp);
  for (const auto& t : nabla.sets()) {
    int idx = perp.find(t);
    if (idx < 0 || !std::binary_search(c.begin(), c.end(), idx))
      return CheckResult::fail("nabla-ideal not central: " + t.to_string());
  }
  return CheckResult::pass();
}

CheckResult relative_centre_maps(const StarSemigroup& s, const Bitset& a) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  const bool bi_ideal = a.test(s.zero()) &&
                        holds(s, SubsetPredicate::kSelfAdjoint, a) &&
                        holds(s, SubsetPredicate::kBiIdeal, a);
  const bool bi_hereditary =
      is_star_subsemigroup_with_zero(s, a) &&
      holds(s, SubsetPredicate::kBiHereditary, a);
  if (!bi_ideal && !bi_hereditary)
    return CheckResult::gate(
        "A is neither a self-adjoint bi-ideal nor a bi-hereditary "
        "*-subsemigroup");

  RelationMatrix nabla = build_relation(s, RelKind::kNabla);
  PolarLattice nlat = closed_lattice(s, RelKind::kNabla);
  PolarLattice rel = relative_lattice(s, a, RelKind::kNabla,
                                      kClosureCapDefault,
                                      /*require_axioms=*/false);
  const Bitset ann = polar(nabla, polar(nabla, a));  // A^nabla nabla

  std::vector<Bitset> right;  // members of P(S)^nabla below A^nabla nabla
  for (const auto& t : nlat.sets())
    if (t.is_subset_of(ann)) right.push_back(t);

  auto g = [&](const Bitset& i) { return a & i; };

  // g lands in P(A)^nabla_A and preserves order and the relative
  // orthocomplement: (A cap I)^nabla_A = A cap I^nabla.
  for (const auto& i : right) {
    if (rel.find(g(i)) < 0)
      return CheckResult::fail("A cap I not nabla_A-closed at I = " +
                               i.to_string());
    const Bitset relc = polar(rel.relation(), g(i));
    if (relc != (a & polar(nabla, i)))
      return CheckResult::fail("relative complement mismatch at I = " +
                               i.to_string());
  }
  for (const auto& i : right)
    for (const auto& j : right)
      if (i.is_subset_of(j) != g(i).is_subset_of(g(j)))
        return CheckResult::fail("I -> A cap I is not order-reflecting");
  // Injectivity is all the bi-hereditary hypothesis buys.
  for (size_t x = 0; x < right.size(); ++x)
    for (size_t y = x + 1; y < right.size(); ++y)
      if (g(right[x]) == g(right[y]))
        return CheckResult::fail("I -> A cap I not injective at I = " +
                                 right[x].to_string());
  if (!bi_ideal) return CheckResult::pass();

  // Bi-ideal case: J -> J^nabla nabla inverts it from P(A)^nabla_A.
  for (int jidx = 0; jidx < rel.size(); ++jidx) {
    const Bitset j = rel.set(jidx);
    const Bitset jnn = polar(nabla, polar(nabla, j));
    if (nlat.find(jnn) < 0 || !jnn.is_subset_of(ann))
      return CheckResult::fail("J^nabla nabla escapes the interval at J = " +
                               j.to_string());
    if (g(jnn) != j)
      return CheckResult::fail("A cap J^nabla nabla != J at J = " +
                               j.to_string());
  }
  for (const auto& i : right) {
    const Bitset back = polar(nabla, polar(nabla, g(i)));
    if (back != i)
      return CheckResult::fail("(A cap I)^nabla nabla != I at I = " +
                               i.to_string());
  }
  return CheckResult::pass();
}

CheckResult relative_centre_sweep(const StarSemigroup& s, const SubsetSample& sample) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  for (const auto& a : self_adjoint_bi_ideals(s, sample)) {
    CheckResult r = relative_centre_maps(s, a);
    if (r.failed()) return r;
  }
  // Bi-hereditary members that are not bi-ideals exercise the weaker
  // injection-only claim.
  for (const auto& a : bi_hereditary_star_subsemigroups(s, sample)) {
    CheckResult r = relative_centre_maps(s, a);
    if (r.failed()) return r;
  }
  return CheckResult::pass();
}

CheckResult commutative_annihilators_check(const StarSemigroup& s, const Bitset& a) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  if (!is_star_subsemigroup_with_zero(s, a) ||
      !holds(s, SubsetPredicate::kBiHereditary, a))
    return CheckResult::gate("A is not a bi-hereditary *-subsemigroup");
  bool commutative = true;
  a.for_each([&](int x) {
    a.for_each([&](int y) {
      if (s.prod(x, y) != s.prod(y, x)) commutative = false;
    });
  });
  if (!commutative) return CheckResult::gate("A is not commutative");

  PolarLattice perp = closed_lattice(s, RelKind::kPerp);
  PolarLattice rel = relative_lattice(s, a, RelKind::kPerp,
                                      kClosureCapDefault,
                                      /*require_axioms=*/false);
  std::set<Bitset> relative(rel.sets().begin(), rel.sets().end());
  std::set<Bitset> traces;
  for (const auto& i : perp.sets()) traces.insert(a & i);
  if (relative != traces)
    return CheckResult::fail("P(A)^perp_A != { A cap I } at A = " +
                             a.to_string());
  if (perp.find(a) >= 0) {
    std::set<Bitset> interval;
    for (const auto& b : perp.sets())
      if (b.is_subset_of(a)) interval.insert(b);
    if (relative != interval)
      return CheckResult::fail("P(A)^perp_A != [{0},A] at A = " +
                               a.to_string());
  }
  return CheckResult::pass();
}

CheckResult commutative_annihilators_sweep(const StarSemigroup& s, const SubsetSample& sample) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  for (const auto& a : bi_hereditary_star_subsemigroups(s, sample)) {
    CheckResult r = commutative_annihilators_check(s, a);
    if (r.failed()) return r;
  }
  return CheckResult::pass();
}

CheckResult commutative_nabla_finite_check(const StarSemigroup& s) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  PolarLattice perp = closed_lattice(s, RelKind::kPerp);
  RelationMatrix nabla = build_relation(s, RelKind::kNabla);
  for (int i = 0; i < perp.size(); ++i) {
    const Bitset& a = perp.set(i);
    bool commutative = true;
    a.for_each([&](int x) {
      a.for_each([&](int y) {
        if (s.prod(x, y) != s.prod(y, x)) commutative = false;
      });
    });
    if (!commutative) continue;
    const Bitset an = polar(nabla, a);
    for (int j = 0; j < perp.size(); ++j)
      if (perp.leq(j, i) && j != i && polar(nabla, perp.set(j)) == an)
        return CheckResult::fail("commutative annihilator not nabla-finite: " +
                                 a.to_string());
  }
  return CheckResult::pass();
}

namespace {

// Right ideals of A, essential within A: exhaustive for small A, else the
// restriction of curated sets.
std::vector<Bitset> essential_right_ideals_of(const StarSemigroup& s,
                                              const Bitset& a,
                                              const RelationMatrix& perp) {
  std::vector<Bitset> out;
  auto essential_in_a = [&](const Bitset& i) {
    return (polar(perp, i) & a) == Bitset::single(s.zero());
  };
  auto right_ideal_of_a = [&](const Bitset& i) {
    bool ok = i.any() && i.is_subset_of(a);
    i.for_each([&](int x) {
      if (!ok) return;
      a.for_each([&](int y) {
        if (!i.test(s.prod(x, y))) ok = false;
      });
    });
    return ok;
  };
  const int cnt = a.count();
  if (cnt <= 12) {
    std::vector<int> members = a.to_indices();
    const uint64_t limit = uint64_t{1} << cnt;
    for (uint64_t mask = 1; mask < limit; ++mask) {
      Bitset i;
      for (int b = 0; b < cnt; ++b)
        if ((mask >> b) & 1) i.set(members[b]);
      if (right_ideal_of_a(i) && essential_in_a(i)) out.push_back(i);
    }
  } else {
    for (const auto& c : {a, a & star_image(s, a)})
      if (right_ideal_of_a(c) && essential_in_a(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

CheckResult essential_checks(const StarSemigroup& s,
                             const SubsetSample& sample) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  RelationMatrix perp = build_relation(s, RelKind::kPerp);
  RelationMatrix lrel = build_relation(s, RelKind::kL);
  RelationMatrix nabla = build_relation(s, RelKind::kNabla);
  const Bitset zero_only = Bitset::single(s.zero());

  // Polar transfer along essential right ideals of bi-hereditary
  // *-subsemigroups.
  for (const auto& a : bi_hereditary_star_subsemigroups(s, sample)) {
    for (const auto& i : essential_right_ideals_of(s, a, perp)) {
      if (polar(lrel, i) != polar(lrel, a) ||
          polar(perp, i) != polar(perp, a) ||
          polar(nabla, i) != polar(nabla, a))
        return CheckResult::fail("polar transfer fails, A = " + a.to_string() +
                                 ", I = " + i.to_string());
    }
  }

  std::vector<Bitset> essential_ideals;
  for (const auto& i : ideals(s, sample))
    if (polar(perp, i) == zero_only) essential_ideals.push_back(i);

  // A cap I essential in A.
  for (const auto& i : essential_ideals)
    for (const auto& a : bi_hereditary_star_subsemigroups(s, sample))
      if ((polar(perp, a & i) & a) != zero_only)
        return CheckResult::fail("A cap I not essential in A, A = " +
                                 a.to_string() + ", I = " + i.to_string());

  // Orthoisomorphisms along self-adjoint essential ideals.
  PolarLattice perp_lat = closed_lattice(s, RelKind::kPerp);
  PolarLattice nabla_lat = closed_lattice(s, RelKind::kNabla);
  for (const auto& i : essential_ideals) {
    if (i != star_image(s, i)) continue;
    for (const PolarLattice* ambient : {&perp_lat, &nabla_lat}) {
      PolarLattice rel = relative_lattice(s, i, ambient->kind(),
                                          kClosureCapDefault,
                                          /*require_axioms=*/false);
      // B -> B^{perp perp} into the ambient lattice ...
      for (int b = 0; b < rel.size(); ++b) {
        const Bitset up = ambient->polar_of(ambient->polar_of(rel.set(b)));
        if (ambient->find(up) < 0 || (up & i) != rel.set(b))
          return CheckResult::fail("closure map not inverted by trace, I = " +
                                   i.to_string() + ", B = " +
                                   rel.set(b).to_string());
        // ... preserving the orthocomplement.
        const Bitset rel_ortho = polar(rel.relation(), rel.set(b));
        const Bitset amb_ortho = ambient->polar_of(up);
        if ((amb_ortho & i) != rel_ortho)
          return CheckResult::fail("orthocomplement transfer fails, I = " +
                                   i.to_string());
      }
      // ... and A -> A cap I back.
      for (int a = 0; a < ambient->size(); ++a) {
        const Bitset trace = ambient->set(a) & i;
        if (rel.find(trace) < 0 ||
            ambient->polar_of(ambient->polar_of(trace)) != ambient->set(a))
          return CheckResult::fail("trace map not inverted by closure, I = " +
                                   i.to_string() + ", A = " +
                                   ambient->set(a).to_string());
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace starlab
