#include "starlab/subsets.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace starlab {

const char* predicate_name(SubsetPredicate p) {
  switch (p) {
    case SubsetPredicate::kSubsemigroup: return "subsemigroup";
    case SubsetPredicate::kLeftIdeal: return "left_ideal";
    case SubsetPredicate::kRightIdeal: return "right_ideal";
    case SubsetPredicate::kIdeal: return "ideal";
    case SubsetPredicate::kQuasiIdeal: return "quasi_ideal";
    case SubsetPredicate::kBiIdeal: return "bi_ideal";
    case SubsetPredicate::kSelfAdjoint: return "self_adjoint";
    case SubsetPredicate::kStarSubsemigroup: return "star_subsemigroup";
    case SubsetPredicate::kLeftRooted: return "left_rooted";
    case SubsetPredicate::kRightRooted: return "right_rooted";
    case SubsetPredicate::kRooted: return "rooted";
    case SubsetPredicate::kQuasiRooted: return "quasi_rooted";
    case SubsetPredicate::kPositiveRooted: return "positive_rooted";
    case SubsetPredicate::kHereditary: return "hereditary";
    case SubsetPredicate::kPositiveHereditary: return "positive_hereditary";
    case SubsetPredicate::kBiHereditary: return "bi_hereditary";
  }
  return "?";
}

Bitset sqrt_of(const StarSemigroup& s, const Bitset& t) {
  Bitset r;
  for (int x = 0; x < s.n(); ++x)
    if (t.test(s.prod(s.star(x), x))) r.set(x);
  return r;
}

Bitset t_squared(const StarSemigroup& s, const Bitset& t) {
  Bitset r;
  t.for_each([&](int x) { r.set(s.prod(s.star(x), x)); });
  return r;
}

Bitset positive_part(const StarSemigroup& s, const Bitset& t) {
  Bitset pos;
  for (int x = 0; x < s.n(); ++x) pos.set(s.prod(s.star(x), x));
  return t & pos;
}

Bitset star_image(const StarSemigroup& s, const Bitset& t) {
  Bitset r;
  t.for_each([&](int x) { r.set(s.star(x)); });
  return r;
}

Bitset sa_part(const StarSemigroup& s, const Bitset& t) {
  return t & star_image(s, t);
}

namespace {

bool is_subsemigroup(const StarSemigroup& s, const Bitset& t) {
  bool ok = true;
  t.for_each([&](int a) {
    if (!ok) return;
    t.for_each([&](int b) {
      if (!t.test(s.prod(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_left_ideal(const StarSemigroup& s, const Bitset& t) {
  for (int x = 0; x < s.n(); ++x) {
    bool ok = true;
    t.for_each([&](int a) {
      if (!t.test(s.prod(x, a))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

bool is_right_ideal(const StarSemigroup& s, const Bitset& t) {
  for (int x = 0; x < s.n(); ++x) {
    bool ok = true;
    t.for_each([&](int a) {
      if (!t.test(s.prod(a, x))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

Bitset left_products(const StarSemigroup& s, const Bitset& t) {  // ST
  Bitset r;
  for (int x = 0; x < s.n(); ++x)
    t.for_each([&](int a) { r.set(s.prod(x, a)); });
  return r;
}

Bitset right_products(const StarSemigroup& s, const Bitset& t) {  // TS
  Bitset r;
  for (int x = 0; x < s.n(); ++x)
    t.for_each([&](int a) { r.set(s.prod(a, x)); });
  return r;
}

}  // namespace

bool holds(const StarSemigroup& s, SubsetPredicate p, const Bitset& t) {
  switch (p) {
    case SubsetPredicate::kSubsemigroup:
      return is_subsemigroup(s, t);
    case SubsetPredicate::kLeftIdeal:
      return is_left_ideal(s, t);
    case SubsetPredicate::kRightIdeal:
      return is_right_ideal(s, t);
    case SubsetPredicate::kIdeal:
      return is_left_ideal(s, t) && is_right_ideal(s, t);
    case SubsetPredicate::kQuasiIdeal:
      return is_subsemigroup(s, t) &&
             (right_products(s, t) & left_products(s, t)).is_subset_of(t);
    case SubsetPredicate::kBiIdeal: {
      if (!is_subsemigroup(s, t)) return false;
      bool ok = true;
      t.for_each([&](int a) {
        if (!ok) return;
        for (int x = 0; x < s.n() && ok; ++x) {
          const int ax = s.prod(a, x);
          t.for_each([&](int b) {
            if (!t.test(s.prod(ax, b))) ok = false;
          });
        }
      });
      return ok;
    }
    case SubsetPredicate::kSelfAdjoint:
      return t == star_image(s, t);
    case SubsetPredicate::kStarSubsemigroup:
      return t == star_image(s, t) && is_subsemigroup(s, t);
    case SubsetPredicate::kLeftRooted:
      return sqrt_of(s, t).is_subset_of(t);
    case SubsetPredicate::kRightRooted:
      return star_image(s, sqrt_of(s, t)).is_subset_of(t);
    case SubsetPredicate::kRooted: {
      Bitset rt = sqrt_of(s, t);
      return rt.is_subset_of(t) && star_image(s, rt).is_subset_of(t);
    }
    case SubsetPredicate::kQuasiRooted: {
      Bitset rt = sqrt_of(s, t);
      return (rt & star_image(s, rt)).is_subset_of(t);
    }
    case SubsetPredicate::kPositiveRooted:
      return positive_part(s, sqrt_of(s, t)).is_subset_of(t);
    case SubsetPredicate::kHereditary: {
      for (int x = 0; x < s.n(); ++x) {
        if (!t.test(s.prod(s.star(x), x))) continue;
        for (int u = 0; u < s.n(); ++u)
          if (!t.test(s.prod_n(s.star(x), u, x))) return false;
      }
      return true;
    }
    case SubsetPredicate::kPositiveHereditary: {
      Bitset pos = positive_part(s, Bitset::universe(s.n()));
      for (int x = 0; x < s.n(); ++x) {
        if (!t.test(s.prod(s.star(x), x))) continue;
        bool ok = true;
        pos.for_each([&](int u) {
          if (!t.test(s.prod_n(s.star(x), u, x))) ok = false;
        });
        if (!ok) return false;
      }
      return true;
    }
    case SubsetPredicate::kBiHereditary: {
      Bitset pos = positive_part(s, Bitset::universe(s.n()));
      Bitset tp = t & pos;
      bool ok = true;
      tp.for_each([&](int x) {
        if (!ok) return;
        pos.for_each([&](int u) {
          if (!t.test(s.prod_n(x, u, x))) ok = false;
        });
      });
      return ok;
    }
  }
  return false;
}

namespace {

// Smallest left rooted left ideal containing the seed: alternate closure
// under left multiplication and sqrt until a fixpoint.
Bitset left_rooted_left_ideal_closure(const StarSemigroup& s, Bitset t) {
  for (;;) {
    Bitset grown = t | left_products(s, t) | sqrt_of(s, t);
    if (grown == t) return t;
    t = grown;
  }
}

}  // namespace

std::vector<Bitset> sample_left_rooted_left_ideals(const StarSemigroup& s,
                                                   int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Bitset> out;
  out.insert(Bitset::single(s.zero()) |
             left_rooted_left_ideal_closure(s, Bitset::single(s.zero())));
  out.insert(left_rooted_left_ideal_closure(s, Bitset::universe(s.n())));
  int attempts = 0;
  while (static_cast<int>(out.size()) < count && attempts < count * 8) {
    ++attempts;
    Bitset seed_set = Bitset::single(s.zero());
    int picks = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < picks; ++i)
      seed_set.set(static_cast<int>(rng() % s.n()));
    out.insert(left_rooted_left_ideal_closure(s, seed_set));
  }
  return {out.begin(), out.end()};
}

std::vector<Bitset> enumerate_with(const StarSemigroup& s, SubsetPredicate p,
                                   const EnumerateOptions& opts) {
  std::vector<Bitset> out;
  if (opts.exhaustive) {
    if (s.n() > kExhaustiveSubsetCap)
      throw CapExceeded("enumerate_with: exhaustive mode requires n <= 16");
    const uint64_t limit = uint64_t{1} << s.n();
    for (uint64_t mask = 0; mask < limit; ++mask) {
      Bitset t = Bitset::from_mask(mask);
      if (holds(s, p, t)) out.push_back(t);
    }
    return out;  // ascending mask order is the canonical order
  }
  std::mt19937_64 rng(opts.seed);
  std::set<Bitset> seen;
  for (int i = 0; i < opts.sample_count; ++i) {
    Bitset t;
    t.set(s.zero());
    int picks = static_cast<int>(rng() % 4);
    for (int j = 0; j < picks; ++j) t.set(static_cast<int>(rng() % s.n()));
    if (holds(s, p, t)) seen.insert(t);
  }
  return {seen.begin(), seen.end()};
}

namespace {

struct Families {
  std::vector<Bitset> left;   // family A
  std::vector<Bitset> right;  // family B
  bool exhaustive = true;
  int sample_count = 0;
};

// Enumerates both families of a correspondence; subsets range over masks
// containing 0.
Families correspondence_families(const StarSemigroup& s,
                                 const EnumerateOptions& opts,
                                 bool right_is_positive_side) {
  Families f;
  if (opts.exhaustive && s.n() <= kExhaustiveSubsetCap) {
    const uint64_t limit = uint64_t{1} << s.n();
    const uint64_t zbit = uint64_t{1} << s.zero();
    for (uint64_t mask = 0; mask < limit; ++mask) {
      if (!(mask & zbit)) continue;
      Bitset t = Bitset::from_mask(mask);
      if (holds(s, SubsetPredicate::kLeftRooted, t) &&
          holds(s, SubsetPredicate::kLeftIdeal, t))
        f.left.push_back(t);
      if (right_is_positive_side) {
        if (t.is_subset_of(positive_part(s, Bitset::universe(s.n()))) &&
            holds(s, SubsetPredicate::kPositiveRooted, t) &&
            holds(s, SubsetPredicate::kPositiveHereditary, t))
          f.right.push_back(t);
      } else {
        if (holds(s, SubsetPredicate::kQuasiRooted, t) &&
            holds(s, SubsetPredicate::kHereditary, t) &&
            holds(s, SubsetPredicate::kStarSubsemigroup, t))
          f.right.push_back(t);
      }
    }
    return f;
  }
  if (opts.exhaustive)
    throw CapExceeded("correspondence: exhaustive mode requires n <= 16");
  f.exhaustive = false;
  auto ideals = sample_left_rooted_left_ideals(s, opts.sample_count, opts.seed);
  f.sample_count = static_cast<int>(ideals.size());
  std::set<Bitset> right;
  for (const auto& i : ideals) {
    f.left.push_back(i);
    right.insert(right_is_positive_side ? positive_part(s, i) : sa_part(s, i));
  }
  f.right.assign(right.begin(), right.end());
  return f;
}

bool contains(const std::vector<Bitset>& family, const Bitset& t) {
  return std::binary_search(family.begin(), family.end(), t);
}

BijectionReport run_correspondence(const StarSemigroup& s,
                                   const EnumerateOptions& opts,
                                   bool positive_side) {
  Families f = correspondence_families(s, opts, positive_side);
  std::sort(f.left.begin(), f.left.end());
  std::sort(f.right.begin(), f.right.end());
  BijectionReport rep;
  rep.exhaustive = f.exhaustive;
  rep.sample_count = f.sample_count;
  rep.size_left = static_cast<int>(f.left.size());
  rep.size_right = static_cast<int>(f.right.size());
  auto fwd = [&](const Bitset& i) {
    return positive_side ? positive_part(s, i) : sa_part(s, i);
  };
  for (const auto& i : f.left) {
    Bitset img = fwd(i);
    if (f.exhaustive && !contains(f.right, img)) {
      rep.failure = "forward image not in the right-hand family";
      rep.witness = i;
      return rep;
    }
    if (positive_side && img != t_squared(s, i)) {
      rep.failure = "I_+ differs from I^2 on a left rooted left ideal";
      rep.witness = i;
      return rep;
    }
    if (sqrt_of(s, img) != i) {
      rep.failure = "sqrt does not invert the forward map";
      rep.witness = i;
      return rep;
    }
  }
  for (const auto& j : f.right) {
    Bitset pre = sqrt_of(s, j);
    if (f.exhaustive && !contains(f.left, pre)) {
      rep.failure = "sqrt image not a left rooted left ideal";
      rep.witness = j;
      return rep;
    }
    if (fwd(pre) != j) {
      rep.failure = "forward map does not invert sqrt";
      rep.witness = j;
      return rep;
    }
    if (!positive_side && !holds(s, SubsetPredicate::kQuasiIdeal, j)) {
      rep.failure = "quasi-rooted hereditary *-subsemigroup not a quasi-ideal";
      rep.witness = j;
      return rep;
    }
  }
  // Order preservation both ways.
  for (const auto& i : f.left)
    for (const auto& j : f.left) {
      const bool lhs = i.is_subset_of(j);
      const bool rhs = fwd(i).is_subset_of(fwd(j));
      if (lhs != rhs) {
        rep.failure = "forward map is not an order isomorphism";
        rep.witness = i;
        return rep;
      }
    }
  rep.ok = true;
  return rep;
}

}  // namespace

BijectionReport correspondence_rooted_ideals(const StarSemigroup& s,
                                             const EnumerateOptions& opts) {
  return run_correspondence(s, opts, /*positive_side=*/true);
}

BijectionReport correspondence_hereditary(const StarSemigroup& s,
                                          const EnumerateOptions& opts) {
  return run_correspondence(s, opts, /*positive_side=*/false);
}

PospartResult pospart_inclusion_check(const StarSemigroup& s,
                                      const EnumerateOptions& opts) {
  PospartResult res;
  auto check_family = [&](const std::vector<Bitset>& family) {
    for (const auto& i : family)
      for (const auto& j : family) {
        const bool incl = i.is_subset_of(j);
        const bool pos = positive_part(s, i).is_subset_of(positive_part(s, j));
        if (incl != pos) {
          res.ok = false;
          res.witness_i = i;
          res.witness_j = j;
          return;
        }
      }
  };
  Families rooted = correspondence_families(s, opts, true);
  check_family(rooted.left);
  if (!res.ok) return res;
  // Quasi-rooted *-subsemigroups form the second family of the claim.
  std::vector<Bitset> quasi;
  if (opts.exhaustive && s.n() <= kExhaustiveSubsetCap) {
    const uint64_t limit = uint64_t{1} << s.n();
    for (uint64_t mask = 0; mask < limit; ++mask) {
      Bitset t = Bitset::from_mask(mask);
      if (t.test(s.zero()) && holds(s, SubsetPredicate::kQuasiRooted, t) &&
          holds(s, SubsetPredicate::kStarSubsemigroup, t))
        quasi.push_back(t);
    }
  } else {
    for (const auto& i : rooted.left) quasi.push_back(sa_part(s, i));
  }
  check_family(quasi);
  return res;
}

}  // namespace starlab
