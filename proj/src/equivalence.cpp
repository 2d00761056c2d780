#include "starlab/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace starlab {

namespace {

Bitset right_translate(const StarSemigroup& sg, const Bitset& x, int s) {
  Bitset out;
  x.for_each([&](int a) { out.set(sg.prod(a, s)); });
  return out;
}

// img[a][s] = lattice index of (A s)^perp perp for member a, element s;
// the pairwise sweeps that translate members reuse this table.
std::vector<std::vector<int>> translate_closure_table(
    const EquivContext& ctx) {
  const StarSemigroup& sg = ctx.semigroup();
  const auto& perp = ctx.perp();
  std::vector<std::vector<int>> img(perp.size(),
                                    std::vector<int>(sg.n(), -1));
#pragma omp parallel for schedule(static) if (sg.n() >= 64)
  for (int a = 0; a < perp.size(); ++a)
    for (int s = 0; s < sg.n(); ++s)
      img[a][s] = perp.require(perp.polar_of(
          perp.polar_of(right_translate(sg, perp.set(a), s))));
  return img;
}

}  // namespace

EquivContext::EquivContext(StarSemigroup sem, int closure_cap)
    : sg_(std::move(sem)),
      proper_(is_proper(sg_).proper),
      perp_(closed_lattice(sg_, RelKind::kPerp, closure_cap,
                           /*require_axioms=*/false)),
      nabla_(closed_lattice(sg_, RelKind::kNabla, closure_cap,
                            /*require_axioms=*/false)) {
  const StarSemigroup& s = sg_;
  const int n = s.n();
  const int m = perp_.size();
  cl_.resize(n);
  cl_star_.resize(n);
  for (int x = 0; x < n; ++x) {
    cl_[x] = perp_.require(perp_.polar_of(perp_.relation().rows[x]));
  }
  for (int x = 0; x < n; ++x) cl_star_[x] = cl_[s.star(x)];
  sim_w_.assign(static_cast<size_t>(m) * m, -1);
  for (int x = 0; x < n; ++x) {
    int& slot = sim_w_[cl_[x] * m + cl_star_[x]];
    if (slot < 0) slot = x;
  }
  npolar_.reserve(m);
  for (int i = 0; i < m; ++i)
    npolar_.push_back(polar(nabla_.relation(), perp_.set(i)));
  for (const auto& t : nabla_.sets()) {
    int i = perp_.find(t);
    if (i >= 0) nabla_in_perp_.push_back(i);
  }
  reflexive_ = true;
  for (int i = 0; i < m; ++i)
    if (sim_w_[i * m + i] < 0) reflexive_ = false;
  ElementClasses classes = classify_elements(s);
  positives_ = classes.positives;
  projections_ = classes.projections;
}

bool EquivContext::subequiv(int a, int b) const {
  for (int c = 0; c < perp_.size(); ++c)
    if (perp_.leq(c, b) && sim(a, c)) return true;
  return false;
}

std::optional<EquivWitness> EquivContext::sim_witness_struct(int a,
                                                             int b) const {
  int w = sim_witness(a, b);
  if (w < 0) return std::nullopt;
  return EquivWitness{w, perp_.set(a), perp_.set(b)};
}

std::optional<EquivWitness> EquivContext::subequiv_witness(int a,
                                                           int b) const {
  for (int c = 0; c < perp_.size(); ++c)
    if (perp_.leq(c, b) && sim(a, c)) return sim_witness_struct(a, c);
  return std::nullopt;
}

Bitset element_closure(const EquivContext& ctx, int s) {
  return ctx.perp().set(ctx.cl(s));
}

ReflexivityResult reflexivity_check(const EquivContext& ctx) {
  if (!ctx.proper())
    return {CheckResult::gate("semigroup is not proper"), false};
  const auto& perp = ctx.perp();
  std::set<Bitset> singleton_polars;
  for (int x = 0; x < ctx.semigroup().n(); ++x)
    singleton_polars.insert(perp.polar_of(Bitset::single(x)));
  std::set<Bitset> family(perp.sets().begin(), perp.sets().end());
  const bool every_polar = singleton_polars == family;
  if (every_polar != ctx.reflexive())
    return {CheckResult::fail(
                "reflexivity is not equivalent to the singleton-polar "
                "description of the lattice"),
            ctx.reflexive()};
  return {CheckResult::pass(), ctx.reflexive()};
}

CheckResult transitivity_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  const int m = ctx.lattice_size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (ctx.sim(a, b))
        for (int c = 0; c < m; ++c)
          if (ctx.sim(b, c) && !ctx.sim(a, c))
            return CheckResult::fail("~ not transitive at (" +
                                     std::to_string(a) + "," +
                                     std::to_string(b) + "," +
                                     std::to_string(c) + ")");
      if (ctx.subequiv(a, b))
        for (int c = 0; c < m; ++c)
          if (ctx.subequiv(b, c) && !ctx.subequiv(a, c))
            return CheckResult::fail("<~ not transitive at (" +
                                     std::to_string(a) + "," +
                                     std::to_string(b) + "," +
                                     std::to_string(c) + ")");
    }
  return CheckResult::pass();
}

CheckResult closure_translation_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  const StarSemigroup& sg = ctx.semigroup();
  const auto& perp = ctx.perp();
  const int n = sg.n();
  const auto img = translate_closure_table(ctx);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (ctx.cl(sg.prod(a, b)) != img[ctx.cl(a)][b])
        return CheckResult::fail("{ab}^pp != ({a}^pp b)^pp at a=" +
                                 std::to_string(a) + " b=" +
                                 std::to_string(b));
      if (perp.leq(ctx.cl(a), ctx.cl_star(b))) {
        const int ba = sg.prod(sg.star(b), sg.star(a));
        if (ctx.cl(ba) != ctx.cl_star(a))
          return CheckResult::fail("{b*a*}^pp != {a*}^pp at a=" +
                                   std::to_string(a) + " b=" +
                                   std::to_string(b));
      }
    }
  }
  return CheckResult::pass();
}

std::optional<int> mvn(const StarSemigroup& s, int p, int q) {
  for (int x = 0; x < s.n(); ++x)
    if (s.prod(s.star(x), x) == p && s.prod(x, s.star(x)) == q) return x;
  return std::nullopt;
}

namespace {

bool has_polar_decomposition(const StarSemigroup& s, std::string* failing) {
  for (int a = 0; a < s.n(); ++a) {
    const int aa = s.prod(s.star(a), a);
    bool found = false;
    for (int b = 0; b < s.n() && !found; ++b) {
      if (s.star(b) != b || s.prod(b, b) != aa) continue;
      for (int x = 0; x < s.n(); ++x)
        if (s.prod(x, b) == a) {
          found = true;
          break;
        }
    }
    if (!found) {
      if (failing) *failing = "polar decomposition fails at a=" + std::to_string(a);
      return false;
    }
  }
  return true;
}

// Perp-cancellativity says elements with equal polars have nested
// left-multiplication kernels: as = at => bs = bt.  Checking that the
// kernel partition of a refines the one of b is O(n) per pair.
bool perp_cancellative(const EquivContext& ctx, std::string* failing) {
  const StarSemigroup& sg = ctx.semigroup();
  const int n = sg.n();
  const auto& rows = ctx.perp().relation().rows;
  std::vector<int> expected(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (rows[a] != rows[b]) continue;
      std::fill(expected.begin(), expected.end(), -1);
      for (int s = 0; s < n; ++s) {
        const int key = sg.prod(a, s);
        const int val = sg.prod(b, s);
        if (expected[key] < 0) {
          expected[key] = val;
        } else if (expected[key] != val) {
          if (failing)
            *failing = "perp-cancellativity fails at a=" + std::to_string(a) +
                       " b=" + std::to_string(b) + " s=" + std::to_string(s);
          return false;
        }
      }
    }
  return true;
}

bool proj_closure_injective(const EquivContext& ctx, std::string* failing) {
  std::vector<int> projs = ctx.projections().to_indices();
  for (size_t i = 0; i < projs.size(); ++i)
    for (size_t j = i + 1; j < projs.size(); ++j)
      if (ctx.cl(projs[i]) == ctx.cl(projs[j])) {
        if (failing)
          *failing = "projection closure collides at p=" +
                     std::to_string(projs[i]) + " q=" +
                     std::to_string(projs[j]);
        return false;
      }
  return true;
}

}  // namespace

CheckResult mvn_vs_sim_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  const StarSemigroup& sg = ctx.semigroup();
  std::string why;
  std::vector<std::string> unmet;
  if (!has_polar_decomposition(sg, &why)) unmet.push_back(why);
  if (!perp_cancellative(ctx, &why)) unmet.push_back(why);
  if (!proj_closure_injective(ctx, &why)) unmet.push_back(why);
  if (!unmet.empty()) {
    std::string all;
    for (const auto& u : unmet) all += (all.empty() ? "" : "; ") + u;
    return CheckResult::gate(all);
  }
  std::vector<int> projs = ctx.projections().to_indices();
  for (int p : projs)
    for (int q : projs) {
      const bool mvn_eq = mvn(sg, p, q).has_value();
      const bool sim_eq = ctx.sim(ctx.cl(p), ctx.cl(q));
      if (mvn_eq != sim_eq)
        return CheckResult::fail("MvN and ~ disagree at p=" +
                                 std::to_string(p) + " q=" +
                                 std::to_string(q));
    }
  CheckResult res = CheckResult::pass();
  res.detail = "all three hypotheses hold; " +
               std::to_string(projs.size() * projs.size()) +
               " projection pairs agree";
  return res;
}

std::optional<int> perspective(const PolarLattice& lat, int a, int b) {
  for (int r = 0; r < lat.size(); ++r)
    if (lat.meet(a, r) == lat.bottom() && lat.meet(b, r) == lat.bottom() &&
        lat.join(a, r) == lat.top() && lat.join(b, r) == lat.top())
      return r;
  return std::nullopt;
}

CheckResult perspectivity_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  const int m = ctx.lattice_size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (perspective(ctx.perp(), a, b) && !ctx.sim(a, b))
        return CheckResult::fail("perspective members not ~ at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
  return CheckResult::pass();
}

CheckResult complementary_pair_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  const StarSemigroup& sg = ctx.semigroup();
  const auto& perp = ctx.perp();
  for (int a = 0; a < sg.n(); ++a)
    for (int b = 0; b < sg.n(); ++b) {
      const int ca = ctx.cl(a), cb = ctx.cl(b);
      if (perp.meet(perp.ortho(ca), cb) == perp.bottom() &&
          perp.meet(ca, perp.ortho(cb)) == perp.bottom() &&
          !ctx.sim(ca, cb))
        return CheckResult::fail("complementary pair not ~ at a=" +
                                 std::to_string(a) + " b=" +
                                 std::to_string(b));
    }
  return CheckResult::pass();
}

bool sim_finite(const EquivContext& ctx, int a) {
  for (int b = 0; b < ctx.lattice_size(); ++b)
    if (ctx.perp().leq(b, a) && b != a && ctx.sim(a, b)) return false;
  return true;
}

bool nabla_finite(const EquivContext& ctx, int a) {
  for (int b = 0; b < ctx.lattice_size(); ++b)
    if (ctx.perp().leq(b, a) && b != a && ctx.npolar(b) == ctx.npolar(a))
      return false;
  return true;
}

namespace {

// Pairwise-orthogonal families (cliques in the orthogonality relation) of
// bounded size; enumeration is cheap because orthogonal pairs are scarce.
void orthogonal_families(const EquivContext& ctx, bool use_nabla,
                         int max_size, size_t budget,
                         std::vector<std::vector<int>>* out) {
  const int m = ctx.lattice_size();
  auto orth = [&](int a, int b) {
    return use_nabla ? (ctx.nabla_orthogonal(a, b) && ctx.nabla_orthogonal(b, a))
                     : (ctx.orthogonal(a, b) && ctx.orthogonal(b, a));
  };
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int from) {
    if (out->size() >= budget) return;
    if (cur.size() >= 2) out->push_back(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int next = from; next < m; ++next) {
      bool fits = true;
      for (int x : cur)
        if (!orth(x, next)) {
          fits = false;
          break;
        }
      if (!fits) continue;
      cur.push_back(next);
      extend(next + 1);
      cur.pop_back();
    }
  };
  extend(0);
}

// Observed quadruple additivity of ~; an empty return means it holds,
// otherwise the first violating quadruple is described.
std::string quadruple_additivity(const EquivContext& ctx, bool use_nabla) {
  const int m = ctx.lattice_size();
  auto orth = [&](int a, int b) {
    return use_nabla ? ctx.nabla_orthogonal(a, b) : ctx.orthogonal(a, b);
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!orth(a, b)) continue;
      for (int c = 0; c < m; ++c) {
        if (!ctx.sim(a, c)) continue;
        for (int d = 0; d < m; ++d) {
          if (!orth(c, d) || !ctx.sim(b, d)) continue;
          if (!ctx.sim(ctx.perp().join(a, b), ctx.perp().join(c, d)))
            return "(" + std::to_string(a) + "," + std::to_string(b) +
                   ")~(" + std::to_string(c) + "," + std::to_string(d) + ")";
        }
      }
    }
  return "";
}

// Matched orthogonal families of size <= 4: pairwise additivity must
// already force sup(F) ~ sup(G) along any member-wise ~ bijection.
CheckResult completeness_lemma(const EquivContext& ctx, bool use_nabla) {
  std::vector<std::vector<int>> fams;
  orthogonal_families(ctx, use_nabla, 4, 4000, &fams);
  for (const auto& f : fams)
    for (const auto& g : fams) {
      if (f.size() != g.size()) continue;
      std::vector<int> perm(g);
      std::sort(perm.begin(), perm.end());
      do {
        bool matched = true;
        for (size_t i = 0; i < f.size() && matched; ++i)
          if (!ctx.sim(f[i], perm[i])) matched = false;
        if (matched &&
            !ctx.sim(ctx.perp().sup(f), ctx.perp().sup(perm)))
          return CheckResult::fail(
              "matched orthogonal families with non-equivalent sups");
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return CheckResult::pass();
}

}  // namespace

AdditivityReport additivity_checks(const EquivContext& ctx) {
  AdditivityReport rep;
  if (!ctx.proper()) {
    CheckResult g = CheckResult::gate("semigroup is not proper");
    rep.completeness_lemma_perp = g;
    rep.completeness_lemma_nabla = g;
  } else {
    rep.perp_witness = quadruple_additivity(ctx, false);
    rep.nabla_witness = quadruple_additivity(ctx, true);
    rep.perp_additive = rep.perp_witness.empty();
    rep.nabla_additive = rep.nabla_witness.empty();
    rep.completeness_lemma_perp =
        rep.perp_additive ? completeness_lemma(ctx, false)
                          : CheckResult::gate("~ is not perp-additive");
    rep.completeness_lemma_nabla =
        rep.nabla_additive ? completeness_lemma(ctx, true)
                           : CheckResult::gate("~ is not nabla-additive");
  }

  const StarSemigroup& sg = ctx.semigroup();
  if (!sg.has_ring()) {
    CheckResult g = CheckResult::gate("no ring extension");
    rep.sum_rule = rep.perp_cancellative = rep.proj_closure_injective = g;
    rep.ring_route = g;
    return rep;
  }

  // Raw sweeps; guaranteed only on proper rings, so on a non-proper ring
  // the observed outcome is reported inside a gated result.
  rep.sum_rule = CheckResult::pass();
  const auto& rows = ctx.perp().relation().rows;
  const int n = sg.n();
  for (int a = 0; a < n && rep.sum_rule.ok(); ++a)
    for (int b = 0; b < n; ++b) {
      if (sg.prod(sg.star(a), b) != sg.zero()) continue;  // needs a*b = 0
      const int sum = sg.add(a, b);
      if (rows[sum] != (rows[a] & rows[b])) {
        rep.sum_rule = CheckResult::fail(
            "{a+b}^perp != {a}^perp cap {b}^perp at a=" + std::to_string(a) +
            " b=" + std::to_string(b));
        break;
      }
      const Bitset join = ctx.perp().set(
          ctx.perp().join(ctx.cl(a), ctx.cl(b)));
      if (ctx.perp().set(ctx.cl(sum)) != join) {
        rep.sum_rule = CheckResult::fail(
            "{a+b}^pp != {a}^pp v {b}^pp at a=" + std::to_string(a) +
            " b=" + std::to_string(b));
        break;
      }
    }
  std::string why;
  rep.perp_cancellative = perp_cancellative(ctx, &why)
                              ? CheckResult::pass()
                              : CheckResult::fail(why);
  rep.proj_closure_injective = proj_closure_injective(ctx, &why)
                                   ? CheckResult::pass()
                                   : CheckResult::fail(why);
  if (!ctx.proper()) {
    auto demote = [](CheckResult& r) {
      r = CheckResult::gate("ring is not proper; observed: " +
                            (r.ok() ? std::string("holds") : r.detail));
    };
    demote(rep.sum_rule);
    demote(rep.perp_cancellative);
    demote(rep.proj_closure_injective);
    rep.ring_route = CheckResult::gate(
        "ring is not proper; the additivity guarantees do not apply");
  } else if (rep.sum_rule.ok() && rep.perp_cancellative.ok() &&
             rep.proj_closure_injective.ok() && rep.perp_additive) {
    rep.ring_route = CheckResult::pass();
  } else {
    rep.ring_route = CheckResult::fail(
        "a ring-route clause fails on a proper *-ring" +
        (rep.perp_additive ? std::string()
                           : ": ~ not perp-additive at " + rep.perp_witness));
  }
  return rep;
}

CheckResult sup_preservation_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  const StarSemigroup& sg = ctx.semigroup();
  const auto& perp = ctx.perp();
  const int m = perp.size();
  const auto img = translate_closure_table(ctx);
  auto image = [&](int a, int s) { return img[a][s]; };
  const int max_family = m > 16 ? 3 : 4;
  std::vector<std::vector<int>> fams;
  for (int i = 0; i < m; ++i) fams.push_back({i});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) fams.push_back({i, j});
  if (max_family >= 3)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = j + 1; k < m; ++k) {
          fams.push_back({i, j, k});
          if (max_family >= 4)
            for (int l = k + 1; l < m; ++l) fams.push_back({i, j, k, l});
        }
  for (int s = 0; s < sg.n(); ++s)
    for (const auto& f : fams) {
      std::vector<int> images;
      images.reserve(f.size());
      for (int a : f) images.push_back(image(a, s));
      if (image(perp.sup(f), s) != perp.sup(images))
        return CheckResult::fail("(sup F)s closure differs from sup of "
                                 "images at s=" + std::to_string(s));
    }
  return CheckResult::pass();
}

CheckResult division_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  const StarSemigroup& sg = ctx.semigroup();
  const auto& perp = ctx.perp();
  const int m = perp.size();
  const auto img = translate_closure_table(ctx);
  std::vector<std::vector<int>> fams;
  for (int i = 0; i < m; ++i) fams.push_back({i});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) fams.push_back({i, j});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) fams.push_back({i, j, k});
  for (const auto& f : fams) {
    const int v = perp.sup(f);
    // Witnesses of sup(F) ~ B have {s*}^pp = sup(F), {s}^pp = B.
    for (int s = 0; s < sg.n(); ++s) {
      if (ctx.cl_star(s) != v) continue;
      const int b = ctx.cl(s);
      std::vector<int> images;
      images.reserve(f.size());
      bool ok = true;
      for (int a : f) {
        const int fa = img[a][s];
        images.push_back(fa);
        if (!ctx.sim(a, fa)) {
          ok = false;
          break;
        }
      }
      if (!ok || perp.sup(images) != b)
        return CheckResult::fail("division along s=" + std::to_string(s) +
                                 " fails for sup(F)=" + std::to_string(v));
    }
  }
  return CheckResult::pass();
}

CheckResult nabla_monotonicity_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  const int m = ctx.lattice_size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (ctx.subequiv(a, b) && !ctx.npolar(b).is_subset_of(ctx.npolar(a)))
        return CheckResult::fail("A <~ B without B^nabla <= A^nabla at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
      if (ctx.sim(a, b) && ctx.npolar(a) != ctx.npolar(b))
        return CheckResult::fail("A ~ B with different nabla polars at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
    }
  return CheckResult::pass();
}

CheckResult central_localization_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  const auto& perp = ctx.perp();
  const int m = perp.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const bool s = ctx.sim(a, b);
      const bool q = ctx.subequiv(a, b);
      if (!s && !q) continue;
      for (int i : ctx.nabla_members_in_perp()) {
        const int ai = perp.meet(a, i);
        const int bi = perp.meet(b, i);
        if (s && !ctx.sim(ai, bi))
          return CheckResult::fail("~ does not localize at I = " +
                                   perp.set(i).to_string());
        if (q && !ctx.subequiv(ai, bi))
          return CheckResult::fail("<~ does not localize at I = " +
                                   perp.set(i).to_string());
      }
    }
  return CheckResult::pass();
}

CheckResult csb_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  if (!quadruple_additivity(ctx, false).empty())
    return CheckResult::gate("~ is not perp-additive");
  const int m = ctx.lattice_size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (ctx.subequiv(a, b) && ctx.subequiv(b, a) && !ctx.sim(a, b))
        return CheckResult::fail("A <~ B <~ A without A ~ B at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
  return CheckResult::pass();
}

std::optional<ComparabilityCertificate> comparability_certificate(const EquivContext& ctx,
                                               int a, int b) {
  const auto& perp = ctx.perp();
  for (int i : ctx.nabla_members_in_perp()) {
    const int ic = perp.ortho(i);
    auto left = ctx.subequiv_witness(perp.meet(a, i), perp.meet(b, i));
    if (!left) continue;
    auto right = ctx.subequiv_witness(perp.meet(b, ic), perp.meet(a, ic));
    if (!right) continue;
    return ComparabilityCertificate{perp.set(i), *left, *right};
  }
  return std::nullopt;
}

CheckResult comparability_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  if (!quadruple_additivity(ctx, false).empty())
    return CheckResult::gate("~ is not perp-additive");
  const int m = ctx.lattice_size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (!comparability_certificate(ctx, a, b))
        return CheckResult::fail("no comparability certificate for (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
  return CheckResult::pass();
}

namespace {

// Relative ~ inside a sub-*-semigroup, over the relative perp lattice.
struct RelativeSim {
  PolarLattice lat;
  std::vector<int> cl, cl_star;  // indexed by ambient element, -1 outside
  std::vector<char> sim;         // lat.size()^2

  bool related(int a, int b) const {
    return sim[a * lat.size() + b] != 0;
  }
};

RelativeSim relative_sim(const StarSemigroup& sg, const Bitset& members) {
  RelativeSim rs{relative_lattice(sg, members, RelKind::kPerp,
                                  kClosureCapDefault,
                                  /*require_axioms=*/false),
                 {}, {}, {}};
  rs.cl.assign(sg.n(), -1);
  rs.cl_star.assign(sg.n(), -1);
  members.for_each([&](int x) {
    rs.cl[x] = rs.lat.require(
        rs.lat.polar_of(rs.lat.polar_of(Bitset::single(x))));
  });
  members.for_each([&](int x) { rs.cl_star[x] = rs.cl[sg.star(x)]; });
  rs.sim.assign(static_cast<size_t>(rs.lat.size()) * rs.lat.size(), 0);
  members.for_each([&](int x) {
    rs.sim[rs.cl[x] * rs.lat.size() + rs.cl_star[x]] = 1;
  });
  return rs;
}

}  // namespace

CheckResult restriction_checks(const EquivContext& ctx,
                               const SubsetSample& sample) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  const StarSemigroup& sg = ctx.semigroup();
  const auto& perp = ctx.perp();

  // ~_A = ~ restricted, for every annihilator A.
  for (int a = 0; a < perp.size(); ++a) {
    RelativeSim rs = relative_sim(sg, perp.set(a));
    for (int i = 0; i < rs.lat.size(); ++i)
      for (int j = 0; j < rs.lat.size(); ++j) {
        const int gi = perp.find(rs.lat.set(i));
        const int gj = perp.find(rs.lat.set(j));
        if (gi < 0 || gj < 0)
          return CheckResult::fail("relative annihilator of " +
                                   perp.set(a).to_string() +
                                   " is not an ambient annihilator");
        if (rs.related(i, j) != ctx.sim(gi, gj))
          return CheckResult::fail("~ restricted to " +
                                   perp.set(a).to_string() +
                                   " differs from ~_A");
      }
  }

  // Along self-adjoint bi-ideals whose traces stay closed and whose
  // relative ~ is reflexive: B ~_I C iff the closures are ~.
  for (const auto& i : self_adjoint_bi_ideals(sg, sample)) {
    RelativeSim rs = relative_sim(sg, i);
    bool traces_closed = true;
    for (int a = 0; a < perp.size() && traces_closed; ++a)
      if (rs.lat.find(perp.set(a) & i) < 0) traces_closed = false;
    if (!traces_closed) continue;
    bool rel_reflexive = true;
    for (int b = 0; b < rs.lat.size() && rel_reflexive; ++b)
      if (!rs.related(b, b)) rel_reflexive = false;
    if (!rel_reflexive) continue;
    for (int b = 0; b < rs.lat.size(); ++b)
      for (int c = 0; c < rs.lat.size(); ++c) {
        const int gb = perp.require(
            perp.polar_of(perp.polar_of(rs.lat.set(b))));
        const int gc = perp.require(
            perp.polar_of(perp.polar_of(rs.lat.set(c))));
        if (rs.related(b, c) != ctx.sim(gb, gc))
          return CheckResult::fail("~_I and closure-~ disagree along I = " +
                                   i.to_string());
      }
  }
  return CheckResult::pass();
}

CheckResult modularity_theorem_check(const EquivContext& ctx) {
  if (!ctx.proper()) return CheckResult::gate("semigroup is not proper");
  if (!ctx.reflexive()) return CheckResult::gate("~ is not reflexive");
  const int m = ctx.lattice_size();
  for (int a = 0; a < m; ++a)
    if (!sim_finite(ctx, a))
      return CheckResult::gate("member " + ctx.perp().set(a).to_string() +
                               " is not ~-finite");
  std::vector<int> c = centre(ctx.perp());
  std::vector<int> nabla = ctx.nabla_members_in_perp();
  std::sort(nabla.begin(), nabla.end());
  if (c != nabla)
    return CheckResult::gate("P^nabla is not the whole centre");
  LatticeLawResult mod = check_modular(ctx.perp());
  if (!mod.ok)
    return CheckResult::fail("lattice is not modular at (" +
                             std::to_string(mod.witness[0]) + "," +
                             std::to_string(mod.witness[1]) + "," +
                             std::to_string(mod.witness[2]) + ")");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (ctx.sim(a, b) != perspective(ctx.perp(), a, b).has_value())
        return CheckResult::fail("~ differs from perspectivity at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ")");
  return CheckResult::pass();
}

std::string orthogonality_preservation_survey(const EquivContext& ctx) {
  if (!ctx.proper()) return "skipped: not proper";
  const StarSemigroup& sg = ctx.semigroup();
  const auto& perp = ctx.perp();
  const auto img = translate_closure_table(ctx);
  int counterexamples = 0;
  std::ostringstream out;
  for (int s = 0; s < sg.n(); ++s)
    for (int a = 0; a < perp.size(); ++a)
      for (int b = 0; b < perp.size(); ++b) {
        if (!ctx.orthogonal(a, b)) continue;
        if (!ctx.orthogonal(img[a][s], img[b][s])) {
          if (counterexamples == 0)
            out << "s=" << s << " maps orthogonal (" << a << "," << b
                << ") to non-orthogonal images";
          ++counterexamples;
        }
      }
  if (counterexamples == 0) return "no orthogonality violation found";
  out << " (+" << (counterexamples - 1) << " more)";
  return out.str();
}

}  // namespace starlab
