#include "starlab/relation.hpp"

#include "starlab/subsets.hpp"

namespace starlab {

const char* rel_kind_name(RelKind k) {
  switch (k) {
    case RelKind::kNabla: return "nabla";
    case RelKind::kL: return "L";
    case RelKind::kR: return "R";
    case RelKind::kPerp: return "perp";
    case RelKind::kBot4: return "bot4";
    case RelKind::kLT: return "L_T";
  }
  return "?";
}

std::optional<RelKind> rel_kind_from_name(const std::string& name) {
  if (name == "nabla") return RelKind::kNabla;
  if (name == "L") return RelKind::kL;
  if (name == "R") return RelKind::kR;
  if (name == "perp") return RelKind::kPerp;
  if (name == "bot4") return RelKind::kBot4;
  return std::nullopt;
}

namespace {

bool rel_holds(const StarSemigroup& s, RelKind kind, int a, int b,
               const Bitset& middles) {
  const int z = s.zero();
  switch (kind) {
    case RelKind::kL:
      return s.prod(a, s.star(b)) == z;
    case RelKind::kR:
      return s.prod(s.star(a), b) == z;
    case RelKind::kPerp:
      return s.prod(a, s.star(b)) == z && s.prod(a, b) == z;
    case RelKind::kBot4:
      return s.prod(a, s.star(b)) == z && s.prod(a, b) == z &&
             s.prod(s.star(a), b) == z &&
             s.prod(s.star(a), s.star(b)) == z;
    case RelKind::kNabla: {
      bool ok = true;
      middles.for_each([&](int u) {
        if (ok && s.prod_n(a, u, b) != z) ok = false;
      });
      return ok;
    }
    case RelKind::kLT:
      break;
  }
  return false;
}

}  // namespace

namespace ref {

RelationMatrix build_relation_naive(const StarSemigroup& s, RelKind kind,
                                    const std::optional<Bitset>& within) {
  RelationMatrix m;
  m.n = s.n();
  m.kind = kind;
  m.carrier = within ? *within : Bitset::universe(s.n());
  m.rows.assign(s.n(), Bitset{});
  m.carrier.for_each([&](int a) {
    m.carrier.for_each([&](int b) {
      if (rel_holds(s, kind, a, b, m.carrier)) m.rows[a].set(b);
    });
  });
  return m;
}

Bitset polar_naive(const StarSemigroup&, const RelationMatrix& rel,
                   const Bitset& t) {
  Bitset out;
  rel.carrier.for_each([&](int x) {
    bool all = true;
    t.for_each([&](int a) {
      if (!rel.at(a, x)) all = false;
    });
    if (all) out.set(x);
  });
  return out;
}

}  // namespace ref

RelationMatrix build_relation(const StarSemigroup& s, RelKind kind,
                              const std::optional<Bitset>& within) {
  RelationMatrix m;
  m.n = s.n();
  m.kind = kind;
  m.carrier = within ? *within : Bitset::universe(s.n());
  m.rows.assign(s.n(), Bitset{});
  const auto members = m.carrier.to_indices();
  const int cnt = static_cast<int>(members.size());

  if (kind == RelKind::kNabla) {
    // s nabla t  <=>  every v in sM kills t on the left, so precompute the
    // product sets sM and the left kill sets { v : v t = 0 }.
    std::vector<Bitset> prods(s.n()), kills(s.n());
    const int z = s.zero();
#pragma omp parallel for schedule(static) if (cnt >= 64)
    for (int i = 0; i < cnt; ++i) {
      const int a = members[i];
      Bitset p;
      m.carrier.for_each([&](int u) { p.set(s.prod(a, u)); });
      prods[a] = p;
    }
#pragma omp parallel for schedule(static) if (cnt >= 64)
    for (int i = 0; i < cnt; ++i) {
      const int t = members[i];
      Bitset k;
      for (int v = 0; v < s.n(); ++v)
        if (s.prod(v, t) == z) k.set(v);
      kills[t] = k;
    }
#pragma omp parallel for schedule(static) if (cnt >= 64)
    for (int i = 0; i < cnt; ++i) {
      const int a = members[i];
      for (int j = 0; j < cnt; ++j) {
        const int b = members[j];
        if (prods[a].is_subset_of(kills[b])) m.rows[a].set(b);
      }
    }
    return m;
  }

#pragma omp parallel for schedule(static) if (cnt >= 64)
  for (int i = 0; i < cnt; ++i) {
    const int a = members[i];
    for (int j = 0; j < cnt; ++j) {
      const int b = members[j];
      if (rel_holds(s, kind, a, b, m.carrier)) m.rows[a].set(b);
    }
  }
  return m;
}

RelationMatrix build_relation_lt(const StarSemigroup& s, const Bitset& t_set) {
  StarSemigroup s1 = unitize(s);
  RelationMatrix m;
  m.n = s.n();
  m.kind = RelKind::kLT;
  m.carrier = Bitset::universe(s.n());
  m.rows.assign(s.n(), Bitset{});
  const int z = s1.zero();
#pragma omp parallel for schedule(static) if (s.n() >= 64)
  for (int a = 0; a < s.n(); ++a)
    for (int b = 0; b < s.n(); ++b) {
      bool ok = true;
      t_set.for_each([&](int u) {
        if (ok && s1.prod_n(a, u, s1.star(b)) != z) ok = false;
      });
      if (ok) m.rows[a].set(b);
    }
  return m;
}

Bitset polar(const RelationMatrix& rel, const Bitset& t) {
  Bitset out = rel.carrier;
  t.for_each([&](int a) { out &= rel.rows[a]; });
  return out;
}

RelationFactsReport relation_facts_check(const StarSemigroup& s) {
  RelationFactsReport rep;
  auto fail = [&](const char* what, int a, int b) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = what;
      rep.s = a;
      rep.t = b;
    }
  };
  const auto nabla = build_relation(s, RelKind::kNabla);
  const auto perp = build_relation(s, RelKind::kPerp);
  const auto lrel = build_relation(s, RelKind::kL);
  const auto rrel = build_relation(s, RelKind::kR);
  const auto bot4 = build_relation(s, RelKind::kBot4);
  if (!lrel.symmetric()) fail("L not symmetric", -1, -1);
  if (!rrel.symmetric()) fail("R not symmetric", -1, -1);
  if (!bot4.symmetric()) fail("bot4 not symmetric", -1, -1);
  // Facts that hold in any *-semigroup with self-adjoint zero.
  for (int a = 0; a < s.n() && rep.ok; ++a)
    for (int b = 0; b < s.n(); ++b) {
      if (nabla.at(a, b) != nabla.at(s.star(b), s.star(a)))
        fail("s nabla t differs from t* nabla s*", a, b);
      if (perp.at(a, b) != perp.at(a, s.star(b)))
        fail("s perp t differs from s perp t*", a, b);
      if (!rep.ok) break;
    }
  if (!is_proper(s).proper) return rep;
  // The rest needs properness.
  if (!nabla.symmetric()) fail("nabla not symmetric", -1, -1);
  bool commutative = true;
  for (int a = 0; a < s.n() && commutative; ++a)
    for (int b = 0; b < s.n(); ++b)
      if (s.prod(a, b) != s.prod(b, a)) {
        commutative = false;
        break;
      }
  for (int a = 0; a < s.n() && rep.ok; ++a) {
    const int sa = s.star(a);
    const int ssa = s.prod(sa, a);
    for (int b = 0; b < s.n(); ++b) {
      const bool nab = nabla.at(a, b);
      if (nab && !perp.at(a, b)) fail("nabla not below perp", a, b);
      if (nabla.at(ssa, b) != nab) fail("s*s nabla t mismatch", a, b);
      if (nabla.at(sa, b) != nab) fail("s* nabla t mismatch", a, b);
      if (perp.at(a, a) != (a == s.zero())) fail("s perp s off zero", a, a);
      if (commutative) {
        const bool prod_zero = s.prod(a, b) == s.zero();
        if (nab != prod_zero || perp.at(a, b) != prod_zero ||
            lrel.at(a, b) != prod_zero)
          fail("commutative collapse fails", a, b);
      }
      if (!rep.ok) break;
    }
  }
  return rep;
}


CheckResult proper_product_facts(const StarSemigroup& s) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  const int n = s.n();
  const int z = s.zero();
  auto fail = [](const char* what, int a, int b, int c) {
    return CheckResult::fail(std::string(what) + " at (" + std::to_string(a) +
                             "," + std::to_string(b) + "," +
                             std::to_string(c) + ")");
  };
  for (int x = 0; x < n; ++x) {
    const int xx = s.prod(s.star(x), x);
    for (int t = 0; t < n; ++t)
      if ((s.prod(x, t) == z) != (s.prod(xx, t) == z))
        return fail("st = 0 <=> s*s t = 0 fails", x, t, -1);
  }
  std::vector<int> pos = positive_part(s, Bitset::universe(n)).to_indices();
  for (int p : pos) {
    const int pp = s.prod(p, p);
    for (int t = 0; t < n; ++t)
      if ((s.prod(pp, t) == z) != (s.prod(p, t) == z))
        return fail("p^2 s = 0 <=> p s = 0 fails", p, t, -1);
  }
  for (int p : pos)
    for (int q : pos) {
      const int pq = s.prod(p, q);
      const int pqp = s.prod(pq, p);
      if ((pqp == z) != (s.prod(q, p) == z))
        return fail("pqp = 0 <=> qp = 0 fails", p, q, -1);
      const int qp = s.prod(q, p);
      for (int t = 0; t < n; ++t)
        if ((s.prod(pqp, t) == z) != (s.prod(qp, t) == z))
          return fail("pqps = 0 <=> qps = 0 fails", p, q, t);
    }
  return CheckResult::pass();
}

}  // namespace starlab
