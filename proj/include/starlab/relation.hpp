// The orthogonality relations on a *-semigroup with zero and the
// polarities they induce.
//
//   s nabla t  <=>  s u t  = 0 for every middle u
//   s L t      <=>  s t*   = 0
//   s R t      <=>  s* t   = 0
//   s perp t   <=>  s t*   = 0 and s t = 0
//   s bot4 t   <=>  s t* = s t = s* t = s* t* = 0
//   s L_T t    <=>  s u t* = 0 for every u in T, T a subset of S^1
//
// rows[s] holds { t : s REL t }.  The polar of T is
//   T^REL = { s : t REL s for every t in T },
// i.e. the intersection of the rows indexed by T; members of T sit on the
// LEFT of the relation.  perp is not symmetric, so the distinction
// matters: there are proper instances and sets T with T not contained in
// its double perp-polar.

#ifndef STARLAB_RELATION_HPP_
#define STARLAB_RELATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "starlab/checks.hpp"
#include "starlab/semigroup.hpp"

namespace starlab {

enum class RelKind { kNabla, kL, kR, kPerp, kBot4, kLT };

const char* rel_kind_name(RelKind k);
std::optional<RelKind> rel_kind_from_name(const std::string& name);

struct RelationMatrix {
  int n = 0;
  RelKind kind = RelKind::kPerp;
  Bitset carrier;              // full carrier, or a sub-*-semigroup
  std::vector<Bitset> rows;    // rows[s] = { t in carrier : s REL t }

  bool at(int s, int t) const { return rows[s].test(t); }
  bool symmetric() const {
    for (int s = 0; s < n; ++s)
      for (int t = carrier.next(s); t >= 0; t = carrier.next(t))
        if (rows[s].test(t) != rows[t].test(s)) return false;
    return true;
  }
};

// Builds the relation restricted to `within` (defaults to the whole
// carrier): both arguments and, for nabla, the middle element range over
// the restriction.  perp/L/R/bot4 restrict pointwise, matching the fact
// that those relations on a sub-*-semigroup are plain restrictions.
RelationMatrix build_relation(const StarSemigroup& s, RelKind kind,
                              const std::optional<Bitset>& within = {});

// L_T over the unitization: members of T index elements of unitize(s),
// with index s.n() naming the adjoined identity.  nabla = L_S and
// L = L_{1} on proper instances.
RelationMatrix build_relation_lt(const StarSemigroup& s, const Bitset& t_set);

// T^REL, computed within rel.carrier.
Bitset polar(const RelationMatrix& rel, const Bitset& t);

struct RelationFactsReport {
  bool ok = true;
  std::string failure;
  int s = -1, t = -1;
};

// The elementary relation facts on a proper instance: L, R, bot4 and
// nabla symmetric; s nabla t <=> s*s nabla t <=> s* nabla t <=> t nabla s;
// nabla contained in perp; s perp s only for s = 0; and, when S is
// commutative, nabla = perp = L = the relation st = 0.
RelationFactsReport relation_facts_check(const StarSemigroup& s);

// Vanishing-product facts of proper instances, exhaustively:
//   st = 0     <=>  s*s t = 0
//   p^2 s = 0  <=>  p s = 0        for p in S_+
//   pqps = 0   <=>  qps = 0        for p, q in S_+
//   pqp = 0    <=>  qp = 0         for p, q in S_+
CheckResult proper_product_facts(const StarSemigroup& s);

namespace ref {
// Literal definitional scans, no shortcuts; the serial reference the
// OpenMP kernels are tested against.
RelationMatrix build_relation_naive(const StarSemigroup& s, RelKind kind,
                                    const std::optional<Bitset>& within = {});
Bitset polar_naive(const StarSemigroup& s, const RelationMatrix& rel,
                   const Bitset& t);
}  // namespace ref

}  // namespace starlab

#endif  // STARLAB_RELATION_HPP_
