// Polar-closed set lattices.
//
// The closed sets of a relation REL are exactly the intersections of the
// singleton polars { polar({s}) : s in carrier } together with the full
// carrier, so the family is built by intersection closure of those
// generators rather than a 2^n sweep; this is what lets 512-element
// carriers through.  Members are kept in numeric bitmask order and
// referenced by index.

#ifndef STARLAB_LATTICE_HPP_
#define STARLAB_LATTICE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "starlab/checks.hpp"
#include "starlab/relation.hpp"
#include "starlab/semigroup.hpp"
#include "starlab/subsets.hpp"

namespace starlab {

constexpr int kClosureCapDefault = 100000;

struct ForeignElement : std::runtime_error {
  explicit ForeignElement(const std::string& what)
      : std::runtime_error(what) {}
};

struct OrtholatticeAxiomFailure : std::runtime_error {
  explicit OrtholatticeAxiomFailure(const std::string& what)
      : std::runtime_error(what) {}
};

class PolarLattice {
 public:
  RelKind kind() const { return rel_.kind; }
  const RelationMatrix& relation() const { return rel_; }
  const Bitset& carrier() const { return rel_.carrier; }
  int size() const { return static_cast<int>(sets_.size()); }
  const std::vector<Bitset>& sets() const { return sets_; }
  const Bitset& set(int i) const { return sets_[i]; }

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  int ortho(int i) const { return ortho_[i]; }

  // -1 when the bitset is not a closed set of this lattice.
  int find(const Bitset& b) const {
    auto it = index_.find(b);
    return it == index_.end() ? -1 : it->second;
  }
  int require(const Bitset& b) const {
    int i = find(b);
    if (i < 0)
      throw ForeignElement("operand " + b.to_string() +
                           " is not closed in this lattice");
    return i;
  }

  bool leq(int a, int b) const { return sets_[a].is_subset_of(sets_[b]); }
  int meet(int a, int b) const { return require(sets_[a] & sets_[b]); }
  int join(int a, int b) const {
    return ortho_[require(sets_[ortho_[a]] & sets_[ortho_[b]])];
  }
  int inf(const std::vector<int>& family) const;
  int sup(const std::vector<int>& family) const;

  // The polar of an arbitrary subset of the carrier, and its closure.
  Bitset polar_of(const Bitset& t) const { return polar(rel_, t); }
  int closure_of(const Bitset& t) const {
    return require(polar_of(polar_of(t)));
  }

  friend PolarLattice closed_lattice(const StarSemigroup&, RelKind, int,
                                     bool);
  friend PolarLattice relative_lattice(const StarSemigroup&, const Bitset&,
                                       RelKind, int, bool);
  friend PolarLattice lattice_from_relation(const StarSemigroup&,
                                            RelationMatrix, int, bool);

 private:
  RelationMatrix rel_;
  std::vector<Bitset> sets_;
  std::vector<int> ortho_;
  std::unordered_map<Bitset, int, BitsetHash> index_;
  int top_ = 0;
  int bottom_ = 0;
};

// Complete-ortholattice sanity: bottom = {0}, orthocomplementation is an
// order-reversing involution, A meet A^perp = bottom, A join A^perp = top,
// and pairwise intersections are members.  Proper instances must satisfy
// all of it; a failure witnesses a properness or construction bug.
struct LatticeAxiomReport {
  bool ok = true;
  std::string failure;
  int witness = -1;
};
LatticeAxiomReport ortholattice_axioms(const PolarLattice& lat);

// Throws CapExceeded past size_cap and OrtholatticeAxiomFailure when
// require_axioms is set and an axiom fails.
PolarLattice closed_lattice(const StarSemigroup& s, RelKind kind,
                            int size_cap = kClosureCapDefault,
                            bool require_axioms = true);

// The lattice of the relation computed within a sub-*-semigroup; for perp
// and L this is the plain restriction, for nabla the middle element ranges
// over the subsemigroup.
PolarLattice relative_lattice(const StarSemigroup& s, const Bitset& members,
                              RelKind kind,
                              int size_cap = kClosureCapDefault,
                              bool require_axioms = true);

PolarLattice lattice_from_relation(const StarSemigroup& s, RelationMatrix rel,
                                   int size_cap = kClosureCapDefault,
                                   bool require_axioms = true);

// All z with p = (p meet z) join (p meet ortho z) for every p.
std::vector<int> centre(const PolarLattice& lat);

struct LatticeLawResult {
  bool ok = true;
  std::array<int, 3> witness{-1, -1, -1};  // lexicographically first
};

// q <= p  =>  p = q join (p meet ortho q).
LatticeLawResult check_orthomodular(const PolarLattice& lat);
// p join r = q join r, p meet r = q meet r, p <= q  =>  p = q.
LatticeLawResult check_modular(const PolarLattice& lat);

// A nabla B  =>  (A join C) meet B = C meet B for all C, over the perp
// lattice, with nabla read elementwise.
LatticeLawResult del_relation_check(const StarSemigroup& s,
                                    const PolarLattice& perp_lat);

struct SubsetSample {
  bool exhaustive = true;
  int count = 256;      // sampled mode size
  uint64_t seed = 1;
};

// Clause-by-clause check of the polar-map structure facts, per subset T:
//   (1) T^nabla is a rooted ideal, hence self-adjoint
//   (2) T^L = sqrt(T^perp) = (T^2)^L and is a left rooted left ideal
//   (3) T^perp = T^L cap T^L* and is a self-adjoint quasi-rooted
//       hereditary quasi-ideal
//   (4) T^LL = T^perp L
//   (5) T^nabla = T^perp = T^L when T is a right ideal
//   (6) polars are closed under addition in the ring case
// Exhaustive over all T for n <= 12, seeded samples otherwise.
CheckResult polar_structure_check(const StarSemigroup& s,
                          const SubsetSample& sample = {});

// The ortholattice comparison theorem:
//   (a) T -> T cap T* is an orthoisomorphism P^L -> P^perp, inverse sqrt
//   (b) P^nabla = P^L cap P^perp = { T in P^L : T = T* }
//                               = { T in P^perp : ST <= T }
//   (c) P^perp = P^bot4 as families, and the two polars agree on
//       self-adjoint sets
//   (d) sups of families from P^nabla agree in P^nabla and P^perp
CheckResult ortholattice_comparison_check(const StarSemigroup& s);

// Deterministic DOT rendering of the Hasse diagram.
std::string hasse_dot(const PolarLattice& lat, const std::string& name);

namespace ref {
// 2^n polar sweep (n <= 16): every closed set is some T^REL, so collect
// them all.  Oracle for the intersection-closure construction.
std::vector<Bitset> closed_sets_naive(const StarSemigroup& s,
                                      const RelationMatrix& rel);
}  // namespace ref

}  // namespace starlab

#endif  // STARLAB_LATTICE_HPP_
