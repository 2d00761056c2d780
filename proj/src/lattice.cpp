#include "starlab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

namespace starlab {

int PolarLattice::inf(const std::vector<int>& family) const {
  Bitset acc = carrier();
  for (int i : family) acc &= sets_[i];
  return require(acc);
}

int PolarLattice::sup(const std::vector<int>& family) const {
  Bitset acc = carrier();
  for (int i : family) acc &= sets_[ortho_[i]];
  return ortho_[require(acc)];
}

PolarLattice lattice_from_relation(const StarSemigroup& s, RelationMatrix rel,
                                   int size_cap, bool require_axioms) {
  PolarLattice lat;
  lat.rel_ = std::move(rel);
  const Bitset& carrier = lat.rel_.carrier;

  // Generators: singleton polars, i.e. the relation rows within the carrier.
  std::vector<Bitset> gens;
  carrier.for_each([&](int a) { gens.push_back(lat.rel_.rows[a] & carrier); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::unordered_map<Bitset, int, BitsetHash> seen;
  std::deque<Bitset> work;
  auto push = [&](const Bitset& b) {
    if (seen.emplace(b, 0).second) {
      work.push_back(b);
      if (static_cast<int>(seen.size()) > size_cap)
        throw CapExceeded("closed-set family exceeds the size cap");
    }
  };
  push(carrier);
  while (!work.empty()) {
    Bitset x = work.front();
    work.pop_front();
    for (const auto& g : gens) push(x & g);
  }

  lat.sets_.reserve(seen.size());
  for (const auto& [b, _] : seen) lat.sets_.push_back(b);
  std::sort(lat.sets_.begin(), lat.sets_.end());
  for (int i = 0; i < static_cast<int>(lat.sets_.size()); ++i)
    lat.index_[lat.sets_[i]] = i;

  lat.top_ = lat.index_.at(carrier);
  lat.bottom_ = 0;  // numeric order puts the minimal member first
  lat.ortho_.resize(lat.sets_.size());
  for (int i = 0; i < static_cast<int>(lat.sets_.size()); ++i) {
    Bitset o = polar(lat.rel_, lat.sets_[i]) & carrier;
    int j = lat.find(o);
    if (j < 0)
      throw OrtholatticeAxiomFailure(
          "polar of a closed set is not closed: " + lat.sets_[i].to_string());
    lat.ortho_[i] = j;
  }

  if (require_axioms) {
    LatticeAxiomReport rep = ortholattice_axioms(lat);
    if (!rep.ok)
      throw OrtholatticeAxiomFailure(rep.failure + " (member " +
                                     std::to_string(rep.witness) + ")");
  }
  (void)s;
  return lat;
}

PolarLattice closed_lattice(const StarSemigroup& s, RelKind kind,
                            int size_cap, bool require_axioms) {
  return lattice_from_relation(s, build_relation(s, kind), size_cap,
                               require_axioms);
}

PolarLattice relative_lattice(const StarSemigroup& s, const Bitset& members,
                              RelKind kind, int size_cap,
                              bool require_axioms) {
  return lattice_from_relation(s, build_relation(s, kind, members), size_cap,
                               require_axioms);
}

LatticeAxiomReport ortholattice_axioms(const PolarLattice& lat) {
  LatticeAxiomReport rep;
  auto fail = [&](std::string what, int w) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = std::move(what);
      rep.witness = w;
    }
  };
  const int m = lat.size();
  // The bottom must be exactly {0}; anything larger witnesses a
  // properness defect (some s with s perp s, say).
  if (!(lat.set(lat.bottom()).count() == 1)) fail("bottom is not {0}", lat.bottom());
  for (int i = 0; i < m && rep.ok; ++i) {
    if (lat.ortho(lat.ortho(i)) != i) fail("orthocomplement not involutive", i);
    if (lat.meet(i, lat.ortho(i)) != lat.bottom())
      fail("A meet A^perp is not the bottom", i);
    if (lat.join(i, lat.ortho(i)) != lat.top())
      fail("A join A^perp is not the top", i);
    for (int j = 0; j < m; ++j) {
      if (lat.find(lat.set(i) & lat.set(j)) < 0)
        fail("intersection of members not a member", i);
      if (lat.leq(i, j) && !lat.leq(lat.ortho(j), lat.ortho(i)))
        fail("orthocomplement not order reversing", i);
    }
  }
  return rep;
}

std::vector<int> centre(const PolarLattice& lat) {
  std::vector<int> out;
  const int m = lat.size();
  for (int z = 0; z < m; ++z) {
    bool central = true;
    for (int p = 0; p < m && central; ++p)
      if (lat.join(lat.meet(p, z), lat.meet(p, lat.ortho(z))) != p)
        central = false;
    if (central) out.push_back(z);
  }
  return out;
}

LatticeLawResult check_orthomodular(const PolarLattice& lat) {
  const int m = lat.size();
  for (int q = 0; q < m; ++q)
    for (int p = 0; p < m; ++p) {
      if (!lat.leq(q, p)) continue;
      if (lat.join(q, lat.meet(p, lat.ortho(q))) != p)
        return {false, {p, q, -1}};
    }
  return {};
}

LatticeLawResult check_modular(const PolarLattice& lat) {
  const int m = lat.size();
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) {
      if (!lat.leq(p, q) || p == q) continue;
      for (int r = 0; r < m; ++r)
        if (lat.join(p, r) == lat.join(q, r) &&
            lat.meet(p, r) == lat.meet(q, r))
          return {false, {p, q, r}};
    }
  return {};
}

LatticeLawResult del_relation_check(const StarSemigroup& s,
                                    const PolarLattice& perp_lat) {
  RelationMatrix nabla = build_relation(s, RelKind::kNabla);
  const int m = perp_lat.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!perp_lat.set(a).is_subset_of(polar(nabla, perp_lat.set(b))))
        continue;  // not A nabla B
      for (int c = 0; c < m; ++c)
        if (perp_lat.meet(perp_lat.join(a, c), b) != perp_lat.meet(c, b))
          return {false, {a, b, c}};
    }
  return {};
}

namespace {

std::vector<Bitset> sample_subsets(const StarSemigroup& s,
                                   const SubsetSample& sample) {
  std::vector<Bitset> out;
  if (sample.exhaustive && s.n() <= 12) {
    const uint64_t limit = uint64_t{1} << s.n();
    out.reserve(limit);
    for (uint64_t mask = 0; mask < limit; ++mask)
      out.push_back(Bitset::from_mask(mask));
    return out;
  }
  std::mt19937_64 rng(sample.seed);
  std::set<Bitset> seen;
  seen.insert(Bitset{});
  seen.insert(Bitset::universe(s.n()));
  for (int i = 0; i < s.n(); ++i) seen.insert(Bitset::single(i));
  while (static_cast<int>(seen.size()) < sample.count + s.n() + 2) {
    Bitset t;
    const int picks = 1 + static_cast<int>(rng() % 8);
    for (int j = 0; j < picks; ++j) t.set(static_cast<int>(rng() % s.n()));
    seen.insert(t);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

CheckResult polar_structure_check(const StarSemigroup& s, const SubsetSample& sample) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  const RelationMatrix nabla = build_relation(s, RelKind::kNabla);
  const RelationMatrix lrel = build_relation(s, RelKind::kL);
  const RelationMatrix perp = build_relation(s, RelKind::kPerp);
  auto fail = [&](const char* clause, const Bitset& t) {
    return CheckResult::fail(std::string("clause ") + clause +
                             " fails at T = " + t.to_string());
  };
  for (const Bitset& t : sample_subsets(s, sample)) {
    const Bitset tn = polar(nabla, t);
    const Bitset tl = polar(lrel, t);
    const Bitset tp = polar(perp, t);
    // (1)
    if (!holds(s, SubsetPredicate::kRooted, tn) ||
        !holds(s, SubsetPredicate::kIdeal, tn) ||
        !holds(s, SubsetPredicate::kSelfAdjoint, tn))
      return fail("1", t);
    // (2)
    if (tl != sqrt_of(s, tp) || tl != polar(lrel, t_squared(s, t)) ||
        !holds(s, SubsetPredicate::kLeftRooted, tl) ||
        !holds(s, SubsetPredicate::kLeftIdeal, tl))
      return fail("2", t);
    // (3)
    if (tp != (tl & star_image(s, tl)) ||
        !holds(s, SubsetPredicate::kSelfAdjoint, tp) ||
        !holds(s, SubsetPredicate::kQuasiRooted, tp) ||
        !holds(s, SubsetPredicate::kHereditary, tp) ||
        !holds(s, SubsetPredicate::kQuasiIdeal, tp))
      return fail("3", t);
    // (4)
    if (polar(lrel, tl) != polar(lrel, tp)) return fail("4", t);
    // (5)
    if (holds(s, SubsetPredicate::kRightIdeal, t) && (tn != tp || tp != tl))
      return fail("5", t);
    // (6)
    if (s.has_ring()) {
      for (const Bitset* ann : {&tn, &tp, &tl}) {
        bool closed = true;
        ann->for_each([&](int a) {
          ann->for_each([&](int b) {
            if (!ann->test(s.add(a, b))) closed = false;
          });
        });
        if (!closed) return fail("6", t);
      }
    }
  }
  return CheckResult::pass();
}

CheckResult ortholattice_comparison_check(const StarSemigroup& s) {
  if (!is_proper(s).proper)
    return CheckResult::gate("semigroup is not proper");
  PolarLattice perp = closed_lattice(s, RelKind::kPerp);
  PolarLattice llat = closed_lattice(s, RelKind::kL, kClosureCapDefault,
                                     /*require_axioms=*/false);
  PolarLattice nabla = closed_lattice(s, RelKind::kNabla);
  PolarLattice bot4 = closed_lattice(s, RelKind::kBot4);

  // (a) T -> T cap T* from P^L onto P^perp, inverse sqrt, preserving
  // order and orthocomplement.
  for (int i = 0; i < llat.size(); ++i) {
    const Bitset img = sa_part(s, llat.set(i));
    if (perp.find(img) < 0)
      return CheckResult::fail("(a) T cap T* lands outside P^perp at " +
                               llat.set(i).to_string());
    if (sqrt_of(s, img) != llat.set(i))
      return CheckResult::fail("(a) sqrt fails to invert at " +
                               llat.set(i).to_string());
    const Bitset ortho_img = sa_part(s, llat.set(llat.ortho(i)));
    if (perp.find(ortho_img) != perp.ortho(perp.find(img)))
      return CheckResult::fail("(a) orthocomplement not preserved at " +
                               llat.set(i).to_string());
  }
  for (int i = 0; i < perp.size(); ++i) {
    const Bitset pre = sqrt_of(s, perp.set(i));
    if (llat.find(pre) < 0 || sa_part(s, pre) != perp.set(i))
      return CheckResult::fail("(a) sqrt not a section over P^perp at " +
                               perp.set(i).to_string());
  }
  for (int i = 0; i < llat.size(); ++i)
    for (int j = 0; j < llat.size(); ++j)
      if (llat.leq(i, j) !=
          sa_part(s, llat.set(i)).is_subset_of(sa_part(s, llat.set(j))))
        return CheckResult::fail("(a) not an order isomorphism");

  // (b) four descriptions of P^nabla.
  std::set<Bitset> nab(nabla.sets().begin(), nabla.sets().end());
  std::set<Bitset> meet_family;
  for (const auto& t : llat.sets())
    if (perp.find(t) >= 0) meet_family.insert(t);
  std::set<Bitset> sa_l;
  for (const auto& t : llat.sets())
    if (t == star_image(s, t)) sa_l.insert(t);
  std::set<Bitset> invariant_p;
  for (const auto& t : perp.sets()) {
    bool left_inv = true;
    for (int x = 0; x < s.n() && left_inv; ++x)
      t.for_each([&](int a) {
        if (!t.test(s.prod(x, a))) left_inv = false;
      });
    if (left_inv) invariant_p.insert(t);
  }
  if (nab != meet_family)
    return CheckResult::fail("(b) P^nabla != P^L cap P^perp");
  if (nab != sa_l)
    return CheckResult::fail("(b) P^nabla != self-adjoint part of P^L");
  if (nab != invariant_p)
    return CheckResult::fail("(b) P^nabla != left-invariant part of P^perp");

  // Per-member shape facts: annihilators are self-adjoint quasi-rooted
  // hereditary quasi-ideals; nabla members are rooted ideals.
  for (const auto& t : perp.sets())
    if (!holds(s, SubsetPredicate::kSelfAdjoint, t) ||
        !holds(s, SubsetPredicate::kQuasiRooted, t) ||
        !holds(s, SubsetPredicate::kHereditary, t) ||
        !holds(s, SubsetPredicate::kQuasiIdeal, t))
      return CheckResult::fail("perp member shape fails at " + t.to_string());
  for (const auto& t : nabla.sets())
    if (!holds(s, SubsetPredicate::kRooted, t) ||
        !holds(s, SubsetPredicate::kIdeal, t))
      return CheckResult::fail("nabla member shape fails at " + t.to_string());

  // (c) perp and bot4 polarity families coincide; the polars themselves
  // agree on self-adjoint sets.
  if (std::set<Bitset>(bot4.sets().begin(), bot4.sets().end()) !=
      std::set<Bitset>(perp.sets().begin(), perp.sets().end()))
    return CheckResult::fail("(c) P^perp != P^bot4");
  for (const auto& t : perp.sets())
    if (t == star_image(s, t) &&
        polar(perp.relation(), t) != polar(bot4.relation(), t))
      return CheckResult::fail("(c) perp and bot4 polars differ at " +
                               t.to_string());

  // (d) sups of P^nabla families agree in both lattices.
  const int nm = nabla.size();
  for (int i = 0; i < nm; ++i)
    for (int j = i; j < nm; ++j)
      for (int k = j; k < nm; ++k) {
        Bitset in_nabla = nabla.set(nabla.sup({i, j, k}));
        int pi = perp.require(nabla.set(i)), pj = perp.require(nabla.set(j)),
            pk = perp.require(nabla.set(k));
        Bitset in_perp = perp.set(perp.sup({pi, pj, pk}));
        if (in_nabla != in_perp)
          return CheckResult::fail("(d) sup disagreement at family {" +
                                   nabla.set(i).to_string() + "," +
                                   nabla.set(j).to_string() + "," +
                                   nabla.set(k).to_string() + "}");
      }
  return CheckResult::pass();
}

std::string hasse_dot(const PolarLattice& lat, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  const int m = lat.size();
  for (int i = 0; i < m; ++i)
    out << "  n" << i << " [label=\"" << lat.set(i).to_string() << "\"];\n";
  // Covering edges: i < j with nothing strictly between.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !lat.leq(i, j)) continue;
      bool covering = true;
      for (int k = 0; k < m && covering; ++k)
        if (k != i && k != j && lat.leq(i, k) && lat.leq(k, j))
          covering = false;
      if (covering) out << "  n" << i << " -> n" << j << ";\n";
    }
  out << "}\n";
  return out.str();
}

namespace ref {

std::vector<Bitset> closed_sets_naive(const StarSemigroup& s,
                                      const RelationMatrix& rel) {
  if (s.n() > kExhaustiveSubsetCap)
    throw CapExceeded("closed_sets_naive requires n <= 16");
  std::set<Bitset> out;
  const uint64_t limit = uint64_t{1} << s.n();
  for (uint64_t mask = 0; mask < limit; ++mask) {
    Bitset t = Bitset::from_mask(mask) & rel.carrier;
    out.insert(ref::polar_naive(s, rel, t));
  }
  return {out.begin(), out.end()};
}

}  // namespace ref

}  // namespace starlab
