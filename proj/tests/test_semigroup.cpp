#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "starlab/generators.hpp"
#include "starlab/semigroup.hpp"

using namespace starlab;

namespace {

bool squarefree(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

// Boolean 2x2 product on mask-encoded matrices, written out independently
// of the generator.
int bool2_mul(int a, int b) {
  auto at = [](int m, int i, int j) { return (m >> (i * 2 + j)) & 1; };
  int c = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int v = (at(a, i, 0) & at(b, 0, j)) | (at(a, i, 1) & at(b, 1, j));
      c |= v << (i * 2 + j);
    }
  return c;
}

int bool2_transpose(int a) {
  auto at = [](int m, int i, int j) { return (m >> (i * 2 + j)) & 1; };
  return at(a, 0, 0) | (at(a, 1, 0) << 1) | (at(a, 0, 1) << 2) |
         (at(a, 1, 1) << 3);
}

}  // namespace

TEST_CASE("zn tables validate and match modular arithmetic") {
  for (int n : {1, 2, 6, 12, 30}) {
    StarSemigroup s = gen_zn_mult(n);
    CHECK(validate(s).ok);
    CHECK(s.zero() == 0);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(s.prod(a, b) == (a * b) % n);
  }
}

TEST_CASE("a broken two-element table reports each violated axiom") {
  RawTables raw;
  raw.n = 2;
  raw.mul = {{0, 1}, {1, 1}};
  raw.star = {1, 0};  // swaps 0 and 1
  raw.zero = 0;
  ValidationReport rep = validate(raw);
  CHECK_FALSE(rep.ok);
  bool antihom = false, absorbing = false;
  for (const auto& v : rep.violations) {
    if (v.kind == AxiomKind::kAntihomomorphism) antihom = true;
    if (v.kind == AxiomKind::kAbsorbingZero) absorbing = true;
    CHECK(v.witness[0] >= 0);
  }
  CHECK(antihom);
  CHECK(absorbing);
  CHECK_THROWS_AS((void)make_semigroup(raw), ValidationError);
}

TEST_CASE("a non-involutive star is reported with its witness") {
  RawTables raw;
  raw.n = 2;
  raw.mul = {{0, 0}, {0, 1}};
  raw.star = {0, 0};  // star(star(1)) = 0 != 1
  raw.zero = 0;
  ValidationReport rep = validate(raw);
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.kind == AxiomKind::kInvolution && v.witness[0] == 1) found = true;
  CHECK(found);
}

TEST_CASE("shape and range problems are caught before the table scans") {
  RawTables raw;
  raw.n = 2;
  raw.mul = {{0, 1}};  // missing a row
  raw.star = {0, 1};
  CHECK_FALSE(validate(raw).ok);
  raw.mul = {{0, 7}, {0, 0}};  // entry out of range
  ValidationReport rep = validate(raw);
  REQUIRE_FALSE(rep.ok);
  CHECK(rep.violations.front().kind == AxiomKind::kIndexRange);
}

TEST_CASE("properness of multiplicative Z_n is squarefreeness") {
  for (int n = 1; n <= 100; ++n) {
    StarSemigroup s = gen_zn_mult(n);
    PropernessResult r = is_proper(s);
    CHECK(r.proper == squarefree(n));
    if (!r.proper) {
      CHECK(r.witness != 0);
      CHECK(s.prod(s.star(r.witness), r.witness) == 0);
    }
  }
}

TEST_CASE("Z_6 element classes match direct computation") {
  StarSemigroup s = gen_zn_mult(6);
  ElementClasses c = classify_elements(s);
  Bitset squares, idem;
  for (int a = 0; a < 6; ++a) {
    squares.set((a * a) % 6);
    if ((a * a) % 6 == a) idem.set(a);
  }
  CHECK(c.positives == squares);
  CHECK(c.positives == Bitset::from_mask(0b011011));  // {0,1,3,4}
  CHECK(c.self_adjoints == Bitset::universe(6));
  CHECK(c.idempotents == idem);
  CHECK(c.projections == (c.self_adjoints & c.idempotents));
  CHECK(c.projections == (c.positives & c.idempotents));
}

TEST_CASE("single-element semigroup has all classes equal to {0}") {
  ElementClasses c = classify_elements(gen_zn_mult(1));
  CHECK(c.positives == Bitset::single(0));
  CHECK(c.self_adjoints == Bitset::single(0));
  CHECK(c.idempotents == Bitset::single(0));
  CHECK(c.projections == Bitset::single(0));
}

TEST_CASE("boolean 2x2 projections are the symmetric idempotents") {
  StarSemigroup s = gen_boolean_matrices(2);
  REQUIRE(s.n() == 16);
  CHECK(validate(s).ok);
  CHECK(is_proper(s).proper);
  ElementClasses c = classify_elements(s);
  for (int m = 0; m < 16; ++m) {
    CHECK(s.prod(m, m) == bool2_mul(m, m));
    const bool proj = bool2_transpose(m) == m && bool2_mul(m, m) == m;
    CHECK(c.projections.test(m) == proj);
  }
}

TEST_CASE("positive powers stay positive across the gallery") {
  for (const char* spec : {"zn:6", "zn:8", "zn:12", "bool:2", "matring:2,3",
                           "matring:2,2"})
    CHECK(check_positive_powers(generate_from_spec(spec)));
}

TEST_CASE("star cancellation in Z_6 but not Z_4, and it implies properness") {
  CHECK(check_star_cancellation(gen_zn_mult(6)).cancellative);
  StarCancellationResult z4 = check_star_cancellation(gen_zn_mult(4));
  CHECK_FALSE(z4.cancellative);
  CHECK(z4.witness[0] >= 0);
  CHECK_FALSE(is_proper(gen_zn_mult(4)).proper);
  for (const char* spec : {"zn:2", "zn:4", "zn:6", "zn:9", "bool:2",
                           "matring:2,2", "matring:2,3"}) {
    StarSemigroup s = generate_from_spec(spec);
    if (check_star_cancellation(s).cancellative) CHECK(is_proper(s).proper);
  }
}

TEST_CASE("M_2(Z_2) is a valid *-ring that is not proper") {
  StarSemigroup s = gen_matrix_ring(2, 2);
  REQUIRE(s.n() == 16);
  REQUIRE(s.has_ring());
  CHECK(validate(s).ok);
  PropernessResult r = is_proper(s);
  CHECK_FALSE(r.proper);
  REQUIRE(r.witness > 0);
  CHECK(s.prod(s.star(r.witness), r.witness) == s.zero());
  CHECK_FALSE(check_star_cancellation(s).cancellative);
}

TEST_CASE("M_2(Z_3) is a proper *-ring") {
  StarSemigroup s = gen_matrix_ring(2, 3);
  REQUIRE(s.n() == 81);
  CHECK(validate(s).ok);
  CHECK(is_proper(s).proper);
}

TEST_CASE("unitize adjoins a fresh identity, even on top of one") {
  StarSemigroup zero_only = gen_zn_mult(1);
  StarSemigroup u = unitize(zero_only);
  REQUIRE(u.n() == 2);
  CHECK(validate(u).ok);
  CHECK(u.prod(1, 0) == 0);
  CHECK(u.prod(1, 1) == 1);
  CHECK(u.star(1) == 1);

  StarSemigroup z6 = unitize(gen_zn_mult(6));  // Z_6 already has 1
  REQUIRE(z6.n() == 7);
  CHECK(validate(z6).ok);
  for (int a = 0; a < 7; ++a) {
    CHECK(z6.prod(6, a) == a);
    CHECK(z6.prod(a, 6) == a);
  }

  StarSemigroup twice = unitize(z6);
  REQUIRE(twice.n() == 8);
  CHECK(validate(twice).ok);
  for (int a = 0; a < 8; ++a) CHECK(twice.prod(7, a) == a);
}

TEST_CASE("the 2x2 integer matrix product q p^n s vanishes exactly at n=1") {
  std::vector<bool> zero_at = qpns_counterexample(6);
  REQUIRE(zero_at.size() == 7);
  CHECK(zero_at == std::vector<bool>{false, true, false, false, false, false,
                                     false});
  CHECK_THROWS_AS((void)qpns_counterexample(80), ArithmeticOverflow);
}

TEST_CASE("carrier caps are enforced") {
  CHECK_THROWS_AS((void)gen_boolean_matrices(4), CapExceeded);
  CHECK_THROWS_AS((void)gen_matrix_ring(3, 3), CapExceeded);
  CHECK_THROWS_AS((void)direct_product(gen_zn_mult(30), gen_zn_mult(30)),
                  CapExceeded);
  CHECK(validate(gen_matrix_ring(2, 4)).ok);  // 256 elements, inside the cap
}

TEST_CASE("direct products are componentwise with a componentwise zero") {
  StarSemigroup p = direct_product(gen_zn_mult(2), gen_zn_mult(3));
  REQUIRE(p.n() == 6);
  CHECK(validate(p).ok);
  CHECK(is_proper(p).proper);
  StarSemigroup q = direct_product(gen_zn_mult(6), gen_boolean_matrices(2));
  CHECK(validate(q).ok);
  CHECK(q.zero() == 0);
  CHECK(is_proper(q).proper);
  // Rings combine only when both factors have one.
  CHECK_FALSE(q.has_ring());
  StarSemigroup r = direct_product(gen_matrix_ring(1, 2), gen_matrix_ring(1, 3));
  CHECK(r.has_ring());
  CHECK(validate(r).ok);
}

TEST_CASE("the serial associativity reference agrees with the kernel") {
  // An associative table passes both; a corrupted one fails both with the
  // same first witness.
  StarSemigroup s = gen_zn_mult(12);
  auto mul = s.mul_table();
  std::array<int, 3> w{};
  CHECK(ref::associative_naive(s.n(), mul, &w));
  mul[5 * 12 + 7] = static_cast<uint16_t>((5 * 7 + 1) % 12);
  CHECK_FALSE(ref::associative_naive(s.n(), mul, &w));
  RawTables raw;
  raw.n = 12;
  raw.mul.assign(12, std::vector<int>(12));
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) raw.mul[a][b] = mul[a * 12 + b];
  raw.star.resize(12);
  for (int a = 0; a < 12; ++a) raw.star[a] = a;
  raw.zero = 0;
  ValidationReport rep = validate(raw);
  CHECK_FALSE(rep.ok);
  bool assoc = false;
  for (const auto& v : rep.violations)
    if (v.kind == AxiomKind::kAssociativity) {
      assoc = true;
      CHECK(ref::associative_naive(12, mul, &w) == false);
      CHECK(v.witness == w);  // deterministic first witness
    }
  CHECK(assoc);
}
