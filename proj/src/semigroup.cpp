#include "starlab/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

namespace starlab {

const char* axiom_kind_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::kShape: return "shape";
    case AxiomKind::kIndexRange: return "index_range";
    case AxiomKind::kAssociativity: return "associativity";
    case AxiomKind::kInvolution: return "involution";
    case AxiomKind::kAntihomomorphism: return "antihomomorphism";
    case AxiomKind::kAbsorbingZero: return "absorbing_zero";
    case AxiomKind::kAddAssociativity: return "add_associativity";
    case AxiomKind::kAddCommutativity: return "add_commutativity";
    case AxiomKind::kAddIdentity: return "add_identity";
    case AxiomKind::kAddInverse: return "add_inverse";
    case AxiomKind::kDistributivity: return "distributivity";
    case AxiomKind::kStarAdditivity: return "star_additivity";
  }
  return "?";
}

StarSemigroup StarSemigroup::unchecked(std::string name, int n,
                                       std::vector<uint16_t> mul,
                                       std::vector<uint16_t> star, int zero,
                                       std::optional<RingExtension> ring) {
  StarSemigroup s;
  s.name_ = std::move(name);
  s.n_ = n;
  s.mul_ = std::move(mul);
  s.star_ = std::move(star);
  s.zero_ = zero;
  s.ring_ = std::move(ring);
  return s;
}

namespace ref {

bool associative_naive(int n, const std::vector<uint16_t>& mul,
                       std::array<int, 3>* witness) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a * n + b] * n + c] != mul[a * n + mul[b * n + c]]) {
          if (witness) *witness = {a, b, c};
          return false;
        }
  return true;
}

}  // namespace ref

namespace {

// OpenMP kernel for the O(n^3) associativity scan; rows are independent.
bool associative_kernel(int n, const std::vector<uint16_t>& mul,
                        std::array<int, 3>* witness) {
  const uint16_t* m = mul.data();
  bool ok = true;
#pragma omp parallel for schedule(static) if (n >= 64)
  for (int a = 0; a < n; ++a) {
    if (!ok) continue;
    for (int b = 0; b < n; ++b) {
      const int ab = m[a * n + b];
      for (int c = 0; c < n; ++c)
        if (m[ab * n + c] != m[a * n + m[b * n + c]]) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
  }
  if (ok) return true;
  // Deterministic witness: re-scan serially for the first failing triple.
  return ref::associative_naive(n, mul, witness) ? true : false;
}

struct Collector {
  ValidationReport report;
  std::unordered_set<int> seen;  // one witness per axiom kind

  void fail(AxiomKind k, std::array<int, 3> w, std::string detail = "") {
    report.ok = false;
    if (seen.insert(static_cast<int>(k)).second)
      report.violations.push_back({k, w, std::move(detail)});
  }
};

void validate_tables(int n, const std::vector<uint16_t>& mul,
                     const std::vector<uint16_t>& star, int zero,
                     const RingExtension* ring, Collector& out) {
  std::array<int, 3> w{-1, -1, -1};
  if (!associative_kernel(n, mul, &w))
    out.fail(AxiomKind::kAssociativity, w);

  for (int a = 0; a < n; ++a)
    if (star[star[a]] != a) {
      out.fail(AxiomKind::kInvolution, {a, -1, -1});
      break;
    }

  for (int a = 0; a < n && out.seen.count(static_cast<int>(
                               AxiomKind::kAntihomomorphism)) == 0;
       ++a)
    for (int b = 0; b < n; ++b)
      if (star[mul[a * n + b]] != mul[star[b] * n + star[a]]) {
        out.fail(AxiomKind::kAntihomomorphism, {a, b, -1});
        break;
      }

  for (int s = 0; s < n; ++s)
    if (mul[zero * n + s] != zero || mul[s * n + zero] != zero) {
      out.fail(AxiomKind::kAbsorbingZero, {s, -1, -1});
      break;
    }

  if (!ring) return;
  const auto& add = ring->add;
  const auto& neg = ring->neg;
  std::array<int, 3> aw{-1, -1, -1};
  if (!ref::associative_naive(n, add, &aw))
    out.fail(AxiomKind::kAddAssociativity, aw);
  for (int a = 0; a < n && out.seen.count(static_cast<int>(
                               AxiomKind::kAddCommutativity)) == 0;
       ++a)
    for (int b = 0; b < n; ++b)
      if (add[a * n + b] != add[b * n + a]) {
        out.fail(AxiomKind::kAddCommutativity, {a, b, -1});
        break;
      }
  for (int a = 0; a < n; ++a)
    if (add[a * n + zero] != a) {
      out.fail(AxiomKind::kAddIdentity, {a, -1, -1});
      break;
    }
  for (int a = 0; a < n; ++a)
    if (add[a * n + neg[a]] != zero) {
      out.fail(AxiomKind::kAddInverse, {a, -1, -1});
      break;
    }
  bool dist_ok = true;
#pragma omp parallel for schedule(static) if (n >= 64)
  for (int a = 0; a < n; ++a) {
    if (!dist_ok) continue;
    for (int b = 0; b < n && dist_ok; ++b)
      for (int c = 0; c < n; ++c) {
        if (mul[a * n + add[b * n + c]] !=
                add[mul[a * n + b] * n + mul[a * n + c]] ||
            mul[add[b * n + c] * n + a] !=
                add[mul[b * n + a] * n + mul[c * n + a]]) {
          dist_ok = false;
          break;
        }
      }
  }
  if (!dist_ok) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[a * n + add[b * n + c]] !=
                  add[mul[a * n + b] * n + mul[a * n + c]] ||
              mul[add[b * n + c] * n + a] !=
                  add[mul[b * n + a] * n + mul[c * n + a]]) {
            out.fail(AxiomKind::kDistributivity, {a, b, c});
            goto dist_done;
          }
  dist_done:;
  }
  for (int a = 0; a < n && out.seen.count(static_cast<int>(
                               AxiomKind::kStarAdditivity)) == 0;
       ++a)
    for (int b = 0; b < n; ++b)
      if (star[add[a * n + b]] != add[star[a] * n + star[b]]) {
        out.fail(AxiomKind::kStarAdditivity, {a, b, -1});
        break;
      }
}

bool check_shape(const RawTables& raw, Collector& out) {
  const int n = raw.n;
  if (n <= 0) {
    out.fail(AxiomKind::kShape, {-1, -1, -1}, "n must be >= 1");
    return false;
  }
  auto table_ok = [&](const std::vector<std::vector<int>>& t,
                      const char* which) {
    if (static_cast<int>(t.size()) != n) {
      out.fail(AxiomKind::kShape, {-1, -1, -1},
               std::string(which) + " table must have n rows");
      return false;
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(t[i].size()) != n) {
        out.fail(AxiomKind::kShape, {i, -1, -1},
                 std::string(which) + " row has wrong length");
        return false;
      }
      for (int j = 0; j < n; ++j)
        if (t[i][j] < 0 || t[i][j] >= n) {
          out.fail(AxiomKind::kIndexRange, {i, j, t[i][j]},
                   std::string(which) + " entry out of range");
          return false;
        }
    }
    return true;
  };
  if (!table_ok(raw.mul, "mul")) return false;
  if (static_cast<int>(raw.star.size()) != n) {
    out.fail(AxiomKind::kShape, {-1, -1, -1}, "star map must have n entries");
    return false;
  }
  for (int i = 0; i < n; ++i)
    if (raw.star[i] < 0 || raw.star[i] >= n) {
      out.fail(AxiomKind::kIndexRange, {i, raw.star[i], -1},
               "star entry out of range");
      return false;
    }
  if (raw.zero < 0 || raw.zero >= n) {
    out.fail(AxiomKind::kIndexRange, {raw.zero, -1, -1}, "zero out of range");
    return false;
  }
  if (raw.add.has_value() != raw.neg.has_value()) {
    out.fail(AxiomKind::kShape, {-1, -1, -1},
             "add and neg must be given together");
    return false;
  }
  if (raw.add) {
    if (!table_ok(*raw.add, "add")) return false;
    if (static_cast<int>(raw.neg->size()) != n) {
      out.fail(AxiomKind::kShape, {-1, -1, -1}, "neg map must have n entries");
      return false;
    }
    for (int i = 0; i < n; ++i)
      if ((*raw.neg)[i] < 0 || (*raw.neg)[i] >= n) {
        out.fail(AxiomKind::kIndexRange, {i, (*raw.neg)[i], -1},
                 "neg entry out of range");
        return false;
      }
  }
  return true;
}

std::vector<uint16_t> flatten(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  std::vector<uint16_t> f(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) f[i * n + j] = static_cast<uint16_t>(t[i][j]);
  return f;
}

}  // namespace

ValidationReport validate(const RawTables& raw) {
  Collector out;
  if (!check_shape(raw, out)) return out.report;
  auto mul = flatten(raw.mul);
  std::vector<uint16_t> star(raw.star.begin(), raw.star.end());
  std::optional<RingExtension> ring;
  if (raw.add) {
    ring = RingExtension{flatten(*raw.add),
                         std::vector<uint16_t>(raw.neg->begin(), raw.neg->end())};
  }
  validate_tables(raw.n, mul, star, raw.zero, ring ? &*ring : nullptr, out);
  return out.report;
}

ValidationReport validate(const StarSemigroup& s) {
  Collector out;
  validate_tables(s.n(), s.mul_table(), s.star_table(), s.zero(),
                  s.has_ring() ? &s.ring() : nullptr, out);
  return out.report;
}

StarSemigroup make_semigroup(const RawTables& raw) {
  ValidationReport rep = validate(raw);
  if (!rep.ok) throw ValidationError(std::move(rep));
  std::optional<RingExtension> ring;
  if (raw.add)
    ring = RingExtension{flatten(*raw.add),
                         std::vector<uint16_t>(raw.neg->begin(), raw.neg->end())};
  return StarSemigroup::unchecked(raw.name, raw.n, flatten(raw.mul),
                                  std::vector<uint16_t>(raw.star.begin(),
                                                        raw.star.end()),
                                  raw.zero, std::move(ring));
}

PropernessResult is_proper(const StarSemigroup& s) {
  for (int x = 0; x < s.n(); ++x)
    if (s.prod(s.star(x), x) == s.zero() && x != s.zero()) return {false, x};
  return {true, -1};
}

ElementClasses classify_elements(const StarSemigroup& s) {
  ElementClasses c;
  const int n = s.n();
  for (int t = 0; t < n; ++t) c.positives.set(s.prod(s.star(t), t));
  for (int a = 0; a < n; ++a) {
    if (s.star(a) == a) c.self_adjoints.set(a);
    if (s.prod(a, a) == a) c.idempotents.set(a);
  }
  c.projections = c.self_adjoints & c.idempotents;
  if (s.has_ring()) {
    // S_++ is the additive semigroup generated by S_+.
    Bitset closed = c.positives;
    bool grew = true;
    while (grew) {
      grew = false;
      Bitset next = closed;
      closed.for_each([&](int a) {
        c.positives.for_each([&](int b) {
          int sum = s.add(a, b);
          if (!next.test(sum)) {
            next.set(sum);
            grew = true;
          }
        });
      });
      closed = next;
    }
    c.additive_positives = closed;
  }
  return c;
}

bool check_positive_powers(const StarSemigroup& s) {
  ElementClasses c = classify_elements(s);
  bool ok = true;
  c.positives.for_each([&](int p) {
    Bitset seen;
    int x = p;
    while (!seen.test(x)) {
      if (!c.positives.test(x)) ok = false;
      seen.set(x);
      x = s.prod(x, p);
    }
  });
  return ok;
}

StarCancellationResult check_star_cancellation(const StarSemigroup& s) {
  const int n = s.n();
  for (int a = 0; a < n; ++a) {
    const int aa = s.prod(a, s.star(a));
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (s.prod(a, s.star(b)) == aa && s.prod(b, s.star(b)) == aa)
        return {false, {a, b}};
    }
  }
  return {true, {-1, -1}};
}

StarSemigroup unitize(const StarSemigroup& s) {
  const int n = s.n();
  const int m = n + 1;
  if (m > Bitset::kCapacity)
    throw CapExceeded("unitization exceeds the carrier capacity");
  std::vector<uint16_t> mul(static_cast<size_t>(m) * m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[a * m + b] = static_cast<uint16_t>(s.prod(a, b));
  for (int a = 0; a < m; ++a) {
    mul[a * m + n] = static_cast<uint16_t>(a);
    mul[n * m + a] = static_cast<uint16_t>(a);
  }
  std::vector<uint16_t> star(m);
  for (int a = 0; a < n; ++a) star[a] = static_cast<uint16_t>(s.star(a));
  star[n] = static_cast<uint16_t>(n);
  return StarSemigroup::unchecked(s.name() + "^1", m, std::move(mul),
                                  std::move(star), s.zero(), std::nullopt);
}

}  // namespace starlab
