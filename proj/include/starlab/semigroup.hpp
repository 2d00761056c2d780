// Finite *-semigroups with a designated absorbing zero, plus validation,
// properness and element classification.
//
// A carrier is always the index range 0..n-1.  The multiplication table,
// the involution and the optional ring tables are immutable once the
// instance has been validated, so instances can be shared freely between
// concurrent analyses.

#ifndef STARLAB_SEMIGROUP_HPP_
#define STARLAB_SEMIGROUP_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "starlab/bitset.hpp"

namespace starlab {

// Hard cap on generated carriers.  Exhaustive-subset sweeps additionally
// require n <= kExhaustiveSubsetCap, since they walk all 2^n subsets.
constexpr int kCarrierCap         = 512;
constexpr int kExhaustiveSubsetCap = 16;

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ArithmeticOverflow : std::runtime_error {
  explicit ArithmeticOverflow(const std::string& what)
      : std::runtime_error(what) {}
};

// Unvalidated input tables, as read from a file or assembled by hand.
struct RawTables {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> star;
  int zero = 0;
  std::optional<std::vector<std::vector<int>>> add;
  std::optional<std::vector<int>> neg;
};

enum class AxiomKind {
  kShape,             // tables not rectangular / wrong sizes
  kIndexRange,        // entry out of 0..n-1
  kAssociativity,     // (ab)c != a(bc)
  kInvolution,        // a** != a
  kAntihomomorphism,  // (ab)* != b*a*
  kAbsorbingZero,     // 0s != 0 or s0 != 0
  kAddAssociativity,
  kAddCommutativity,
  kAddIdentity,       // a + 0 != a
  kAddInverse,        // a + (-a) != 0
  kDistributivity,
  kStarAdditivity,    // (a+b)* != a* + b*
};

const char* axiom_kind_name(AxiomKind k);

struct AxiomViolation {
  AxiomKind kind;
  std::array<int, 3> witness{-1, -1, -1};  // unused slots stay -1
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<AxiomViolation> violations;  // one witness per violated axiom
};

struct ValidationError : std::runtime_error {
  ValidationReport report;
  explicit ValidationError(ValidationReport r)
      : std::runtime_error("semigroup axioms violated"), report(std::move(r)) {}
};

struct RingExtension {
  std::vector<uint16_t> add;  // n x n, row-major
  std::vector<uint16_t> neg;  // length n
};

class StarSemigroup {
 public:
  StarSemigroup() = default;

  int n() const { return n_; }
  int zero() const { return zero_; }
  const std::string& name() const { return name_; }
  bool has_ring() const { return ring_.has_value(); }
  const RingExtension& ring() const { return *ring_; }

  int prod(int a, int b) const { return mul_[a * n_ + b]; }
  int star(int a) const { return star_[a]; }
  int add(int a, int b) const { return ring_->add[a * n_ + b]; }
  int neg(int a) const { return ring_->neg[a]; }

  // a1 * a2 * ... folded left-to-right.
  template <typename... Ints>
  int prod_n(int a, Ints... rest) const {
    int acc = a;
    ((acc = prod(acc, rest)), ...);
    return acc;
  }

  const std::vector<uint16_t>& mul_table() const { return mul_; }
  const std::vector<uint16_t>& star_table() const { return star_; }

  void set_name(const std::string& s) { name_ = s; }

  // Constructs without checking the axioms; make_semigroup is the
  // validating entry point.
  static StarSemigroup unchecked(std::string name, int n,
                                 std::vector<uint16_t> mul,
                                 std::vector<uint16_t> star, int zero,
                                 std::optional<RingExtension> ring);

 private:
  int n_ = 0;
  std::vector<uint16_t> mul_;
  std::vector<uint16_t> star_;
  int zero_ = 0;
  std::optional<RingExtension> ring_;
  std::string name_;
};

// Checks every axiom family and reports one witnessing triple per violated
// axiom.  Shape or index-range problems short-circuit the table scans.
ValidationReport validate(const RawTables& raw);
ValidationReport validate(const StarSemigroup& s);

// Throws ValidationError when the tables fail validation.
StarSemigroup make_semigroup(const RawTables& raw);

struct PropernessResult {
  bool proper = false;
  int witness = -1;  // nonzero s with s*s = 0, when not proper
};

// 0 is proper and absorbing:  s*s = 0  =>  s = 0.  The absorbing half is a
// validation axiom, so only the rootedness of {0} is scanned here.
PropernessResult is_proper(const StarSemigroup& s);

struct ElementClasses {
  Bitset positives;       // S_+ = S^2 = { t*t : t in S }
  Bitset self_adjoints;   // S_sa
  Bitset idempotents;     // S_idem
  Bitset projections;     // S_proj = S_sa cap S_idem = S_+ cap S_idem
  std::optional<Bitset> additive_positives;  // S_++, ring case only
};

ElementClasses classify_elements(const StarSemigroup& s);

// s in S_+  =>  s^n in S_+ for all n >= 1; powers cycle, so one cycle per
// element is scanned.
bool check_positive_powers(const StarSemigroup& s);

struct StarCancellationResult {
  bool cancellative = false;
  std::array<int, 2> witness{-1, -1};  // a, b with aa*=ab*=bb* but a != b
};

// *-cancellation:  aa* = ab* = bb*  =>  a = b.  Cancellation implies
// properness (not conversely), which callers cross-assert.
StarCancellationResult check_star_cancellation(const StarSemigroup& s);

// Adjoins a fresh identity at index n, even when an identity already
// exists.  The ring extension, if any, is dropped: a unitization of a ring
// would need a genuinely different additive structure.
StarSemigroup unitize(const StarSemigroup& s);

namespace ref {
// Naive definitional associativity scan, kept as the serial reference for
// the OpenMP kernel in validate().
bool associative_naive(int n, const std::vector<uint16_t>& mul,
                       std::array<int, 3>* witness);
}  // namespace ref

}  // namespace starlab

#endif  // STARLAB_SEMIGROUP_HPP_
