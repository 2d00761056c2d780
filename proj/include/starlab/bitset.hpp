// Fixed-capacity bitset used for element subsets of a finite *-semigroup.
//
// Carriers are capped at 512 elements, but unitizations may push an
// instance slightly above that, so the capacity leaves headroom.

#ifndef STARLAB_BITSET_HPP_
#define STARLAB_BITSET_HPP_

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace starlab {

class Bitset {
 public:
  static constexpr int kCapacity = 576;
  static constexpr int kWords    = kCapacity / 64;

  constexpr Bitset() = default;

  static Bitset universe(int n) {
    Bitset b;
    for (int i = 0; i < n; ++i) b.set(i);
    return b;
  }

  static Bitset single(int i) {
    Bitset b;
    b.set(i);
    return b;
  }

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  Bitset operator|(const Bitset& o) const {
    Bitset r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  // this \ o
  Bitset minus(const Bitset& o) const {
    Bitset r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }
  Bitset& operator&=(const Bitset& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
    return *this;
  }

  bool operator==(const Bitset& o) const { return w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return w_ != o.w_; }

  // Numeric bitmask order (bit i has weight 2^i); the canonical order for
  // closed-set families and report output.
  bool operator<(const Bitset& o) const {
    for (int i = kWords - 1; i >= 0; --i)
      if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
  }

  // -1 when empty / exhausted.
  int first() const { return next(-1); }
  int next(int i) const {
    for (++i; i < kCapacity;) {
      uint64_t rest = w_[i >> 6] >> (i & 63);
      if (rest) return i + __builtin_ctzll(rest);
      i = ((i >> 6) + 1) << 6;
    }
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  std::vector<int> to_indices() const {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  // "{0,2,4}" with sorted indices.
  std::string to_string() const {
    std::string s = "{";
    bool first_ = true;
    for_each([&](int i) {
      if (!first_) s += ',';
      first_ = false;
      s += std::to_string(i);
    });
    s += '}';
    return s;
  }

  size_t hash() const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (auto x : w_) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }

  // Lowest 64 bits; handy for carriers with n <= 16 in exhaustive sweeps.
  uint64_t low_word() const { return w_[0]; }

  static Bitset from_mask(uint64_t mask) {
    Bitset b;
    b.w_[0] = mask;
    return b;
  }

 private:
  std::array<uint64_t, kWords> w_{};
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace starlab

namespace std {
template <>
struct hash<starlab::Bitset> {
  size_t operator()(const starlab::Bitset& b) const { return b.hash(); }
};
}  // namespace std

#endif  // STARLAB_BITSET_HPP_
