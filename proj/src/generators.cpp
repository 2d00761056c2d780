#include "starlab/generators.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace starlab {

namespace {

StarSemigroup from_tables(std::string name, int n, std::vector<uint16_t> mul,
                          std::vector<uint16_t> star, int zero,
                          std::optional<RingExtension> ring) {
  return StarSemigroup::unchecked(std::move(name), n, std::move(mul),
                                  std::move(star), zero, std::move(ring));
}

}  // namespace

StarSemigroup gen_zn_mult(int n) {
  if (n < 1) throw std::invalid_argument("gen_zn_mult: n must be >= 1");
  if (n > kCarrierCap) throw CapExceeded("gen_zn_mult: carrier cap exceeded");
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<uint16_t>((a * b) % n);
  std::vector<uint16_t> star(n);
  for (int a = 0; a < n; ++a) star[a] = static_cast<uint16_t>(a);
  return from_tables("zn:" + std::to_string(n), n, std::move(mul),
                     std::move(star), 0, std::nullopt);
}

StarSemigroup gen_boolean_matrices(int k) {
  if (k < 1) throw std::invalid_argument("gen_boolean_matrices: k must be >= 1");
  if (k > 3)
    throw CapExceeded("gen_boolean_matrices: k <= 3 (512 elements) required");
  const int bits = k * k;
  const int n = 1 << bits;
  auto at = [&](int m, int i, int j) { return (m >> (i * k + j)) & 1; };
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int v = 0;
          for (int t = 0; t < k; ++t) v |= at(a, i, t) & at(b, t, j);
          c |= v << (i * k + j);
        }
      mul[a * n + b] = static_cast<uint16_t>(c);
    }
  std::vector<uint16_t> star(n);
  for (int a = 0; a < n; ++a) {
    int t = 0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) t |= at(a, j, i) << (i * k + j);
    star[a] = static_cast<uint16_t>(t);
  }
  return from_tables("bool:" + std::to_string(k), n, std::move(mul),
                     std::move(star), 0, std::nullopt);
}

StarSemigroup gen_matrix_ring(int k, int m) {
  if (k < 1 || m < 2)
    throw std::invalid_argument("gen_matrix_ring: need k >= 1, m >= 2");
  const int cells = k * k;
  long long size = 1;
  for (int i = 0; i < cells; ++i) {
    size *= m;
    if (size > kCarrierCap)
      throw CapExceeded("gen_matrix_ring: carrier cap exceeded");
  }
  const int n = static_cast<int>(size);
  // Element index = base-m digits of the matrix entries, row-major.
  std::vector<int> pow(cells + 1, 1);
  for (int i = 1; i <= cells; ++i) pow[i] = pow[i - 1] * m;
  auto at = [&](int e, int i, int j) { return (e / pow[i * k + j]) % m; };
  auto enc = [&](const std::vector<int>& cell) {
    int e = 0;
    for (int i = 0; i < cells; ++i) e += (cell[i] % m) * pow[i];
    return e;
  };
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  std::vector<uint16_t> add(static_cast<size_t>(n) * n);
  std::vector<int> cell(cells);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          int v = 0;
          for (int t = 0; t < k; ++t) v += at(a, i, t) * at(b, t, j);
          cell[i * k + j] = v % m;
        }
      mul[a * n + b] = static_cast<uint16_t>(enc(cell));
      for (int i = 0; i < cells; ++i)
        cell[i] = (at(a, i / k, i % k) + at(b, i / k, i % k)) % m;
      add[a * n + b] = static_cast<uint16_t>(enc(cell));
    }
  std::vector<uint16_t> star(n), neg(n);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) cell[i * k + j] = at(a, j, i);
    star[a] = static_cast<uint16_t>(enc(cell));
    for (int i = 0; i < cells; ++i)
      cell[i] = (m - at(a, i / k, i % k)) % m;
    neg[a] = static_cast<uint16_t>(enc(cell));
  }
  return from_tables(
      "matring:" + std::to_string(k) + "," + std::to_string(m), n,
      std::move(mul), std::move(star), 0,
      RingExtension{std::move(add), std::move(neg)});
}

StarSemigroup direct_product(const StarSemigroup& a, const StarSemigroup& b) {
  const long long size = static_cast<long long>(a.n()) * b.n();
  if (size > kCarrierCap)
    throw CapExceeded("direct_product: carrier cap exceeded");
  const int n = static_cast<int>(size);
  auto enc = [&](int x, int y) { return x * b.n() + y; };
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n);
  for (int x1 = 0; x1 < a.n(); ++x1)
    for (int y1 = 0; y1 < b.n(); ++y1)
      for (int x2 = 0; x2 < a.n(); ++x2)
        for (int y2 = 0; y2 < b.n(); ++y2)
          mul[enc(x1, y1) * n + enc(x2, y2)] =
              static_cast<uint16_t>(enc(a.prod(x1, x2), b.prod(y1, y2)));
  std::vector<uint16_t> star(n);
  for (int x = 0; x < a.n(); ++x)
    for (int y = 0; y < b.n(); ++y)
      star[enc(x, y)] = static_cast<uint16_t>(enc(a.star(x), b.star(y)));
  std::optional<RingExtension> ring;
  if (a.has_ring() && b.has_ring()) {
    RingExtension r;
    r.add.resize(static_cast<size_t>(n) * n);
    r.neg.resize(n);
    for (int x1 = 0; x1 < a.n(); ++x1)
      for (int y1 = 0; y1 < b.n(); ++y1) {
        r.neg[enc(x1, y1)] = static_cast<uint16_t>(enc(a.neg(x1), b.neg(y1)));
        for (int x2 = 0; x2 < a.n(); ++x2)
          for (int y2 = 0; y2 < b.n(); ++y2)
            r.add[enc(x1, y1) * n + enc(x2, y2)] =
                static_cast<uint16_t>(enc(a.add(x1, x2), b.add(y1, y2)));
      }
    ring = std::move(r);
  }
  return from_tables(a.name() + "*" + b.name(), n, std::move(mul),
                     std::move(star), enc(a.zero(), b.zero()),
                     std::move(ring));
}

StarSemigroup generate_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad generator spec: " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (kind == "zn") return gen_zn_mult(std::stoi(args));
  if (kind == "bool") return gen_boolean_matrices(std::stoi(args));
  if (kind == "matring") {
    auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("matring spec needs k,m: " + spec);
    return gen_matrix_ring(std::stoi(args.substr(0, comma)),
                           std::stoi(args.substr(comma + 1)));
  }
  if (kind == "prod") {
    auto semi = args.find(';');
    if (semi == std::string::npos)
      throw std::invalid_argument("prod spec needs <a>;<b>: " + spec);
    return direct_product(generate_from_spec(args.substr(0, semi)),
                          generate_from_spec(args.substr(semi + 1)));
  }
  throw std::invalid_argument("unknown generator kind: " + kind);
}

namespace {

using Mat2 = std::array<long long, 4>;

Mat2 mat_mul_checked(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      long long acc = 0;
      for (int t = 0; t < 2; ++t) {
        long long prod;
        if (__builtin_mul_overflow(a[i * 2 + t], b[t * 2 + j], &prod) ||
            __builtin_add_overflow(acc, prod, &acc))
          throw ArithmeticOverflow("qpns_counterexample: 64-bit overflow");
      }
      c[i * 2 + j] = acc;
    }
  return c;
}

}  // namespace

std::vector<bool> qpns_counterexample(int max_n) {
  if (max_n < 2)
    throw std::invalid_argument("qpns_counterexample: max_n must be >= 2");
  const Mat2 q = mat_mul_checked({1, 1, 1, 1}, {1, 1, 1, 1});
  const Mat2 p = mat_mul_checked({1, 0, 0, 2}, {1, 0, 0, 2});
  const Mat2 s = mat_mul_checked({16, -4, -4, 1}, {16, -4, -4, 1});
  std::vector<bool> zero_at;
  Mat2 qp = q;  // q p^n, starting at n = 0
  for (int n = 0; n <= max_n; ++n) {
    Mat2 full = mat_mul_checked(qp, s);
    zero_at.push_back(full == Mat2{0, 0, 0, 0});
    qp = mat_mul_checked(qp, p);
  }
  return zero_at;
}

std::vector<GalleryEntry> gallery() {
  std::vector<GalleryEntry> g;
  for (int n = 2; n <= 30; ++n)
    g.push_back({"zn:" + std::to_string(n), "multiplicative Z_n"});
  g.push_back({"bool:1", "1x1 Boolean matrices"});
  g.push_back({"bool:2", "2x2 Boolean matrices"});
  g.push_back({"bool:3", "3x3 Boolean matrices"});
  g.push_back({"matring:2,2", "M_2(Z_2), *-ring, not proper"});
  g.push_back({"matring:2,3", "M_2(Z_3), proper *-ring"});
  g.push_back({"matring:1,6", "Z_6 as a *-ring"});
  g.push_back({"matring:1,10", "Z_10 as a *-ring"});
  g.push_back({"prod:zn:6;bool:2", "direct product"});
  return g;
}

}  // namespace starlab
