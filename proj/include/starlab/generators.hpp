// Gallery generators: multiplicative Z_n, Boolean matrix monoids, matrix
// rings over Z_m, and direct products.

#ifndef STARLAB_GENERATORS_HPP_
#define STARLAB_GENERATORS_HPP_

#include <string>
#include <vector>

#include "starlab/semigroup.hpp"

namespace starlab {

// Z_n under multiplication mod n, star = identity, zero = 0.  Proper iff n
// is squarefree.
StarSemigroup gen_zn_mult(int n);

// k x k Boolean matrices under the Boolean product, star = transpose.
// Carrier size 2^(k*k); k <= 3 keeps it within the 512-element cap.
StarSemigroup gen_boolean_matrices(int k);

// M_k(Z_m) with transpose star and the ring extension attached.  The
// scalar involution is the identity, matching the Boolean case.
StarSemigroup gen_matrix_ring(int k, int m);

// Componentwise product; carries a ring extension iff both factors do.
StarSemigroup direct_product(const StarSemigroup& a, const StarSemigroup& b);

// Parses "zn:6", "bool:2", "matring:2,2" or "prod:<spec>;<spec>".
StarSemigroup generate_from_spec(const std::string& spec);

// q p^n s over M_2(Z) with q = [[1,1],[1,1]]^2, p = [[1,0],[0,2]]^2 and
// s = [[16,-4],[-4,1]]^2.  Returns, for n = 0..max_n, whether the product
// is the zero matrix; exact integer arithmetic throughout.
std::vector<bool> qpns_counterexample(int max_n);

struct GalleryEntry {
  std::string spec;
  std::string note;
};

// The instances the analysis suites run over.
std::vector<GalleryEntry> gallery();

}  // namespace starlab

#endif  // STARLAB_GENERATORS_HPP_
