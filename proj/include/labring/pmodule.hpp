#pragma once

#include "labring/intlattice.hpp"

namespace labring {

// Finite abelian p-group M = Z/p^{e_1} x ... x Z/p^{e_d} with exact subgroup
// arithmetic. Subgroups are tracked through the scaling embedding
//   (x_1, ..., x_d)  |->  (p^{a-e_1} x_1, ..., p^{a-e_d} x_d)   in (Z/p^a)^d
// with a = max e_i, which is an additive isomorphism onto its image, so all
// Howell-form machinery applies unchanged. Endomorphisms are integer matrices
// acting on the right (x -> x*A) subject to p^{e_i} A[i][j] = 0 mod p^{e_j}.
struct PModule {
  u64 p = 2;
  std::vector<unsigned> exps;  // e_i >= 1 per coordinate
  PrimePow amb;                // Z/p^a, a = max e_i
  std::size_t dim = 0;

  static PModule make(u64 p, std::vector<unsigned> exps);
  static PModule free_mod(const PrimePow& R, std::size_t dim);  // homocyclic e_i = a
  bool homocyclic() const;

  u64 coord_mod(std::size_t i) const { return amb.ppow(exps[i]); }
  Vec reduce(Vec x) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec sub(const Vec& x, const Vec& y) const;
  Vec scale(u64 c, const Vec& x) const;
  mpz_class order() const;
  unsigned exponent_exp() const;  // max e_i

  Vec embed(const Vec& native) const;
  Vec unembed(const Vec& embedded) const;  // throws if not in the embedded image
  Span full_span() const;
  Span span_of(const std::vector<Vec>& native_gens) const;
  std::vector<Vec> native_basis(const Span& s) const;  // Howell rows pulled back

  bool well_formed(const Mat& A) const;
  Mat transport(const Mat& A) const;  // embedded-coordinates action of A
  Vec apply(const Vec& x, const Mat& A) const;

  Span kernel(const Mat& A) const;  // {x : x*A = 0}, embedded span
  Span fixed(const Mat& A) const;   // kernel(A - I)
  Span image(const Mat& A) const;
  Span image_of(const Span& s, const Mat& A) const;
  Span omega(unsigned i) const;     // {x : p^i x = 0}
  Span agemo(unsigned i) const;     // p^i M
  Span omega_of(const Span& s, unsigned i) const;
  Span agemo_of(const Span& s, unsigned i) const;

  AbelianType type_of(const Span& subgroup) const;
  AbelianType quotient_type(const Span& generators, const Span& relations) const;
  u64 matrix_order(const Mat& A, u64 cap = 1u << 20) const;  // order as module automorphism
};

}  // namespace labring
