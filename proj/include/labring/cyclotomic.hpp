#pragma once

#include "labring/modring.hpp"

namespace labring {

// Euler totient of p^k (k = 0 gives 1): the degree of Z[w] over Z for a
// primitive p^k-th root of unity w.
u64 euler_phi_pk(u64 p, unsigned k);

// Coefficients of Phi_{p^k}(x) = sum_{j<p} x^{j p^{k-1}}, degree phi(p^k).
std::vector<unsigned> cyclotomic_exponents(u64 p, unsigned k);

// Companion matrix of Phi_{p^k} over Z/m (m need not be a power of p: the
// same construction serves both the p-power extensions of section machinery
// and coprime-characteristic test modules). Multiplicative order p^k is
// verified, not assumed.
Mat cyclotomic_companion(const PrimePow& R, u64 p, unsigned k);

// Matrix of the substitution w -> w^t on the power basis 1, w, ..., w^{E-1},
// t coprime to p. Composing with the companion realizes the twist
// M * C = C^t * M used for complement actions.
Mat galois_subst(const PrimePow& R, u64 p, unsigned k, u64 t);

// Coordinates of x^e mod Phi_{p^k} over Z/m, e arbitrary.
Vec omega_power_coords(const PrimePow& R, u64 p, unsigned k, u64 e);

}  // namespace labring
