#include "labring/cyclotomic.hpp"

namespace labring {

u64 euler_phi_pk(u64 p, unsigned k) {
  if (k == 0) return 1;
  u64 e = p - 1;
  for (unsigned i = 1; i < k; ++i) e *= p;
  return e;
}

std::vector<unsigned> cyclotomic_exponents(u64 p, unsigned k) {
  std::vector<unsigned> exps;
  u64 step = 1;
  for (unsigned i = 1; i < k; ++i) step *= p;
  for (u64 j = 0; j < p; ++j) exps.push_back(static_cast<unsigned>(j * step));
  return exps;
}

// multiply coords by x, reducing x^E via Phi_{p^k}(x) = 0
static void mul_by_x(const PrimePow& R, Vec& c, u64 p, unsigned k) {
  std::size_t E = c.size();
  u64 top = c[E - 1];
  for (std::size_t j = E - 1; j > 0; --j) c[j] = c[j - 1];
  c[0] = 0;
  if (top == 0) return;
  // x^E = -(sum of x^{j p^{k-1}} for j < p-1)
  u64 step = 1;
  for (unsigned i = 1; i < k; ++i) step *= p;
  for (u64 j = 0; j + 1 < p; ++j) c[j * step] = R.sub(c[j * step], top);
}

Vec omega_power_coords(const PrimePow& R, u64 p, unsigned k, u64 e) {
  std::size_t E = static_cast<std::size_t>(euler_phi_pk(p, k));
  u64 n = 1;
  for (unsigned i = 0; i < k; ++i) n *= p;
  e %= n;  // w has order p^k
  Vec c(E, 0);
  c[0] = 1 % R.m;
  for (u64 i = 0; i < e; ++i) mul_by_x(R, c, p, k);
  return c;
}

Mat cyclotomic_companion(const PrimePow& R, u64 p, unsigned k) {
  if (k == 0) return Mat::identity(1);
  std::size_t E = static_cast<std::size_t>(euler_phi_pk(p, k));
  Mat C(E, E);
  for (std::size_t j = 0; j < E; ++j) {
    Vec c(E, 0);
    c[j] = 1 % R.m;
    mul_by_x(R, c, p, k);
    C.set_row(j, c);
  }
  u64 n = 1;
  for (unsigned i = 0; i < k; ++i) n *= p;
  u64 ord = mat_order(R, C, n);
  // Mod 2 the image of w collapses one step (w^{2^{k-1}} = -1 = 1); everywhere
  // else the companion has exact order p^k.
  u64 expect = (R.p == 2 && R.a == 1 && p == 2) ? std::max<u64>(1, n / 2) : n;
  if (ord != expect) throw std::logic_error("cyclotomic companion: unexpected multiplicative order");
  return C;
}

Mat galois_subst(const PrimePow& R, u64 p, unsigned k, u64 t) {
  if (t % p == 0) throw std::invalid_argument("galois_subst: exponent not coprime to p");
  std::size_t E = static_cast<std::size_t>(euler_phi_pk(p, k));
  Mat M(E, E);
  for (std::size_t j = 0; j < E; ++j) M.set_row(j, omega_power_coords(R, p, k, t * j));
  if (!mat_invertible(R, M)) throw std::logic_error("galois_subst: substitution matrix not invertible");
  return M;
}

}  // namespace labring
