#include "labring/pmodule.hpp"

#include <algorithm>

namespace labring {

PModule PModule::make(u64 p, std::vector<unsigned> exps) {
  if (exps.empty()) throw std::invalid_argument("PModule: empty coordinate list");
  for (unsigned e : exps)
    if (e == 0) throw std::invalid_argument("PModule: zero exponent coordinate");
  PModule M;
  M.p = p;
  M.exps = std::move(exps);
  M.dim = M.exps.size();
  M.amb = PrimePow::make(p, *std::max_element(M.exps.begin(), M.exps.end()));
  return M;
}

PModule PModule::free_mod(const PrimePow& R, std::size_t dim) {
  return make(R.p, std::vector<unsigned>(dim, R.a));
}

bool PModule::homocyclic() const {
  return std::all_of(exps.begin(), exps.end(), [&](unsigned e) { return e == amb.a; });
}

Vec PModule::reduce(Vec x) const {
  for (std::size_t i = 0; i < dim; ++i) x[i] %= coord_mod(i);
  return x;
}

Vec PModule::add(const Vec& x, const Vec& y) const {
  Vec z(dim);
  for (std::size_t i = 0; i < dim; ++i) z[i] = (x[i] + y[i]) % coord_mod(i);
  return z;
}

Vec PModule::sub(const Vec& x, const Vec& y) const {
  Vec z(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    u64 m = coord_mod(i);
    z[i] = (x[i] + m - y[i] % m) % m;
  }
  return z;
}

Vec PModule::scale(u64 c, const Vec& x) const {
  Vec z(dim);
  for (std::size_t i = 0; i < dim; ++i) z[i] = static_cast<u64>(static_cast<u128>(c) * x[i] % coord_mod(i));
  return z;
}

mpz_class PModule::order() const {
  mpz_class o = 1;
  for (unsigned e : exps)
    for (unsigned i = 0; i < e; ++i) o *= static_cast<unsigned long>(p);
  return o;
}

unsigned PModule::exponent_exp() const { return amb.a; }

Vec PModule::embed(const Vec& native) const {
  Vec y(dim);
  for (std::size_t i = 0; i < dim; ++i) y[i] = amb.mul(amb.ppow(amb.a - exps[i]), native[i] % coord_mod(i));
  return y;
}

Vec PModule::unembed(const Vec& embedded) const {
  Vec x(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    u64 s = amb.ppow(amb.a - exps[i]);
    if (embedded[i] % s != 0) throw std::logic_error("unembed: vector outside embedded module");
    x[i] = embedded[i] / s;
  }
  return x;
}

Span PModule::full_span() const {
  Mat g(0, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec u(dim, 0);
    u[i] = 1;
    g.append_row(embed(u));
  }
  return Span::from_rows(amb, dim, g);
}

Span PModule::span_of(const std::vector<Vec>& native_gens) const {
  Mat g(0, dim);
  for (const auto& v : native_gens) g.append_row(embed(reduce(v)));
  return Span::from_rows(amb, dim, g);
}

std::vector<Vec> PModule::native_basis(const Span& s) const {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < s.h.rows; ++i) out.push_back(unembed(s.h.row(i)));
  return out;
}

bool PModule::well_formed(const Mat& A) const {
  if (A.rows != dim || A.cols != dim) return false;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      // p^{e_i} A_ij must vanish mod p^{e_j}: A_ij divisible by p^{max(0, e_j - e_i)}
      if (exps[j] > exps[i]) {
        u64 need = amb.ppow(exps[j] - exps[i]);
        if ((A.at(i, j) % coord_mod(j)) % need != 0) return false;
      }
    }
  return true;
}

Mat PModule::transport(const Mat& A) const {
  if (!well_formed(A)) throw std::invalid_argument("module matrix not well formed for coordinate orders");
  Mat T(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      u64 v = A.at(i, j) % amb.m;
      // scale by p^{e_i - e_j}: multiply or exact-divide
      if (exps[i] >= exps[j]) {
        T.at(i, j) = amb.mul(v, amb.ppow(exps[i] - exps[j]));
      } else {
        u64 need = amb.ppow(exps[j] - exps[i]);
        u64 w = A.at(i, j) % coord_mod(j);
        T.at(i, j) = (w / need) % amb.m;
      }
    }
  return T;
}

Vec PModule::apply(const Vec& x, const Mat& A) const {
  Vec y(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      u64 m = coord_mod(j);
      y[j] = (y[j] + static_cast<u64>(static_cast<u128>(x[i] % m) * (A.at(i, j) % m) % m)) % m;
    }
  }
  return y;
}

Span PModule::kernel(const Mat& A) const {
  Mat T = transport(A);
  Span K = left_kernel(amb, T);
  return K.intersect(full_span());
}

Span PModule::fixed(const Mat& A) const {
  Mat D = mat_sub(amb, A, Mat::identity(dim));
  return kernel(D);
}

Span PModule::image(const Mat& A) const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec u(dim, 0);
    u[i] = 1;
    gens.push_back(apply(u, A));
  }
  return span_of(gens);
}

Span PModule::image_of(const Span& s, const Mat& A) const {
  std::vector<Vec> gens;
  for (const auto& v : native_basis(s)) gens.push_back(apply(v, A));
  return span_of(gens);
}

Span PModule::omega(unsigned i) const { return omega_of(full_span(), i); }

Span PModule::agemo(unsigned i) const { return agemo_of(full_span(), i); }

Span PModule::omega_of(const Span& s, unsigned i) const {
  // {x in s : p^i x = 0}: elements of s annihilated by multiplication by p^i
  Mat mult = mat_scale(amb, amb.ppow(std::min(i, amb.a)), Mat::identity(dim));
  // kernel on the whole module, then cut down to s
  Span K = kernel(mult);
  return K.intersect(s);
}

Span PModule::agemo_of(const Span& s, unsigned i) const {
  std::vector<Vec> gens;
  u64 c = amb.ppow(std::min(i, amb.a));
  for (const auto& v : native_basis(s)) gens.push_back(scale(c, v));
  return span_of(gens);
}

AbelianType PModule::type_of(const Span& subgroup) const {
  return invariant_factors(subgroup, Span::zero(amb, dim));
}

AbelianType PModule::quotient_type(const Span& generators, const Span& relations) const {
  return invariant_factors(generators, relations);
}

u64 PModule::matrix_order(const Mat& A, u64 cap) const {
  if (!well_formed(A)) throw std::invalid_argument("module matrix not well formed for coordinate orders");
  // iterate the action on the native generators until it is the identity
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < dim; ++i) {
    Vec u(dim, 0);
    u[i] = 1;
    basis.push_back(u);
  }
  std::vector<Vec> cur = basis;
  for (u64 k = 1; k <= cap; ++k) {
    bool ident = true;
    for (std::size_t i = 0; i < dim; ++i) {
      cur[i] = apply(cur[i], A);
      if (reduce(cur[i]) != basis[i]) ident = false;
    }
    if (ident) return k;
  }
  throw std::runtime_error("module matrix order exceeds cap");
}

}  // namespace labring
