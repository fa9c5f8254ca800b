#include "labring/modring.hpp"

#include <algorithm>

namespace labring {

static bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePow PrimePow::make(u64 p, unsigned a) {
  if (!is_prime_u64(p)) throw std::invalid_argument("modulus base " + std::to_string(p) + " is not prime");
  if (a == 0) throw std::invalid_argument("modulus exponent must be positive");
  PrimePow R;
  R.p = p;
  R.a = a;
  u64 m = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (m > (u64(1) << 62) / p) throw std::invalid_argument("modulus p^a does not fit in 63 bits");
    m *= p;
  }
  R.m = m;
  return R;
}

u64 PrimePow::pow(u64 x, u64 e) const {
  u64 r = 1 % m;
  x %= m;
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

u64 PrimePow::ppow(unsigned v) const {
  u64 r = 1;
  for (unsigned i = 0; i < v && i < a; ++i) r *= p;
  return v >= a ? m : r;
}

unsigned PrimePow::val(u64 x) const {
  if (x == 0) return a;
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

u64 PrimePow::unit_part(u64 x) const {
  if (x == 0) return 1;
  while (x % p == 0) x /= p;
  return x;
}

u64 PrimePow::inv_unit(u64 u) const {
  if (!is_unit(u)) throw std::invalid_argument("inv_unit of a non-unit");
  // extended Euclid against m
  i64 t = 0, newt = 1;
  i64 r = static_cast<i64>(m), newr = static_cast<i64>(u % m);
  while (newr != 0) {
    i64 q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return reduce(t);
}

void Mat::set_row(std::size_t i, const Vec& r) {
  std::copy(r.begin(), r.end(), v.begin() + i * cols);
}

void Mat::append_row(const Vec& r) {
  if (cols == 0) cols = r.size();
  if (r.size() != cols) throw std::invalid_argument("row length mismatch");
  v.insert(v.end(), r.begin(), r.end());
  ++rows;
}

Mat Mat::identity(std::size_t n) {
  Mat I(n, n);
  for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Vec vec_add(const PrimePow& R, const Vec& x, const Vec& y) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = R.add(x[i], y[i]);
  return z;
}

Vec vec_sub(const PrimePow& R, const Vec& x, const Vec& y) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = R.sub(x[i], y[i]);
  return z;
}

Vec vec_scale(const PrimePow& R, u64 c, const Vec& x) {
  Vec z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = R.mul(c, x[i]);
  return z;
}

bool vec_is_zero(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](u64 v) { return v == 0; });
}

Vec vec_mat(const PrimePow& R, const Vec& x, const Mat& A) {
  if (x.size() != A.rows) throw std::invalid_argument("vec_mat dimension mismatch");
  Vec y(A.cols, 0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < A.cols; ++j) y[j] = R.add(y[j], R.mul(x[i], A.at(i, j)));
  }
  return y;
}

Mat mat_mul(const PrimePow& R, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul dimension mismatch");
  Mat C(A.rows, B.cols);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < A.cols; ++k) {
      u64 a = A.at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) = R.add(C.at(i, j), R.mul(a, B.at(k, j)));
    }
  return C;
}

Mat mat_add(const PrimePow& R, const Mat& A, const Mat& B) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.v.size(); ++i) C.v[i] = R.add(A.v[i], B.v[i]);
  return C;
}

Mat mat_sub(const PrimePow& R, const Mat& A, const Mat& B) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.v.size(); ++i) C.v[i] = R.sub(A.v[i], B.v[i]);
  return C;
}

Mat mat_scale(const PrimePow& R, u64 c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < A.v.size(); ++i) C.v[i] = R.mul(c, A.v[i]);
  return C;
}

Mat mat_pow(const PrimePow& R, Mat A, u64 e) {
  Mat r = Mat::identity(A.rows);
  while (e) {
    if (e & 1) r = mat_mul(R, r, A);
    A = mat_mul(R, A, A);
    e >>= 1;
  }
  return r;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

bool mat_is_identity(const Mat& A) {
  if (A.rows != A.cols) return false;
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j)
      if (A.at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

u64 mat_order(const PrimePow& R, const Mat& A, u64 cap) {
  Mat P = A;
  for (u64 k = 1; k <= cap; ++k) {
    if (mat_is_identity(P)) return k;
    P = mat_mul(R, P, A);
  }
  throw std::runtime_error("mat_order: order exceeds cap");
}

Mat mat_inverse(const PrimePow& R, const Mat& A) {
  if (A.rows != A.cols) throw std::invalid_argument("mat_inverse: not square");
  std::size_t n = A.rows;
  Mat W = A, I = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t r = c; r < n; ++r)
      if (R.is_unit(W.at(r, c))) {
        piv = r;
        break;
      }
    if (piv == n) throw std::runtime_error("mat_inverse: matrix not invertible mod p");
    if (piv != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(W.v[piv * n + j], W.v[c * n + j]);
        std::swap(I.v[piv * n + j], I.v[c * n + j]);
      }
    u64 inv = R.inv_unit(W.at(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      W.at(c, j) = R.mul(inv, W.at(c, j));
      I.at(c, j) = R.mul(inv, I.at(c, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      u64 f = W.at(r, c);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        W.at(r, j) = R.sub(W.at(r, j), R.mul(f, W.at(c, j)));
        I.at(r, j) = R.sub(I.at(r, j), R.mul(f, I.at(c, j)));
      }
    }
  }
  return I;
}

bool mat_invertible(const PrimePow& R, const Mat& A) {
  try {
    mat_inverse(R, A);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace labring
