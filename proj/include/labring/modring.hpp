#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace labring {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Coefficient ring Z/p^a. Only prime-power moduli are supported; anything
// composite is rejected at construction.
struct PrimePow {
  u64 p = 2;
  unsigned a = 1;
  u64 m = 2;  // p^a

  static PrimePow make(u64 p, unsigned a);

  u64 reduce(i64 x) const {
    i64 r = x % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
  }
  u64 add(u64 x, u64 y) const {
    u64 s = x + y;
    return s >= m ? s - m : s;
  }
  u64 sub(u64 x, u64 y) const { return x >= y ? x - y : x + (m - y); }
  u64 neg(u64 x) const { return x ? m - x : 0; }
  u64 mul(u64 x, u64 y) const { return static_cast<u64>(static_cast<u128>(x) * y % m); }
  u64 pow(u64 x, u64 e) const;
  // p^v as a plain integer, v <= a (so ppow(a) == m).
  u64 ppow(unsigned v) const;
  // p-adic valuation of the canonical representative; val(0) == a.
  unsigned val(u64 x) const;
  u64 unit_part(u64 x) const;  // x / p^val(x); unit_part(0) == 1
  bool is_unit(u64 x) const { return x % p != 0; }
  u64 inv_unit(u64 u) const;
  bool operator==(const PrimePow&) const = default;
};

using Vec = std::vector<u64>;

struct Mat {
  std::size_t rows = 0, cols = 0;
  Vec v;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c, 0) {}

  u64& at(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  u64 at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }
  Vec row(std::size_t i) const { return Vec(v.begin() + i * cols, v.begin() + (i + 1) * cols); }
  void set_row(std::size_t i, const Vec& r);
  void append_row(const Vec& r);

  static Mat identity(std::size_t n);
  bool operator==(const Mat&) const = default;
};

Vec vec_add(const PrimePow& R, const Vec& x, const Vec& y);
Vec vec_sub(const PrimePow& R, const Vec& x, const Vec& y);
Vec vec_scale(const PrimePow& R, u64 c, const Vec& x);
bool vec_is_zero(const Vec& x);

// Row-vector convention: maps act on the right, x -> x*A.
Vec vec_mat(const PrimePow& R, const Vec& x, const Mat& A);
Mat mat_mul(const PrimePow& R, const Mat& A, const Mat& B);
Mat mat_add(const PrimePow& R, const Mat& A, const Mat& B);
Mat mat_sub(const PrimePow& R, const Mat& A, const Mat& B);
Mat mat_scale(const PrimePow& R, u64 c, const Mat& A);
Mat mat_pow(const PrimePow& R, Mat A, u64 e);
Mat transpose(const Mat& A);

// Multiplicative order of an invertible matrix; throws if it exceeds cap.
u64 mat_order(const PrimePow& R, const Mat& A, u64 cap = 1u << 20);
bool mat_is_identity(const Mat& A);
// Inverse of a matrix whose reduction mod p is invertible; throws otherwise.
Mat mat_inverse(const PrimePow& R, const Mat& A);
bool mat_invertible(const PrimePow& R, const Mat& A);

}  // namespace labring
