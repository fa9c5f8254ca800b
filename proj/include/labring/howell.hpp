#pragma once

#include "labring/modring.hpp"

#include <cstddef>
#include <optional>

namespace labring {

// Canonical submodule of (Z/p^a)^dim, stored as the Howell normal form of a
// generating matrix. The Howell form is the unique canonical representative
// of the row span, so equality and membership are decidable directly on it.
// (Hermite form would not do: submodules of (Z/p^a)^d are not free.)
struct Span {
  PrimePow mod;
  std::size_t dim = 0;
  Mat h;                         // Howell rows, pivot columns strictly increasing
  std::vector<std::size_t> piv;  // pivot column per row
  std::vector<unsigned> pval;    // p-adic valuation of each pivot (pivot entry = p^pval)

  static Span from_rows(const PrimePow& R, std::size_t dim, const Mat& gens);
  static Span zero(const PrimePow& R, std::size_t dim);
  static Span full(const PrimePow& R, std::size_t dim);

  std::size_t nrows() const { return h.rows; }
  bool is_zero() const { return h.rows == 0; }
  bool is_full() const;
  bool contains(const Vec& x) const;
  bool contains(const Span& other) const;
  bool operator==(const Span& o) const { return dim == o.dim && mod == o.mod && h == o.h; }

  Span sum(const Span& other) const;
  Span intersect(const Span& other) const;
  Span scaled(u64 c) const;

  // log_p of the subgroup order: sum of (a - pval_i).
  unsigned order_exp() const;
};

// {x in (Z/p^a)^rows : x * M = 0}, row-vector convention.
Span left_kernel(const PrimePow& R, const Mat& M);

}  // namespace labring
