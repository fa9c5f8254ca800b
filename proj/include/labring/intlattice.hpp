#pragma once

#include "labring/howell.hpp"

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace labring {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;  // rectangular, row major

ZMat zmat_identity(std::size_t n);
ZVec zmat_mul_vec(const ZMat& A, const ZVec& x);         // A * x (column convention)
ZVec zvec_mat(const ZVec& x, const ZMat& A);             // x * A (row convention)
bool zvec_is_zero(const ZVec& x);

// Canonical row-style Hermite normal form: pivots positive, strictly
// increasing pivot columns, entries above a pivot reduced into [0, pivot).
// Zero rows dropped. Unique per integer row lattice.
ZMat hnf_rows(ZMat A);

// Integer lattice spanned by rows, canonicalized; supports exact membership.
struct ZLattice {
  std::size_t dim = 0;
  ZMat basis;  // HNF rows

  static ZLattice from_rows(std::size_t dim, const ZMat& rows);
  bool contains(const ZVec& v) const;
  bool contains(const ZLattice& other) const;
  bool operator==(const ZLattice& o) const { return dim == o.dim && basis == o.basis; }
  std::size_t rank() const { return basis.size(); }
};

struct SmithResult {
  std::vector<mpz_class> diag;  // d_1 | d_2 | ... (nonzero entries first, then zeros)
  ZMat U, V;                    // U * A * V = diag(d) as an r x c matrix
  std::size_t rows = 0, cols = 0;
};

SmithResult smith_form(ZMat A);

// Solve A * x = b over the integers (column convention); nullopt if no solution.
std::optional<ZVec> solve_integer(const ZMat& A, const ZVec& b);

// Invariant factors of a finite abelian p-group, largest first.
struct AbelianType {
  u64 p = 2;
  std::vector<unsigned> exps;  // invariant factors p^{e_1} >= ... >= p^{e_r}, all e_i >= 1

  unsigned rank() const { return static_cast<unsigned>(exps.size()); }
  unsigned exponent_exp() const { return exps.empty() ? 0 : exps.front(); }
  mpz_class order() const;
  bool operator==(const AbelianType&) const = default;
  std::string str() const;
};

// Invariant factors of generators/relations for Spans over the same Z/p^a,
// relations contained in generators (checked).
AbelianType invariant_factors(const Span& generators, const Span& relations);
AbelianType abelian_type_of(const Span& s);

}  // namespace labring
