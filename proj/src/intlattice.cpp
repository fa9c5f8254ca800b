#include "labring/intlattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace labring {

ZMat zmat_identity(std::size_t n) {
  ZMat I(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

ZVec zmat_mul_vec(const ZMat& A, const ZVec& x) {
  ZVec y(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += A[i][j] * x[j];
  return y;
}

ZVec zvec_mat(const ZVec& x, const ZMat& A) {
  if (A.empty()) return {};
  ZVec y(A[0].size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) y[j] += x[i] * A[i][j];
  }
  return y;
}

bool zvec_is_zero(const ZVec& x) {
  return std::all_of(x.begin(), x.end(), [](const mpz_class& v) { return v == 0; });
}

ZMat hnf_rows(ZMat A) {
  A.erase(std::remove_if(A.begin(), A.end(), zvec_is_zero), A.end());
  if (A.empty()) return A;
  std::size_t cols = A[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < A.size(); ++col) {
    // gcd the column below `row` into a single pivot by repeated remainder steps
    while (true) {
      std::size_t best = A.size();
      for (std::size_t i = row; i < A.size(); ++i)
        if (A[i][col] != 0 && (best == A.size() || cmp(abs(A[i][col]), abs(A[best][col])) < 0)) best = i;
      if (best == A.size()) break;  // column zero below
      std::swap(A[row], A[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < A.size(); ++i) {
        if (A[i][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][col].get_mpz_t(), A[row][col].get_mpz_t());
        for (std::size_t j = col; j < cols; ++j) A[i][j] -= q * A[row][j];
        if (A[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (A[row][col] == 0) continue;
    if (A[row][col] < 0)
      for (std::size_t j = col; j < cols; ++j) A[row][j] = -A[row][j];
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < row; ++i) {
      if (A[i][col] == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), A[i][col].get_mpz_t(), A[row][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = col; j < cols; ++j) A[i][j] -= q * A[row][j];
    }
    ++row;
  }
  A.resize(row);
  return A;
}

ZLattice ZLattice::from_rows(std::size_t dim, const ZMat& rows) {
  for (const auto& r : rows)
    if (r.size() != dim) throw std::invalid_argument("lattice row width mismatch");
  ZLattice L;
  L.dim = dim;
  L.basis = hnf_rows(rows);
  return L;
}

bool ZLattice::contains(const ZVec& v) const {
  if (v.size() != dim) throw std::invalid_argument("lattice membership width mismatch");
  ZVec r = v;
  for (const auto& row : basis) {
    std::size_t c = 0;
    while (c < dim && row[c] == 0) ++c;
    if (c == dim) continue;
    if (r[c] == 0) continue;
    if (r[c] % row[c] != 0) return false;
    mpz_class q = r[c] / row[c];
    for (std::size_t j = c; j < dim; ++j) r[j] -= q * row[j];
  }
  return zvec_is_zero(r);
}

bool ZLattice::contains(const ZLattice& other) const {
  for (const auto& row : other.basis)
    if (!contains(row)) return false;
  return true;
}

SmithResult smith_form(ZMat A) {
  SmithResult res;
  res.rows = A.size();
  res.cols = A.empty() ? 0 : A[0].size();
  res.U = zmat_identity(res.rows);
  res.V = zmat_identity(res.cols);
  std::size_t n = std::min(res.rows, res.cols);

  auto row_sub = [&](std::size_t i, std::size_t k, const mpz_class& q) {
    for (std::size_t j = 0; j < res.cols; ++j) A[i][j] -= q * A[k][j];
    for (std::size_t j = 0; j < res.rows; ++j) res.U[i][j] -= q * res.U[k][j];
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const mpz_class& q) {
    for (std::size_t i = 0; i < res.rows; ++i) A[i][j] -= q * A[i][k];
    for (std::size_t i = 0; i < res.cols; ++i) res.V[i][j] -= q * res.V[i][k];
  };
  auto row_swap = [&](std::size_t i, std::size_t k) {
    std::swap(A[i], A[k]);
    std::swap(res.U[i], res.U[k]);
  };
  auto col_swap = [&](std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < res.rows; ++i) std::swap(A[i][j], A[i][k]);
    for (std::size_t i = 0; i < res.cols; ++i) std::swap(res.V[i][j], res.V[i][k]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    // locate smallest nonzero entry in the trailing block
    std::size_t bi = res.rows, bj = res.cols;
    for (std::size_t i = t; i < res.rows; ++i)
      for (std::size_t j = t; j < res.cols; ++j)
        if (A[i][j] != 0 && (bi == res.rows || cmp(abs(A[i][j]), abs(A[bi][bj])) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == res.rows) break;
    row_swap(t, bi);
    col_swap(t, bj);

    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = t + 1; i < res.rows; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q = A[i][t] / A[t][t];
        row_sub(i, t, q);
        if (A[i][t] != 0) {
          row_swap(t, i);
          again = true;
        }
      }
      for (std::size_t j = t + 1; j < res.cols; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q = A[t][j] / A[t][t];
        col_sub(j, t, q);
        if (A[t][j] != 0) {
          col_swap(t, j);
          again = true;
        }
      }
      if (!again) {
        // pivot must divide every remaining entry; if not, fold that row in
        for (std::size_t i = t + 1; i < res.rows && !again; ++i)
          for (std::size_t j = t + 1; j < res.cols && !again; ++j)
            if (A[i][j] % A[t][t] != 0) {
              row_sub(t, i, mpz_class(-1));  // add row i to row t
              again = true;
            }
      }
    }
    if (A[t][t] < 0) {
      for (std::size_t j = 0; j < res.cols; ++j) A[t][j] = -A[t][j];
      for (std::size_t j = 0; j < res.rows; ++j) res.U[t][j] = -res.U[t][j];
    }
  }
  for (std::size_t t = 0; t < n; ++t) res.diag.push_back(A[t][t]);
  return res;
}

std::optional<ZVec> solve_integer(const ZMat& A, const ZVec& b) {
  if (A.empty()) {
    if (zvec_is_zero(b)) return ZVec{};
    return std::nullopt;
  }
  if (A.size() != b.size()) throw std::invalid_argument("solve_integer shape mismatch");
  SmithResult S = smith_form(A);
  ZVec ub = zmat_mul_vec(S.U, b);
  ZVec y(S.cols, 0);
  for (std::size_t i = 0; i < S.rows; ++i) {
    mpz_class d = i < S.diag.size() ? S.diag[i] : mpz_class(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
      continue;
    }
    if (ub[i] % d != 0) return std::nullopt;
    y[i] = ub[i] / d;
  }
  ZVec x = zmat_mul_vec(S.V, y);
  // exactness audit
  ZVec chk(A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) chk[i] += A[i][j] * x[j];
  for (std::size_t i = 0; i < b.size(); ++i)
    if (chk[i] != b[i]) throw std::logic_error("solve_integer produced a bad solution");
  return x;
}

mpz_class AbelianType::order() const {
  mpz_class o = 1;
  for (unsigned e : exps)
    for (unsigned i = 0; i < e; ++i) o *= p;
  return o;
}

std::string AbelianType::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) os << ",";
    mpz_class f = 1;
    for (unsigned j = 0; j < exps[i]; ++j) f *= p;
    os << f;
  }
  os << "]";
  return os.str();
}

AbelianType invariant_factors(const Span& generators, const Span& relations) {
  if (!(generators.mod == relations.mod) || generators.dim != relations.dim)
    throw std::invalid_argument("invariant_factors: ambient mismatch");
  if (!generators.contains(relations)) throw std::invalid_argument("invariant_factors: relations not contained in generators");

  const PrimePow& R = generators.mod;
  std::size_t d = generators.dim;

  // Lift both subgroups to full-rank integer lattices containing p^a Z^d;
  // the quotient is unchanged and Smith form applies.
  ZMat glift;
  for (std::size_t i = 0; i < generators.h.rows; ++i) {
    ZVec r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = generators.h.at(i, j);
    glift.push_back(r);
  }
  for (std::size_t i = 0; i < d; ++i) {
    ZVec r(d, 0);
    r[i] = R.m;
    glift.push_back(r);
  }
  ZMat gb = hnf_rows(glift);  // d x d triangular basis of the generator lattice

  auto coords = [&](const ZVec& v) {
    // solve x * gb = v by back substitution (gb triangular with increasing pivots)
    ZVec x(gb.size(), 0), r = v;
    for (std::size_t i = 0; i < gb.size(); ++i) {
      std::size_t c = 0;
      while (c < d && gb[i][c] == 0) ++c;
      if (r[c] % gb[i][c] != 0) throw std::logic_error("invariant_factors: coordinate solve failed");
      x[i] = r[c] / gb[i][c];
      for (std::size_t j = c; j < d; ++j) r[j] -= x[i] * gb[i][j];
    }
    if (!zvec_is_zero(r)) throw std::logic_error("invariant_factors: vector outside generator lattice");
    return x;
  };

  ZMat relcoords;
  for (std::size_t i = 0; i < relations.h.rows; ++i) {
    ZVec r(d);
    for (std::size_t j = 0; j < d; ++j) r[j] = relations.h.at(i, j);
    relcoords.push_back(coords(r));
  }
  for (std::size_t i = 0; i < d; ++i) {
    ZVec r(d, 0);
    r[i] = R.m;
    relcoords.push_back(coords(r));
  }

  SmithResult S = smith_form(relcoords);
  AbelianType T;
  T.p = R.p;
  for (const auto& dgl : S.diag) {
    if (dgl == 0) throw std::logic_error("invariant_factors: quotient not finite");
    if (dgl == 1) continue;
    mpz_class v = dgl;
    unsigned e = 0;
    while (v % static_cast<unsigned long>(R.p) == 0) {
      v /= static_cast<unsigned long>(R.p);
      ++e;
    }
    if (v != 1) throw std::logic_error("invariant_factors: non p-power factor");
    T.exps.push_back(e);
  }
  std::sort(T.exps.rbegin(), T.exps.rend());
  return T;
}

AbelianType abelian_type_of(const Span& s) {
  return invariant_factors(s, Span::zero(s.mod, s.dim));
}

}  // namespace labring
