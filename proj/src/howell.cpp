#include "labring/howell.hpp"

#include <algorithm>
#include <deque>

namespace labring {

// Echelonization with annihilator completion. Invariant while scanning column
// c: every pending row is zero in all columns < c. Pivot selection takes the
// entry of lowest p-adic valuation (leftmost column first), the pivot row is
// scaled so the pivot equals p^v, all other pending rows are cleared (their
// entries at c have valuation >= v, so the multiplier is exact), and the
// annihilator (m/p^v) * row re-enters the queue so that the trailing rows
// capture every span element supported on later columns.
Span Span::from_rows(const PrimePow& R, std::size_t dim, const Mat& gens) {
  Span S;
  S.mod = R;
  S.dim = dim;
  S.h = Mat(0, dim);

  std::deque<Vec> work;
  for (std::size_t i = 0; i < gens.rows; ++i) {
    if (gens.cols != dim) throw std::invalid_argument("span generator width mismatch");
    Vec r = gens.row(i);
    for (auto& x : r) x %= R.m;
    if (!vec_is_zero(r)) work.push_back(std::move(r));
  }

  for (std::size_t col = 0; col < dim && !work.empty(); ++col) {
    std::size_t best = work.size();
    unsigned bestv = R.a;
    for (std::size_t i = 0; i < work.size(); ++i) {
      unsigned v = R.val(work[i][col]);
      if (v < bestv) {
        bestv = v;
        best = i;
      }
    }
    if (best == work.size()) continue;  // column is zero in all pending rows

    Vec pivot = std::move(work[best]);
    work.erase(work.begin() + best);
    pivot = vec_scale(R, R.inv_unit(R.unit_part(pivot[col])), pivot);
    u64 pv = R.ppow(bestv);

    for (auto& w : work) {
      if (w[col] == 0) continue;
      u64 mult = w[col] / pv;  // exact: valuation at col is >= bestv
      w = vec_sub(R, w, vec_scale(R, mult, pivot));
    }
    if (bestv > 0) {
      Vec ann = vec_scale(R, R.m / pv, pivot);
      if (!vec_is_zero(ann)) work.push_back(std::move(ann));
    }
    S.h.append_row(pivot);
    S.piv.push_back(col);
    S.pval.push_back(bestv);

    // drop rows that became zero
    work.erase(std::remove_if(work.begin(), work.end(), vec_is_zero), work.end());
  }

  // Reduce entries above each pivot into [0, p^pval): canonical (reduced) form.
  for (std::size_t j = 0; j < S.h.rows; ++j) {
    u64 pv = R.ppow(S.pval[j]);
    for (std::size_t i = 0; i < j; ++i) {
      u64 e = S.h.at(i, S.piv[j]);
      u64 q = e / pv;
      if (q == 0) continue;
      for (std::size_t c2 = S.piv[j]; c2 < dim; ++c2)
        S.h.at(i, c2) = R.sub(S.h.at(i, c2), R.mul(q, S.h.at(j, c2)));
    }
  }
  return S;
}

Span Span::zero(const PrimePow& R, std::size_t dim) {
  Span S;
  S.mod = R;
  S.dim = dim;
  S.h = Mat(0, dim);
  return S;
}

Span Span::full(const PrimePow& R, std::size_t dim) {
  return from_rows(R, dim, Mat::identity(dim));
}

bool Span::is_full() const {
  if (h.rows != dim) return false;
  for (unsigned v : pval)
    if (v != 0) return false;
  return true;
}

bool Span::contains(const Vec& x) const {
  if (x.size() != dim) throw std::invalid_argument("membership dimension mismatch");
  Vec r = x;
  for (auto& e : r) e %= mod.m;
  for (std::size_t j = 0; j < h.rows; ++j) {
    u64 e = r[piv[j]];
    if (e == 0) continue;
    if (mod.val(e) < pval[j]) return false;
    u64 mult = e / mod.ppow(pval[j]);
    for (std::size_t c = piv[j]; c < dim; ++c) r[c] = mod.sub(r[c], mod.mul(mult, h.at(j, c)));
  }
  return vec_is_zero(r);
}

bool Span::contains(const Span& other) const {
  for (std::size_t i = 0; i < other.h.rows; ++i)
    if (!contains(other.h.row(i))) return false;
  return true;
}

Span Span::sum(const Span& other) const {
  if (dim != other.dim || !(mod == other.mod)) throw std::invalid_argument("span sum mismatch");
  Mat g = h;
  for (std::size_t i = 0; i < other.h.rows; ++i) g.append_row(other.h.row(i));
  return from_rows(mod, dim, g);
}

Span Span::intersect(const Span& other) const {
  if (dim != other.dim || !(mod == other.mod)) throw std::invalid_argument("span intersect mismatch");
  // (x, y) with x*A + y*B = 0  =>  x*A = -(y*B) runs over the intersection.
  Mat stacked = h;
  for (std::size_t i = 0; i < other.h.rows; ++i) stacked.append_row(other.h.row(i));
  Span K = left_kernel(mod, stacked);
  Mat gens(0, dim);
  for (std::size_t i = 0; i < K.h.rows; ++i) {
    Vec lam = K.h.row(i);
    Vec x(dim, 0);
    for (std::size_t r = 0; r < h.rows; ++r)
      if (lam[r]) x = vec_add(mod, x, vec_scale(mod, lam[r], h.row(r)));
    gens.append_row(x);
  }
  return from_rows(mod, dim, gens);
}

Span Span::scaled(u64 c) const {
  Mat g(0, dim);
  for (std::size_t i = 0; i < h.rows; ++i) g.append_row(vec_scale(mod, c % mod.m, h.row(i)));
  return from_rows(mod, dim, g);
}

unsigned Span::order_exp() const {
  unsigned s = 0;
  for (unsigned v : pval) s += mod.a - v;
  return s;
}

Span left_kernel(const PrimePow& R, const Mat& M) {
  // Howell the augmented rows (M_i | e_i); every row stays of the form
  // (x*M | x), and the Howell property makes the trailing block (zero M-part)
  // generate the whole left kernel.
  std::size_t n = M.cols, r = M.rows;
  Mat aug(0, n + r);
  for (std::size_t i = 0; i < r; ++i) {
    Vec row(n + r, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = M.at(i, j) % R.m;
    row[n + i] = 1;
    aug.append_row(row);
  }
  Span H = Span::from_rows(R, n + r, aug);
  Mat gens(0, r);
  for (std::size_t i = 0; i < H.h.rows; ++i) {
    if (H.piv[i] < n) continue;  // row has nonzero M-part
    Vec x(r);
    for (std::size_t j = 0; j < r; ++j) x[j] = H.h.at(i, n + j);
    gens.append_row(x);
  }
  return Span::from_rows(R, r, gens);
}

}  // namespace labring
