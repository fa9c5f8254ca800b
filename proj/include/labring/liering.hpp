#pragma once

#include "labring/pmodule.hpp"

#include <optional>
#include <string>

namespace labring {

// Lie ring on the additive group Z/p^{e_1} x ... x Z/p^{e_d}, given by
// structure constants. Homocyclic rings (all e_i equal) are the common case;
// associated Lie rings of groups use genuinely mixed coordinate orders.
// An empty table means the abelian ring.
struct LieRing {
  PModule add;        // additive structure
  std::vector<u64> sc;  // full antisymmetric table, sc[(i*d + j)*d + k]; empty = abelian

  std::size_t dim() const { return add.dim; }
  const PrimePow& amb() const { return add.amb; }
  bool abelian() const { return sc.empty(); }

  static LieRing abelian_ring(const PModule& m);
  // table rows for i < j only; the rest is filled antisymmetrically
  static LieRing from_pairs(const PModule& m, const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& pairs);

  u64 sc_at(std::size_t i, std::size_t j, std::size_t k) const { return sc.empty() ? 0 : sc[(i * dim() + j) * dim() + k]; }
  Vec sc_row(std::size_t i, std::size_t j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
};

struct LieViolation {
  std::string kind;  // "alternating", "skew", "jacobi", "order"
  std::size_t i = 0, j = 0, k = 0;
  std::string str() const;
};

// Alternating/skew/Jacobi/order-compatibility on all basis triples; first
// violation reported.
std::optional<LieViolation> validate(const LieRing& L);

// Invertible, additive-order compatible, bracket-preserving on basis pairs.
bool is_lie_automorphism(const LieRing& L, const Mat& alpha);

enum class ClosureMode { Subring, Ideal };
Span closure(const LieRing& L, const Span& seed, ClosureMode mode);

struct LieSeries {
  std::vector<Span> chain;            // gamma_1 (or D_0) first
  std::optional<unsigned> nilpotency; // class / derived length when the chain hits zero
  bool stabilized_nonzero = false;    // corrupt-data guard tripped
};

LieSeries lower_central_series(const LieRing& L);
LieSeries derived_series(const LieRing& L);

// ker(alpha - 1) as an embedded Span; checked to be bracket-closed.
Span fixed_subring(const LieRing& L, const Mat& alpha);

// span of all brackets [a, b], a in A, b in B (embedded inputs/outputs)
Span bracket_span(const LieRing& L, const Span& A, const Span& B);

}  // namespace labring
