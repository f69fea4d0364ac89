#ifndef RSL_COMPLEMENT_HPP
#define RSL_COMPLEMENT_HPP

#include <cstddef>

#include "rsl/approx.hpp"
#include "rsl/rough_lattice.hpp"

namespace rsl {

/// The de Morgan operation c: A(X) ↦ A(X^c) = (X▲^c, X▼^c). An involution
/// exchanging meets and joins; not a complement in general.
inline RoughSet de_morgan(const RoughSet& a) {
  return RoughSet{a.upper.complement(), a.lower.complement()};
}

/// Pseudocomplement A(X)* = A(X^▲△c). Depends only on the upper mask, so
/// the result is independent of which X realized the pair.
inline RoughSet pseudocomplement(const ApproxContext& ctx, const RoughSet& a) {
  return ctx.rough_pair(ctx.upper_inv(a.upper).complement());
}

/// Dual pseudocomplement A(X)⁺ = A(X^▼▽c); depends only on the lower mask.
inline RoughSet dual_pseudocomplement(const ApproxContext& ctx, const RoughSet& a) {
  return ctx.rough_pair(ctx.lower_inv(a.lower).complement());
}

inline bool is_exact(const RoughSet& a) { return a.lower == a.upper; }

/// A rough set is complemented in RS iff it is exact and its carrier is a
/// union of connected components (classes of R∨R⁻¹). Polynomial; no
/// lattice enumeration.
inline bool is_complemented_in_rs(const ApproxContext& ctx, const RoughSet& a) {
  if (!is_exact(a)) return false;
  Relation eq = equivalence_join(ctx.relation());
  bool ok = true;
  a.lower.for_each([&](std::size_t x) {
    if (!eq.row(x).is_subset_of(a.lower)) ok = false;
  });
  return ok;
}

struct ComplementReport {
  RoughSet element;
  RoughSet de_morgan;
  RoughSet pseudo;
  RoughSet dual_pseudo;
  bool is_exact;
  bool is_complemented;
};

inline ComplementReport complement_report(const ApproxContext& ctx, const RoughSet& a) {
  return ComplementReport{
      a,
      rsl::de_morgan(a),
      pseudocomplement(ctx, a),
      dual_pseudocomplement(ctx, a),
      rsl::is_exact(a),
      is_complemented_in_rs(ctx, a),
  };
}

}  // namespace rsl

#endif
