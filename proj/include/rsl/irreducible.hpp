#ifndef RSL_IRREDUCIBLE_HPP
#define RSL_IRREDUCIBLE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "rsl/complement.hpp"
#include "rsl/rough_lattice.hpp"

namespace rsl {

/// Which generator family produced a catalog entry:
///   SINGLETON_UPPER x: (∅, {x}▲), requires |R(x)| ≥ 2;
///   NEIGHBOURHOOD x:   ({x}△, {x}△▲) = (R(x), R(x)▲).
enum class IrreducibleOrigin { SINGLETON_UPPER, NEIGHBOURHOOD };

struct IrreducibleEntry {
  RoughSet element;
  IrreducibleOrigin origin;  // first producer, in generator order
  std::size_t generator;     // the x above
};

/// The completely join-irreducible elements J and the meet-irreducible
/// elements M = de Morgan image of J.
struct IrreducibleCatalog {
  std::vector<IrreducibleEntry> join_irr;
  std::vector<IrreducibleEntry> meet_irr;
};

namespace detail {

inline void sort_dedup(std::vector<IrreducibleEntry>& v) {
  // Stable on generator order, so duplicates keep their first producer.
  std::stable_sort(v.begin(), v.end(), [](const IrreducibleEntry& a, const IrreducibleEntry& b) {
    return a.element < b.element;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const IrreducibleEntry& a, const IrreducibleEntry& b) {
                        return a.element == b.element;
                      }),
          v.end());
}

}  // namespace detail

inline IrreducibleCatalog irreducible_catalog(const ApproxContext& ctx) {
  require_quasiorder(ctx.relation());
  const std::size_t n = ctx.size();
  IrreducibleCatalog cat;
  for (std::size_t x = 0; x < n; ++x) {
    if (ctx.relation().row(x).count() >= 2) {
      SubsetMask sing = SubsetMask::singleton(n, x);
      cat.join_irr.push_back({RoughSet{ctx.empty_mask(), ctx.upper(sing)},
                              IrreducibleOrigin::SINGLETON_UPPER, x});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    const SubsetMask& nb = ctx.relation().row(x);  // {x}△ = R(x)
    cat.join_irr.push_back(
        {RoughSet{nb, ctx.upper(nb)}, IrreducibleOrigin::NEIGHBOURHOOD, x});
  }
  detail::sort_dedup(cat.join_irr);
  for (const auto& e : cat.join_irr)
    cat.meet_irr.push_back({de_morgan(e.element), e.origin, e.generator});
  detail::sort_dedup(cat.meet_irr);
  return cat;
}

/// Generator family whose join is A(X):
///   { (∅,{y}▲) : y ∈ X, |R(y)| ≥ 2 } ∪ { (R(y), R(y)▲) : R(y) ⊆ X }.
/// Returned in generator order; not minimized.
inline std::vector<RoughSet> join_decomposition(const ApproxContext& ctx, const SubsetMask& x) {
  require_quasiorder(ctx.relation());
  if (x.size() != ctx.size()) throw error("join_decomposition: subset size mismatch");
  std::vector<RoughSet> out;
  x.for_each([&](std::size_t y) {
    if (ctx.relation().row(y).count() >= 2)
      out.push_back(RoughSet{ctx.empty_mask(), ctx.upper(SubsetMask::singleton(ctx.size(), y))});
  });
  for (std::size_t y = 0; y < ctx.size(); ++y) {
    const SubsetMask& nb = ctx.relation().row(y);
    if (nb.is_subset_of(x)) out.push_back(RoughSet{nb, ctx.upper(nb)});
  }
  return out;
}

/// Dual family whose meet is A(X): the de Morgan image of the join
/// decomposition of X^c.
inline std::vector<RoughSet> meet_decomposition(const ApproxContext& ctx, const SubsetMask& x) {
  std::vector<RoughSet> out;
  for (const auto& a : join_decomposition(ctx, x.complement())) out.push_back(de_morgan(a));
  return out;
}

}  // namespace rsl

#endif
