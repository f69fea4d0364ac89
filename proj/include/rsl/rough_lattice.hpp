#ifndef RSL_ROUGH_LATTICE_HPP
#define RSL_ROUGH_LATTICE_HPP

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsl/approx.hpp"

namespace rsl {

/// The lattice RS = { A(X) : X ⊆ U }, fully enumerated. Elements are kept
/// in canonical order: sorted by (lower, upper) bit-vectors, so bottom is
/// first and top is last. Each element carries one representative subset
/// realizing it.
struct RsLattice {
  Universe universe;
  std::vector<RoughSet> elements;          // canonical sorted, distinct
  std::vector<SubsetMask> representative;  // aligned with elements

  const RoughSet& bottom() const { return elements.front(); }
  const RoughSet& top() const { return elements.back(); }

  std::optional<std::size_t> index_of(const RoughSet& a) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), a);
    if (it != elements.end() && *it == a)
      return static_cast<std::size_t>(it - elements.begin());
    return std::nullopt;
  }

  bool contains(const RoughSet& a) const { return index_of(a).has_value(); }
};

/// Sweeps all 2^|U| subsets. The representative of each element is the
/// numerically smallest subset (element 0 = lowest bit) realizing it.
inline RsLattice enumerate_rs(const ApproxContext& ctx, std::size_t cap = 20) {
  require_quasiorder(ctx.relation());
  const std::size_t n = ctx.size();
  if (n > cap) throw error("enumerate_rs: universe exceeds enumeration cap");
  std::map<RoughSet, SubsetMask> seen;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    SubsetMask x = SubsetMask::from_bits(n, bits);
    seen.emplace(ctx.rough_pair(x), x);
  }
  RsLattice l{ctx.universe(), {}, {}};
  l.elements.reserve(seen.size());
  l.representative.reserve(seen.size());
  for (auto& [pair, rep] : seen) {
    l.elements.push_back(pair);
    l.representative.push_back(rep);
  }
  return l;
}

/// Coordinatewise meet. The empty family yields top.
inline RoughSet meet_family(const ApproxContext& ctx, const std::vector<RoughSet>& family) {
  RoughSet acc{ctx.full_mask(), ctx.full_mask()};
  for (const auto& a : family) {
    acc.lower &= a.lower;
    acc.upper &= a.upper;
  }
  return acc;
}

/// Coordinatewise join. The empty family yields bottom.
inline RoughSet join_family(const ApproxContext& ctx, const std::vector<RoughSet>& family) {
  RoughSet acc{ctx.empty_mask(), ctx.empty_mask()};
  for (const auto& a : family) {
    acc.lower |= a.lower;
    acc.upper |= a.upper;
  }
  return acc;
}

/// Two disjoint subsets of `ground`, each cofinal in it: every element of
/// ground has a successor in part_a and one in part_b.
struct CofinalSplit {
  SubsetMask ground;
  SubsetMask part_a;
  SubsetMask part_b;
};

/// Finite constructive cofinal split. Requires every element of ground to
/// have at least two successors inside ground, and ground to be closed
/// under successors.
///
/// A subset is cofinal in a finite quasiordered ground iff it meets every
/// maximal mutually-reachable class (for x in such a class C, successors
/// inside ground stay in C, so |C| ≥ 2 under the precondition). We put the
/// smallest element of each maximal class into part_a and the next one
/// into part_b; the remaining elements go to neither part.
inline CofinalSplit cofinal_split(const ApproxContext& ctx, const SubsetMask& ground) {
  const std::size_t n = ctx.size();
  if (ground.size() != n) throw error("cofinal_split: subset size mismatch");
  CofinalSplit out{ground, SubsetMask(n), SubsetMask(n)};
  if (ground.none()) return out;

  std::vector<std::size_t> members = ground.to_indices();
  for (std::size_t x : members) {
    SubsetMask succ = ctx.relation().row(x) & ground;
    if (!ctx.relation().row(x).is_subset_of(ground))
      throw error("cofinal_split: ground not successor-closed at element " +
                  ctx.universe().name(x));
    if (succ.count() < 2)
      throw error("cofinal_split: element " + ctx.universe().name(x) +
                  " has fewer than two successors in ground");
  }

  SubsetMask assigned(n);
  for (std::size_t x : members) {
    if (assigned.test(x)) continue;
    // Mutually-reachable class of x inside ground; maximal iff successors
    // do not leave it.
    SubsetMask cls = ctx.relation().row(x) & ctx.inverse().row(x) & ground;
    SubsetMask succ = ctx.relation().row(x) & ground;
    if (!succ.is_subset_of(cls)) continue;  // not a maximal class
    assert(cls.count() >= 2);
    std::size_t first = cls.first();
    cls.reset(first);
    std::size_t second = cls.first();
    out.part_a.set(first);
    out.part_b.set(second);
    cls.set(first);
    assigned |= cls;
  }
  return out;
}

namespace detail {

inline SubsetMask intersect_all(const ApproxContext& ctx,
                                const std::vector<SubsetMask>& subsets) {
  SubsetMask acc = ctx.full_mask();
  for (const auto& x : subsets) acc &= x;
  return acc;
}

inline SubsetMask union_all(const ApproxContext& ctx, const std::vector<SubsetMask>& subsets) {
  SubsetMask acc = ctx.empty_mask();
  for (const auto& x : subsets) acc |= x;
  return acc;
}

}  // namespace detail

/// A subset W with A(W) = (∩Xᵢ▼, ∩Xᵢ▲):
///   Z = ∩Xᵢ▲ \ (∩Xᵢ)▲,  A from a cofinal split of Z▼,  W = (∩Xᵢ) ∪ (Z \ A).
inline SubsetMask witness_meet(const ApproxContext& ctx,
                               const std::vector<SubsetMask>& subsets) {
  require_quasiorder(ctx.relation());
  SubsetMask inter = detail::intersect_all(ctx, subsets);
  SubsetMask inter_upper = ctx.full_mask();
  for (const auto& x : subsets) inter_upper &= ctx.upper(x);
  SubsetMask z = inter_upper.minus(ctx.upper(inter));
  // Every element of Z has at least two successors.
  z.for_each([&](std::size_t a) {
    if (ctx.relation().row(a).count() < 2)
      throw error("witness_meet: internal invariant violated at element " +
                  ctx.universe().name(a));
  });
  CofinalSplit split = cofinal_split(ctx, ctx.lower(z));
  return inter | z.minus(split.part_a);
}

/// A subset V with A(V) = (∪Xᵢ▼, ∪Xᵢ▲):
///   S = (∪Xᵢ)▲ \ (∪Xᵢ▼),  H = { a ∈ S : R(a) ⊄ (∪Xᵢ)▲ },
///   A from a cofinal split of S▼,  V = (∪Xᵢ▼) ∪ H ∪ A.
inline SubsetMask witness_join(const ApproxContext& ctx,
                               const std::vector<SubsetMask>& subsets) {
  require_quasiorder(ctx.relation());
  SubsetMask uni = detail::union_all(ctx, subsets);
  SubsetMask uni_lower = ctx.empty_mask();
  for (const auto& x : subsets) uni_lower |= ctx.lower(x);
  SubsetMask uni_upper = ctx.upper(uni);
  SubsetMask s = uni_upper.minus(uni_lower);
  SubsetMask h(ctx.size());
  s.for_each([&](std::size_t a) {
    if (ctx.relation().row(a).count() < 2)
      throw error("witness_join: internal invariant violated at element " +
                  ctx.universe().name(a));
    if (!ctx.relation().row(a).is_subset_of(uni_upper)) h.set(a);
  });
  CofinalSplit split = cofinal_split(ctx, ctx.lower(s));
  return uni_lower | h | split.part_a;
}

/// Searches for a subset X with A(X) = pair, over lower ⊆ X ⊆ upper.
/// Returns the numerically smallest witness, or nullopt.
inline std::optional<SubsetMask> is_realizable(const ApproxContext& ctx, const RoughSet& pair,
                                               std::size_t cap = 20) {
  if (pair.lower.size() != ctx.size() || pair.upper.size() != ctx.size())
    throw error("is_realizable: subset size mismatch");
  if (!pair.lower.is_subset_of(pair.upper)) return std::nullopt;
  std::vector<std::size_t> free = pair.upper.minus(pair.lower).to_indices();
  if (free.size() > cap) throw error("is_realizable: search exceeds cap");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
    SubsetMask x = pair.lower;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((bits >> i) & 1u) x.set(free[i]);
    if (ctx.rough_pair(x) == pair) return x;
  }
  return std::nullopt;
}

}  // namespace rsl

#endif
