#ifndef RSL_STRUCTURE_HPP
#define RSL_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rsl/complement.hpp"
#include "rsl/rough_lattice.hpp"

namespace rsl {

/// Where the Stone criterion R⁻¹∘R = R∨R⁻¹ fails: the least offending
/// element and both of its rows.
struct StoneWitness {
  std::size_t element;
  SubsetMask compose_row;   // (R⁻¹∘R)(x)
  SubsetMask equiv_row;     // (R∨R⁻¹)(x)
};

struct StoneResult {
  bool is_stone;
  std::optional<StoneWitness> witness;
};

/// RS is a Stone lattice iff R⁻¹∘R = R∨R⁻¹. Relation-level, polynomial;
/// never enumerates the lattice.
inline StoneResult stone_check(const Relation& r) {
  require_quasiorder(r);
  Relation lhs = compose(inverse(r), r);
  Relation rhs = equivalence_join(r);
  for (std::size_t x = 0; x < r.size(); ++x)
    if (lhs.row(x) != rhs.row(x))
      return StoneResult{false, StoneWitness{x, lhs.row(x), rhs.row(x)}};
  return StoneResult{true, std::nullopt};
}

/// Restriction of a rough set to a connected component: (lower∩C, upper∩C),
/// a rough set of the restricted relation.
inline RoughSet restrict_rough(const RoughSet& a, const SubsetMask& component) {
  if (component.size() != a.lower.size()) throw error("restrict_rough: size mismatch");
  return RoughSet{a.lower & component, a.upper & component};
}

/// Coordinatewise union of per-component rough sets. The components must
/// be pairwise disjoint and cover U; each part must live inside its
/// component.
inline RoughSet combine_rough(const std::vector<std::pair<SubsetMask, RoughSet>>& parts) {
  if (parts.empty()) throw error("combine_rough: empty part list");
  const std::size_t n = parts.front().first.size();
  SubsetMask covered(n);
  RoughSet out{SubsetMask(n), SubsetMask(n)};
  for (const auto& [component, part] : parts) {
    if (component.size() != n) throw error("combine_rough: size mismatch");
    if (covered.intersects(component)) throw error("combine_rough: overlapping components");
    if (!part.lower.is_subset_of(component) || !part.upper.is_subset_of(component))
      throw error("combine_rough: part not contained in its component");
    covered |= component;
    out.lower |= part.lower;
    out.upper |= part.upper;
  }
  if (covered != SubsetMask::full(n)) throw error("combine_rough: components do not cover U");
  return out;
}

/// For an equivalence: (number of singleton classes, number of larger
/// classes). |RS| = 2^i · 3^j.
inline std::pair<std::size_t, std::size_t> equivalence_shape(const Relation& r) {
  if (!properties(r).equivalence) throw error("equivalence_shape: not an equivalence");
  ComponentPartition cp = connected_components(r);
  std::size_t singles = 0, bigger = 0;
  for (const auto& b : cp.blocks) (b.count() == 1 ? singles : bigger)++;
  return {singles, bigger};
}

/// For a partial order: per component, whether every pair of elements has
/// a common lower bound inside the component.
inline std::vector<std::pair<SubsetMask, bool>> down_directed_check(const Relation& r) {
  if (!properties(r).partial_order) throw error("down_directed_check: not a partial order");
  Relation inv = inverse(r);
  std::vector<std::pair<SubsetMask, bool>> out;
  for (const auto& c : connected_components(r).blocks) {
    bool directed = true;
    std::vector<std::size_t> members = c.to_indices();
    for (std::size_t i = 0; i < members.size() && directed; ++i)
      for (std::size_t j = i; j < members.size() && directed; ++j)
        if (!(inv.row(members[i]) & inv.row(members[j])).intersects(c)) directed = false;
    out.emplace_back(c, directed);
  }
  return out;
}

struct StructureReport {
  ComponentPartition components;
  std::optional<std::vector<std::size_t>> per_component_rs_size;  // under cap only
  bool is_stone = false;
  std::optional<StoneWitness> stone_witness;
  bool is_directly_indecomposable = false;
  std::optional<std::pair<std::size_t, std::size_t>> equivalence_shape;  // equivalences
  std::optional<std::vector<std::pair<SubsetMask, bool>>> down_directed;  // partial orders
};

inline StructureReport analyze(const Relation& r, std::size_t enumeration_cap = 20) {
  require_quasiorder(r);
  StructureReport rep;
  rep.components = connected_components(r);
  StoneResult sr = stone_check(r);
  rep.is_stone = sr.is_stone;
  rep.stone_witness = sr.witness;
  rep.is_directly_indecomposable = rep.components.blocks.size() == 1;
  const PropertyReport p = properties(r);
  if (p.equivalence) rep.equivalence_shape = equivalence_shape(r);
  if (p.partial_order) rep.down_directed = down_directed_check(r);
  if (r.size() <= enumeration_cap) {
    std::vector<std::size_t> sizes;
    for (const auto& c : rep.components.blocks) {
      ApproxContext sub(restrict_relation(r, c));
      sizes.push_back(enumerate_rs(sub, enumeration_cap).elements.size());
    }
    rep.per_component_rs_size = std::move(sizes);
  }
  return rep;
}

}  // namespace rsl

#endif
