#ifndef RSL_APPROX_HPP
#define RSL_APPROX_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rsl/relation.hpp"

namespace rsl {

/// A rough set: the pair (lower approximation, upper approximation) of
/// some subset, ordered coordinatewise.
struct RoughSet {
  SubsetMask lower;
  SubsetMask upper;

  bool operator==(const RoughSet& o) const { return lower == o.lower && upper == o.upper; }
  bool operator!=(const RoughSet& o) const { return !(*this == o); }

  int compare(const RoughSet& o) const {
    int c = lower.compare(o.lower);
    return c != 0 ? c : upper.compare(o.upper);
  }
  bool operator<(const RoughSet& o) const { return compare(o) < 0; }
};

/// Coordinatewise order on rough sets.
inline bool leq(const RoughSet& a, const RoughSet& b) {
  return a.lower.is_subset_of(b.lower) && a.upper.is_subset_of(b.upper);
}

/// The four approximation operators over one relation. Holds the relation
/// and its cached inverse; all operators are O(|U|²/w) bit-vector sweeps.
class ApproxContext {
 public:
  explicit ApproxContext(Relation r) : rel_(std::move(r)), inv_(rsl::inverse(rel_)) {}

  const Relation& relation() const { return rel_; }
  const Relation& inverse() const { return inv_; }
  const Universe& universe() const { return rel_.universe(); }
  std::size_t size() const { return rel_.size(); }

  /// X▼ = { a : R(a) ⊆ X }
  SubsetMask lower(const SubsetMask& x) const { return lower_wrt(rel_, x); }

  /// X▲ = { a : R(a) ∩ X ≠ ∅ }
  SubsetMask upper(const SubsetMask& x) const { return upper_wrt(rel_, x); }

  /// X▽, with respect to R⁻¹
  SubsetMask lower_inv(const SubsetMask& x) const { return lower_wrt(inv_, x); }

  /// X△, with respect to R⁻¹
  SubsetMask upper_inv(const SubsetMask& x) const { return upper_wrt(inv_, x); }

  /// A(X) = (X▼, X▲)
  RoughSet rough_pair(const SubsetMask& x) const { return RoughSet{lower(x), upper(x)}; }

  SubsetMask empty_mask() const { return SubsetMask(size()); }
  SubsetMask full_mask() const { return SubsetMask::full(size()); }

 private:
  SubsetMask lower_wrt(const Relation& r, const SubsetMask& x) const {
    check(x);
    SubsetMask out(size());
    for (std::size_t a = 0; a < size(); ++a)
      if (r.row(a).is_subset_of(x)) out.set(a);
    return out;
  }

  SubsetMask upper_wrt(const Relation& r, const SubsetMask& x) const {
    check(x);
    SubsetMask out(size());
    for (std::size_t a = 0; a < size(); ++a)
      if (r.row(a).intersects(x)) out.set(a);
    return out;
  }

  void check(const SubsetMask& x) const {
    if (x.size() != size()) throw error("ApproxContext: subset size mismatch");
  }

  Relation rel_;
  Relation inv_;
};

/// One row of the frame-correspondence table: a relational property and
/// the equivalent universally-quantified approximation law, each decided
/// independently.
struct CorrespondenceRow {
  std::string property;
  bool relational;
  bool approximation;
};

/// Checks the four correspondences by exhausting all subsets. Verification
/// aid only; the sweep is 2^|U|.
inline std::vector<CorrespondenceRow> frame_correspondence(const Relation& r,
                                                           std::size_t cap = 16) {
  const std::size_t n = r.size();
  if (n > cap) throw error("frame_correspondence: universe exceeds enumeration cap");
  ApproxContext ctx(r);
  bool lt = true, refl = true, sym = true, trans = true;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    SubsetMask x = SubsetMask::from_bits(n, bits);
    SubsetMask up = ctx.upper(x);
    if (!ctx.lower(x).is_subset_of(up)) lt = false;
    if (!x.is_subset_of(up)) refl = false;
    if (!x.is_subset_of(ctx.lower(up))) sym = false;
    if (!ctx.upper(up).is_subset_of(up)) trans = false;
  }
  const PropertyReport p = properties(r);
  return {
      {"left_total", p.left_total, lt},
      {"reflexive", p.reflexive, refl},
      {"symmetric", p.symmetric, sym},
      {"transitive", p.transitive, trans},
  };
}

}  // namespace rsl

#endif
