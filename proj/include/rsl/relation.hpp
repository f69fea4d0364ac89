#ifndef RSL_RELATION_HPP
#define RSL_RELATION_HPP

#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rsl/bitset.hpp"

namespace rsl {

/// An indexed finite carrier set with stable element names.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw error("Universe: must have at least one element");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_)
      if (!seen.insert(n).second) throw error("Universe: duplicate element name '" + n + "'");
  }

  /// Universe {0, 1, ..., n-1} with decimal names.
  static Universe indexed(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return Universe(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Universe& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

/// A binary relation on a universe, one successor bit-vector per element:
/// row(x) = R(x) = { y : x R y }.
class Relation {
 public:
  explicit Relation(Universe u)
      : universe_(std::move(u)), rows_(universe_.size(), SubsetMask(universe_.size())) {}

  Relation(Universe u, std::vector<SubsetMask> rows)
      : universe_(std::move(u)), rows_(std::move(rows)) {
    if (rows_.size() != universe_.size()) throw error("Relation: row count mismatch");
    for (const auto& r : rows_)
      if (r.size() != universe_.size()) throw error("Relation: row size mismatch");
  }

  static Relation identity(Universe u) {
    Relation r(std::move(u));
    for (std::size_t i = 0; i < r.size(); ++i) r.rows_[i].set(i);
    return r;
  }

  static Relation full(Universe u) {
    Relation r(std::move(u));
    for (auto& row : r.rows_) row = SubsetMask::full(r.size());
    return r;
  }

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }

  const SubsetMask& row(std::size_t x) const { return rows_.at(x); }
  const std::vector<SubsetMask>& rows() const { return rows_; }

  bool contains(std::size_t x, std::size_t y) const { return rows_.at(x).test(y); }
  void add(std::size_t x, std::size_t y) { rows_.at(x).set(y); }

  bool operator==(const Relation& o) const {
    return universe_ == o.universe_ && rows_ == o.rows_;
  }
  bool operator!=(const Relation& o) const { return !(*this == o); }

 private:
  Universe universe_;
  std::vector<SubsetMask> rows_;
};

inline void check_same_universe(const Relation& a, const Relation& b) {
  if (!(a.universe() == b.universe())) throw error("Relation: universe mismatch");
}

/// R⁻¹: result(x) = { y : x ∈ R(y) }.
inline Relation inverse(const Relation& r) {
  Relation inv(r.universe());
  for (std::size_t x = 0; x < r.size(); ++x)
    r.row(x).for_each([&](std::size_t y) { inv.add(y, x); });
  return inv;
}

/// S∘T with (x,z) ∈ S∘T iff there is y with (x,y) ∈ S and (y,z) ∈ T.
/// Left-to-right: first step through S, then through T. Conventions vary
/// across texts; everything downstream assumes this one.
inline Relation compose(const Relation& s, const Relation& t) {
  check_same_universe(s, t);
  std::vector<SubsetMask> rows(s.size(), SubsetMask(s.size()));
  for (std::size_t x = 0; x < s.size(); ++x)
    s.row(x).for_each([&](std::size_t y) { rows[x] |= t.row(y); });
  return Relation(s.universe(), std::move(rows));
}

inline Relation relation_union(const Relation& a, const Relation& b) {
  check_same_universe(a, b);
  std::vector<SubsetMask> rows;
  rows.reserve(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) rows.push_back(a.row(x) | b.row(x));
  return Relation(a.universe(), std::move(rows));
}

inline bool is_subrelation(const Relation& a, const Relation& b) {
  check_same_universe(a, b);
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!a.row(x).is_subset_of(b.row(x))) return false;
  return true;
}

/// Smallest transitive relation containing r (bitset Warshall).
inline Relation transitive_closure(const Relation& r) {
  std::vector<SubsetMask> rows(r.rows());
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      if (rows[x].test(k)) rows[x] |= rows[k];
  return Relation(r.universe(), std::move(rows));
}

/// r ∪ identity, transitively closed: the smallest quasiorder containing r.
inline Relation reflexive_transitive_closure(const Relation& r) {
  return transitive_closure(relation_union(r, Relation::identity(r.universe())));
}

/// Smallest equivalence containing r: the transitive closure of
/// r ∪ r⁻¹ ∪ identity. The identity is added explicitly so arbitrary
/// relations are accepted, not just reflexive ones.
inline Relation equivalence_join(const Relation& r) {
  Relation sym = relation_union(relation_union(r, inverse(r)), Relation::identity(r.universe()));
  return transitive_closure(sym);
}

struct PropertyReport {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool antisymmetric = false;
  bool left_total = false;
  bool quasiorder = false;
  bool partial_order = false;
  bool equivalence = false;
};

inline PropertyReport properties(const Relation& r) {
  PropertyReport p;
  const std::size_t n = r.size();
  p.reflexive = true;
  p.symmetric = true;
  p.transitive = true;
  p.antisymmetric = true;
  p.left_total = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (!r.contains(x, x)) p.reflexive = false;
    if (r.row(x).none()) p.left_total = false;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (r.contains(x, y) != r.contains(y, x)) p.symmetric = false;
      if (r.contains(x, y) && r.contains(y, x)) p.antisymmetric = false;
    }
  }
  for (std::size_t x = 0; x < n && p.transitive; ++x)
    r.row(x).for_each([&](std::size_t y) {
      if (!r.row(y).is_subset_of(r.row(x))) p.transitive = false;
    });
  p.quasiorder = p.reflexive && p.transitive;
  p.partial_order = p.quasiorder && p.antisymmetric;
  p.equivalence = p.quasiorder && p.symmetric;
  return p;
}

inline bool is_quasiorder(const Relation& r) {
  const PropertyReport p = properties(r);
  return p.quasiorder;
}

inline void require_quasiorder(const Relation& r) {
  if (!is_quasiorder(r)) throw error("relation is not a quasiorder");
}

/// Blocks of the smallest equivalence containing R.
struct ComponentPartition {
  std::vector<SubsetMask> blocks;        // pairwise disjoint, union = U
  std::vector<std::size_t> block_of;     // element -> block index
};

inline ComponentPartition connected_components(const Relation& r) {
  Relation eq = equivalence_join(r);
  ComponentPartition cp;
  cp.block_of.assign(r.size(), static_cast<std::size_t>(-1));
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (cp.block_of[x] != static_cast<std::size_t>(-1)) continue;
    std::size_t id = cp.blocks.size();
    cp.blocks.push_back(eq.row(x));
    eq.row(x).for_each([&](std::size_t y) { cp.block_of[y] = id; });
  }
  return cp;
}

/// Restriction of r to the elements of `keep`, as a relation on the
/// sub-universe with the retained names.
inline Relation restrict_relation(const Relation& r, const SubsetMask& keep) {
  if (keep.size() != r.size()) throw error("restrict_relation: size mismatch");
  if (keep.none()) throw error("restrict_relation: empty carrier");
  std::vector<std::size_t> old_of_new = keep.to_indices();
  std::vector<std::string> names;
  names.reserve(old_of_new.size());
  for (std::size_t o : old_of_new) names.push_back(r.universe().name(o));
  Relation sub{Universe(std::move(names))};
  for (std::size_t nx = 0; nx < old_of_new.size(); ++nx)
    for (std::size_t ny = 0; ny < old_of_new.size(); ++ny)
      if (r.contains(old_of_new[nx], old_of_new[ny])) sub.add(nx, ny);
  return sub;
}

}  // namespace rsl

#endif
