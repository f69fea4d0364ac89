#ifndef RSL_TOPOLOGY_HPP
#define RSL_TOPOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "rsl/approx.hpp"

namespace rsl {

enum class TopologyKind { UP, DOWN };

/// An Alexandrov topology given by its smallest base, the minimal point
/// neighbourhoods. For the UP kind these are the successor sets R(x); for
/// DOWN they are R⁻¹(x). Full open families are materialized only on
/// demand, since the base has at most |U| members.
class AlexandrovTopology {
 public:
  AlexandrovTopology(Universe u, TopologyKind kind, std::vector<SubsetMask> point_nbhd)
      : universe_(std::move(u)), kind_(kind), point_nbhd_(std::move(point_nbhd)) {
    if (point_nbhd_.size() != universe_.size())
      throw error("AlexandrovTopology: neighbourhood count mismatch");
    std::set<SubsetMask> dedup(point_nbhd_.begin(), point_nbhd_.end());
    base_.assign(dedup.begin(), dedup.end());
  }

  const Universe& universe() const { return universe_; }
  std::size_t size() const { return universe_.size(); }
  TopologyKind kind() const { return kind_; }

  /// The smallest base, deduplicated, in canonical (lexicographic) order.
  const std::vector<SubsetMask>& base() const { return base_; }

  const SubsetMask& point_neighbourhood(std::size_t x) const { return point_nbhd_.at(x); }

  /// Smallest open set containing x: union of point neighbourhoods over x.
  SubsetMask neighbourhood(const SubsetMask& x) const {
    check(x);
    SubsetMask out(size());
    x.for_each([&](std::size_t p) { out |= point_nbhd_[p]; });
    return out;
  }

  bool is_open(const SubsetMask& x) const { return neighbourhood(x) == x; }

  /// Largest open subset of x: { p : N(p) ⊆ x }.
  SubsetMask interior(const SubsetMask& x) const {
    check(x);
    SubsetMask out(size());
    for (std::size_t p = 0; p < size(); ++p)
      if (point_nbhd_[p].is_subset_of(x)) out.set(p);
    return out;
  }

  SubsetMask closure(const SubsetMask& x) const {
    return interior(x.complement()).complement();
  }

  /// Two topologies are equal iff their bases coincide.
  bool operator==(const AlexandrovTopology& o) const {
    return universe_ == o.universe_ && base_ == o.base_;
  }

 private:
  void check(const SubsetMask& x) const {
    if (x.size() != size()) throw error("AlexandrovTopology: subset size mismatch");
  }

  Universe universe_;
  TopologyKind kind_;
  std::vector<SubsetMask> point_nbhd_;
  std::vector<SubsetMask> base_;
};

/// T▼: the up-sets of the quasiorder r, with base { R(x) }.
inline AlexandrovTopology topology_up(const Relation& r) {
  require_quasiorder(r);
  return AlexandrovTopology(r.universe(), TopologyKind::UP, r.rows());
}

/// T▲: the dual topology, with base { R⁻¹(x) }.
inline AlexandrovTopology topology_down(const Relation& r) {
  require_quasiorder(r);
  return AlexandrovTopology(r.universe(), TopologyKind::DOWN, inverse(r).rows());
}

/// The quasiorder of an UP topology: x R y iff y ∈ N(x). Inverse of
/// topology_up.
inline Relation quasiorder_of(const AlexandrovTopology& t) {
  if (t.kind() != TopologyKind::UP)
    throw error("quasiorder_of: expected an UP topology");
  std::vector<SubsetMask> rows;
  rows.reserve(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) rows.push_back(t.point_neighbourhood(x));
  return Relation(t.universe(), std::move(rows));
}

/// All open sets: the closure of the base under unions, canonically sorted.
/// Exponential in general; guarded by the enumeration cap.
inline std::vector<SubsetMask> enumerate_opens(const AlexandrovTopology& t,
                                               std::size_t cap = 20) {
  if (t.size() > cap) throw error("enumerate_opens: universe exceeds enumeration cap");
  std::set<SubsetMask> opens;
  opens.insert(SubsetMask(t.size()));
  std::vector<SubsetMask> frontier(opens.begin(), opens.end());
  while (!frontier.empty()) {
    std::vector<SubsetMask> next;
    for (const auto& o : frontier)
      for (const auto& b : t.base()) {
        SubsetMask u = o | b;
        if (opens.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return {opens.begin(), opens.end()};
}

}  // namespace rsl

#endif
