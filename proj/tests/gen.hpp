// Deterministic random instance generators shared by the unit and
// acceptance suites. All draws come from a caller-supplied mt19937 so
// every run sees the same corpus.
#ifndef RSL_TESTS_GEN_HPP
#define RSL_TESTS_GEN_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "rsl/relation.hpp"

namespace rsl::gen {

inline Relation random_relation(std::mt19937& rng, std::size_t n, double density = 0.3) {
  std::bernoulli_distribution edge(density);
  Relation r{Universe::indexed(n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (edge(rng)) r.add(x, y);
  return r;
}

inline SubsetMask random_subset(std::mt19937& rng, std::size_t n, double density = 0.5) {
  std::bernoulli_distribution member(density);
  SubsetMask m(n);
  for (std::size_t i = 0; i < n; ++i)
    if (member(rng)) m.set(i);
  return m;
}

inline Relation random_quasiorder(std::mt19937& rng, std::size_t n, double density = 0.25) {
  return reflexive_transitive_closure(random_relation(rng, n, density));
}

/// Random edges drawn only along a random permutation, then closed:
/// antisymmetry is structural.
inline Relation random_partial_order(std::mt19937& rng, std::size_t n, double density = 0.3) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  Relation r{Universe::indexed(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) r.add(perm[i], perm[j]);
  return reflexive_transitive_closure(r);
}

/// Random partition into classes, returned as an equivalence.
inline Relation random_equivalence(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick_class(0, n - 1);
  std::vector<std::size_t> label(n);
  for (auto& l : label) l = pick_class(rng);
  Relation r{Universe::indexed(n)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (label[x] == label[y]) r.add(x, y);
  return r;
}

/// A poset that is never Stone: two incomparable minimal elements under a
/// common upper bound, padded with isolated points.
inline Relation v_shaped_poset(std::size_t n, std::size_t a, std::size_t b, std::size_t top) {
  Relation r = Relation::identity(Universe::indexed(n));
  r.add(a, top);
  r.add(b, top);
  return r;
}

inline SubsetMask mask_of(std::size_t n, std::initializer_list<std::size_t> members) {
  SubsetMask m(n);
  for (std::size_t i : members) m.set(i);
  return m;
}

/// The worked 3-element quasiorder: reflexive plus (0,1),(0,2).
inline Relation worked_example() {
  Relation r = Relation::identity(Universe::indexed(3));
  r.add(0, 1);
  r.add(0, 2);
  return r;
}

}  // namespace rsl::gen

#endif
