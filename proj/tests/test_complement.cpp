#include <doctest.h>

#include <random>

#include "gen.hpp"
#include "oracle.hpp"
#include "rsl/complement.hpp"

using namespace rsl;

TEST_CASE("de Morgan map") {
  ApproxContext ctx(gen::worked_example());
  RoughSet bottom{SubsetMask(3), SubsetMask(3)};
  RoughSet top{SubsetMask::full(3), SubsetMask::full(3)};
  CHECK(de_morgan(bottom) == top);
  CHECK(de_morgan(de_morgan(bottom)) == bottom);
  RoughSet a{gen::mask_of(3, {1}), gen::mask_of(3, {0, 1})};
  CHECK(de_morgan(a) == RoughSet{gen::mask_of(3, {2}), gen::mask_of(3, {0, 2})});
}

TEST_CASE("de Morgan swaps meets and joins, complement laws fail") {
  std::mt19937 rng(51);
  for (int i = 0; i < 100; ++i) {
    ApproxContext ctx(gen::random_quasiorder(rng, 1 + rng() % 6));
    RsLattice l = enumerate_rs(ctx);
    for (const auto& a : l.elements) {
      CHECK(l.contains(de_morgan(a)));
      CHECK(meet_family(ctx, {a, de_morgan(a)}).lower.none());
      CHECK(join_family(ctx, {a, de_morgan(a)}).upper == ctx.full_mask());
      for (const auto& b : l.elements) {
        CHECK(de_morgan(join_family(ctx, {a, b})) ==
              meet_family(ctx, {de_morgan(a), de_morgan(b)}));
        CHECK(de_morgan(meet_family(ctx, {a, b})) ==
              join_family(ctx, {de_morgan(a), de_morgan(b)}));
      }
    }
  }

  // de Morgan is not a complement: a witness where a ∧ c(a) is not bottom.
  ApproxContext ctx(gen::worked_example());
  RoughSet a = ctx.rough_pair(gen::mask_of(3, {1}));
  CHECK(meet_family(ctx, {a, de_morgan(a)}) != RoughSet{SubsetMask(3), SubsetMask(3)});
}

TEST_CASE("pseudocomplement worked example") {
  Relation r = Relation::identity(Universe::indexed(3));
  r.add(0, 2);
  r.add(1, 2);
  ApproxContext ctx(r);
  RoughSet a = ctx.rough_pair(gen::mask_of(3, {0}));
  CHECK(a == RoughSet{SubsetMask(3), gen::mask_of(3, {0})});
  CHECK(pseudocomplement(ctx, a) == RoughSet{SubsetMask(3), gen::mask_of(3, {1})});
  RoughSet top{ctx.full_mask(), ctx.full_mask()};
  CHECK(pseudocomplement(ctx, top) == RoughSet{SubsetMask(3), SubsetMask(3)});
}

TEST_CASE("pseudocomplements agree with brute force") {
  std::mt19937 rng(52);
  for (int i = 0; i < 300; ++i) {
    ApproxContext ctx(gen::random_quasiorder(rng, 1 + rng() % 6));
    RsLattice l = enumerate_rs(ctx);
    std::vector<RoughSet> rs = l.elements;
    for (const auto& a : l.elements) {
      CHECK(pseudocomplement(ctx, a) == oracle::brute_pseudo(rs, a));
      CHECK(dual_pseudocomplement(ctx, a) == oracle::brute_dual_pseudo(rs, a));
      CHECK(dual_pseudocomplement(ctx, a) ==
            de_morgan(pseudocomplement(ctx, de_morgan(a))));
      CHECK(meet_family(ctx, {a, pseudocomplement(ctx, a)}) == l.bottom());
      CHECK(join_family(ctx, {a, dual_pseudocomplement(ctx, a)}) == l.top());
    }
  }
}

TEST_CASE("pseudocomplement is representative-independent") {
  std::mt19937 rng(53);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 7;
    ApproxContext ctx(gen::random_quasiorder(rng, n));
    SubsetMask x = gen::random_subset(rng, n);
    SubsetMask y = gen::random_subset(rng, n);
    RoughSet ax = ctx.rough_pair(x), ay = ctx.rough_pair(y);
    if (ax.upper == ay.upper)
      CHECK(pseudocomplement(ctx, ax) == pseudocomplement(ctx, ay));
    if (ax.lower == ay.lower)
      CHECK(dual_pseudocomplement(ctx, ax) == dual_pseudocomplement(ctx, ay));
  }
}

TEST_CASE("dual pseudocomplement of bottom") {
  ApproxContext ctx(gen::worked_example());
  RoughSet bottom{SubsetMask(3), SubsetMask(3)};
  CHECK(dual_pseudocomplement(ctx, bottom) == RoughSet{ctx.full_mask(), ctx.full_mask()});
}

TEST_CASE("exactness and complementedness") {
  ApproxContext ctx(gen::worked_example());
  RoughSet bottom{SubsetMask(3), SubsetMask(3)};
  RoughSet top{ctx.full_mask(), ctx.full_mask()};
  CHECK(is_exact(bottom));
  CHECK(is_complemented_in_rs(ctx, bottom));
  CHECK(is_exact(top));
  CHECK(is_complemented_in_rs(ctx, top));
  RoughSet a{gen::mask_of(3, {1}), gen::mask_of(3, {0, 1})};
  CHECK_FALSE(is_exact(a));
  CHECK_FALSE(is_complemented_in_rs(ctx, a));

  // Two full islands: a whole component is exact and complemented.
  Relation islands{Universe::indexed(4)};
  for (std::size_t x : {0, 1})
    for (std::size_t y : {0, 1}) islands.add(x, y);
  for (std::size_t x : {2, 3})
    for (std::size_t y : {2, 3}) islands.add(x, y);
  ApproxContext ictx(islands);
  RoughSet c = ictx.rough_pair(gen::mask_of(4, {0, 1}));
  CHECK(c == RoughSet{gen::mask_of(4, {0, 1}), gen::mask_of(4, {0, 1})});
  CHECK(is_exact(c));
  CHECK(is_complemented_in_rs(ictx, c));
}

TEST_CASE("exact iff complemented iff union of classes") {
  std::mt19937 rng(54);
  for (int i = 0; i < 200; ++i) {
    ApproxContext ctx(gen::random_quasiorder(rng, 1 + rng() % 6));
    RsLattice l = enumerate_rs(ctx);
    for (const auto& a : l.elements) {
      // Brute complementedness: some b with meet bottom and join top.
      bool brute = false;
      for (const auto& b : l.elements)
        if (meet_family(ctx, {a, b}) == l.bottom() && join_family(ctx, {a, b}) == l.top())
          brute = true;
      CHECK(brute == is_exact(a));
      CHECK(brute == is_complemented_in_rs(ctx, a));
      CHECK(is_exact(a) == is_exact(de_morgan(a)));
    }
  }
}

TEST_CASE("complement report is consistent") {
  ApproxContext ctx(gen::worked_example());
  RoughSet a = ctx.rough_pair(gen::mask_of(3, {1}));
  ComplementReport rep = complement_report(ctx, a);
  CHECK(rep.element == a);
  CHECK(rep.de_morgan == de_morgan(a));
  CHECK(rep.pseudo == pseudocomplement(ctx, a));
  CHECK(rep.dual_pseudo == dual_pseudocomplement(ctx, a));
  CHECK(rep.is_exact == rep.is_complemented);
}
