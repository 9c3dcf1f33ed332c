#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isohorn/characters.hpp"
#include "isohorn/lr.hpp"

using namespace isohorn;

namespace {
Weight sp_weight(int n, std::vector<long> coords) {
  std::vector<Rat> c;
  for (long x : coords) c.emplace_back(x);
  return Weight(GroupTag::Sp, n, c);
}
Weight so_weight(int n, std::vector<long> coords) {
  std::vector<Rat> c;
  for (long x : coords) c.emplace_back(x);
  return Weight(GroupTag::SO, n, c);
}
}  // namespace

TEST_CASE("classical dimensions") {
  RootSystem c2{RSType::C, 2};
  CHECK(weyl_dim(c2, {2, 0}) == 4);       // defining module of Sp(4)
  CHECK(weyl_dim(c2, {2, 2}) == 5);       // second fundamental
  CHECK(weyl_dim(c2, {4, 0}) == 10);      // adjoint
  CHECK(weyl_dim(c2, {4, 2}) == 16);
  RootSystem b2{RSType::B, 2};
  CHECK(weyl_dim(b2, {2, 0}) == 5);       // vector module of SO(5)
  CHECK(weyl_dim(b2, {1, 1}) == 4);       // spin module
  RootSystem a2{RSType::A, 3};
  CHECK(weyl_dim(a2, {2, 0, 0}) == 3);
  CHECK(weyl_dim(a2, {2, 2, 0}) == 3);
  CHECK(weyl_dim(a2, {4, 2, 0}) == 8);    // adjoint of SL(3)
}

TEST_CASE("character mass equals the dimension formula") {
  RootSystem c2{RSType::C, 2};
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b)
      CHECK(character_mass(c2, {2 * a, 2 * b}) == weyl_dim(c2, {2 * a, 2 * b}));
  RootSystem b2{RSType::B, 2};
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b) {
      CHECK(character_mass(b2, {2 * a, 2 * b}) == weyl_dim(b2, {2 * a, 2 * b}));
      CHECK(character_mass(b2, {2 * a + 1, 2 * b + 1}) == weyl_dim(b2, {2 * a + 1, 2 * b + 1}));
    }
}

TEST_CASE("pinned invariants") {
  // SL(2): V x V has the symplectic pairing
  CHECK(invariant_dim_sl_partitions(2, {Partition({1}), Partition({1})}) == 1);
  // Sp(4): the defining form
  CHECK(invariant_dim(GroupTag::Sp, {sp_weight(2, {1, 0}), sp_weight(2, {1, 0})}) == 1);
  // SO(5): no invariant in an odd tensor power of the vector module
  CHECK(invariant_dim(GroupTag::SO,
                      {so_weight(2, {1, 0}), so_weight(2, {1, 0}), so_weight(2, {1, 0})}) == 0);
  CHECK(invariant_dim(GroupTag::SO, {so_weight(2, {1, 0}), so_weight(2, {1, 0})}) == 1);
  // self-dual pairing for every small Sp(4) weight
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= a; ++b)
      CHECK(invariant_dim(GroupTag::Sp, {sp_weight(2, {a, b}), sp_weight(2, {a, b})}) == 1);
}

TEST_CASE("spin weights") {
  Weight half(GroupTag::Spin, 2, {Rat(1, 2), Rat(1, 2)});
  CHECK(half.dominant());
  CHECK(half.integral());
  CHECK(dim_of_irrep(GroupTag::Spin, half) == 4);
  CHECK(invariant_dim(GroupTag::Spin, {half, half}) == 1);
  // mixed integral/half-integral coordinates are rejected
  CHECK_THROWS((void)Weight(GroupTag::Spin, 2, {Rat(1), Rat(1, 2)}).integral());
  Weight bad(GroupTag::SO, 2, {Rat(1, 2), Rat(1, 2)});
  CHECK(!bad.integral());
}

TEST_CASE("tableau route agrees with the character route") {
  std::vector<Partition> ps;
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= b; ++c) ps.push_back(Partition({a, b, c}));
  for (int r = 2; r <= 3; ++r) {
    SplitMix64 rng(99);
    for (int t = 0; t < 60; ++t) {
      std::vector<Partition> tuple;
      long total = 0;
      for (int j = 0; j < 3; ++j) {
        Partition p = ps[rng.next() % ps.size()];
        total += p.size();
        tuple.push_back(p);
      }
      if (total > 12) continue;
      CHECK(sl_invariant_dim(r, tuple) == invariant_dim_sl_partitions(r, tuple));
    }
  }
}

TEST_CASE("invariant dimension is symmetric in the factors") {
  std::vector<Weight> ws{sp_weight(2, {2, 1}), sp_weight(2, {1, 1}), sp_weight(2, {1, 0})};
  Int base = invariant_dim(GroupTag::Sp, ws);
  std::sort(ws.begin(), ws.end(), [](const Weight& a, const Weight& b) { return a.c < b.c; });
  do {
    CHECK(invariant_dim(GroupTag::Sp, ws) == base);
  } while (std::next_permutation(ws.begin(), ws.end(), [](const Weight& a, const Weight& b) {
    return a.c < b.c;
  }));
}

TEST_CASE("restriction of fundamental weights") {
  // SL(4) omega_2 restricts to the second fundamental weight of Sp(4)
  Weight om2 = partition_as_sl_weight(Partition({1, 1}), 4);
  Weight r2 = restrict_weight(om2, GroupTag::Sp);
  CHECK(r2.c == std::vector<Rat>{Rat(1), Rat(1)});
  Weight om1 = partition_as_sl_weight(Partition({1}), 4);
  CHECK(restrict_weight(om1, GroupTag::Sp).c == std::vector<Rat>{Rat(1), Rat(0)});
  Weight bom2 = partition_as_sl_weight(Partition({1, 1}), 5);
  CHECK(restrict_weight(bom2, GroupTag::SO).c == std::vector<Rat>{Rat(1), Rat(1)});
  // restrictions of dominants stay dominant
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= b; ++c) {
        Weight w = partition_as_sl_weight(Partition({a, b, c}), 4);
        CHECK(restrict_weight(w, GroupTag::Sp).dominant());
      }
  // restrict(omega_m of SL(2n)) = omega_m of Sp(2n)
  for (int m = 1; m <= 3; ++m) {
    std::vector<long> col(m, 1);
    Weight om = partition_as_sl_weight(Partition(col), 6);
    Weight rc = restrict_weight(om, GroupTag::Sp);
    for (int i = 0; i < 3; ++i) CHECK(rc.c[i] == (i < m ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("size caps give clean errors") {
  CHECK_THROWS(invariant_dim(GroupTag::Sp, {sp_weight(2, {60, 0}), sp_weight(2, {60, 0})}));
}
