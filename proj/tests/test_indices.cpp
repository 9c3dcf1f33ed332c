#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isohorn/indices.hpp"

using namespace isohorn;

TEST_CASE("dominance counts") {
  CHECK(count_greater({2}, {1, 4}) == 1);
  CHECK(count_greater({1, 2, 3}, {}) == 0);
  CHECK(count_greater({3, 4}, {1, 2}) == 4);
  CHECK(count_geq({2, 3}, {3}) == 1);
}

TEST_CASE("complements") {
  CIndex I({2}, 2);
  CHECK(I.barred() == std::vector<int>{3});
  CHECK(I.tilde() == std::vector<int>{1, 4});

  CIndex full({1, 3}, 2);
  CHECK(full.barred() == std::vector<int>{2, 4});
  CHECK(full.tilde().empty());

  BIndex J({1, 4}, 2);
  CHECK(J.barred() == std::vector<int>{2, 5});
  CHECK(J.tilde() == std::vector<int>{3});

  CHECK_THROWS(CIndex({1, 4}, 2));   // meets its reflection
  CHECK_THROWS(BIndex({3}, 2));      // contains n+1
  CHECK_THROWS(BIndex({1, 5}, 2));   // meets its reflection
}

TEST_CASE("symplectic cell statistics") {
  CIndex bottom({1, 2}, 2);
  CHECK(bottom.stats().dim == 0);
  CHECK(bottom.stats().mu == 0);
  CHECK(bottom.stats().sym2 == 0);

  CIndex I({2, 4}, 2);
  CellStatsC st = I.stats();
  CHECK(count_greater(I.elements(), I.barred()) == 3);
  CHECK(st.mu == 1);
  CHECK(st.sym2 == 2);
  CHECK(st.wedge2 == 1);
  CHECK(st.dim == 2);
  CHECK(st.codim == 1);

  CIndex top({3, 4}, 2);
  CHECK(top.stats().dim == 3);
  CHECK(CIndex::ig_dim(2, 2) == 3);
}

TEST_CASE("cell dimension equals reduced-word length") {
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& I : all_c_indices(r, n)) {
        CHECK(I.stats().dim == I.weyl().length());
        CHECK(I.weyl().is_minimal_rep(r));
      }
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& J : all_b_indices(r, n)) {
        CHECK(J.stats().dim == J.weyl().length());
        CHECK(J.weyl().is_minimal_rep(r));
      }
}

TEST_CASE("orthogonal cell statistics") {
  CHECK(BIndex({1}, 2).stats().dim == 0);
  CHECK(BIndex({5}, 2).stats().dim == 3);
  CHECK(BIndex::og_dim(1, 2) == 3);
  CHECK(BIndex({2}, 2).stats().dim == 1);
  CHECK(BIndex({4, 5}, 2).stats().dim == 3);
  CHECK(BIndex::og_dim(2, 2) == 3);
}

TEST_CASE("order-preserving compression") {
  // n = r: identity
  CIndex lag({2, 4}, 2);
  CHECK(lag.reindexed() == lag);

  CIndex I({1, 4}, 3);
  CHECK(I.reindexed() == CIndex({1, 3}, 2));
  CIndex K({2, 3}, 3);
  CHECK(K.reindexed() == CIndex({1, 2}, 2));

  // compression preserves sym2 and mu-bar
  for (int n = 2; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& J : all_c_indices(r, n)) {
        CIndex small = J.reindexed();
        CHECK(small.stats().sym2 == J.stats().sym2);
        CHECK(r - small.stats().mu == r - J.stats().mu);
      }
}

TEST_CASE("orthogonal pair-drop compression") {
  for (int n = 2; n <= 3; ++n)
    for (int r = 2; r <= n; ++r)
      for (const auto& J : all_b_indices(r, n)) {
        CIndex small = J.reindexed();
        CHECK(small.card() == r - 1);
        CHECK(small.n() == r - 1);
      }
}

TEST_CASE("even orthogonal component bijection") {
  CHECK(og_plus_to_c({1, 2, 3}, 3) == CIndex({1, 2}, 2));
  CHECK(og_plus_to_c({2, 4, 6}, 3) == CIndex({2, 4}, 2));
  CHECK_THROWS(og_plus_to_c({1, 2, 4}, 3));  // parity violation
  CHECK_THROWS(og_plus_to_c({1, 2, 6}, 3));  // meets reflection

  // round trip over the whole small index set
  for (int r = 2; r <= 4; ++r)
    for (const auto& I : all_c_indices(r - 1, r - 1)) {
      std::vector<int> lifted = c_to_og_plus(I, r);
      CHECK(og_plus_to_c(lifted, r) == I);
    }
}

TEST_CASE("a-side index data") {
  AIndex A({2, 4}, 5);
  CHECK(A.cell_dim() == 3);
  CHECK(A.codim() == 3);
  CHECK(A.permutation() == std::vector<int>{2, 4, 1, 3, 5});
  CHECK(all_a_indices(2, 4).size() == 6);
  CHECK(all_c_indices(2, 2).size() == 4);
  CHECK(all_c_indices(2, 3).size() == 12);
  CHECK(all_b_indices(1, 2).size() == 4);
  CHECK(all_b_indices(2, 3).size() == 12);
}
