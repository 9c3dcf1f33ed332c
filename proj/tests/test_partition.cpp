#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isohorn/partition.hpp"

using namespace isohorn;

TEST_CASE("conjugate transposes the diagram") {
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
}

TEST_CASE("box flip") {
  // zero with r parts flips to the full m x r rectangle
  Partition zero({0, 0, 0});
  Partition flipped = zero.flip(2, 3);
  CHECK(flipped == Partition({3, 3}));

  // (2,0) in the 2x2 box: complement reversed is (2,0), conjugate (1,1)
  CHECK(Partition({2, 0}).flip(2) == Partition({1, 1}));

  CHECK_THROWS(Partition({3}).flip(2));
}

TEST_CASE("flip is an involution on boxed partitions") {
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= a; ++b)
      for (long c = 0; c <= b; ++c) {
        Partition mu({a, b, c});
        CHECK(mu.flip(3, 3).flip(3, 3) == mu);
        CHECK(mu.flip(5, 3).flip(3, 5) == mu);
      }
}

TEST_CASE("subset bijection") {
  CHECK(partition_to_subset(Partition(), 2, 4) == std::vector<int>{3, 4});
  CHECK(partition_to_subset(Partition({2, 2}), 2, 4) == std::vector<int>{1, 2});
  CHECK(partition_to_subset(Partition({1, 0}), 2, 4) == std::vector<int>{2, 4});
  for (long a = 0; a <= 2; ++a)
    for (long b = 0; b <= a; ++b) {
      Partition mu({a, b});
      CHECK(subset_to_partition(partition_to_subset(mu, 2, 4), 4) == mu);
    }
  CHECK_THROWS(partition_to_subset(Partition({5}), 1, 4));
}

TEST_CASE("dual in box") {
  CHECK(Partition({2, 1}).dual_in_box(3) == Partition({2, 1}));
  CHECK(Partition({3, 0}).dual_in_box(3) == Partition({3, 0}));
}
