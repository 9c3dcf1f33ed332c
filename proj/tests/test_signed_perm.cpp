#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isohorn/indices.hpp"
#include "isohorn/signed_perm.hpp"
#include "isohorn/weights.hpp"

using namespace isohorn;

TEST_CASE("group basics") {
  SignedPerm e = SignedPerm::identity(3);
  CHECK(e.length() == 0);
  CHECK(e.mu() == 0);
  SignedPerm w0 = SignedPerm::longest(3);
  CHECK(w0.length() == 9);  // n^2
  CHECK(w0.mu() == 3);
  CHECK((w0 * w0).is_identity());
  CHECK(all_signed_perms(2).size() == 8);
  CHECK(all_signed_perms(3).size() == 48);
}

TEST_CASE("generators satisfy the defining relations") {
  int n = 3;
  for (int i = 1; i <= n; ++i) {
    SignedPerm s = SignedPerm::generator(n, i);
    CHECK(s.length() == 1);
    CHECK((s * s).is_identity());
  }
  SignedPerm s2 = SignedPerm::generator(n, 2), s3 = SignedPerm::generator(n, 3);
  // braid of order 4 between the last two nodes
  CHECK(s2 * s3 * s2 * s3 == s3 * s2 * s3 * s2);
  SignedPerm s1 = SignedPerm::generator(n, 1);
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK(s1 * s3 == s3 * s1);
}

TEST_CASE("reduced words are reduced and correct") {
  for (const auto& w : all_signed_perms(3)) {
    std::vector<int> word = w.reduced_word();
    CHECK(static_cast<int>(word.size()) == w.length());
    SignedPerm acc = SignedPerm::identity(3);
    for (int i : word) acc = acc * SignedPerm::generator(3, i);
    CHECK(acc == w);
    CHECK(w.length() == w.length_via_b());
    // mu equals the letter count of the last generator
    int sn = 0;
    for (int i : word) sn += i == 3 ? 1 : 0;
    CHECK(sn == w.mu());
  }
}

TEST_CASE("embeddings into the symmetric groups") {
  // window [2,4] in rank 2: images (2, -1)
  CIndex I({2, 4}, 2);
  SignedPerm w = I.weyl();
  CHECK(w.images() == std::vector<int>{2, -1});
  CHECK(w.one_line_c() == std::vector<int>{2, 4, 1, 3});
  CHECK(w.one_line_b() == std::vector<int>{2, 5, 3, 1, 4});
  CHECK(w.length() == 2);

  // generator images under the two embeddings
  SignedPerm s2 = SignedPerm::generator(2, 2);
  CHECK(s2.one_line_c() == std::vector<int>{1, 3, 2, 4});
  CHECK(s2.one_line_b() == std::vector<int>{1, 4, 3, 2, 5});
}

TEST_CASE("coset representatives") {
  SignedPerm w0p = SignedPerm::longest_parabolic(3, 1);
  CHECK(w0p.images() == std::vector<int>{1, -2, -3});
  for (const auto& w : all_signed_perms(2)) {
    for (int r = 1; r <= 2; ++r) {
      SignedPerm m = w.minimal_rep(r);
      CHECK(m.is_minimal_rep(r));
      // same coset: m^{-1} w lies in the parabolic
      SignedPerm q = m.inverse() * w;
      for (int i = 1; i <= 2; ++i)
        if (i != r) continue;
      CHECK((q.minimal_rep(r)).is_identity());
    }
  }
}

TEST_CASE("coweight pull evaluation") {
  CIndex I({2, 4}, 2);
  std::vector<Rat> x = {Rat(1), Rat(1)};  // x_2^B
  std::vector<Rat> pulled = coweight_pull(I.weyl(), x);
  Rat total = pulled[0] + pulled[1];
  CHECK(total == Rat(2 - 2 * I.stats().mu));
}
