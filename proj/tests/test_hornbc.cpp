#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isohorn/bgg.hpp"
#include "isohorn/flags.hpp"

using namespace isohorn;

TEST_CASE("chi evaluations") {
  ChiEval top = chi_eval(CIndex({3, 4}, 2));
  CHECK(top.codim_sum == 0);
  CHECK(top.consistent());

  ChiEval mid = chi_eval(CIndex({2, 4}, 2));
  CHECK(mid.codim_sum == 2);
  CHECK(mid.consistent());

  ChiEval pt = chi_eval(CIndex({1, 2}, 2));
  CHECK(pt.codim_sum == 6);
  CHECK(pt.consistent());

  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& I : all_c_indices(r, n)) CHECK(chi_eval(I).consistent());
}

TEST_CASE("degenerated product on the projective space") {
  // ordinary triple product is the point class, but the dimension condition
  // fails, so the degenerated product vanishes
  CIndex h({3}, 2);
  DeformedResult res = deformed_nonvanishing({h, h, h}, 1, 2);
  CHECK(res.ordinary_nonzero);
  CHECK(!res.beta1);
  CHECK(!res.value);

  DeformedResult good =
      deformed_nonvanishing({CIndex({2}, 2), CIndex({3}, 2), CIndex({4}, 2)}, 1, 2);
  CHECK(good.ordinary_nonzero);
  CHECK(good.beta1);
  CHECK(good.value);

  // complementary-degree precondition is enforced
  CHECK_THROWS(deformed_nonvanishing({h, h}, 1, 2));
}

TEST_CASE("lagrangian case: dimension condition is automatic") {
  // r = n: the compression is the identity and beta1 follows from the degrees
  int n = 2, r = 2;
  std::vector<CIndex> cells = all_c_indices(r, n);
  for (const auto& a : cells)
    for (const auto& b : cells)
      for (const auto& c : cells) {
        long deg = a.stats().codim + b.stats().codim + c.stats().codim;
        if (deg != CIndex::ig_dim(r, n)) continue;
        DeformedResult res = deformed_nonvanishing({a, b, c}, r, n);
        CHECK(res.beta1);
        CHECK(res.value == res.ordinary_nonzero);
      }
}

TEST_CASE("symplectic factorization record") {
  HornFactorization h =
      horn_c_check({CIndex({2}, 2), CIndex({3}, 2), CIndex({4}, 2)}, 1, 2);
  CHECK(h.beta1);
  CHECK(h.beta2);
  CHECK(h.beta3);
  CHECK(h.alpha);
  CHECK(h.consistent());
  CHECK(h.mu_data[0] == Partition({1}));
  CHECK(h.mu_data[1] == Partition({1}));
  CHECK(h.mu_data[2] == Partition({0}));

  CIndex hh({3}, 2);
  HornFactorization bad = horn_c_check({hh, hh, hh}, 1, 2);
  CHECK(!bad.beta1);
  CHECK(!bad.alpha);
  CHECK(bad.consistent());
}

TEST_CASE("orthogonal factorization record: rank one degenerates") {
  // r=1: both the dimension condition and the small product are vacuous
  std::vector<BIndex> cells = all_b_indices(1, 2);
  for (const auto& a : cells)
    for (const auto& b : cells)
      for (const auto& c : cells) {
        long deg = a.stats().codim + b.stats().codim + c.stats().codim;
        if (deg != BIndex::og_dim(1, 2)) continue;
        HornFactorization h = horn_b_check({a, b, c}, 1, 2);
        CHECK(h.beta1);
        CHECK(h.beta3);
        CHECK(h.consistent());
        CHECK(h.alpha == h.beta2);
      }
}

TEST_CASE("small-product condition against the constrained form spaces") {
  // beta3 computed in the coinvariant algebra must match the expected
  // dimension statement for the constrained symmetric-form space
  int r = 2;
  std::vector<CIndex> cells = all_c_indices(r, r);
  for (const auto& a : cells)
    for (const auto& b : cells)
      for (const auto& c : cells) {
        std::vector<CIndex> tuple{a, b, c};
        long cosym = 0;
        for (const auto& I : tuple) cosym += I.stats().cosym2;
        long expected = static_cast<long>(r) * (r + 1) / 2 - cosym;
        if (expected < 0) continue;
        bool nonzero = ig_nonvanishing(tuple, r, r);
        // draw generic flags and measure the constrained space
        std::vector<FlagBasis<Fp>> flags;
        std::vector<std::vector<int>> tdata;
        SplitMix64 rng(404);
        for (const auto& I : tuple) {
          flags.push_back(random_flag<Fp>(FormTag::None, r, rng.next()));
          tdata.push_back(I.t_profile());
        }
        long dim = sym2_constrained_dim(flags, tdata);
        if (nonzero) CHECK(dim == expected);
        if (dim != expected) CHECK(!nonzero);
      }
}

TEST_CASE("orthogonal beta3 against the alternating form spaces") {
  // the compressed product condition coincides with the expected-dimension
  // statement for the constrained alternating space (three random draws)
  int n = 3, r = 2;
  std::vector<BIndex> cells = all_b_indices(r, n);
  for (const auto& a : cells)
    for (const auto& b : cells)
      for (const auto& c : cells) {
        std::vector<BIndex> tuple{a, b, c};
        long deg = 0, cowedge = 0;
        for (const auto& J : tuple) {
          deg += J.stats().codim;
          cowedge += J.stats().cowedge2;
        }
        if (deg != BIndex::og_dim(r, n)) continue;
        long expected = static_cast<long>(r) * (r - 1) / 2 - cowedge;
        std::vector<CIndex> small;
        for (const auto& J : tuple) small.push_back(J.reindexed());
        bool beta3 = ig_nonvanishing(small, r - 1, r - 1);
        if (expected < 0) {
          CHECK(!beta3);
          continue;
        }
        bool any_match = false;
        for (std::uint64_t seed : {11u, 22u, 33u}) {
          std::vector<FlagBasis<Fp>> flags;
          std::vector<std::vector<int>> tdata;
          SplitMix64 rng(seed);
          for (const auto& J : tuple) {
            flags.push_back(random_flag<Fp>(FormTag::None, r, rng.next()));
            tdata.push_back(J.t_profile());
          }
          if (wedge2_constrained_dim(flags, tdata) == expected) any_match = true;
        }
        CHECK(beta3 == any_match);
      }
}
