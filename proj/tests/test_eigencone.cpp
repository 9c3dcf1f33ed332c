#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isohorn/characters.hpp"
#include "isohorn/eigencone.hpp"
#include "isohorn/indices.hpp"

using namespace isohorn;

namespace {
std::vector<Rat> rv(std::vector<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("su(2) triangle inequalities") {
  // h_j = diag(a_j, -a_j): member iff the a's satisfy the triangle inequalities
  auto h = [&](long a1, long a2, long a3) {
    return std::vector<std::vector<Rat>>{rv({a1, -a1}), rv({a2, -a2}), rv({a3, -a3})};
  };
  CHECK(eigencone_member(GroupTag::SL, 2, h(1, 1, 2)));
  CHECK(!eigencone_member(GroupTag::SL, 2, h(1, 1, 3)));
  CHECK(eigencone_member(GroupTag::SL, 2, h(2, 3, 4)));
  CHECK(eigencone_member(GroupTag::SL, 2, h(0, 0, 0)));
  CHECK(!eigencone_member(GroupTag::SL, 2, h(5, 1, 1)));
}

TEST_CASE("rank-one symplectic cone equals the rank-one special linear cone") {
  // Sp(2) = SL(2): same verdicts in the a-coordinate
  for (long a1 = 0; a1 <= 3; ++a1)
    for (long a2 = 0; a2 <= 3; ++a2)
      for (long a3 = 0; a3 <= 3; ++a3) {
        std::vector<std::vector<Rat>> hc{rv({a1}), rv({a2}), rv({a3})};
        std::vector<std::vector<Rat>> ha{rv({a1, -a1}), rv({a2, -a2}), rv({a3, -a3})};
        CHECK(eigencone_member(GroupTag::Sp, 1, hc) == eigencone_member(GroupTag::SL, 2, ha));
      }
}

TEST_CASE("membership basics") {
  // zero tuple always belongs
  std::vector<std::vector<Rat>> zero{rv({0, 0}), rv({0, 0}), rv({0, 0})};
  CHECK(eigencone_member(GroupTag::Sp, 2, zero));

  // (h, h*) with a zero filler: a pairing witness exists
  std::vector<std::vector<Rat>> pair{rv({3, 1}), rv({3, 1}), rv({0, 0})};
  CHECK(eigencone_member(GroupTag::Sp, 2, pair));

  // scaling invariance of membership
  std::vector<std::vector<Rat>> h{rv({2, 1}), rv({2, 0}), rv({3, 1})};
  bool base = eigencone_member(GroupTag::Sp, 2, h);
  for (auto& u : h)
    for (auto& x : u) x *= Rat(7, 3);
  CHECK(eigencone_member(GroupTag::Sp, 2, h) == base);

  std::vector<std::vector<Rat>> bad{rv({1, 2}), rv({0, 0}), rv({0, 0})};
  CHECK_THROWS(eigencone_member(GroupTag::Sp, 2, bad));
}

TEST_CASE("inequalities only depend on the coset") {
  // the functional built from w and from w*q for q in the parabolic must
  // agree: the pulled fundamental weight is invariant under the parabolic
  auto row_of = [](const SignedPerm& w, int r) {
    std::vector<Rat> row(w.rank(), Rat(0));
    for (int i = 1; i <= r; ++i) {
      int im = w.image(i);
      row[std::abs(im) - 1] += im > 0 ? Rat(1) : Rat(-1);
    }
    return row;
  };
  int n = 3;
  for (int r = 1; r <= n; ++r)
    for (const auto& I : all_c_indices(r, n)) {
      SignedPerm w = I.weyl();
      std::vector<Rat> base = row_of(w, r);
      for (const auto& q : all_signed_perms(n)) {
        if (!(q.minimal_rep(r).is_identity())) continue;  // q in the parabolic
        CHECK(row_of(w * q, r) == base);
      }
    }
}

TEST_CASE("comparison with the embedded special linear systems") {
  ConeCompareReport rep = compare_cones(GroupTag::Sp, 2, 3, 200, 11);
  CHECK(rep.passed());
  CHECK(rep.members > 0);
  CHECK(rep.members < rep.samples);
  ConeCompareReport rb = compare_cones(GroupTag::SO, 2, 3, 150, 12);
  CHECK(rb.passed());
}

TEST_CASE("weight cone against the invariant scan") {
  // SL(2): (omega, omega, 2omega) carries an invariant at scale one
  std::vector<Weight> ws{Weight(GroupTag::SL, 2, rv({1, 0})), Weight(GroupTag::SL, 2, rv({1, 0})),
                         Weight(GroupTag::SL, 2, rv({2, 0}))};
  // kappa for the special linear group keeps diagonal coordinates, but the
  // membership test needs sum-zero coweights; shift each partition weight
  for (auto& w : ws) {
    Rat mean(0);
    for (const Rat& c : w.c) mean += c;
    mean /= Rat(static_cast<long>(w.c.size()));
    for (Rat& c : w.c) c -= mean;
  }
  std::vector<std::vector<Rat>> h{ws[0].c, ws[1].c, ws[2].c};
  CHECK(eigencone_member(GroupTag::SL, 2, h));

  // Sp(4): the three-fold second fundamental weight
  std::vector<Weight> sp{Weight(GroupTag::Sp, 2, rv({1, 1})), Weight(GroupTag::Sp, 2, rv({1, 1})),
                         Weight(GroupTag::Sp, 2, rv({1, 1}))};
  WeightConeCheck chk = weight_cone_cross_check(GroupTag::Sp, sp, 3);
  CHECK(chk.consistent);
  CHECK(chk.first_positive_scale > 0);
  CHECK(chk.cone_member);

  std::vector<Weight> zero{Weight(GroupTag::Sp, 2, rv({0, 0})), Weight(GroupTag::Sp, 2, rv({0, 0})),
                           Weight(GroupTag::Sp, 2, rv({0, 0}))};
  WeightConeCheck z = weight_cone_cross_check(GroupTag::Sp, zero, 2);
  CHECK(z.cone_member);
  CHECK(z.first_positive_scale == 1);
}
