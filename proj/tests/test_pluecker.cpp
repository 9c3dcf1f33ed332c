#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "isohorn/pluecker.hpp"

using namespace isohorn;

TEST_CASE("plucker relations vanish on decomposable vectors") {
  GrassCoords gc(2, 5);
  auto rels = plucker_relations(gc);
  CHECK(!rels.empty());
  SplitMix64 rng(8);
  for (int t = 0; t < 5; ++t) {
    Mat<Fp> X(5, 2);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 2; ++j) X(i, j) = Fp(rng.next());
    std::vector<Fp> p = plucker_vector(X, gc);
    for (const auto& rel : rels) {
      Fp acc(std::uint64_t(0));
      for (const auto& term : rel) {
        Fp v = p[term.a] * p[term.b];
        acc = term.sign > 0 ? acc + v : acc - v;
      }
      CHECK(acc.is_zero());
    }
  }
  GrassCoords g36(3, 6);
  auto rels36 = plucker_relations(g36);
  for (int t = 0; t < 3; ++t) {
    Mat<Fp> X(6, 3);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 3; ++j) X(i, j) = Fp(rng.next());
    std::vector<Fp> p = plucker_vector(X, g36);
    for (const auto& rel : rels36) {
      Fp acc(std::uint64_t(0));
      for (const auto& term : rel) {
        Fp v = p[term.a] * p[term.b];
        acc = term.sign > 0 ? acc + v : acc - v;
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("compound matrices are multiplicative on plucker vectors") {
  GrassCoords gc(2, 4);
  SplitMix64 rng(21);
  Mat<Fp> M(4, 4), X(4, 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) M(i, j) = Fp(rng.next());
    for (int j = 0; j < 2; ++j) X(i, j) = Fp(rng.next());
  }
  std::vector<Fp> direct = plucker_vector(M * X, gc);
  Mat<Fp> C = compound_matrix(M, gc);
  std::vector<Fp> p = plucker_vector(X, gc);
  for (int i = 0; i < C.rows(); ++i) {
    Fp acc(std::uint64_t(0));
    for (int j = 0; j < C.cols(); ++j) acc = acc + C(i, j) * p[j];
    CHECK(acc == direct[i]);
  }
}

TEST_CASE("properness on a projective space") {
  PropernessOptions opt;
  opt.trials = 6;
  opt.seed = 31;
  opt.exact_dims = true;

  // two codimension-one conditions on P^3 from symplectic flags: a line
  std::vector<AIndex> t1{AIndex({3}, 4), AIndex({3}, 4), AIndex({4}, 4)};
  PropernessReport r1 = mc_properness(t1, FormTag::Symplectic, opt);
  CHECK(r1.passed);
  CHECK(r1.expected_dim == 1);
  for (const auto& o : r1.outcomes) CHECK(o.observed_dim == 1);

  // codimension overflow: empty
  std::vector<AIndex> t2{AIndex({1}, 4), AIndex({2}, 4), AIndex({3}, 4)};
  PropernessReport r2 = mc_properness(t2, FormTag::Symplectic, opt);
  CHECK(r2.passed);
  CHECK(r2.expected_dim < 0);
  for (const auto& o : r2.outcomes) CHECK(o.observed_dim == -1);
}

TEST_CASE("properness with quadric conditions") {
  PropernessOptions opt;
  opt.trials = 6;
  opt.seed = 5;
  // complementary triple on Gr(2,4) from symplectic flags
  std::vector<AIndex> t{AIndex({1, 4}, 4), AIndex({2, 4}, 4), AIndex({2, 4}, 4)};
  PropernessReport rep = mc_properness(t, FormTag::Symplectic, opt);
  CHECK(rep.expected_dim == 0);
  CHECK(rep.passed);
}

TEST_CASE("negative control: even orthogonal flags violate properness") {
  PropernessOptions opt;
  opt.trials = 6;
  opt.seed = 13;
  opt.exact_dims = true;
  // two maximal-isotropic membership conditions on lines in C^6: same-family
  // subspaces always meet, so the expected emptiness fails
  std::vector<AIndex> t{AIndex({3}, 6), AIndex({3}, 6), AIndex({6}, 6)};
  PropernessReport rep = mc_properness(t, FormTag::SymmetricEven, opt);
  CHECK(!rep.passed);
  CHECK(rep.expected_dim == -1);
  for (const auto& o : rep.outcomes) CHECK(o.observed_dim >= 0);

  // the odd orthogonal sibling is proper
  std::vector<AIndex> ok{AIndex({3}, 7), AIndex({3}, 7), AIndex({7}, 7)};
  PropernessReport rep2 = mc_properness(ok, FormTag::SymmetricOdd, opt);
  CHECK(rep2.passed);
}

TEST_CASE("size cap is enforced") {
  PropernessOptions opt;
  std::vector<AIndex> t{AIndex({1, 2, 3, 4}, 12), AIndex({1, 2, 3, 4}, 12),
                        AIndex({9, 10, 11, 12}, 12)};
  CHECK_THROWS(mc_properness(t, FormTag::Symplectic, opt));
}
