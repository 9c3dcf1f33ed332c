#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "isohorn/lr.hpp"

using namespace isohorn;

namespace {

// Independent oracle: hive counting.  A hive is a triangular array with
// prescribed border sums and superadditivity across every unit rhombus; the
// number of integral hives equals the tableau count.
long hive_count(const Partition& lam, const Partition& mu, const Partition& nu, int n) {
  if (lam.size() + mu.size() != nu.size()) return 0;
  std::vector<std::vector<long>> h(n + 1);
  for (int i = 0; i <= n; ++i) h[i].assign(i + 1, 0);
  for (int i = 1; i <= n; ++i) h[i][0] = h[i - 1][0] + lam.part(i - 1);
  for (int j = 1; j <= n; ++j) h[n][j] = h[n][j - 1] + mu.part(j - 1);
  for (int i = 1; i < n; ++i) h[i][i] = h[i - 1][i - 1] + nu.part(i - 1);
  if (h[n - 1][n - 1] + nu.part(n - 1) != h[n][n]) return 0;

  std::vector<std::pair<int, int>> interior;
  for (int i = 2; i < n; ++i)
    for (int j = 1; j < i; ++j) interior.emplace_back(i, j);

  long bound = std::max(nu.size(), 1L);
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == interior.size()) {
      for (int i = 0; i + 2 <= n; ++i)
        for (int j = 0; j <= i; ++j)
          if (h[i + 1][j] + h[i + 1][j + 1] < h[i][j] + h[i + 2][j + 1]) return;
      for (int i = 0; i + 1 <= n; ++i)
        for (int j = 1; j <= i; ++j)
          if (h[i][j] + h[i + 1][j] < h[i][j - 1] + h[i + 1][j + 1]) return;
      for (int i = 0; i + 1 <= n; ++i)
        for (int j = 0; j + 1 <= i; ++j)
          if (h[i][j] + h[i + 1][j + 1] < h[i + 1][j] + h[i][j + 1]) return;
      ++count;
      return;
    }
    auto [i, j] = interior[k];
    for (long v = 0; v <= bound; ++v) {
      h[i][j] = v;
      rec(k + 1);
    }
    h[i][j] = 0;
  };
  rec(0);
  return count;
}

std::vector<Partition> partitions_up_to(int rows, long size) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long maxpart, long left) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (long p = std::min(maxpart, left); p >= 1; --p) {
      cur.push_back(p);
      rec(p, left - p);
      cur.pop_back();
    }
  };
  rec(size, size);
  return out;
}

}  // namespace

TEST_CASE("pinned coefficients") {
  CHECK(lr_coefficient(Partition({2, 1}), Partition(), Partition({2, 1})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1, 1}), Partition({2, 1})) == 1);
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
}

TEST_CASE("pieri expansions") {
  SchurExpansion sq = schur_product(Partition({1}), Partition({1}), 2);
  CHECK(sq.size() == 2);
  CHECK(sq.at(Partition({2})) == 1);
  CHECK(sq.at(Partition({1, 1})) == 1);
}

TEST_CASE("tableau count matches hive count") {
  std::vector<Partition> ps = partitions_up_to(3, 5);
  for (const auto& lam : ps)
    for (const auto& mu : ps) {
      if (lam.size() + mu.size() > 6) continue;
      SchurExpansion prod = schur_product(lam, mu, 3);
      std::vector<Partition> nus = partitions_up_to(3, lam.size() + mu.size());
      for (const auto& nu : nus) {
        if (nu.size() != lam.size() + mu.size()) continue;
        Int mine = lr_coefficient(lam, mu, nu);
        long hive = hive_count(lam, mu, nu, 3);
        CHECK(mine == hive);
        auto it = prod.find(nu);
        Int in_prod = it == prod.end() ? Int(0) : it->second;
        CHECK(mine == in_prod);
      }
    }
}

TEST_CASE("invariants of the sl ring") {
  CHECK(sl_invariant_dim(3, {Partition({1}), Partition({1}), Partition({1})}) == 1);
  CHECK(sl_invariant_dim(2, {Partition({1}), Partition({1})}) == 1);
  CHECK(sl_invariant_dim(2, {Partition({1}), Partition({1}), Partition({1})}) == 0);
  CHECK(sl_invariant_dim(2, {Partition({2}), Partition({1}), Partition({1})}) == 1);
  // Clebsch-Gordan: V_2 x V_2 x V_2 for SL(2) has a one-dimensional invariant
  CHECK(sl_invariant_dim(2, {Partition({2}), Partition({2}), Partition({2})}) == 1);
}

TEST_CASE("dualities") {
  // rectangles splitting k*r across the factors
  DualityCheck g =
      grassmann_duality({Partition({2, 2}), Partition({1, 1}), Partition({1, 1})}, 2, 3);
  CHECK(g.equal());
  // an irreducible against its dual has a one-dimensional invariant
  Partition mu({2, 1});
  DualityCheck h = grassmann_duality({mu, mu.dual_in_box(3, 2)}, 2, 3);
  CHECK(h.equal());
  CHECK(h.lhs == 1);
  DualityCheck o = ordinary_duality({mu, mu, mu}, 2, 3);
  CHECK(o.equal());
}
