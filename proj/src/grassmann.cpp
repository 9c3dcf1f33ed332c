#include "isohorn/grassmann.hpp"

#include <mutex>
#include <stdexcept>

namespace isohorn {

namespace {

SchurExpansion box_product(const std::vector<Partition>& parts, int rows, int width) {
  SchurExpansion acc;
  acc.emplace(Partition(), Int(1));
  for (const auto& p : parts) {
    acc = schur_product(acc, p, rows);
    for (auto it = acc.begin(); it != acc.end();)
      it = it->first.width() > width ? acc.erase(it) : std::next(it);
  }
  return acc;
}

std::vector<Partition> to_partitions(const std::vector<AIndex>& indices, int m, int N) {
  std::vector<Partition> ps;
  for (const auto& A : indices) {
    if (A.card() != m || A.ambient() != N)
      throw std::invalid_argument("gr_product: mixed ambient parameters");
    ps.push_back(A.codim_partition());
  }
  return ps;
}

}  // namespace

CohomClassA gr_product(const std::vector<AIndex>& indices, int m, int N) {
  CohomClassA out;
  out.m = m;
  out.N = N;
  SchurExpansion acc = box_product(to_partitions(indices, m, N), m, N - m);
  for (const auto& [shape, c] : acc)
    out.coeffs.emplace(AIndex(partition_to_subset(shape, m, N), N), c);
  return out;
}

bool gr_nonvanishing(const std::vector<AIndex>& indices, int m, int N) {
  long total = 0;
  for (const auto& A : indices) total += A.codim();
  if (total > static_cast<long>(m) * (N - m)) return false;
  return !gr_product(indices, m, N).zero();
}

Int gr_point_coefficient(const std::vector<AIndex>& indices, int m, int N) {
  long total = 0;
  for (const auto& A : indices) total += A.codim();
  if (total != static_cast<long>(m) * (N - m)) return 0;
  CohomClassA prod = gr_product(indices, m, N);
  std::vector<int> point(m);
  for (int i = 0; i < m; ++i) point[i] = i + 1;
  auto it = prod.coeffs.find(AIndex(point, N));
  return it == prod.coeffs.end() ? Int(0) : it->second;
}

namespace {

struct HornKey {
  int d, r, s;
  bool point_only;
  bool operator<(const HornKey& o) const {
    return std::tie(d, r, s, point_only) < std::tie(o.d, o.r, o.s, o.point_only);
  }
};

std::map<HornKey, std::vector<std::vector<std::vector<int>>>> horn_memo;
std::mutex horn_mutex;

std::vector<std::vector<std::vector<int>>> build_horn(int d, int r, int s, bool point_only) {
  std::vector<AIndex> singles = all_a_indices(d, r);
  long full = static_cast<long>(d) * (r - d);
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> chosen(s, 0);
  // fold products left to right, pruning by degree and by vanishing
  std::function<void(int, const SchurExpansion&, long)> rec =
      [&](int j, const SchurExpansion& acc, long degree) {
        if (j == s) {
          if (point_only && degree != full) return;
          out.emplace_back();
          for (int t = 0; t < s; ++t) out.back().push_back(singles[chosen[t]].elements());
          return;
        }
        for (std::size_t k = 0; k < singles.size(); ++k) {
          long deg2 = degree + singles[k].codim();
          if (deg2 > full) continue;
          SchurExpansion next = schur_product(acc, singles[k].codim_partition(), d);
          for (auto it = next.begin(); it != next.end();)
            it = it->first.width() > r - d ? next.erase(it) : std::next(it);
          if (next.empty()) continue;
          chosen[j] = static_cast<int>(k);
          rec(j + 1, next, deg2);
        }
      };
  SchurExpansion unit;
  unit.emplace(Partition(), Int(1));
  rec(0, unit, 0);
  return out;
}

}  // namespace

const std::vector<std::vector<std::vector<int>>>& horn_list(int d, int r, int s) {
  if (d < 1 || d > r) throw std::invalid_argument("horn_list: need 1 <= d <= r");
  std::lock_guard<std::mutex> lock(horn_mutex);
  HornKey key{d, r, s, false};
  auto it = horn_memo.find(key);
  if (it == horn_memo.end()) it = horn_memo.emplace(key, build_horn(d, r, s, false)).first;
  return it->second;
}

const std::vector<std::vector<std::vector<int>>>& horn_list_point(int d, int r, int s) {
  if (d < 1 || d > r) throw std::invalid_argument("horn_list_point: need 1 <= d <= r");
  std::lock_guard<std::mutex> lock(horn_mutex);
  HornKey key{d, r, s, true};
  auto it = horn_memo.find(key);
  if (it == horn_memo.end()) it = horn_memo.emplace(key, build_horn(d, r, s, true)).first;
  return it->second;
}

HornCheckResult horn_inequality_check(const std::vector<Partition>& mus, long bound, int r) {
  int s = static_cast<int>(mus.size());
  for (const auto& m : mus)
    if (static_cast<int>(m.rows()) > r)
      throw std::invalid_argument("horn_inequality_check: partition longer than r");
  for (int d = 1; d <= r; ++d) {
    for (const auto& tuple : horn_list(d, r, s)) {
      long lhs = 0;
      for (int j = 0; j < s; ++j)
        for (int a : tuple[j]) lhs += mus[j].part(a - 1);
      if (lhs > static_cast<long>(d) * bound) return HornCheckResult{false, d, tuple};
    }
  }
  return HornCheckResult{};
}

}  // namespace isohorn
