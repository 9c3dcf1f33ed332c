#include "isohorn/indices.hpp"

namespace isohorn {

namespace {
void subsets_rec(int lo, int hi, int k, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& emit) {
  if (k == 0) {
    emit(cur);
    return;
  }
  for (int x = lo; x <= hi - k + 1; ++x) {
    cur.push_back(x);
    subsets_rec(x + 1, hi, k - 1, cur, emit);
    cur.pop_back();
  }
}
}  // namespace

std::vector<AIndex> all_a_indices(int m, int N) {
  std::vector<AIndex> out;
  std::vector<int> cur;
  subsets_rec(1, N, m, cur, [&](const std::vector<int>& v) { out.emplace_back(v, N); });
  return out;
}

std::vector<CIndex> all_c_indices(int r, int n) {
  std::vector<CIndex> out;
  std::vector<int> cur;
  subsets_rec(1, 2 * n, r, cur, [&](const std::vector<int>& v) {
    for (int x : v)
      for (int y : v)
        if (x + y == 2 * n + 1) return;
    out.emplace_back(v, n);
  });
  return out;
}

std::vector<BIndex> all_b_indices(int r, int n) {
  std::vector<BIndex> out;
  std::vector<int> cur;
  subsets_rec(1, 2 * n + 1, r, cur, [&](const std::vector<int>& v) {
    for (int x : v) {
      if (x == n + 1) return;
      for (int y : v)
        if (x + y == 2 * n + 2) return;
    }
    out.emplace_back(v, n);
  });
  return out;
}

}  // namespace isohorn
