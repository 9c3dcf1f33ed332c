#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "isohorn/partition.hpp"
#include "isohorn/signed_perm.hpp"

namespace isohorn {

// |I > K|: pairs (i,k) with i in I, k in K, i > k.  Empty sets give 0.
inline long count_greater(const std::vector<int>& I, const std::vector<int>& K) {
  long c = 0;
  for (int i : I)
    for (int k : K)
      if (i > k) ++c;
  return c;
}

// |I >= K| variant.
inline long count_geq(const std::vector<int>& I, const std::vector<int>& K) {
  long c = 0;
  for (int i : I)
    for (int k : K)
      if (i >= k) ++c;
  return c;
}

inline long count_greater(const std::vector<int>& I, int k) {
  return count_greater(I, std::vector<int>{k});
}
inline long count_geq(const std::vector<int>& I, int k) {
  return count_geq(I, std::vector<int>{k});
}

inline std::string subset_str(const std::vector<int>& A) {
  std::string s = "[";
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(A[i]);
  }
  return s + "]";
}

namespace detail {
inline void check_strictly_increasing(const std::vector<int>& v, int lo, int hi,
                                      const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < lo || v[i] > hi) throw std::invalid_argument(std::string(what) + ": out of range");
    if (i > 0 && v[i] <= v[i - 1])
      throw std::invalid_argument(std::string(what) + ": not strictly increasing");
  }
}
}  // namespace detail

// m-subset of [N], indexing a Schubert cell of Gr(m, N).
class AIndex {
 public:
  AIndex(std::vector<int> elems, int ambient) : a_(std::move(elems)), N_(ambient) {
    detail::check_strictly_increasing(a_, 1, N_, "AIndex");
  }
  const std::vector<int>& elements() const { return a_; }
  int ambient() const { return N_; }
  int card() const { return static_cast<int>(a_.size()); }

  long cell_dim() const {
    long d = 0;
    for (int i = 0; i < card(); ++i) d += a_[i] - (i + 1);
    return d;
  }
  long codim() const { return static_cast<long>(card()) * (N_ - card()) - cell_dim(); }

  Partition codim_partition() const { return subset_to_partition(a_, N_); }

  // Minimal coset representative v_A in S_N: (a_1..a_m, complement ascending).
  std::vector<int> permutation() const {
    std::vector<int> v = a_;
    std::vector<bool> used(N_ + 1, false);
    for (int x : a_) used[x] = true;
    for (int x = 1; x <= N_; ++x)
      if (!used[x]) v.push_back(x);
    return v;
  }

  bool operator==(const AIndex& o) const { return N_ == o.N_ && a_ == o.a_; }
  bool operator<(const AIndex& o) const { return a_ < o.a_; }
  std::string str() const { return subset_str(a_); }

 private:
  std::vector<int> a_;
  int N_;
};

struct CellStatsC {
  long mu, sym2, wedge2, cosym2, cowedge2, dim, codim;
};

// r-subset I of [2n] with I and its reflection {2n+1-i} disjoint; indexes a
// Schubert cell of the symplectic Grassmannian IG(r, 2n).
class CIndex {
 public:
  CIndex(std::vector<int> elems, int n) : i_(std::move(elems)), n_(n) {
    detail::check_strictly_increasing(i_, 1, 2 * n_, "CIndex");
    std::vector<int> bar = barred();
    for (int x : i_)
      if (std::binary_search(bar.begin(), bar.end(), x))
        throw std::invalid_argument("CIndex: I meets its reflection");
    if (card() > n_) throw std::invalid_argument("CIndex: cardinality exceeds n");
  }

  const std::vector<int>& elements() const { return i_; }
  int n() const { return n_; }
  int card() const { return static_cast<int>(i_.size()); }

  std::vector<int> barred() const {
    std::vector<int> b;
    for (int x : i_) b.push_back(2 * n_ + 1 - x);
    std::sort(b.begin(), b.end());
    return b;
  }

  std::vector<int> tilde() const {
    std::vector<int> used = i_, bar = barred(), t;
    used.insert(used.end(), bar.begin(), bar.end());
    std::sort(used.begin(), used.end());
    for (int x = 1; x <= 2 * n_; ++x)
      if (!std::binary_search(used.begin(), used.end(), x)) t.push_back(x);
    return t;
  }

  SignedPerm weyl() const {
    std::vector<int> win;
    for (int x : i_) win.push_back(x <= n_ ? x : -(2 * n_ + 1 - x));
    std::vector<bool> used(n_ + 1, false);
    for (int v : win) used[std::abs(v)] = true;
    for (int x = 1; x <= n_; ++x)
      if (!used[x]) win.push_back(x);
    return SignedPerm(win);
  }

  CellStatsC stats() const {
    CellStatsC st{};
    int r = card();
    long gtbar = count_greater(i_, barred());
    st.mu = count_greater(i_, n_);
    st.sym2 = (gtbar + st.mu) / 2;
    st.wedge2 = gtbar - st.sym2;
    st.cosym2 = static_cast<long>(r) * (r + 1) / 2 - st.sym2;
    st.cowedge2 = static_cast<long>(r) * (r - 1) / 2 - st.wedge2;
    st.dim = count_greater(i_, tilde()) + st.sym2;
    st.codim = ig_dim(r, n_) - st.dim;
    return st;
  }

  long mu_bar() const { return card() - stats().mu; }

  static long ig_dim(int r, int n) { return static_cast<long>(r) * (4 * n - 3 * r + 1) / 2; }

  // Order-preserving compression of I inside I u Ibar onto [2r].
  CIndex reindexed() const {
    std::vector<int> all = i_, bar = barred();
    all.insert(all.end(), bar.begin(), bar.end());
    std::sort(all.begin(), all.end());
    std::vector<int> out;
    for (int x : i_) {
      auto it = std::lower_bound(all.begin(), all.end(), x);
      out.push_back(static_cast<int>(it - all.begin()) + 1);
    }
    std::sort(out.begin(), out.end());
    return CIndex(out, card());
  }

  // lambda_a = |i_a >= Itilde|, the incidence profile of the cell.
  std::vector<long> lambda_profile() const {
    std::vector<int> t = tilde();
    std::vector<long> lam;
    for (int x : i_) lam.push_back(count_geq(std::vector<int>{x}, t));
    return lam;
  }

  // t_a = |Ibar >= i_a|: constraint columns for the symmetric-form space.
  std::vector<int> t_profile() const {
    std::vector<int> bar = barred(), t;
    for (int x : i_) t.push_back(static_cast<int>(count_geq(bar, x)));
    return t;
  }

  bool operator==(const CIndex& o) const { return n_ == o.n_ && i_ == o.i_; }
  bool operator<(const CIndex& o) const { return i_ < o.i_; }
  std::string str() const { return subset_str(i_); }

 private:
  std::vector<int> i_;
  int n_;
};

struct CellStatsB {
  long wedge2, cowedge2, dim, codim;
};

// r-subset J of [2n+1], avoiding n+1, with J and {2n+2-j} disjoint; indexes a
// Schubert cell of the odd orthogonal Grassmannian OG(r, 2n+1).
class BIndex {
 public:
  BIndex(std::vector<int> elems, int n) : j_(std::move(elems)), n_(n) {
    detail::check_strictly_increasing(j_, 1, 2 * n_ + 1, "BIndex");
    for (int x : j_)
      if (x == n_ + 1) throw std::invalid_argument("BIndex: contains n+1");
    std::vector<int> bar = barred();
    for (int x : j_)
      if (std::binary_search(bar.begin(), bar.end(), x))
        throw std::invalid_argument("BIndex: J meets its reflection");
    if (card() > n_) throw std::invalid_argument("BIndex: cardinality exceeds n");
  }

  const std::vector<int>& elements() const { return j_; }
  int n() const { return n_; }
  int card() const { return static_cast<int>(j_.size()); }

  std::vector<int> barred() const {
    std::vector<int> b;
    for (int x : j_) b.push_back(2 * n_ + 2 - x);
    std::sort(b.begin(), b.end());
    return b;
  }

  std::vector<int> tilde() const {
    std::vector<int> used = j_, bar = barred(), t;
    used.insert(used.end(), bar.begin(), bar.end());
    std::sort(used.begin(), used.end());
    for (int x = 1; x <= 2 * n_ + 1; ++x)
      if (!std::binary_search(used.begin(), used.end(), x)) t.push_back(x);
    return t;
  }

  SignedPerm weyl() const {
    std::vector<int> win;
    for (int x : j_) win.push_back(x <= n_ ? x : -(2 * n_ + 2 - x));
    std::vector<bool> used(n_ + 1, false);
    for (int v : win) used[std::abs(v)] = true;
    for (int x = 1; x <= n_; ++x)
      if (!used[x]) win.push_back(x);
    return SignedPerm(win);
  }

  // The wedge-split of the tangent data lives on the compressed type-C index
  // of J inside J u Jbar'.
  CIndex compressed() const {
    std::vector<int> all = j_, bar = barred();
    all.insert(all.end(), bar.begin(), bar.end());
    std::sort(all.begin(), all.end());
    std::vector<int> out;
    for (int x : j_) {
      auto it = std::lower_bound(all.begin(), all.end(), x);
      out.push_back(static_cast<int>(it - all.begin()) + 1);
    }
    std::sort(out.begin(), out.end());
    return CIndex(out, card());
  }

  CellStatsB stats() const {
    CellStatsB st{};
    int r = card();
    CellStatsC c = compressed().stats();
    st.wedge2 = c.wedge2;
    st.cowedge2 = static_cast<long>(r) * (r - 1) / 2 - st.wedge2;
    st.dim = count_greater(j_, tilde()) + st.wedge2;
    st.codim = og_dim(r, n_) - st.dim;
    return st;
  }

  static long og_dim(int r, int n) {
    return static_cast<long>(r) * (r - 1) / 2 + static_cast<long>(r) * (2 * n + 1 - 2 * r);
  }

  std::vector<long> lambda_profile() const {
    std::vector<int> t = tilde();
    std::vector<long> lam;
    for (int x : j_) lam.push_back(count_geq(std::vector<int>{x}, t));
    return lam;
  }

  std::vector<int> t_profile() const {
    std::vector<int> bar = barred(), t;
    for (int x : j_) t.push_back(static_cast<int>(count_geq(bar, x)));
    return t;
  }

  // Drop the pair {a, 2n+2-a} with a the largest element of J u Jbar' that is
  // <= n, then compress onto [2r-2]; lands in the type-C index set of
  // IG(r-1, 2r-2).
  CIndex reindexed() const {
    int r = card();
    if (r < 1) throw std::invalid_argument("reindex: empty index");
    std::vector<int> all = j_, bar = barred();
    all.insert(all.end(), bar.begin(), bar.end());
    std::sort(all.begin(), all.end());
    int a = 0;
    for (int x : all)
      if (x <= n_) a = std::max(a, x);
    if (a == 0) throw std::logic_error("reindex: no element <= n");
    int b = 2 * n_ + 2 - a;
    std::vector<int> kept;
    for (int x : all)
      if (x != a && x != b) kept.push_back(x);
    std::vector<int> out;
    for (int x : j_) {
      if (x == a || x == b) continue;
      auto it = std::lower_bound(kept.begin(), kept.end(), x);
      out.push_back(static_cast<int>(it - kept.begin()) + 1);
    }
    std::sort(out.begin(), out.end());
    return CIndex(out, r - 1);
  }

  bool operator==(const BIndex& o) const { return n_ == o.n_ && j_ == o.j_; }
  bool operator<(const BIndex& o) const { return j_ < o.j_; }
  std::string str() const { return subset_str(j_); }

 private:
  std::vector<int> j_;
  int n_;
};

// Cells of one component of the even orthogonal Grassmannian OG+(r, 2r) are
// indexed by r-subsets I of [2r] with I disjoint from its reflection and
// |I cap [r]| of the same parity as r; this maps them onto the type-C index
// set of IG(r-1, 2r-2) by deleting {r, r+1} and compressing.
inline CIndex og_plus_to_c(const std::vector<int>& I, int r) {
  detail::check_strictly_increasing(I, 1, 2 * r, "OG+ index");
  if (static_cast<int>(I.size()) != r) throw std::invalid_argument("OG+ index: wrong cardinality");
  std::vector<int> bar;
  for (int x : I) bar.push_back(2 * r + 1 - x);
  std::sort(bar.begin(), bar.end());
  for (int x : I)
    if (std::binary_search(bar.begin(), bar.end(), x))
      throw std::invalid_argument("OG+ index: meets its reflection");
  int low = 0;
  for (int x : I)
    if (x <= r) ++low;
  if ((low - r) % 2 != 0) throw std::invalid_argument("OG+ index: parity mismatch");
  std::vector<int> out;
  for (int x : I) {
    if (x == r || x == r + 1) continue;
    out.push_back(x < r ? x : x - 2);
  }
  std::sort(out.begin(), out.end());
  return CIndex(out, r - 1);
}

inline std::vector<int> c_to_og_plus(const CIndex& I, int r) {
  if (I.n() != r - 1) throw std::invalid_argument("source must index IG(r-1,2r-2)");
  std::vector<int> out;
  int low = 0;
  for (int x : I.elements()) {
    out.push_back(x < r ? x : x + 2);
    if (x < r) ++low;
  }
  out.push_back((low + 1) % 2 == r % 2 ? r : r + 1);
  std::sort(out.begin(), out.end());
  return out;
}

// Enumerations, in lexicographic order.
std::vector<AIndex> all_a_indices(int m, int N);
std::vector<CIndex> all_c_indices(int r, int n);
std::vector<BIndex> all_b_indices(int r, int n);

}  // namespace isohorn
