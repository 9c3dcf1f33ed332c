#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <vector>

#include "isohorn/numeric.hpp"

namespace isohorn {

// Element of the hyperoctahedral Weyl group (common to the symplectic and the
// odd orthogonal series), stored as the signed images of 1..n.  The generators
// are s_1..s_{n-1} (adjacent transpositions) and s_n (sign change in the last
// slot), matching the embeddings s_i = r_i r_{2n-i}, s_n = r_n into S_{2n} and
// s'_i = r_i r_{2n+1-i}, s'_n = r_n r_{n+1} r_n into S_{2n+1}.
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images) : s_(std::move(images)) {
    std::vector<bool> seen(s_.size() + 1, false);
    for (int v : s_) {
      int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(s_.size()) || seen[a])
        throw std::invalid_argument("not a signed permutation");
      seen[a] = true;
    }
  }

  static SignedPerm identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return SignedPerm(v);
  }

  static SignedPerm generator(int n, int i) {
    SignedPerm w = identity(n);
    if (i < 1 || i > n) throw std::invalid_argument("generator index");
    if (i < n)
      std::swap(w.s_[i - 1], w.s_[i]);
    else
      w.s_[n - 1] = -n;
    return w;
  }

  // Longest element: -1 on every coordinate.
  static SignedPerm longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = -(i + 1);
    return SignedPerm(v);
  }

  // Longest element of the parabolic subgroup generated by all s_i, i != r:
  // reverses 1..r and negates r+1..n.
  static SignedPerm longest_parabolic(int n, int r) {
    std::vector<int> v(n);
    for (int i = 1; i <= r; ++i) v[i - 1] = r + 1 - i;
    for (int i = r + 1; i <= n; ++i) v[i - 1] = -i;
    return SignedPerm(v);
  }

  int rank() const { return static_cast<int>(s_.size()); }
  int image(int i) const { return s_[i - 1]; }
  const std::vector<int>& images() const { return s_; }

  int apply(int j) const { return j > 0 ? s_[j - 1] : -s_[-j - 1]; }

  bool is_identity() const {
    for (int i = 1; i <= rank(); ++i)
      if (s_[i - 1] != i) return false;
    return true;
  }

  SignedPerm operator*(const SignedPerm& o) const {  // (this*o)(i) = this(o(i))
    std::vector<int> v(s_.size());
    for (int i = 1; i <= rank(); ++i) v[i - 1] = apply(o.image(i));
    return SignedPerm(v);
  }

  SignedPerm inverse() const {
    std::vector<int> v(s_.size());
    for (int i = 1; i <= rank(); ++i) {
      int im = s_[i - 1];
      v[std::abs(im) - 1] = im > 0 ? i : -i;
    }
    return SignedPerm(v);
  }

  bool operator==(const SignedPerm& o) const { return s_ == o.s_; }
  bool operator!=(const SignedPerm& o) const { return s_ != o.s_; }
  bool operator<(const SignedPerm& o) const { return s_ < o.s_; }

  // Window in [2n]: i-th entry of the one-line form of the image in S_{2n}.
  std::vector<int> window_c() const {
    int n = rank();
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = s_[i] > 0 ? s_[i] : 2 * n + 1 + s_[i];
    return w;
  }

  // Window in [2n+1] \ {n+1} for the embedding into S_{2n+1}.
  std::vector<int> window_b() const {
    int n = rank();
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = s_[i] > 0 ? s_[i] : 2 * n + 2 + s_[i];
    return w;
  }

  // Full one-line form in S_{2n}: positions 2n+1-i carry 2n+1-a_i.
  std::vector<int> one_line_c() const {
    int n = rank();
    std::vector<int> a = window_c();
    std::vector<int> full(2 * n);
    for (int i = 1; i <= n; ++i) {
      full[i - 1] = a[i - 1];
      full[2 * n - i] = 2 * n + 1 - a[i - 1];
    }
    return full;
  }

  // Full one-line form in S_{2n+1}: fixes n+1, positions 2n+2-i carry 2n+2-a_i.
  std::vector<int> one_line_b() const {
    int n = rank();
    std::vector<int> a = window_b();
    std::vector<int> full(2 * n + 1);
    full[n] = n + 1;
    for (int i = 1; i <= n; ++i) {
      full[i - 1] = a[i - 1];
      full[2 * n + 1 - i] = 2 * n + 2 - a[i - 1];
    }
    return full;
  }

  // Number of s_n letters in any reduced word: the count of negative slots.
  int mu() const {
    int m = 0;
    for (int v : s_)
      if (v < 0) ++m;
    return m;
  }

  // Coxeter length, via ell = (inv(S_{2n} embedding) + mu)/2.
  int length() const {
    std::vector<int> full = one_line_c();
    int inv = 0;
    for (std::size_t i = 0; i < full.size(); ++i)
      for (std::size_t j = i + 1; j < full.size(); ++j)
        if (full[i] > full[j]) ++inv;
    return (inv + mu()) / 2;
  }

  // Same length through the S_{2n+1} embedding: (inv - mu)/2.
  int length_via_b() const {
    std::vector<int> full = one_line_b();
    int inv = 0;
    for (std::size_t i = 0; i < full.size(); ++i)
      for (std::size_t j = i + 1; j < full.size(); ++j)
        if (full[i] > full[j]) ++inv;
    return (inv - mu()) / 2;
  }

  bool has_descent(int i) const {  // ell(w s_i) < ell(w)
    std::vector<int> a = window_c();
    if (i < rank()) return a[i - 1] > a[i];
    return s_[rank() - 1] < 0;
  }

  std::vector<int> reduced_word() const {
    SignedPerm w = *this;
    std::vector<int> word;
    while (!w.is_identity()) {
      int i = 1;
      while (!w.has_descent(i)) ++i;
      w = w * generator(w.rank(), i);
      word.push_back(i);
    }
    std::reverse(word.begin(), word.end());
    return word;
  }

  // Descents inside the parabolic generated by {s_i : i != r}; minimal coset
  // representatives have none.
  bool is_minimal_rep(int r) const {
    for (int i = 1; i <= rank(); ++i)
      if (i != r && has_descent(i)) return false;
    return true;
  }

  SignedPerm minimal_rep(int r) const {
    SignedPerm w = *this;
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 1; i <= rank(); ++i)
        if (i != r && w.has_descent(i)) {
          w = w * generator(rank(), i);
          moved = true;
        }
    }
    return w;
  }

  std::string str() const {
    std::string out = "[";
    for (int i = 0; i < rank(); ++i) {
      if (i) out += ",";
      out += std::to_string(s_[i]);
    }
    return out + "]";
  }

 private:
  std::vector<int> s_;
};

// All 2^n * n! elements, in a deterministic order.
inline std::vector<SignedPerm> all_signed_perms(int n) {
  std::vector<int> base(n);
  for (int i = 0; i < n; ++i) base[i] = i + 1;
  std::vector<SignedPerm> out;
  std::sort(base.begin(), base.end());
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> v(base);
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) v[i] = -v[i];
      out.emplace_back(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// v = w^{-1} x on coweight coordinates in the epsilon-bar basis:
// v_k = sgn(w(k)) * u_{|w(k)|}.  This is the evaluation convention used by
// every character/coweight pairing in the library.
template <typename T>
std::vector<T> coweight_pull(const SignedPerm& w, const std::vector<T>& u) {
  std::vector<T> v(u.size());
  for (int k = 1; k <= w.rank(); ++k) {
    int im = w.image(k);
    v[k - 1] = im > 0 ? u[im - 1] : -u[-im - 1];
  }
  return v;
}

}  // namespace isohorn
