#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "isohorn/numeric.hpp"
#include "isohorn/partition.hpp"
#include "isohorn/signed_perm.hpp"

namespace isohorn {

enum class GroupTag { SL, Sp, SO, Spin };

inline std::string group_name(GroupTag g, int rank_param) {
  switch (g) {
    case GroupTag::SL:
      return "SL(" + std::to_string(rank_param) + ")";
    case GroupTag::Sp:
      return "Sp(" + std::to_string(2 * rank_param) + ")";
    case GroupTag::SO:
      return "SO(" + std::to_string(2 * rank_param + 1) + ")";
    case GroupTag::Spin:
      return "Spin(" + std::to_string(2 * rank_param + 1) + ")";
  }
  return "?";
}

// Weight in the epsilon-basis of the Cartan dual (types B/C/Spin, rank n) or
// in diagonal coordinates (type SL, rank = matrix size N).  Exact rationals;
// half-integral coordinates only make sense under the Spin tag.
struct Weight {
  GroupTag group;
  int rank;  // n for B/C/Spin, N for SL
  std::vector<Rat> c;

  Weight(GroupTag g, int rk, std::vector<Rat> coords)
      : group(g), rank(rk), c(std::move(coords)) {
    std::size_t need = group == GroupTag::SL ? rank : rank;
    if (c.size() != need) throw std::invalid_argument("weight: wrong coordinate count");
  }

  bool dominant() const {
    switch (group) {
      case GroupTag::SL:
        for (int i = 0; i + 1 < rank; ++i)
          if (c[i] < c[i + 1]) return false;
        return true;
      case GroupTag::Sp:
      case GroupTag::SO:
      case GroupTag::Spin:
        for (int i = 0; i + 1 < rank; ++i)
          if (c[i] < c[i + 1]) return false;
        return c.empty() || c[rank - 1] >= 0;
    }
    return false;
  }

  bool integral() const {
    if (group == GroupTag::Spin) {
      // all coordinates integral or all half-odd-integral
      bool any_half = false, any_int = false;
      for (const Rat& x : c) {
        Rat y = x * 2;
        if (denominator(y) != 1) return false;
        (numerator(y) % 2 == 0 ? any_int : any_half) = true;
      }
      return !(any_half && any_int);
    }
    for (const Rat& x : c)
      if (denominator(x) != 1) return false;
    return true;
  }

  Weight scaled(const Rat& t) const {
    std::vector<Rat> v(c);
    for (Rat& x : v) x *= t;
    return Weight(group, rank, v);
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += to_string(c[i]);
    }
    return s;
  }
};

// Restriction of a dominant SL(2n) (resp. SL(2n+1)) weight to the Cartan of
// Sp(2n) (resp. SO(2n+1)): coordinate i picks up lambda_i - lambda_{N+1-i}.
inline Weight restrict_weight(const Weight& lambda, GroupTag target) {
  if (lambda.group != GroupTag::SL) throw std::invalid_argument("restrict: source must be SL");
  if (!lambda.dominant()) throw std::invalid_argument("restrict: source not dominant");
  int N = lambda.rank;
  if (target == GroupTag::Sp) {
    if (N % 2 != 0) throw std::invalid_argument("restrict: Sp target needs even N");
    int n = N / 2;
    std::vector<Rat> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = lambda.c[i - 1] - lambda.c[N - i];
    return Weight(GroupTag::Sp, n, v);
  }
  if (target == GroupTag::SO || target == GroupTag::Spin) {
    if (N % 2 != 1) throw std::invalid_argument("restrict: SO target needs odd N");
    int n = N / 2;
    std::vector<Rat> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = lambda.c[i - 1] - lambda.c[N - i];
    return Weight(target, n, v);
  }
  throw std::invalid_argument("restrict: bad target");
}

inline Weight partition_as_sl_weight(const Partition& mu, int N) {
  std::vector<Rat> v(N, Rat(0));
  if (static_cast<int>(mu.rows()) > N)
    throw std::invalid_argument("partition has more rows than the SL rank");
  for (int i = 0; i < N; ++i) v[i] = Rat(mu.part(i));
  return Weight(GroupTag::SL, N, v);
}

// rho in epsilon-coordinates: (n, n-1, ..., 1) for Sp(2n);
// (n-1/2, n-3/2, ..., 1/2) for SO(2n+1).
inline std::vector<Rat> rho_c(int n) {
  std::vector<Rat> v(n);
  for (int i = 0; i < n; ++i) v[i] = Rat(n - i);
  return v;
}
inline std::vector<Rat> rho_b(int n) {
  std::vector<Rat> v(n);
  for (int i = 0; i < n; ++i) v[i] = Rat(2 * (n - i) - 1, 2);
  return v;
}

// Coweights x_r dual to the simple roots, in epsilon-bar coordinates.
// x_r^B = x_r^C = (1,..,1,0,..) for r < n; x_n^B = (1,..,1), x_n^C = half that.
inline std::vector<Rat> x_coweight_c(int n, int r) {
  std::vector<Rat> v(n, Rat(0));
  for (int i = 0; i < r; ++i) v[i] = (r == n) ? Rat(1, 2) : Rat(1);
  return v;
}
inline std::vector<Rat> x_coweight_b(int n, int r) {
  std::vector<Rat> v(n, Rat(0));
  for (int i = 0; i < r; ++i) v[i] = Rat(1);
  return v;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Evaluation of (rho + w^{-1} rho)(x) with the coweight-pull convention.
inline Rat chi_value(const SignedPerm& w, const std::vector<Rat>& rho,
                     const std::vector<Rat>& x) {
  std::vector<Rat> pulled = coweight_pull(w, x);
  return dot(rho, x) + dot(rho, pulled);
}

}  // namespace isohorn
