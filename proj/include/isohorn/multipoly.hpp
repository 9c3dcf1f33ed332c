#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "isohorn/numeric.hpp"

namespace isohorn {

// Sparse exact-rational polynomial in eps_1..eps_n.  Zero coefficients are
// never stored, so equality is structural.
class MultiPoly {
 public:
  using Expo = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : n_(nvars) {}

  static MultiPoly constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Expo(nvars, 0)] = c;
    return p;
  }
  static MultiPoly variable(int nvars, int i, const Rat& c = Rat(1)) {
    MultiPoly p(nvars);
    Expo e(nvars, 0);
    e[i - 1] = 1;
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  int nvars() const { return n_; }
  bool zero() const { return terms_.empty(); }
  const std::map<Expo, Rat>& terms() const { return terms_; }

  bool is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Expo(n_, 0);
  }
  Rat constant_term() const {
    auto it = terms_.find(Expo(n_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }

  // Total degree; -1 for the zero polynomial.  Homogeneity is asserted by
  // degree_homogeneous where the caller relies on it.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }
  bool homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      if (d == -2) d = s;
      else if (s != d) return false;
    }
    return true;
  }

  void add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPoly operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator*(const MultiPoly& o) const {
    MultiPoly r(n_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Expo e(n_);
        for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  MultiPoly operator*(const Rat& c) const {
    MultiPoly r(n_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
  }
  bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Swap of eps_i and eps_{i+1} (the reflection s_i, i < n).
  MultiPoly swap_vars(int i) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
      Expo f = e;
      std::swap(f[i - 1], f[i]);
      r.add_term(f, c);
    }
    return r;
  }

  // eps_n -> -eps_n (the reflection s_n in types B and C).
  MultiPoly negate_last() const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) r.add_term(e, e[n_ - 1] % 2 == 0 ? c : -c);
    return r;
  }

  Rat evaluate(const std::vector<Rat>& point) const {
    Rat total(0);
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) t *= point[i];
      total += t;
    }
    return total;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += to_string(c);
      for (int i = 0; i < n_; ++i)
        if (e[i] > 0) {
          s += "*e" + std::to_string(i + 1);
          if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
  }

 private:
  int n_;
  std::map<Expo, Rat> terms_;
};

}  // namespace isohorn
