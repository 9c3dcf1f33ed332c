#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "isohorn/numeric.hpp"

namespace isohorn {

// Prime field with a runtime modulus (default 2^31 - 1).  The modulus is
// process-global; it is fixed once at startup (CLI flag or environment).
class Fp {
 public:
  static std::uint64_t modulus;

  Fp() : v_(0) {}
  explicit Fp(std::uint64_t v) : v_(v % modulus) {}
  static Fp from_signed(long long x) {
    long long m = static_cast<long long>(modulus);
    long long r = x % m;
    if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r));
  }

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const {
    std::uint64_t s = v_ + o.v_;
    if (s >= modulus) s -= modulus;
    return raw(s);
  }
  Fp operator-(Fp o) const { return raw(v_ >= o.v_ ? v_ - o.v_ : v_ + modulus - o.v_); }
  Fp operator*(Fp o) const {
    return raw(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(v_) * o.v_) % modulus));
  }
  Fp operator-() const { return raw(v_ == 0 ? 0 : modulus - v_); }
  Fp inv() const {
    if (v_ == 0) throw std::domain_error("division by zero in F_p");
    return pow(modulus - 2);
  }
  Fp operator/(Fp o) const { return *this * o.inv(); }
  Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = raw(1);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }
  // Square root for p = 3 mod 4; throws when the value is not a square.
  Fp sqrt() const {
    if (v_ == 0) return raw(0);
    if (modulus % 4 != 3) throw std::domain_error("sqrt needs p = 3 mod 4");
    Fp r = pow((modulus + 1) / 4);
    if (!(r * r == *this)) throw std::domain_error("not a quadratic residue");
    return r;
  }
  bool operator==(Fp o) const { return v_ == o.v_; }
  bool operator!=(Fp o) const { return v_ != o.v_; }

 private:
  static Fp raw(std::uint64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint64_t v_;
};

template <typename F>
struct FieldOps {
  static F zero() { return F(0); }
  static F one() { return F(1); }
  static bool is_zero(const F& x) { return x == F(0); }
};
template <>
struct FieldOps<Fp> {
  static Fp zero() { return Fp(std::uint64_t(0)); }
  static Fp one() { return Fp(std::uint64_t(1)); }
  static bool is_zero(const Fp& x) { return x.is_zero(); }
};

// Dense matrix over an exact field (Fp or Rat), row-major.
template <typename F>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int r, int c) : rows_(r), cols_(c), a_(static_cast<std::size_t>(r) * c, FieldOps<F>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = FieldOps<F>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Mat operator*(const Mat& o) const {
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const F& x = (*this)(i, k);
        if (FieldOps<F>::is_zero(x)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + x * o(k, j);
      }
    return r;
  }

  // Row echelon reduction in place; returns the rank and records pivot columns.
  int echelon(std::vector<int>* pivots = nullptr) {
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
      int pivot = -1;
      for (int i = rank; i < rows_; ++i)
        if (!FieldOps<F>::is_zero((*this)(i, col))) {
          pivot = i;
          break;
        }
      if (pivot < 0) continue;
      if (pivot != rank)
        for (int j = 0; j < cols_; ++j) std::swap((*this)(pivot, j), (*this)(rank, j));
      F inv = FieldOps<F>::one() / (*this)(rank, col);
      for (int j = col; j < cols_; ++j) (*this)(rank, j) = (*this)(rank, j) * inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == rank) continue;
        F f = (*this)(i, col);
        if (FieldOps<F>::is_zero(f)) continue;
        for (int j = col; j < cols_; ++j)
          (*this)(i, j) = (*this)(i, j) - f * (*this)(rank, j);
      }
      if (pivots) pivots->push_back(col);
      ++rank;
    }
    return rank;
  }

  int rank() const {
    Mat copy = *this;
    return copy.echelon();
  }

  // Basis of the right nullspace, as columns.
  Mat nullspace() const {
    Mat copy = *this;
    std::vector<int> pivots;
    int rank = copy.echelon(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    Mat basis(cols_, cols_ - rank);
    int out = 0;
    for (int freec = 0; freec < cols_; ++freec) {
      if (is_pivot[freec]) continue;
      basis(freec, out) = FieldOps<F>::one();
      for (int i = 0; i < rank; ++i) basis(pivots[i], out) = -copy(i, freec);
      ++out;
    }
    return basis;
  }

  Mat inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    Mat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = FieldOps<F>::one();
    }
    if (aug.echelon() != rows_) throw std::domain_error("inverse: singular matrix");
    Mat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Columns lo..hi-1.
  Mat col_slice(int lo, int hi) const {
    Mat s(rows_, hi - lo);
    for (int i = 0; i < rows_; ++i)
      for (int j = lo; j < hi; ++j) s(i, j - lo) = (*this)(i, j);
    return s;
  }

  static Mat hstack(const Mat& a, const Mat& b) {
    Mat m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
      for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<F> a_;
};

}  // namespace isohorn
