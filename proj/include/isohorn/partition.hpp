#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace isohorn {

// Weakly decreasing sequence of nonnegative integers.  Trailing zeros are
// significant only where a fixed length is requested; comparison ignores them.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw std::invalid_argument("negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("parts must be weakly decreasing");
    }
  }

  const std::vector<long>& parts() const { return parts_; }
  long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::size_t rows() const {
    std::size_t r = parts_.size();
    while (r > 0 && parts_[r - 1] == 0) --r;
    return r;
  }
  long size() const {
    long s = 0;
    for (long p : parts_) s += p;
    return s;
  }
  long width() const { return parts_.empty() ? 0 : parts_[0]; }

  bool fits_in_box(long length, long width_bound) const {
    return rows() <= static_cast<std::size_t>(length) && this->width() <= width_bound;
  }

  bool contains(const Partition& inner) const {
    for (std::size_t i = 0; i < inner.parts_.size(); ++i)
      if (inner.parts_[i] > part(i)) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<long> c;
    for (long col = 1; col <= width(); ++col) {
      long h = 0;
      for (long p : parts_)
        if (p >= col) ++h;
      c.push_back(h);
    }
    return Partition(c);
  }

  // lambda' = (m - mu_r, ..., m - mu_1), then conjugate.  Requires mu_1 <= m.
  // Takes an r-part partition in an r x m box to an m-part partition in an
  // m x r box; applying it twice with the same m returns the input.
  Partition flip(long m, long length = -1) const {
    if (width() > m) throw std::invalid_argument("flip: part exceeds box width");
    std::size_t r = length >= 0 ? static_cast<std::size_t>(length) : parts_.size();
    if (rows() > r) throw std::invalid_argument("flip: length shorter than partition");
    std::vector<long> rev;
    for (std::size_t i = r; i-- > 0;) rev.push_back(m - part(i));
    Partition p(rev);
    Partition c = p.conjugate();
    std::vector<long> padded = c.parts();
    padded.resize(m, 0);
    return Partition(padded);
  }

  // (k - mu_r, ..., k - mu_1): highest weight of the dual SL(r) module when
  // mu sits in an r x k box.
  Partition dual_in_box(long k, long length = -1) const {
    if (width() > k) throw std::invalid_argument("dual: part exceeds box width");
    std::size_t r = length >= 0 ? static_cast<std::size_t>(length) : parts_.size();
    if (rows() > r) throw std::invalid_argument("dual: length shorter than partition");
    std::vector<long> d;
    for (std::size_t i = r; i-- > 0;) d.push_back(k - part(i));
    return Partition(d);
  }

  bool operator==(const Partition& o) const {
    std::size_t m = std::max(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (part(i) != o.part(i)) return false;
    return true;
  }
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool operator<(const Partition& o) const {
    std::size_t m = std::max(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < m; ++i)
      if (part(i) != o.part(i)) return part(i) < o.part(i);
    return false;
  }

  std::string str() const {
    std::string s;
    std::size_t r = rows();
    if (r == 0) return "0";
    for (std::size_t i = 0; i < r; ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s;
  }

 private:
  std::vector<long> parts_;
};

// Bijection between partitions in an r x (N-r) box and r-subsets of [N]:
// the a-th element of the subset is N - r + a - mu_a.
inline std::vector<int> partition_to_subset(const Partition& mu, int r, int N) {
  if (!mu.fits_in_box(r, N - r))
    throw std::invalid_argument("partition does not fit the r x (N-r) box");
  std::vector<int> A(r);
  for (int a = 1; a <= r; ++a) A[a - 1] = N - r + a - static_cast<int>(mu.part(a - 1));
  return A;
}

inline Partition subset_to_partition(const std::vector<int>& A, int N) {
  int r = static_cast<int>(A.size());
  std::vector<long> mu(r);
  for (int a = 1; a <= r; ++a) mu[a - 1] = N - r + a - A[a - 1];
  return Partition(mu);
}

}  // namespace isohorn
