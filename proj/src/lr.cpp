#include "isohorn/lr.hpp"

#include <functional>
#include <stdexcept>

namespace isohorn {

namespace {

std::vector<long> padded(const Partition& p, std::size_t len) {
  std::vector<long> v = p.parts();
  v.resize(std::max(v.size(), len), 0);
  return v;
}

// Enumerates the shapes obtained from `base` by adding all rows of `mu` as
// horizontal strips labeled 1..len(mu), subject to column-strictness and the
// lattice-word condition (so each complete filling is a Littlewood-Richardson
// skew tableau).  `target`, when given, bounds the shape from above.
void add_strips(std::vector<long> base, std::vector<long> prev, const Partition& mu,
                std::size_t label, std::size_t nrows, const std::vector<long>* target,
                const std::function<void(const std::vector<long>&)>& done) {
  if (label >= mu.rows()) {
    done(base);
    return;
  }
  const long count = mu.part(label);
  std::vector<long> next(nrows, 0);
  std::function<void(std::size_t, long, long)> go =
      [&](std::size_t row, long placed_before, long prev_above) {
        if (placed_before == count) {
          for (std::size_t i = row; i < nrows; ++i) next[i] = base[i];
          add_strips(next, base, mu, label + 1, nrows, target, done);
          return;
        }
        if (row >= nrows) return;
        long lo = base[row];
        long hi = lo + (count - placed_before);
        if (row > 0) hi = std::min(hi, base[row - 1]);
        if (target) hi = std::min(hi, (*target)[row]);
        for (long v = lo; v <= hi; ++v) {
          long cum = placed_before + (v - lo);
          // lattice: boxes of this label in rows <= row may not exceed boxes
          // of the previous label in rows < row
          if (label > 0 && cum > prev_above) break;
          next[row] = v;
          go(row + 1, cum, prev_above + (base[row] - prev[row]));
        }
        next[row] = base[row];
      };
  go(0, 0, 0);
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda)) return 0;
  std::size_t nrows = std::max<std::size_t>(nu.rows(), 1);
  std::vector<long> target = padded(nu, nrows);
  std::vector<long> start = padded(lambda, nrows);
  Int count = 0;
  add_strips(start, start, mu, 0, nrows, &target, [&](const std::vector<long>& shape) {
    if (Partition(shape) == nu) ++count;
  });
  return count;
}

SchurExpansion schur_product(const Partition& lambda, const Partition& mu, int max_rows) {
  SchurExpansion out;
  std::size_t nrows = max_rows > 0 ? static_cast<std::size_t>(max_rows)
                                   : lambda.rows() + mu.rows();
  nrows = std::max<std::size_t>(nrows, 1);
  if (lambda.rows() > nrows || mu.rows() > nrows) return out;
  std::vector<long> start = padded(lambda, nrows);
  add_strips(start, start, mu, 0, nrows, nullptr,
             [&](const std::vector<long>& shape) { out[Partition(shape)] += 1; });
  return out;
}

SchurExpansion schur_product(const SchurExpansion& f, const Partition& mu, int max_rows) {
  SchurExpansion out;
  for (const auto& [shape, coeff] : f) {
    SchurExpansion one = schur_product(shape, mu, max_rows);
    for (const auto& [nu, c] : one) out[nu] += coeff * c;
  }
  return out;
}

Int sl_invariant_dim(int r, const std::vector<Partition>& mus) {
  if (r < 1) throw std::invalid_argument("sl_invariant_dim: rank");
  long total = 0;
  for (const auto& m : mus) {
    if (static_cast<int>(m.rows()) > r) return 0;
    total += m.size();
  }
  if (total % r != 0) return 0;
  long c = total / r;
  SchurExpansion acc;
  acc.emplace(Partition(), Int(1));
  for (const auto& m : mus) acc = schur_product(acc, m, r);
  std::vector<long> rect(r, c);
  auto it = acc.find(Partition(rect));
  return it == acc.end() ? Int(0) : it->second;
}

DualityCheck grassmann_duality(const std::vector<Partition>& mus, int r, int k) {
  long total = 0;
  for (const auto& m : mus) {
    if (!m.fits_in_box(r, k)) throw std::invalid_argument("diagram outside the r x k box");
    total += m.size();
  }
  if (total != static_cast<long>(r) * k)
    throw std::invalid_argument("sizes must add up to k*r");
  std::vector<Partition> conj;
  for (const auto& m : mus) conj.push_back(m.conjugate());
  return DualityCheck{sl_invariant_dim(r, mus), sl_invariant_dim(k, conj)};
}

DualityCheck ordinary_duality(const std::vector<Partition>& mus, int r, int k) {
  std::vector<Partition> dual;
  for (const auto& m : mus) {
    if (!m.fits_in_box(r, k)) throw std::invalid_argument("diagram outside the r x k box");
    dual.push_back(m.dual_in_box(k, r));
  }
  return DualityCheck{sl_invariant_dim(r, mus), sl_invariant_dim(r, dual)};
}

}  // namespace isohorn
