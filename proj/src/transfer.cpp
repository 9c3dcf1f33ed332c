#include "isohorn/transfer.hpp"

#include <stdexcept>

namespace isohorn {

TransferCheck sl_transfer_check(const std::vector<Partition>& lambdas, int n,
                                GroupTag target) {
  if (target != GroupTag::Sp && target != GroupTag::SO)
    throw std::invalid_argument("transfer target must be Sp or SO");
  int N = target == GroupTag::Sp ? 2 * n : 2 * n + 1;
  TransferCheck out;
  std::vector<Weight> source;
  for (const auto& lam : lambdas) {
    if (static_cast<int>(lam.rows()) > N)
      throw std::invalid_argument("transfer: partition has too many rows");
    source.push_back(partition_as_sl_weight(lam, N));
  }
  out.source_dim = invariant_dim(GroupTag::SL, source);
  out.applicable = out.source_dim != 0;
  if (!out.applicable) return out;
  for (const auto& w : source) out.restricted.push_back(restrict_weight(w, target));
  out.target_dim = invariant_dim(target, out.restricted);
  out.ok = out.target_dim != 0;
  return out;
}

FlipTransferCheck flip_transfer_check(const std::vector<Partition>& mus, int r, int n) {
  FlipTransferCheck out;
  long total = 0;
  for (const auto& mu : mus) {
    if (static_cast<int>(mu.rows()) > r || mu.width() > 2L * n)
      throw std::invalid_argument("flip transfer: mu outside the r x 2n box");
    total += mu.size();
  }
  if (total != 2L * n * r)
    throw std::invalid_argument("flip transfer: sizes must add to 2nr");
  out.sl_dim = invariant_dim_sl_partitions(r, mus);
  out.applicable = out.sl_dim != 0;
  if (!out.applicable) return out;
  for (const auto& mu : mus) {
    Partition lam = mu.flip(2 * n, r);
    if (!(lam.flip(r, 2 * n) == mu))
      throw std::logic_error("flip transfer: flip is not involutive on this input");
    out.nu.push_back(restrict_weight(partition_as_sl_weight(lam, 2 * n), GroupTag::Sp));
  }
  out.sp_dim = invariant_dim(GroupTag::Sp, out.nu);
  out.ok = out.sp_dim != 0;
  return out;
}

namespace {

// Dominant weights with coordinates <= bound, in coordinate steps of
// `step` halves (2 = integral, 1 = include half-integral).
void enumerate_dominant(int n, long bound2, int step, std::vector<std::vector<Rat>>* out,
                        std::vector<Rat>& cur) {
  if (static_cast<int>(cur.size()) == n) {
    out->push_back(cur);
    return;
  }
  Rat prev2 = cur.empty() ? Rat(bound2) : cur.back() * 2;
  long hi = static_cast<long>(numerator(prev2));
  for (long v = 0; v <= hi; v += step) {
    cur.push_back(Rat(v, 2));
    enumerate_dominant(n, bound2, step, out, cur);
    cur.pop_back();
  }
}

bool spin_integral(const std::vector<Rat>& c) {
  bool any_half = false, any_int = false;
  for (const Rat& x : c) {
    Rat twice = x * 2;
    ((numerator(twice) % 2 == 0) ? any_int : any_half) = true;
  }
  return !(any_half && any_int);
}

}  // namespace

SaturationReport saturation_scan(GroupTag group, int n, long bound, int n_max,
                                 std::size_t max_witnesses) {
  if (group != GroupTag::Sp && group != GroupTag::SO && group != GroupTag::Spin)
    throw std::invalid_argument("saturation scan: group must be Sp, SO or Spin");
  SaturationReport rep;
  rep.group = group;
  rep.n = n;
  rep.bound = bound;
  rep.n_max = n_max;
  rep.factor = group == GroupTag::Spin ? 4 : 2;

  int step = group == GroupTag::Spin ? 1 : 2;
  std::vector<std::vector<Rat>> dominants;
  std::vector<Rat> cur;
  enumerate_dominant(n, 2 * bound, step, &dominants, cur);
  if (group == GroupTag::Spin) {
    std::vector<std::vector<Rat>> filtered;
    for (auto& d : dominants)
      if (spin_integral(d)) filtered.push_back(d);
    dominants = std::move(filtered);
  }

  auto weight_of = [&](const std::vector<Rat>& c) { return Weight(group, n, c); };
  std::size_t m = dominants.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = j; k < m; ++k) {
        ++rep.triples_scanned;
        std::vector<Weight> nu{weight_of(dominants[i]), weight_of(dominants[j]),
                               weight_of(dominants[k])};
        int first_positive = 0;
        for (int N = 1; N <= n_max; ++N) {
          std::vector<Weight> scaled;
          for (const auto& w : nu) scaled.push_back(w.scaled(Rat(N)));
          if (invariant_dim(group, scaled) != 0) {
            first_positive = N;
            break;
          }
        }
        if (first_positive == 0) continue;
        ++rep.positives;
        std::vector<Weight> at_factor;
        for (const auto& w : nu) at_factor.push_back(w.scaled(Rat(rep.factor)));
        Int dim_factor = invariant_dim(group, at_factor);
        if (dim_factor == 0) ++rep.violations;
        if (first_positive > 1 && rep.factor_witnesses.size() < max_witnesses) {
          std::vector<Weight> at_one = nu;
          Int d1 = invariant_dim(group, at_one);
          if (d1 == 0 && dim_factor != 0) {
            SaturationWitness w;
            w.nu = nu;
            w.dim_at_1 = d1;
            w.dim_at_factor = dim_factor;
            rep.factor_witnesses.push_back(std::move(w));
          }
        }
      }
  return rep;
}

}  // namespace isohorn
