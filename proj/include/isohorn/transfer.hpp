#pragma once

#include <string>
#include <vector>

#include "isohorn/characters.hpp"
#include "isohorn/numeric.hpp"
#include "isohorn/partition.hpp"
#include "isohorn/weights.hpp"

namespace isohorn {

// Invariants transfer from SL(2n) to Sp(2n) (and SL(2n+1) to SO(2n+1)) under
// weight restriction: a nonzero source invariant forces a nonzero target
// invariant.  `applicable` is false when the source invariant vanishes.
struct TransferCheck {
  bool applicable = false;
  Int source_dim = 0;
  Int target_dim = 0;
  bool ok = true;  // target nonzero whenever applicable
  std::vector<Weight> restricted;
};

TransferCheck sl_transfer_check(const std::vector<Partition>& lambdas, int n, GroupTag target);

// Width-2n partitions with sizes adding to 2nr and a nonzero SL(r) invariant
// produce a nonzero Sp(2n) invariant after the 2n-flip and restriction.
struct FlipTransferCheck {
  bool applicable = false;
  Int sl_dim = 0;
  Int sp_dim = 0;
  bool ok = true;
  std::vector<Weight> nu;
};

FlipTransferCheck flip_transfer_check(const std::vector<Partition>& mus, int r, int n);

struct SaturationWitness {
  std::vector<Weight> nu;
  Int dim_at_1 = 0;
  Int dim_at_factor = 0;
};

struct SaturationReport {
  GroupTag group;
  int n = 0;
  long bound = 0;
  int n_max = 0;
  int factor = 0;  // 2 for Sp/SO, 4 for Spin
  long triples_scanned = 0;
  long positives = 0;       // triples with a nonzero invariant at some N <= n_max
  long violations = 0;      // positives with zero invariant at factor*nu
  std::vector<SaturationWitness> factor_witnesses;  // zero at nu, nonzero at 2nu
  bool passed() const { return violations == 0; }
};

// Scans dominant triples with coordinates <= bound.  For Spin the scan
// includes the half-integral weights.
SaturationReport saturation_scan(GroupTag group, int n, long bound, int n_max,
                                 std::size_t max_witnesses = 8);

}  // namespace isohorn
