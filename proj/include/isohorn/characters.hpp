#pragma once

#include <map>
#include <vector>

#include "isohorn/numeric.hpp"
#include "isohorn/partition.hpp"
#include "isohorn/weights.hpp"

namespace isohorn {

// Character engine for SL(N) (in GL coordinates), Sp(2n), SO(2n+1) and
// Spin(2n+1).  All weight coordinates are stored doubled so that Spin weights
// stay integral; inner products are the standard Euclidean ones.

enum class RSType { A, B, C };

struct RootSystem {
  RSType type;
  int rank;  // number of coordinates: r for A (GL(r)), n for B/C

  std::vector<std::vector<long>> positive_roots() const;  // doubled coords
  std::vector<long> rho2() const;                         // doubled rho
  bool dominant(const std::vector<long>& w2) const;
};

// Multiplicities of the dominant weights of V_lambda (doubled coordinates).
std::map<std::vector<long>, Int> dominant_weight_mults(const RootSystem& rs,
                                                       const std::vector<long>& lambda2);

// Full weight system with multiplicities (orbit expansion of the above).
std::vector<std::pair<std::vector<long>, Int>> weight_system(const RootSystem& rs,
                                                             const std::vector<long>& lambda2);

// Decomposition of V_{l1} x ... x V_{ls} into irreducibles.
std::map<std::vector<long>, Int> tensor_decompose(const RootSystem& rs,
                                                  const std::vector<std::vector<long>>& l2s);

Int weyl_dim(const RootSystem& rs, const std::vector<long>& lambda2);

// dim of the character (total weight multiplicity), for cross-checking.
Int character_mass(const RootSystem& rs, const std::vector<long>& lambda2);

// dim (V_{w^1} x ... x V_{w^s})^G for the tagged group.  Errors on
// non-dominant or non-integral weights and on rank/size caps.
Int invariant_dim(GroupTag group, const std::vector<Weight>& weights);

// Same computation for SL(r) acting on partition-labeled modules; this is the
// character-theoretic route (the tableau route lives in lr.hpp).
Int invariant_dim_sl_partitions(int r, const std::vector<Partition>& mus);

Int dim_of_irrep(GroupTag group, const Weight& w);

}  // namespace isohorn
