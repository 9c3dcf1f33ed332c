#pragma once

#include <map>
#include <vector>

#include "isohorn/numeric.hpp"
#include "isohorn/partition.hpp"

namespace isohorn {

using SchurExpansion = std::map<Partition, Int>;

// Littlewood-Richardson coefficient c^nu_{lambda,mu}.  Size mismatch or
// nu not containing lambda gives 0.
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// s_lambda * s_mu = sum c^nu s_nu, keeping only shapes with at most max_rows
// rows (pass 0 for no bound).
SchurExpansion schur_product(const Partition& lambda, const Partition& mu, int max_rows);

SchurExpansion schur_product(const SchurExpansion& f, const Partition& mu, int max_rows);

// dim (V_{mu^1} x ... x V_{mu^s})^{SL(r)}: multiplicity of the rectangular
// shape (c^r), c = sum|mu^j| / r; zero when r does not divide the total size.
Int sl_invariant_dim(int r, const std::vector<Partition>& mus);

// Conjugating every diagram exchanges the SL(r) and SL(k) invariant counts
// when sum|mu^j| = k*r; returns both sides.
struct DualityCheck {
  Int lhs, rhs;
  bool equal() const { return lhs == rhs; }
};
DualityCheck grassmann_duality(const std::vector<Partition>& mus, int r, int k);
DualityCheck ordinary_duality(const std::vector<Partition>& mus, int r, int k);

}  // namespace isohorn
