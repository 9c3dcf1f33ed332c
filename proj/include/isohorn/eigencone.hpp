#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isohorn/numeric.hpp"
#include "isohorn/weights.hpp"

namespace isohorn {

// One linear inequality of the eigencone system: for each factor j a row of
// exact rational coefficients on the coweight coordinates of h_j; membership
// requires sum_j <coeff_j, h_j> <= 0.  The witness records the maximal
// parabolic node and the generating index tuple.
struct EigenInequality {
  GroupTag group;
  int node = 0;
  std::vector<std::vector<int>> indices;    // one subset per factor
  std::vector<std::vector<Rat>> coeff;      // s x (coordinate count)
};

// Coordinate count of the coweight vectors: N for SL(N) (diagonal entries,
// summing to zero), n for Sp(2n)/SO(2n+1) (epsilon-bar coordinates).
int coweight_len(GroupTag g, int rank_param);

bool dominant_coweight(GroupTag g, int rank_param, const std::vector<Rat>& u);

// Inequalities from every maximal parabolic node and every index tuple whose
// Schubert product is a nonzero multiple of the point class.  Memoized per
// (group, rank, s).
const std::vector<EigenInequality>& eigencone_system(GroupTag g, int rank_param, int s);

Rat eigen_eval(const EigenInequality& ineq, const std::vector<std::vector<Rat>>& h);

// Membership test; h must be a tuple of dominant coweights.
bool eigencone_member(GroupTag g, int rank_param, const std::vector<std::vector<Rat>>& h);

// Embeddings of the Sp/SO dominant coweights into the SL diagonal.
std::vector<Rat> embed_c_into_sl(const std::vector<Rat>& u);
std::vector<Rat> embed_b_into_sl(const std::vector<Rat>& u);

struct ConeCompareReport {
  GroupTag small_group;
  int n = 0, s = 0;
  long samples = 0;
  long members = 0;
  long mismatches = 0;
  long omega_identity_failures = 0;
  std::uint64_t seed = 0;
  bool passed() const { return mismatches == 0 && omega_identity_failures == 0; }
};

// Samples dominant coweight tuples (interior, facet and degenerate points),
// compares membership under the small-group system and the embedded SL
// system, and checks the fundamental-weight evaluation identity on every
// (inequality, sample) pair.
ConeCompareReport compare_cones(GroupTag small_group, int n, int s, long samples,
                                std::uint64_t seed);

struct WeightConeCheck {
  bool cone_member = false;
  int first_positive_scale = 0;  // 0 when no invariant shows up within the cap
  bool consistent = true;        // invariant-positive implies cone membership
};

// Compares cone membership of kappa^{-1}(weights) with the smallest N <= n_max
// at which the tensor invariant appears.
WeightConeCheck weight_cone_cross_check(GroupTag g, const std::vector<Weight>& weights,
                                        int n_max);

}  // namespace isohorn
