#pragma once

#include <map>
#include <optional>
#include <vector>

#include "isohorn/indices.hpp"
#include "isohorn/lr.hpp"
#include "isohorn/numeric.hpp"

namespace isohorn {

// Element of H*(Gr(m,N)) in the Schubert basis, coefficients exact integers.
struct CohomClassA {
  int m = 0, N = 0;
  std::map<AIndex, Int> coeffs;

  bool zero() const { return coeffs.empty(); }
};

// Cup product of the named Schubert classes, fully expanded.
CohomClassA gr_product(const std::vector<AIndex>& indices, int m, int N);

bool gr_nonvanishing(const std::vector<AIndex>& indices, int m, int N);

// Coefficient of the point class when the total codimension is m(N-m), else 0.
Int gr_point_coefficient(const std::vector<AIndex>& indices, int m, int N);

// All s-tuples (B^1..B^s) of d-subsets of [r] whose Schubert product in
// Gr(d,r) is nonzero.  Memoized per (d,r,s).
const std::vector<std::vector<std::vector<int>>>& horn_list(int d, int r, int s);

// Restriction of horn_list to tuples whose product is a nonzero multiple of
// the point class.
const std::vector<std::vector<std::vector<int>>>& horn_list_point(int d, int r, int s);

struct HornCheckResult {
  bool ok = true;
  int witness_d = 0;
  std::vector<std::vector<int>> witness_tuple;  // empty when ok
};

// For every 1 <= d <= r and every tuple in horn_list(d,r,s), tests
// sum_j sum_{a in B^j} mu^j_a <= d * bound.  mus must have length-r parts.
HornCheckResult horn_inequality_check(const std::vector<Partition>& mus, long bound, int r);

}  // namespace isohorn
