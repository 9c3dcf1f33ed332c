#pragma once

#include <map>
#include <vector>

#include "isohorn/indices.hpp"
#include "isohorn/multipoly.hpp"
#include "isohorn/numeric.hpp"
#include "isohorn/signed_perm.hpp"

namespace isohorn {

enum class BC { B, C };

// Ranks above this make |W| = 2^n n! impractical for the coinvariant tables.
constexpr int kMaxBCRank = 4;

// (f - s_i f) / alpha_i with the simple roots of the tagged series:
// alpha_i = eps_i - eps_{i+1} for i < n, alpha_n = eps_n (B) or 2 eps_n (C).
MultiPoly divided_difference(const MultiPoly& f, int i, BC type);

// Operator string for w: rightmost letter of a reduced word acts first.
MultiPoly divided_difference_word(const MultiPoly& f, const SignedPerm& w, BC type);

// Top-degree representatives of the point class in the coinvariant algebra.
MultiPoly point_class_rep(int n, BC type);

// Polynomial representing the Schubert class of w (cell dimension ell(w),
// polynomial degree ell(w0) - ell(w)).  Memoized per (type, n).
const MultiPoly& schubert_rep(const SignedPerm& w, BC type);

// Verifies rep_C(w) = 2^{n - mu(w)} rep_B(w) for every w, as polynomials.
bool two_power_ratio_check(int n);

// Expansion of a homogeneous polynomial in the Schubert basis of the
// coinvariant algebra; only exact integer coefficients are accepted.
std::map<SignedPerm, Int> coinvariant_expand(const MultiPoly& f, BC type, int n);

// Product of full-flag Schubert classes.
std::map<SignedPerm, Int> flag_structure_constants(const SignedPerm& u, const SignedPerm& v,
                                                   BC type);

// --- parabolic quotients -------------------------------------------------

struct CohomClassC {
  int r = 0, n = 0;
  std::map<CIndex, Int> coeffs;
  bool zero() const { return coeffs.empty(); }
};
struct CohomClassB {
  int r = 0, n = 0;
  std::map<BIndex, Int> coeffs;
  bool zero() const { return coeffs.empty(); }
};

CohomClassC ig_product(const std::vector<CIndex>& indices, int r, int n);
CohomClassB og_product(const std::vector<BIndex>& indices, int r, int n);

bool ig_nonvanishing(const std::vector<CIndex>& indices, int r, int n);
bool og_nonvanishing(const std::vector<BIndex>& indices, int r, int n);

// Coefficient of the point class when total codimension matches, else 0.
Int ig_point_coefficient(const std::vector<CIndex>& indices, int r, int n);
Int og_point_coefficient(const std::vector<BIndex>& indices, int r, int n);

// --- numeric identities and Horn-type criteria ---------------------------

// Both routes to chi_{w_I}(x_r): the character evaluation and the sum of the
// codimensions of the cell and its compressed companion.  They must agree.
struct ChiEval {
  Rat direct;
  long codim_sum;
  bool consistent() const { return direct == Rat(codim_sum); }
};
ChiEval chi_eval(const CIndex& I);

struct DeformedResult {
  bool ordinary_nonzero = false;
  bool beta1 = false;
  bool value = false;  // nonvanishing in the degenerated product
};

// Requires the complementary-codimension hypothesis; throws otherwise.
DeformedResult deformed_nonvanishing(const std::vector<CIndex>& indices, int r, int n);
DeformedResult deformed_nonvanishing_b(const std::vector<BIndex>& indices, int r, int n);

struct HornFactorization {
  bool alpha = false;
  bool beta1 = false;
  bool beta2 = false;
  bool beta3 = false;
  std::vector<Partition> mu_data;
  bool consistent() const { return alpha == (beta1 && beta2 && beta3); }
};

// Factorization of deformed nonvanishing on IG(r,2n) (resp. OG(r,2n+1)) into
// the dimension condition beta1, the SL(r) invariant condition beta2 on the
// derived mu-data, and the small-Grassmannian product beta3.
HornFactorization horn_c_check(const std::vector<CIndex>& indices, int r, int n);
HornFactorization horn_b_check(const std::vector<BIndex>& indices, int r, int n);

}  // namespace isohorn
