#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isohorn/indices.hpp"
#include "isohorn/linalg.hpp"
#include "isohorn/numeric.hpp"
#include "isohorn/partition.hpp"

namespace isohorn {

enum class FormTag { None, Symplectic, SymmetricOdd, SymmetricEven };

FormTag form_from_string(const std::string& s);
std::string form_to_string(FormTag f);

// Gram matrix of the standard form: antidiagonal J-blocks for the symplectic
// form, antidiagonal ones (with middle entry 2 in odd dimension) for the
// symmetric forms.  FormTag::None has no form.
template <typename F>
Mat<F> standard_form(FormTag form, int N);

// Complete flag given by the columns of an invertible matrix; for a form tag
// the Gram matrix of the columns equals the standard form, which forces
// E_a^perp = E_{N-a} for every a.
template <typename F>
struct FlagBasis {
  FormTag form = FormTag::None;
  int N = 0;
  Mat<F> basis;
  Mat<F> inv;  // cached inverse

  Mat<F> prefix(int a) const { return basis.col_slice(0, a); }
};

// Deterministic in the seed.  Isotropic flags arise as the image of the
// standard flag under a random isometry (a product of reflections or
// symplectic transvections); the Gram identity is checked on construction.
template <typename F>
FlagBasis<F> random_flag(FormTag form, int N, std::uint64_t seed);

template <typename F>
bool flag_is_isotropic(const FlagBasis<F>& flag);

// dim of {phi in Hom(M,V) : phi(F^j_a) c G^j_{dimV - mu^j_a}}, exact.
template <typename F>
long hom_constrained_dim(const std::vector<Partition>& mus,
                         const std::vector<FlagBasis<F>>& flags_m,
                         const std::vector<FlagBasis<F>>& flags_v);

// dim of {gamma in Sym^2 M* : gamma(F^j_a, F^j_{t^j_a}) = 0} and the
// alternating analogue; t-columns with t = 0 impose nothing.
template <typename F>
long sym2_constrained_dim(const std::vector<FlagBasis<F>>& flags,
                          const std::vector<std::vector<int>>& t_data);
template <typename F>
long wedge2_constrained_dim(const std::vector<FlagBasis<F>>& flags,
                            const std::vector<std::vector<int>>& t_data);

// Position of the column span of X relative to the flag: the jump set of
// b -> dim(X cap E_b).
template <typename F>
AIndex schubert_position(const Mat<F>& X, const FlagBasis<F>& flag);

struct KeyCheckReport {
  bool a_holds = false;      // generic Hom space has the expected dimension
  bool b_holds = false;      // Horn inequalities with bound 2n
  long observed_dim = 0;
  long expected_dim = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  bool agree() const { return a_holds == b_holds; }
};

// Draws generic complete flags on M and isotropic flags on V, measures the
// constrained Hom dimension, and compares with the Horn criterion.
KeyCheckReport hom_dim_horn_check(const std::vector<Partition>& mus, int r, int n,
                                  std::uint64_t seed);

}  // namespace isohorn
