#include "isohorn/flags.hpp"

#include "isohorn/grassmann.hpp"

#include <stdexcept>

namespace isohorn {

std::uint64_t Fp::modulus = 2147483647ULL;  // 2^31 - 1

FormTag form_from_string(const std::string& s) {
  if (s == "none") return FormTag::None;
  if (s == "symplectic" || s == "C") return FormTag::Symplectic;
  if (s == "symmetric-odd" || s == "B") return FormTag::SymmetricOdd;
  if (s == "symmetric-even" || s == "D") return FormTag::SymmetricEven;
  throw std::invalid_argument("unknown form tag: " + s);
}

std::string form_to_string(FormTag f) {
  switch (f) {
    case FormTag::None: return "none";
    case FormTag::Symplectic: return "symplectic";
    case FormTag::SymmetricOdd: return "symmetric-odd";
    case FormTag::SymmetricEven: return "symmetric-even";
  }
  return "?";
}

template <typename F>
Mat<F> standard_form(FormTag form, int N) {
  Mat<F> E(N, N);
  switch (form) {
    case FormTag::None:
      throw std::invalid_argument("no Gram matrix without a form");
    case FormTag::Symplectic: {
      if (N % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
      for (int i = 0; i < N / 2; ++i) {
        E(i, N - 1 - i) = FieldOps<F>::one();
        E(N - 1 - i, i) = -FieldOps<F>::one();
      }
      break;
    }
    case FormTag::SymmetricOdd: {
      if (N % 2 != 1) throw std::invalid_argument("odd symmetric form needs odd dimension");
      for (int i = 0; i < N; ++i) E(i, N - 1 - i) = FieldOps<F>::one();
      E(N / 2, N / 2) = FieldOps<F>::one() + FieldOps<F>::one();
      break;
    }
    case FormTag::SymmetricEven: {
      if (N % 2 != 0) throw std::invalid_argument("even symmetric form needs even dimension");
      for (int i = 0; i < N; ++i) E(i, N - 1 - i) = FieldOps<F>::one();
      break;
    }
  }
  return E;
}

namespace {

template <typename F>
F random_scalar(SplitMix64& rng);

template <>
Fp random_scalar<Fp>(SplitMix64& rng) {
  return Fp(rng.next());
}
template <>
Rat random_scalar<Rat>(SplitMix64& rng) {
  return Rat(static_cast<long>(rng.next() % 19) - 9);
}

template <typename F>
Mat<F> random_matrix(int rows, int cols, SplitMix64& rng) {
  Mat<F> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_scalar<F>(rng);
  return m;
}

template <typename F>
F bilinear(const Mat<F>& E, const Mat<F>& u, const Mat<F>& v) {
  F acc = FieldOps<F>::zero();
  for (int i = 0; i < E.rows(); ++i) {
    if (FieldOps<F>::is_zero(u(i, 0))) continue;
    for (int j = 0; j < E.cols(); ++j) acc = acc + u(i, 0) * E(i, j) * v(j, 0);
  }
  return acc;
}

// I + c * v * (Ev)^T: a symplectic transvection (E skew) or, with
// c = -2/B(v,v), the reflection in v (E symmetric).
template <typename F>
Mat<F> rank_one_isometry(const Mat<F>& E, const Mat<F>& v, const F& c) {
  int N = E.rows();
  Mat<F> T = Mat<F>::identity(N);
  std::vector<F> ev(N, FieldOps<F>::zero());
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) ev[i] = ev[i] + E(i, j) * v(j, 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) T(i, j) = T(i, j) + c * v(i, 0) * ev[j];
  return T;
}

template <typename F>
Mat<F> random_isometry(FormTag form, int N, SplitMix64& rng) {
  Mat<F> E = standard_form<F>(form, N);
  Mat<F> g = Mat<F>::identity(N);
  int steps = 2 * N + 4;
  for (int k = 0; k < steps; ++k) {
    Mat<F> v = random_matrix<F>(N, 1, rng);
    if (form == FormTag::Symplectic) {
      g = rank_one_isometry(E, v, random_scalar<F>(rng)) * g;
    } else {
      F q = bilinear(E, v, v);
      if (FieldOps<F>::is_zero(q)) {
        --k;
        continue;
      }
      F c = -(FieldOps<F>::one() + FieldOps<F>::one()) / q;
      g = rank_one_isometry(E, v, c) * g;
    }
  }
  if (form != FormTag::Symplectic && steps % 2 != 0)
    throw std::logic_error("reflection count must be even");
  return g;
}

}  // namespace

template <typename F>
bool flag_is_isotropic(const FlagBasis<F>& flag) {
  if (flag.form == FormTag::None) return true;
  Mat<F> E = standard_form<F>(flag.form, flag.N);
  Mat<F> gram = flag.basis.transpose() * E * flag.basis;
  for (int i = 0; i < flag.N; ++i)
    for (int j = 0; j < flag.N; ++j)
      if (!(gram(i, j) == E(i, j))) return false;
  return true;
}

template <typename F>
FlagBasis<F> random_flag(FormTag form, int N, std::uint64_t seed) {
  SplitMix64 rng(seed);
  FlagBasis<F> flag;
  flag.form = form;
  flag.N = N;
  if (form == FormTag::None) {
    do {
      flag.basis = random_matrix<F>(N, N, rng);
    } while (!flag.basis.invertible());
  } else {
    flag.basis = random_isometry<F>(form, N, rng);
    if (!flag_is_isotropic(flag))
      throw std::logic_error("isometry construction failed the Gram identity");
  }
  flag.inv = flag.basis.inverse();
  return flag;
}

template <typename F>
long hom_constrained_dim(const std::vector<Partition>& mus,
                         const std::vector<FlagBasis<F>>& flags_m,
                         const std::vector<FlagBasis<F>>& flags_v) {
  if (flags_m.size() != mus.size() || flags_v.size() != mus.size())
    throw std::invalid_argument("hom dim: tuple length mismatch");
  if (mus.empty()) return 0;
  int r = flags_m[0].N, nv = flags_v[0].N;
  std::vector<std::vector<int>> rows_per;  // (j, a) -> count of vanishing coords
  long total_rows = 0;
  for (std::size_t j = 0; j < mus.size(); ++j) {
    if (flags_m[j].N != r || flags_v[j].N != nv)
      throw std::invalid_argument("hom dim: flag shape mismatch");
    if (static_cast<int>(mus[j].rows()) > r || mus[j].width() > nv)
      throw std::invalid_argument("hom dim: mu out of range");
    for (int a = 1; a <= r; ++a) total_rows += mus[j].part(a - 1);
  }
  Mat<F> sys(static_cast<int>(total_rows), nv * r);
  int row = 0;
  for (std::size_t j = 0; j < mus.size(); ++j) {
    for (int a = 1; a <= r; ++a) {
      long mu_a = mus[j].part(a - 1);
      if (mu_a == 0) continue;
      // coordinates of phi(f_a) in the G-flag basis; the last mu_a must vanish
      for (long k = nv - mu_a; k < nv; ++k) {
        for (int u = 0; u < nv; ++u) {
          const F& c = flags_v[j].inv(static_cast<int>(k), u);
          if (FieldOps<F>::is_zero(c)) continue;
          for (int v = 0; v < r; ++v)
            sys(row, u * r + v) = sys(row, u * r + v) + c * flags_m[j].basis(v, a - 1);
        }
        ++row;
      }
    }
  }
  return static_cast<long>(nv) * r - sys.rank();
}

namespace {

template <typename F>
long bilinear_space_dim(const std::vector<FlagBasis<F>>& flags,
                        const std::vector<std::vector<int>>& t_data, bool symmetric) {
  if (flags.size() != t_data.size())
    throw std::invalid_argument("constrained form space: tuple length mismatch");
  if (flags.empty()) return 0;
  int r = flags[0].N;
  int unknowns = symmetric ? r * (r + 1) / 2 : r * (r - 1) / 2;
  auto slot = [&](int i, int j) {  // i <= j for symmetric, i < j for alternating
    if (symmetric) return i * r - i * (i - 1) / 2 + (j - i);
    return i * (2 * r - i - 3) / 2 + j - 1;
  };
  std::vector<std::vector<F>> rows;
  for (std::size_t jf = 0; jf < flags.size(); ++jf) {
    if (flags[jf].N != r) throw std::invalid_argument("constrained form space: shape");
    if (static_cast<int>(t_data[jf].size()) != r)
      throw std::invalid_argument("constrained form space: t-data length");
    for (int a = 1; a <= r; ++a) {
      int ta = t_data[jf][a - 1];
      if (ta < 0 || ta > r) throw std::invalid_argument("constrained form space: t range");
      for (int b = 1; b <= a; ++b)
        for (int c = 1; c <= ta; ++c) {
          std::vector<F> row(unknowns, FieldOps<F>::zero());
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
              F coeff = flags[jf].basis(i, b - 1) * flags[jf].basis(j, c - 1);
              if (FieldOps<F>::is_zero(coeff)) continue;
              if (symmetric) {
                if (i <= j)
                  row[slot(i, j)] = row[slot(i, j)] + coeff;
                else
                  row[slot(j, i)] = row[slot(j, i)] + coeff;
              } else {
                if (i < j)
                  row[slot(i, j)] = row[slot(i, j)] + coeff;
                else if (j < i)
                  row[slot(j, i)] = row[slot(j, i)] - coeff;
              }
            }
          rows.push_back(std::move(row));
        }
    }
  }
  Mat<F> sys(static_cast<int>(rows.size()), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < unknowns; ++j) sys(static_cast<int>(i), j) = rows[i][j];
  return unknowns - sys.rank();
}

}  // namespace

template <typename F>
long sym2_constrained_dim(const std::vector<FlagBasis<F>>& flags,
                          const std::vector<std::vector<int>>& t_data) {
  return bilinear_space_dim(flags, t_data, true);
}

template <typename F>
long wedge2_constrained_dim(const std::vector<FlagBasis<F>>& flags,
                            const std::vector<std::vector<int>>& t_data) {
  return bilinear_space_dim(flags, t_data, false);
}

template <typename F>
AIndex schubert_position(const Mat<F>& X, const FlagBasis<F>& flag) {
  int N = flag.N, m = X.cols();
  std::vector<int> jumps;
  long prev = 0;
  for (int b = 1; b <= N; ++b) {
    Mat<F> joint = Mat<F>::hstack(X, flag.prefix(b));
    long cap = m + b - joint.rank();
    if (cap > prev) jumps.push_back(b);
    prev = cap;
  }
  if (static_cast<int>(jumps.size()) != m)
    throw std::logic_error("schubert_position: X is not of full rank");
  return AIndex(jumps, N);
}

KeyCheckReport hom_dim_horn_check(const std::vector<Partition>& mus, int r, int n,
                                  std::uint64_t seed) {
  KeyCheckReport rep;
  rep.prime = Fp::modulus;
  rep.seed = seed;
  long total = 0;
  for (const auto& m : mus) {
    if (static_cast<int>(m.rows()) > r || m.width() > 2L * n)
      throw std::invalid_argument("mu out of the 2n x r range");
    total += m.size();
  }
  rep.expected_dim = 2L * n * r - total;
  SplitMix64 rng(seed);
  std::vector<FlagBasis<Fp>> fm, fv;
  for (std::size_t j = 0; j < mus.size(); ++j) {
    fm.push_back(random_flag<Fp>(FormTag::None, r, rng.next()));
    fv.push_back(random_flag<Fp>(FormTag::Symplectic, 2 * n, rng.next()));
  }
  rep.observed_dim = hom_constrained_dim(mus, fm, fv);
  rep.a_holds = rep.observed_dim == rep.expected_dim;
  rep.b_holds = horn_inequality_check(mus, 2L * n, r).ok;
  return rep;
}

// explicit instantiations
template Mat<Fp> standard_form<Fp>(FormTag, int);
template Mat<Rat> standard_form<Rat>(FormTag, int);
template FlagBasis<Fp> random_flag<Fp>(FormTag, int, std::uint64_t);
template FlagBasis<Rat> random_flag<Rat>(FormTag, int, std::uint64_t);
template bool flag_is_isotropic<Fp>(const FlagBasis<Fp>&);
template bool flag_is_isotropic<Rat>(const FlagBasis<Rat>&);
template long hom_constrained_dim<Fp>(const std::vector<Partition>&,
                                      const std::vector<FlagBasis<Fp>>&,
                                      const std::vector<FlagBasis<Fp>>&);
template long hom_constrained_dim<Rat>(const std::vector<Partition>&,
                                       const std::vector<FlagBasis<Rat>>&,
                                       const std::vector<FlagBasis<Rat>>&);
template long sym2_constrained_dim<Fp>(const std::vector<FlagBasis<Fp>>&,
                                       const std::vector<std::vector<int>>&);
template long sym2_constrained_dim<Rat>(const std::vector<FlagBasis<Rat>>&,
                                        const std::vector<std::vector<int>>&);
template long wedge2_constrained_dim<Fp>(const std::vector<FlagBasis<Fp>>&,
                                         const std::vector<std::vector<int>>&);
template long wedge2_constrained_dim<Rat>(const std::vector<FlagBasis<Rat>>&,
                                          const std::vector<std::vector<int>>&);
template AIndex schubert_position<Fp>(const Mat<Fp>&, const FlagBasis<Fp>&);
template AIndex schubert_position<Rat>(const Mat<Rat>&, const FlagBasis<Rat>&);

}  // namespace isohorn
