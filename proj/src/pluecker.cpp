#include "isohorn/pluecker.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace isohorn {

GrassCoords::GrassCoords(int m_, int N_) : m(m_), N(N_) {
  for (const auto& A : all_a_indices(m, N)) subsets.push_back(A.elements());
}

int GrassCoords::index_of(const std::vector<int>& s) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
  if (it == subsets.end() || *it != s) throw std::logic_error("subset not found");
  return static_cast<int>(it - subsets.begin());
}

std::vector<std::vector<QuadTerm>> plucker_relations(const GrassCoords& gc) {
  std::vector<std::vector<QuadTerm>> rels;
  if (gc.m <= 1 || gc.m >= gc.N - 1) return rels;  // projective space: none
  std::vector<std::vector<int>> smaller, larger;
  for (const auto& A : all_a_indices(gc.m - 1, gc.N)) smaller.push_back(A.elements());
  for (const auto& A : all_a_indices(gc.m + 1, gc.N)) larger.push_back(A.elements());
  for (const auto& S : smaller)
    for (const auto& T : larger) {
      std::vector<QuadTerm> rel;
      for (std::size_t k = 0; k < T.size(); ++k) {
        int t = T[k];
        if (std::binary_search(S.begin(), S.end(), t)) continue;
        std::vector<int> left = S;
        int above = 0;
        for (int sElem : S)
          if (sElem > t) ++above;
        left.push_back(t);
        std::sort(left.begin(), left.end());
        std::vector<int> right;
        for (std::size_t q = 0; q < T.size(); ++q)
          if (q != k) right.push_back(T[q]);
        int sign = ((static_cast<int>(k) + above) % 2 == 0) ? 1 : -1;
        rel.push_back(QuadTerm{gc.index_of(left), gc.index_of(right), sign});
      }
      if (rel.size() > 1) rels.push_back(std::move(rel));
    }
  return rels;
}

namespace {

Fp minor_det(const Mat<Fp>& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  int k = static_cast<int>(rows.size());
  if (k == 1) return M(rows[0] - 1, cols[0] - 1);
  if (k == 2)
    return M(rows[0] - 1, cols[0] - 1) * M(rows[1] - 1, cols[1] - 1) -
           M(rows[0] - 1, cols[1] - 1) * M(rows[1] - 1, cols[0] - 1);
  Fp acc(std::uint64_t(0));
  std::vector<int> sub(rows.begin() + 1, rows.end());
  for (int j = 0; j < k; ++j) {
    std::vector<int> rest;
    for (int q = 0; q < k; ++q)
      if (q != j) rest.push_back(cols[q]);
    Fp term = M(rows[0] - 1, cols[j] - 1) * minor_det(M, sub, rest);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

Mat<Fp> compound_matrix(const Mat<Fp>& M, const GrassCoords& gc) {
  int D = static_cast<int>(gc.subsets.size());
  Mat<Fp> C(D, D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) C(i, j) = minor_det(M, gc.subsets[i], gc.subsets[j]);
  return C;
}

std::vector<Fp> plucker_vector(const Mat<Fp>& X, const GrassCoords& gc) {
  std::vector<Fp> p;
  std::vector<int> all_cols;
  for (int j = 1; j <= X.cols(); ++j) all_cols.push_back(j);
  for (const auto& R : gc.subsets) p.push_back(minor_det(X, R, all_cols));
  return p;
}

namespace {

// componentwise b_i <= a_i
bool subset_leq(const std::vector<int>& b, const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

struct Monomials {
  int nvars, degree;
  std::vector<std::vector<int>> expos;
  std::map<std::vector<int>, int> index;
  Monomials(int v, int d) : nvars(v), degree(d) {
    std::vector<int> cur(v, 0);
    build(0, d, cur);
    for (std::size_t i = 0; i < expos.size(); ++i) index.emplace(expos[i], static_cast<int>(i));
  }
  void build(int pos, int left, std::vector<int>& cur) {
    if (pos == nvars - 1) {
      cur[pos] = left;
      expos.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[pos] = k;
      build(pos + 1, left - k, cur);
    }
    cur[pos] = 0;
  }
};

// Incremental echelon basis over F_p with early exit at full rank.
class RowSpace {
 public:
  explicit RowSpace(int cols) : cols_(cols), pivots_(cols, -1), rank_(0) {}
  int rank() const { return rank_; }
  bool full() const { return rank_ == cols_; }
  void insert(std::vector<Fp> row) {
    for (int c = 0; c < cols_; ++c) {
      if (row[c].is_zero()) continue;
      int r = pivots_[c];
      if (r < 0) {
        Fp inv = row[c].inv();
        for (int j = c; j < cols_; ++j) row[j] = row[j] * inv;
        pivots_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        ++rank_;
        return;
      }
      Fp f = row[c];
      const std::vector<Fp>& base = rows_[r];
      for (int j = c; j < cols_; ++j) row[j] = row[j] - f * base[j];
    }
  }

 private:
  int cols_;
  std::vector<std::vector<Fp>> rows_;
  std::vector<int> pivots_;
  int rank_;
};

// True when the projective system {quadratic forms} has no solution over the
// algebraic closure: all monomials of some degree <= cap lie in the ideal.
bool certify_empty(const std::vector<Mat<Fp>>& quads, int nvars, int degree_cap,
                   int column_cap, bool* inconclusive) {
  *inconclusive = false;
  if (nvars == 0) return true;
  if (quads.empty()) return false;  // whole projective space survives
  for (int D = 2; D <= degree_cap; ++D) {
    Monomials mon(nvars, D);
    if (static_cast<int>(mon.expos.size()) > column_cap) break;
    Monomials shift(nvars, D - 2);
    RowSpace space(static_cast<int>(mon.expos.size()));
    for (const auto& q : quads) {
      for (const auto& e : shift.expos) {
        std::vector<Fp> row(mon.expos.size(), Fp(std::uint64_t(0)));
        for (int i = 0; i < nvars; ++i)
          for (int j = i; j < nvars; ++j) {
            Fp c = i == j ? q(i, i) : q(i, j) + q(j, i);
            if (c.is_zero()) continue;
            std::vector<int> f = e;
            f[i] += 1;
            f[j] += 1;
            row[mon.index.at(f)] = row[mon.index.at(f)] + c;
          }
        space.insert(std::move(row));
        if (space.full()) return true;
      }
      if (space.full()) return true;
    }
    if (space.full()) return true;
  }
  *inconclusive = true;
  return false;
}

struct TrialContext {
  const GrassCoords& gc;
  const std::vector<std::vector<QuadTerm>>& rels;
  std::vector<Mat<Fp>> adapted;  // compound of flag.inv per factor
};

// Linear span of the closed conditions plus `slices` random hyperplanes,
// then the quadrics restricted to its solution space; empty-certified or not.
TrialOutcome probe_dimension(const TrialContext& ctx, const std::vector<AIndex>& tuple,
                             int slices, SplitMix64& rng, const PropernessOptions& opt) {
  TrialOutcome out;
  int D = static_cast<int>(ctx.gc.subsets.size());
  std::vector<std::vector<Fp>> rows;
  for (std::size_t j = 0; j < tuple.size(); ++j) {
    const std::vector<int>& A = tuple[j].elements();
    for (int b = 0; b < D; ++b) {
      if (subset_leq(ctx.gc.subsets[b], A)) continue;
      std::vector<Fp> row(D);
      for (int c = 0; c < D; ++c) row[c] = ctx.adapted[j](b, c);
      rows.push_back(std::move(row));
    }
  }
  for (int k = 0; k < slices; ++k) {
    std::vector<Fp> row(D);
    for (int c = 0; c < D; ++c) row[c] = Fp(rng.next());
    rows.push_back(std::move(row));
  }
  Mat<Fp> sys(static_cast<int>(rows.size()), D);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < D; ++c) sys(static_cast<int>(i), c) = rows[i][c];
  Mat<Fp> K = sys.nullspace();
  int v0 = K.cols();
  if (v0 == 0) {
    out.observed_dim = -1;
    return out;
  }
  // restrict each quadric q(p) = sum sign p_a p_b to p = K y
  std::vector<Mat<Fp>> quads;
  for (const auto& rel : ctx.rels) {
    Mat<Fp> Q(v0, v0);
    bool nonzero = false;
    for (const auto& t : rel) {
      for (int i = 0; i < v0; ++i) {
        Fp ka = K(t.a, i);
        if (ka.is_zero()) continue;
        for (int j = 0; j < v0; ++j) {
          Fp kb = K(t.b, j);
          if (kb.is_zero()) continue;
          Fp term = ka * kb;
          Q(i, j) = t.sign > 0 ? Q(i, j) + term : Q(i, j) - term;
        }
      }
    }
    for (int i = 0; i < v0 && !nonzero; ++i)
      for (int j = 0; j < v0 && !nonzero; ++j)
        if (!Q(i, j).is_zero()) nonzero = true;
    if (nonzero) quads.push_back(std::move(Q));
  }
  if (quads.empty()) {
    out.observed_dim = v0 - 1;  // linear case: exact projective dimension
    return out;
  }
  bool inconclusive = false;
  bool empty = certify_empty(quads, v0, opt.macaulay_degree_cap, opt.macaulay_column_cap,
                             &inconclusive);
  if (empty) {
    out.observed_dim = -1;
    return out;
  }
  out.observed_dim = -2;  // nonempty or certificate out of reach
  out.inconclusive = true;
  return out;
}

bool flags_pairwise_generic(const std::vector<FlagBasis<Fp>>& flags) {
  int N = flags[0].N;
  for (std::size_t j = 0; j < flags.size(); ++j)
    for (std::size_t k = j + 1; k < flags.size(); ++k)
      for (int a = 1; a < N; ++a) {
        Mat<Fp> joint = Mat<Fp>::hstack(flags[j].prefix(a), flags[k].prefix(N - a));
        if (joint.rank() < N) return false;
      }
  return true;
}

}  // namespace

PropernessReport mc_properness(const std::vector<AIndex>& tuple, FormTag form,
                               const PropernessOptions& opt) {
  PropernessReport rep;
  rep.prime = Fp::modulus;
  rep.seed = opt.seed;
  rep.trials = opt.trials;
  if (tuple.empty()) throw std::invalid_argument("properness: empty tuple");
  int N = tuple[0].ambient(), m = tuple[0].card();
  if (form == FormTag::Symplectic && N % 2 != 0)
    throw std::invalid_argument("properness: symplectic needs even ambient");
  long grdim = static_cast<long>(m) * (N - m);
  if (grdim > opt.max_cell_dim)
    throw std::invalid_argument("properness: size cap exceeded (m(N-m) > cap)");
  long codim_sum = 0;
  for (const auto& A : tuple) {
    if (A.ambient() != N || A.card() != m)
      throw std::invalid_argument("properness: mixed ambient parameters");
    codim_sum += A.codim();
  }
  rep.expected_dim = grdim - codim_sum;
  long target = std::max(rep.expected_dim, -1L);

  GrassCoords gc(m, N);
  std::vector<std::vector<QuadTerm>> rels = plucker_relations(gc);
  SplitMix64 master(opt.seed);

  for (int trial = 0; trial < opt.trials; ++trial) {
    std::uint64_t trial_seed = master.next();
    std::vector<FlagBasis<Fp>> flags;
    for (int attempt = 0;; ++attempt) {
      flags.clear();
      SplitMix64 rng(trial_seed + attempt);
      for (std::size_t j = 0; j < tuple.size(); ++j)
        flags.push_back(random_flag<Fp>(form, N, rng.next()));
      if (flags_pairwise_generic(flags)) break;
      ++rep.redraws;
      if (attempt > 32) throw std::runtime_error("properness: generic flags not found");
    }
    TrialContext ctx{gc, rels, {}};
    for (const auto& f : flags) ctx.adapted.push_back(compound_matrix(f.inv, gc));

    auto probe = [&](long slices) {
      SplitMix64 r2(trial_seed ^ (0x51caf0ULL + static_cast<std::uint64_t>(slices) * 977));
      return probe_dimension(ctx, tuple, static_cast<int>(slices), r2, opt);
    };

    TrialOutcome first = probe(target + 1);
    TrialOutcome outcome;
    if (first.observed_dim == -1) {
      outcome.observed_dim = target;  // certified <= expected
      if (opt.exact_dims) {
        long k = 0;
        while (k <= target && probe(k).observed_dim != -1) ++k;
        outcome.observed_dim = k - 1;
      }
    } else if (first.observed_dim >= 0) {
      // no quadrics survive the restriction: the sliced system is linear and
      // its dimension is exact, so the bound is exceeded for certain
      outcome.exceeded = true;
      outcome.observed_dim = (opt.exact_dims && rels.empty())
                                 ? probe(0).observed_dim
                                 : first.observed_dim + target + 1;
      ++rep.violations;
    } else {
      // no emptiness certificate within the caps: cannot confirm properness
      outcome.exceeded = true;
      outcome.inconclusive = true;
      outcome.observed_dim = -2;
      ++rep.inconclusive;
    }
    rep.outcomes.push_back(outcome);
  }
  rep.passed = rep.violations == 0 && rep.inconclusive == 0;
  return rep;
}

}  // namespace isohorn
