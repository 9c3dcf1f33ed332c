#include "isohorn/eigencone.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "isohorn/bgg.hpp"
#include "isohorn/characters.hpp"
#include "isohorn/grassmann.hpp"

namespace isohorn {

int coweight_len(GroupTag g, int rank_param) {
  return g == GroupTag::SL ? rank_param : rank_param;
}

bool dominant_coweight(GroupTag g, int rank_param, const std::vector<Rat>& u) {
  if (static_cast<int>(u.size()) != coweight_len(g, rank_param)) return false;
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    if (u[i] < u[i + 1]) return false;
  if (g == GroupTag::SL) {
    Rat total(0);
    for (const Rat& x : u) total += x;
    return total == 0;
  }
  return u.empty() || u.back() >= 0;
}

std::vector<Rat> embed_c_into_sl(const std::vector<Rat>& u) {
  std::vector<Rat> v(u);
  for (std::size_t i = u.size(); i-- > 0;) v.push_back(-u[i]);
  return v;
}

std::vector<Rat> embed_b_into_sl(const std::vector<Rat>& u) {
  std::vector<Rat> v(u);
  v.push_back(Rat(0));
  for (std::size_t i = u.size(); i-- > 0;) v.push_back(-u[i]);
  return v;
}

namespace {

// omega_r evaluated after the coweight pull through w: the coefficient rows
// of the resulting functional on the epsilon-bar coordinates of h_j.
std::vector<Rat> pull_row(const SignedPerm& w, int r, const Rat& weight_scale) {
  std::vector<Rat> row(w.rank(), Rat(0));
  for (int i = 1; i <= r; ++i) {
    int im = w.image(i);
    row[std::abs(im) - 1] += (im > 0 ? weight_scale : -weight_scale);
  }
  return row;
}

std::vector<EigenInequality> build_system(GroupTag g, int rank_param, int s) {
  std::vector<EigenInequality> sys;
  if (g == GroupTag::SL) {
    int N = rank_param;
    for (int m = 1; m < N; ++m) {
      std::vector<AIndex> cells = all_a_indices(m, N);
      long full = static_cast<long>(m) * (N - m);
      std::vector<int> pick(s, 0);
      std::function<void(int, long)> rec = [&](int j, long degree) {
        if (j == s) {
          if (degree != full) return;
          std::vector<AIndex> tuple;
          for (int t = 0; t < s; ++t) tuple.push_back(cells[pick[t]]);
          if (gr_point_coefficient(tuple, m, N) == 0) return;
          EigenInequality ineq;
          ineq.group = g;
          ineq.node = m;
          for (const auto& A : tuple) {
            ineq.indices.push_back(A.elements());
            std::vector<Rat> row(N, Rat(0));
            for (int a : A.elements()) row[a - 1] = Rat(1);
            ineq.coeff.push_back(row);
          }
          sys.push_back(std::move(ineq));
          return;
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
          long d2 = degree + cells[k].codim();
          if (d2 > full) continue;
          pick[j] = static_cast<int>(k);
          rec(j + 1, d2);
        }
      };
      rec(0, 0);
    }
    return sys;
  }
  int n = rank_param;
  for (int r = 1; r <= n; ++r) {
    bool type_c = g == GroupTag::Sp;
    long full = type_c ? CIndex::ig_dim(r, n) : BIndex::og_dim(r, n);
    Rat scale = (!type_c && r == n) ? Rat(1, 2) : Rat(1);  // omega_n of SO is half
    if (type_c) {
      std::vector<CIndex> cells = all_c_indices(r, n);
      std::vector<int> pick(s, 0);
      std::function<void(int, long)> rec = [&](int j, long degree) {
        if (j == s) {
          if (degree != full) return;
          std::vector<CIndex> tuple;
          for (int t = 0; t < s; ++t) tuple.push_back(cells[pick[t]]);
          if (ig_point_coefficient(tuple, r, n) == 0) return;
          EigenInequality ineq;
          ineq.group = g;
          ineq.node = r;
          for (const auto& I : tuple) {
            ineq.indices.push_back(I.elements());
            ineq.coeff.push_back(pull_row(I.weyl(), r, scale));
          }
          sys.push_back(std::move(ineq));
          return;
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
          long d2 = degree + cells[k].stats().codim;
          if (d2 > full) continue;
          pick[j] = static_cast<int>(k);
          rec(j + 1, d2);
        }
      };
      rec(0, 0);
    } else {
      std::vector<BIndex> cells = all_b_indices(r, n);
      std::vector<int> pick(s, 0);
      std::function<void(int, long)> rec = [&](int j, long degree) {
        if (j == s) {
          if (degree != full) return;
          std::vector<BIndex> tuple;
          for (int t = 0; t < s; ++t) tuple.push_back(cells[pick[t]]);
          if (og_point_coefficient(tuple, r, n) == 0) return;
          EigenInequality ineq;
          ineq.group = g;
          ineq.node = r;
          for (const auto& J : tuple) {
            ineq.indices.push_back(J.elements());
            ineq.coeff.push_back(pull_row(J.weyl(), r, scale));
          }
          sys.push_back(std::move(ineq));
          return;
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
          long d2 = degree + cells[k].stats().codim;
          if (d2 > full) continue;
          pick[j] = static_cast<int>(k);
          rec(j + 1, d2);
        }
      };
      rec(0, 0);
    }
  }
  return sys;
}

}  // namespace

const std::vector<EigenInequality>& eigencone_system(GroupTag g, int rank_param, int s) {
  static std::map<std::tuple<int, int, int>, std::vector<EigenInequality>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(static_cast<int>(g), rank_param, s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_system(g, rank_param, s)).first;
  return it->second;
}

Rat eigen_eval(const EigenInequality& ineq, const std::vector<std::vector<Rat>>& h) {
  Rat total(0);
  for (std::size_t j = 0; j < h.size(); ++j)
    for (std::size_t k = 0; k < h[j].size(); ++k) total += ineq.coeff[j][k] * h[j][k];
  return total;
}

bool eigencone_member(GroupTag g, int rank_param, const std::vector<std::vector<Rat>>& h) {
  for (const auto& u : h)
    if (!dominant_coweight(g, rank_param, u))
      throw std::invalid_argument("membership: coweight not dominant");
  int s = static_cast<int>(h.size());
  for (const auto& ineq : eigencone_system(g, rank_param, s))
    if (eigen_eval(ineq, h) > 0) return false;
  return true;
}

namespace {

std::vector<Rat> random_dominant(int n, SplitMix64& rng, int flavor) {
  std::vector<Rat> u(n);
  switch (flavor % 3) {
    case 0: {  // interior-ish: strictly decreasing positive
      long v = 1 + static_cast<long>(rng.next() % 12);
      for (int i = 0; i < n; ++i) {
        u[i] = Rat(v, 1 + static_cast<long>(rng.next() % 3));
        v += 1 + static_cast<long>(rng.next() % 9);
      }
      std::sort(u.begin(), u.end(), std::greater<Rat>());
      break;
    }
    case 1: {  // repeated coordinates
      long a = static_cast<long>(rng.next() % 9);
      long b = static_cast<long>(rng.next() % (a + 1));
      for (int i = 0; i < n; ++i) u[i] = Rat(i < n / 2 + 1 ? a : b);
      break;
    }
    default: {  // zeros mixed in
      for (int i = 0; i < n; ++i) u[i] = Rat(static_cast<long>(rng.next() % 4));
      std::sort(u.begin(), u.end(), std::greater<Rat>());
      break;
    }
  }
  return u;
}

// A facet point: a convex combination landing exactly on one inequality.
bool facet_sample(const std::vector<EigenInequality>& sys, int n, int s, SplitMix64& rng,
                  std::vector<std::vector<Rat>>* out) {
  if (sys.empty()) return false;
  const EigenInequality& L = sys[rng.next() % sys.size()];
  // maximize L over the product of dominant cones via extreme rays
  std::vector<std::vector<Rat>> peak(s, std::vector<Rat>(n, Rat(0)));
  Rat peak_val(0);
  for (int j = 0; j < s; ++j) {
    Rat best(0);
    int best_i = -1;
    Rat acc(0);
    for (int i = 0; i < n; ++i) {
      acc += L.coeff[j][i];
      if (acc > best) {
        best = acc;
        best_i = i;
      }
    }
    if (best_i >= 0) {
      for (int i = 0; i <= best_i; ++i) peak[j][i] = Rat(1);
      peak_val += best;
    }
  }
  if (peak_val <= 0) return false;  // inequality inactive on the chamber
  std::vector<std::vector<Rat>> base(s);
  for (int j = 0; j < s; ++j) base[j] = random_dominant(n, rng, 0);
  Rat base_val = eigen_eval(L, base);
  if (base_val == peak_val) return false;
  // t with (1-t) base + t peak on the wall; valid when base_val <= 0
  if (base_val > 0) return false;
  Rat t = base_val / (base_val - peak_val);
  out->assign(s, std::vector<Rat>(n));
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < n; ++i)
      (*out)[j][i] = (Rat(1) - t) * base[j][i] + t * peak[j][i];
  return true;
}

}  // namespace

ConeCompareReport compare_cones(GroupTag small_group, int n, int s, long samples,
                                std::uint64_t seed) {
  if (small_group != GroupTag::Sp && small_group != GroupTag::SO)
    throw std::invalid_argument("compare_cones: small group must be Sp or SO");
  ConeCompareReport rep;
  rep.small_group = small_group;
  rep.n = n;
  rep.s = s;
  rep.seed = seed;
  int N = small_group == GroupTag::Sp ? 2 * n : 2 * n + 1;
  const auto& small_sys = eigencone_system(small_group, n, s);
  const auto& big_sys = eigencone_system(GroupTag::SL, N, s);
  SplitMix64 rng(seed);
  for (long t = 0; t < samples; ++t) {
    std::vector<std::vector<Rat>> h(s);
    if (t % 4 == 3) {
      if (!facet_sample(small_sys, n, s, rng, &h))
        for (int j = 0; j < s; ++j) h[j] = random_dominant(n, rng, static_cast<int>(t + j));
    } else {
      for (int j = 0; j < s; ++j) h[j] = random_dominant(n, rng, static_cast<int>(t + j));
    }
    ++rep.samples;
    bool small_in = true;
    for (const auto& ineq : small_sys)
      if (eigen_eval(ineq, h) > 0) {
        small_in = false;
        break;
      }
    std::vector<std::vector<Rat>> hbig(s);
    for (int j = 0; j < s; ++j)
      hbig[j] = small_group == GroupTag::Sp ? embed_c_into_sl(h[j]) : embed_b_into_sl(h[j]);
    bool big_in = true;
    for (const auto& ineq : big_sys)
      if (eigen_eval(ineq, hbig) > 0) {
        big_in = false;
        break;
      }
    if (small_in != big_in) ++rep.mismatches;
    if (small_in) ++rep.members;
    // omega identity: the pulled fundamental weight agrees with the plain
    // coordinate sum over the index set in the ambient diagonal
    for (const auto& ineq : small_sys) {
      Rat lhs(0), rhs(0);
      for (int j = 0; j < s; ++j) {
        for (std::size_t k = 0; k < h[j].size(); ++k) lhs += ineq.coeff[j][k] * h[j][k];
        Rat scale = (small_group == GroupTag::SO && ineq.node == n) ? Rat(1, 2) : Rat(1);
        for (int a : ineq.indices[j]) rhs += scale * hbig[j][a - 1];
      }
      if (lhs != rhs) ++rep.omega_identity_failures;
    }
  }
  return rep;
}

WeightConeCheck weight_cone_cross_check(GroupTag g, const std::vector<Weight>& weights,
                                        int n_max) {
  WeightConeCheck out;
  if (weights.empty()) return out;
  int n = weights[0].rank;
  std::vector<std::vector<Rat>> h;
  for (const auto& w : weights) {
    if (!w.dominant()) throw std::invalid_argument("cross check: weight not dominant");
    h.push_back(w.c);  // kappa with orthonormal epsilons keeps coordinates
  }
  out.cone_member = eigencone_member(g, n, h);
  for (int N = 1; N <= n_max; ++N) {
    std::vector<Weight> scaled;
    for (const auto& w : weights) scaled.push_back(w.scaled(Rat(N)));
    if (invariant_dim(g, scaled) != 0) {
      out.first_positive_scale = N;
      break;
    }
  }
  if (out.first_positive_scale > 0 && !out.cone_member) out.consistent = false;
  return out;
}

}  // namespace isohorn
