#include "isohorn/bgg.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

#include "isohorn/characters.hpp"
#include "isohorn/weights.hpp"

namespace isohorn {

MultiPoly divided_difference(const MultiPoly& f, int i, BC type) {
  int n = f.nvars();
  if (i < 1 || i > n) throw std::out_of_range("divided_difference: root index");
  MultiPoly out(n);
  if (i < n) {
    // (x^a y^b - x^b y^a)/(x - y) summed over monomials, x = eps_i, y = eps_{i+1}
    for (const auto& [e, c] : f.terms()) {
      int a = e[i - 1], b = e[i];
      if (a == b) continue;
      int lo = std::min(a, b), hi = std::max(a, b);
      Rat coef = a > b ? c : -c;
      for (int k = lo; k < hi; ++k) {
        MultiPoly::Expo g = e;
        g[i - 1] = k;
        g[i] = a + b - 1 - k;
        out.add_term(g, coef);
      }
    }
    return out;
  }
  // alpha_n = eps_n (B) or 2 eps_n (C): only odd powers of eps_n survive
  for (const auto& [e, c] : f.terms()) {
    if (e[n - 1] % 2 == 0) continue;
    MultiPoly::Expo g = e;
    g[n - 1] -= 1;
    out.add_term(g, type == BC::B ? c * 2 : c);
  }
  return out;
}

MultiPoly divided_difference_word(const MultiPoly& f, const SignedPerm& w, BC type) {
  std::vector<int> word = w.reduced_word();
  MultiPoly g = f;
  for (std::size_t k = word.size(); k-- > 0;) g = divided_difference(g, word[k], type);
  return g;
}

MultiPoly point_class_rep(int n, BC type) {
  MultiPoly p = MultiPoly::constant(n, Rat(1));
  for (int i = 1; i <= n; ++i) p = p * MultiPoly::variable(n, i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      MultiPoly sq_i = MultiPoly::variable(n, i) * MultiPoly::variable(n, i);
      MultiPoly sq_j = MultiPoly::variable(n, j) * MultiPoly::variable(n, j);
      p = p * (sq_i - sq_j);
    }
  Int order = 1;
  for (int i = 1; i <= n; ++i) order *= 2 * i;  // |W| = 2^n n!
  Rat scale = Rat(1) / Rat(order);
  if (type == BC::C) {
    Int two_n = Int(1) << n;
    scale *= Rat(two_n);
  }
  return p * scale;
}

namespace {

struct CoinvCtx {
  int n;
  BC type;
  std::vector<SignedPerm> elements;                  // sorted by length, then lex
  std::vector<std::vector<SignedPerm>> by_length;    // [ell] -> elements
  std::map<SignedPerm, MultiPoly> reps;
  SignedPerm w0;
  int top_length;

  explicit CoinvCtx(BC t, int rank) : n(rank), type(t), w0(SignedPerm::longest(rank)) {
    top_length = w0.length();
    elements = all_signed_perms(n);
    by_length.resize(top_length + 1);
    std::vector<std::pair<int, SignedPerm>> order;
    for (const auto& w : elements) order.emplace_back(w.length(), w);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first < b.first : a.second < b.second;
              });
    elements.clear();
    for (auto& [len, w] : order) {
      elements.push_back(w);
      by_length[len].push_back(w);
    }
    reps.emplace(SignedPerm::identity(n), point_class_rep(n, type));
    for (int len = 1; len <= top_length; ++len)
      for (const auto& w : by_length[len]) {
        int i = 1;
        while (!w.has_descent(i)) ++i;
        const MultiPoly& shorter = reps.at(w * SignedPerm::generator(n, i));
        reps.emplace(w, divided_difference(shorter, i, type));
      }
    if (!(reps.at(w0) == MultiPoly::constant(n, Rat(1))))
      throw std::logic_error("coinvariant setup: top class is not the unit");
  }
};

const CoinvCtx& coinv_ctx(BC type, int n) {
  if (n < 0 || n > kMaxBCRank)
    throw std::invalid_argument("rank cap: coinvariant tables support n <= " +
                                std::to_string(kMaxBCRank));
  static std::map<std::pair<int, int>, CoinvCtx> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(type), n);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, CoinvCtx(type, n)).first;
  return it->second;
}

}  // namespace

const MultiPoly& schubert_rep(const SignedPerm& w, BC type) {
  return coinv_ctx(type, w.rank()).reps.at(w);
}

bool two_power_ratio_check(int n) {
  const CoinvCtx& cb = coinv_ctx(BC::B, n);
  const CoinvCtx& cc = coinv_ctx(BC::C, n);
  for (const auto& w : cb.elements) {
    Int factor = Int(1) << (n - w.mu());
    if (!(cc.reps.at(w) == cb.reps.at(w) * Rat(factor))) return false;
  }
  return true;
}

std::map<SignedPerm, Int> coinvariant_expand(const MultiPoly& f, BC type, int n) {
  const CoinvCtx& ctx = coinv_ctx(type, n);
  std::map<SignedPerm, Int> out;
  if (f.zero()) return out;
  if (!f.homogeneous()) throw std::invalid_argument("expand: polynomial not homogeneous");
  int d = f.degree();
  if (d > ctx.top_length) return out;  // above the socle degree: zero class
  for (const auto& u : ctx.by_length[ctx.top_length - d]) {
    MultiPoly c = divided_difference_word(f, ctx.w0 * u, type);
    if (!c.is_constant())
      throw std::logic_error("expand: extraction did not reach degree zero");
    Rat v = c.constant_term();
    if (v == 0) continue;
    if (denominator(v) != 1) throw std::logic_error("expand: non-integral coefficient");
    out.emplace(u, Int(numerator(v)));
  }
  return out;
}

std::map<SignedPerm, Int> flag_structure_constants(const SignedPerm& u, const SignedPerm& v,
                                                   BC type) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch");
  return coinvariant_expand(schubert_rep(u, type) * schubert_rep(v, type), type, u.rank());
}

// --- parabolic quotients -------------------------------------------------

namespace {

// Shared machinery for IG(r,2n) (type C) and OG(r,2n+1) (type B): classes are
// represented in the full flag algebra through the longest parabolic shift.
struct ParabolicCtx {
  int r, n;
  BC type;
  SignedPerm w0p;
  std::vector<SignedPerm> minimal;           // w_I per basis slot
  std::vector<SignedPerm> shifted;           // w_I * w0p
  std::map<SignedPerm, int> slot_of_shifted;
  std::map<std::pair<int, int>, std::map<int, Int>> pair_memo;
  std::mutex mutex;

  ParabolicCtx(BC t, int rr, int nn, std::vector<SignedPerm> mins)
      : r(rr), n(nn), type(t), w0p(SignedPerm::longest_parabolic(nn, rr)),
        minimal(std::move(mins)) {
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      const SignedPerm& w = minimal[k];
      if (!w.is_minimal_rep(r)) throw std::logic_error("parabolic basis: not minimal");
      SignedPerm x = w * w0p;
      if (x.length() != w.length() + w0p.length())
        throw std::logic_error("parabolic basis: lengths do not add");
      shifted.push_back(x);
      slot_of_shifted.emplace(x, static_cast<int>(k));
    }
  }

  const std::map<int, Int>& pair_product(int a, int b) {
    if (a > b) std::swap(a, b);
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(a, b);
    auto it = pair_memo.find(key);
    if (it != pair_memo.end()) return it->second;
    MultiPoly prod = schubert_rep(shifted[a], type) * schubert_rep(shifted[b], type);
    std::map<SignedPerm, Int> full = coinvariant_expand(prod, type, n);
    std::map<int, Int> out;
    for (const auto& [w, c] : full) {
      auto slot = slot_of_shifted.find(w);
      if (slot == slot_of_shifted.end())
        throw std::logic_error("parabolic product left the parabolic span");
      out.emplace(slot->second, c);
    }
    return pair_memo.emplace(key, std::move(out)).first->second;
  }

  std::map<int, Int> product(const std::vector<int>& slots) {
    std::map<int, Int> acc;
    if (slots.empty()) return acc;
    acc.emplace(slots[0], Int(1));
    for (std::size_t j = 1; j < slots.size(); ++j) {
      std::map<int, Int> next;
      for (const auto& [slot, c] : acc)
        for (const auto& [t, k] : pair_product(slot, slots[j])) next[t] += c * k;
      acc = std::move(next);
    }
    return acc;
  }
};

ParabolicCtx& ig_ctx(int r, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<ParabolicCtx>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(r, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<SignedPerm> mins;
    for (const auto& I : all_c_indices(r, n)) mins.push_back(I.weyl());
    it = cache.emplace(key, std::make_unique<ParabolicCtx>(BC::C, r, n, std::move(mins)))
             .first;
  }
  return *it->second;
}

ParabolicCtx& og_ctx(int r, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<ParabolicCtx>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(r, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    std::vector<SignedPerm> mins;
    for (const auto& J : all_b_indices(r, n)) mins.push_back(J.weyl());
    it = cache.emplace(key, std::make_unique<ParabolicCtx>(BC::B, r, n, std::move(mins)))
             .first;
  }
  return *it->second;
}

template <typename Index>
std::vector<int> slots_for(const std::vector<Index>& indices,
                           const std::vector<Index>& basis, int r, int n) {
  std::vector<int> slots;
  for (const auto& I : indices) {
    if (I.card() != r || I.n() != n)
      throw std::invalid_argument("parabolic product: mixed parameters");
    auto it = std::lower_bound(basis.begin(), basis.end(), I);
    if (it == basis.end() || !(*it == I)) throw std::logic_error("index not in basis");
    slots.push_back(static_cast<int>(it - basis.begin()));
  }
  return slots;
}

}  // namespace

CohomClassC ig_product(const std::vector<CIndex>& indices, int r, int n) {
  CohomClassC out;
  out.r = r;
  out.n = n;
  std::vector<CIndex> basis = all_c_indices(r, n);
  if (indices.empty()) {
    out.coeffs.emplace(basis.back(), Int(1));  // fundamental class
    return out;
  }
  ParabolicCtx& ctx = ig_ctx(r, n);
  for (const auto& [slot, c] : ctx.product(slots_for(indices, basis, r, n)))
    out.coeffs.emplace(basis[slot], c);
  return out;
}

CohomClassB og_product(const std::vector<BIndex>& indices, int r, int n) {
  CohomClassB out;
  out.r = r;
  out.n = n;
  std::vector<BIndex> basis = all_b_indices(r, n);
  if (indices.empty()) {
    out.coeffs.emplace(basis.back(), Int(1));
    return out;
  }
  ParabolicCtx& ctx = og_ctx(r, n);
  for (const auto& [slot, c] : ctx.product(slots_for(indices, basis, r, n)))
    out.coeffs.emplace(basis[slot], c);
  return out;
}

bool ig_nonvanishing(const std::vector<CIndex>& indices, int r, int n) {
  if (r == 0) return true;  // IG(0,*) is a point
  long total = 0;
  for (const auto& I : indices) total += I.stats().codim;
  if (total > CIndex::ig_dim(r, n)) return false;
  return !ig_product(indices, r, n).zero();
}

bool og_nonvanishing(const std::vector<BIndex>& indices, int r, int n) {
  if (r == 0) return true;
  long total = 0;
  for (const auto& J : indices) total += J.stats().codim;
  if (total > BIndex::og_dim(r, n)) return false;
  return !og_product(indices, r, n).zero();
}

Int ig_point_coefficient(const std::vector<CIndex>& indices, int r, int n) {
  long total = 0;
  for (const auto& I : indices) total += I.stats().codim;
  if (total != CIndex::ig_dim(r, n)) return 0;
  CohomClassC prod = ig_product(indices, r, n);
  std::vector<int> pt(r);
  for (int i = 0; i < r; ++i) pt[i] = i + 1;
  auto it = prod.coeffs.find(CIndex(pt, n));
  return it == prod.coeffs.end() ? Int(0) : it->second;
}

Int og_point_coefficient(const std::vector<BIndex>& indices, int r, int n) {
  long total = 0;
  for (const auto& J : indices) total += J.stats().codim;
  if (total != BIndex::og_dim(r, n)) return 0;
  CohomClassB prod = og_product(indices, r, n);
  std::vector<int> pt(r);
  for (int i = 0; i < r; ++i) pt[i] = i + 1;
  auto it = prod.coeffs.find(BIndex(pt, n));
  return it == prod.coeffs.end() ? Int(0) : it->second;
}

// --- numeric identities and Horn-type criteria ---------------------------

ChiEval chi_eval(const CIndex& I) {
  int n = I.n(), r = I.card();
  ChiEval out;
  out.direct = chi_value(I.weyl(), rho_c(n), x_coweight_c(n, r));
  out.codim_sum = I.stats().codim + I.reindexed().stats().codim;
  return out;
}

namespace {
void require_complementary_c(const std::vector<CIndex>& indices, int r, int n) {
  long total = 0;
  for (const auto& I : indices) {
    if (I.card() != r || I.n() != n)
      throw std::invalid_argument("mixed parameters in index tuple");
    total += I.stats().codim;
  }
  if (total != CIndex::ig_dim(r, n))
    throw std::invalid_argument("codimension sum must equal dim IG(r,2n)");
}
void require_complementary_b(const std::vector<BIndex>& indices, int r, int n) {
  long total = 0;
  for (const auto& J : indices) {
    if (J.card() != r || J.n() != n)
      throw std::invalid_argument("mixed parameters in index tuple");
    total += J.stats().codim;
  }
  if (total != BIndex::og_dim(r, n))
    throw std::invalid_argument("codimension sum must equal dim OG(r,2n+1)");
}
}  // namespace

DeformedResult deformed_nonvanishing(const std::vector<CIndex>& indices, int r, int n) {
  require_complementary_c(indices, r, n);
  DeformedResult res;
  res.ordinary_nonzero = ig_point_coefficient(indices, r, n) != 0;
  long cosym = 0;
  for (const auto& I : indices) cosym += I.stats().cosym2;
  res.beta1 = cosym == static_cast<long>(r) * (r + 1) / 2;
  res.value = res.ordinary_nonzero && res.beta1;
  return res;
}

DeformedResult deformed_nonvanishing_b(const std::vector<BIndex>& indices, int r, int n) {
  require_complementary_b(indices, r, n);
  DeformedResult res;
  res.ordinary_nonzero = og_point_coefficient(indices, r, n) != 0;
  long cowedge = 0;
  for (const auto& J : indices) cowedge += J.stats().cowedge2;
  res.beta1 = cowedge == static_cast<long>(r) * (r - 1) / 2;
  res.value = res.ordinary_nonzero && res.beta1;
  return res;
}

HornFactorization horn_c_check(const std::vector<CIndex>& indices, int r, int n) {
  HornFactorization h;
  DeformedResult d = deformed_nonvanishing(indices, r, n);
  h.alpha = d.value;
  h.beta1 = d.beta1;
  for (const auto& I : indices) {
    std::vector<long> parts;
    for (long lam : I.lambda_profile()) parts.push_back(2L * n - 2L * r - lam);
    h.mu_data.emplace_back(parts);
  }
  h.beta2 = invariant_dim_sl_partitions(r, h.mu_data) != 0;
  std::vector<CIndex> small;
  for (const auto& I : indices) small.push_back(I.reindexed());
  h.beta3 = ig_nonvanishing(small, r, r);
  return h;
}

HornFactorization horn_b_check(const std::vector<BIndex>& indices, int r, int n) {
  HornFactorization h;
  DeformedResult d = deformed_nonvanishing_b(indices, r, n);
  h.alpha = d.value;
  h.beta1 = d.beta1;
  for (const auto& J : indices) {
    std::vector<long> parts;
    for (long lam : J.lambda_profile()) parts.push_back(2L * n + 1 - 2L * r - lam);
    h.mu_data.emplace_back(parts);
  }
  h.beta2 = invariant_dim_sl_partitions(r, h.mu_data) != 0;
  std::vector<CIndex> small;
  for (const auto& J : indices) small.push_back(J.reindexed());
  h.beta3 = ig_nonvanishing(small, r - 1, r - 1);
  return h;
}

}  // namespace isohorn
