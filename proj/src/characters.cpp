#include "isohorn/characters.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace isohorn {

namespace {

using WVec = std::vector<long>;

long dot(const WVec& a, const WVec& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

WVec add(const WVec& a, const WVec& b) {
  WVec c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}
WVec sub(const WVec& a, const WVec& b) {
  WVec c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

int perm_sign_of_sort(WVec& v) {  // sorts descending, returns sign of the permutation
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] > v[i]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
  return sign;
}

}  // namespace

std::vector<WVec> RootSystem::positive_roots() const {
  std::vector<WVec> roots;
  int n = rank;
  auto unit = [&](int i, long c) {
    WVec v(n, 0);
    v[i] = c;
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      WVec v(n, 0);
      v[i] = 2;
      v[j] = -2;
      roots.push_back(v);  // e_i - e_j
      if (type != RSType::A) {
        WVec w(n, 0);
        w[i] = 2;
        w[j] = 2;
        roots.push_back(w);  // e_i + e_j
      }
    }
  if (type == RSType::B)
    for (int i = 0; i < n; ++i) roots.push_back(unit(i, 2));  // eps_i
  if (type == RSType::C)
    for (int i = 0; i < n; ++i) roots.push_back(unit(i, 4));  // 2 eps_i
  return roots;
}

WVec RootSystem::rho2() const {
  int n = rank;
  WVec v(n, 0);
  switch (type) {
    case RSType::A:  // GL shift (r-1, r-2, ..., 0); only differences matter
      for (int i = 0; i < n; ++i) v[i] = 2L * (n - 1 - i);
      break;
    case RSType::B:
      for (int i = 0; i < n; ++i) v[i] = 2L * (n - i) - 1;
      break;
    case RSType::C:
      for (int i = 0; i < n; ++i) v[i] = 2L * (n - i);
      break;
  }
  return v;
}

bool RootSystem::dominant(const WVec& w2) const {
  for (std::size_t i = 0; i + 1 < w2.size(); ++i)
    if (w2[i] < w2[i + 1]) return false;
  if (type != RSType::A && !w2.empty() && w2.back() < 0) return false;
  return true;
}

namespace {

// Dominant representative of the Weyl orbit; false when the input cannot be a
// weight of the ambient module (never happens here, kept for symmetry).
WVec dominantize(const RootSystem& rs, WVec v) {
  if (rs.type == RSType::A) {
    std::sort(v.begin(), v.end(), std::greater<long>());
    return v;
  }
  for (long& x : v) x = std::labs(x);
  std::sort(v.begin(), v.end(), std::greater<long>());
  return v;
}

// Regular dominantization with sign for the alternating tensor rule.
bool dominantize_signed(const RootSystem& rs, WVec v, WVec* out, int* sign) {
  int sg = 1;
  if (rs.type != RSType::A) {
    for (long& x : v) {
      if (x == 0) return false;
      if (x < 0) {
        x = -x;
        sg = -sg;
      }
    }
  }
  int ps = perm_sign_of_sort(v);
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] == v[i + 1]) return false;
  *out = v;
  *sign = sg * ps;
  return true;
}

std::vector<WVec> simple_roots(const RootSystem& rs) {
  std::vector<WVec> out;
  int n = rs.rank;
  for (int i = 0; i + 1 < n; ++i) {
    WVec v(n, 0);
    v[i] = 2;
    v[i + 1] = -2;
    out.push_back(v);
  }
  if (rs.type == RSType::B) {
    WVec v(n, 0);
    v[n - 1] = 2;
    out.push_back(v);
  }
  if (rs.type == RSType::C) {
    WVec v(n, 0);
    v[n - 1] = 4;
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::map<WVec, Int> dominant_weight_mults(const RootSystem& rs, const WVec& lambda2) {
  if (!rs.dominant(lambda2)) throw std::invalid_argument("weight multiplicities: not dominant");
  const long norm_cap = dot(lambda2, lambda2);
  const std::vector<WVec> simples = simple_roots(rs);
  // reachable vectors within the norm ball (superset of the weight support)
  std::set<WVec> seen{lambda2};
  std::queue<WVec> bfs;
  bfs.push(lambda2);
  while (!bfs.empty()) {
    WVec v = bfs.front();
    bfs.pop();
    for (const auto& a : simples) {
      WVec w = sub(v, a);
      if (dot(w, w) > norm_cap) continue;
      if (seen.insert(w).second) bfs.push(w);
    }
  }
  std::vector<WVec> dominants;
  for (const auto& v : seen)
    if (rs.dominant(v)) dominants.push_back(v);

  const WVec rho = rs.rho2();
  const WVec lr = add(lambda2, rho);
  const long lr2 = dot(lr, lr);
  std::sort(dominants.begin(), dominants.end(), [&](const WVec& a, const WVec& b) {
    long na = dot(add(a, rho), add(a, rho));
    long nb = dot(add(b, rho), add(b, rho));
    return na != nb ? na > nb : a > b;
  });

  const std::vector<WVec> positives = rs.positive_roots();
  std::map<WVec, Int> mult;
  mult[lambda2] = 1;
  auto full_mult = [&](const WVec& v) -> Int {
    auto it = mult.find(dominantize(rs, v));
    return it == mult.end() ? Int(0) : it->second;
  };
  for (const auto& mu : dominants) {
    if (mu == lambda2) continue;
    long denom = lr2 - dot(add(mu, rho), add(mu, rho));
    if (denom == 0) {
      mult[mu] = 0;
      continue;
    }
    Int rhs = 0;
    for (const auto& a : positives) {
      WVec v = add(mu, a);
      long k = 1;
      while (dot(v, v) <= norm_cap) {
        Int m = full_mult(v);
        if (m != 0) rhs += m * dot(v, a);
        v = add(v, a);
        ++k;
        (void)k;
      }
    }
    rhs *= 2;
    if (rhs % denom != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    Int m = rhs / denom;
    if (m != 0) mult[mu] = m;
  }
  for (auto it = mult.begin(); it != mult.end();)
    it = it->second == 0 ? mult.erase(it) : std::next(it);
  return mult;
}

std::vector<std::pair<WVec, Int>> weight_system(const RootSystem& rs, const WVec& lambda2) {
  std::vector<std::pair<WVec, Int>> out;
  for (const auto& [mu, m] : dominant_weight_mults(rs, lambda2)) {
    std::set<WVec> orbit;
    WVec base = mu;
    std::sort(base.begin(), base.end());
    do {
      if (rs.type == RSType::A) {
        orbit.insert(base);
        continue;
      }
      std::vector<int> nz;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (base[i] != 0) nz.push_back(static_cast<int>(i));
      for (int mask = 0; mask < (1 << nz.size()); ++mask) {
        WVec v = base;
        for (std::size_t b = 0; b < nz.size(); ++b)
          if (mask & (1 << b)) v[nz[b]] = -v[nz[b]];
        orbit.insert(v);
      }
    } while (std::next_permutation(base.begin(), base.end()));
    for (const auto& v : orbit) out.emplace_back(v, m);
  }
  return out;
}

std::map<WVec, Int> tensor_decompose(const RootSystem& rs, const std::vector<WVec>& l2s) {
  std::map<WVec, Int> acc;
  if (l2s.empty()) {
    acc[WVec(rs.rank, 0)] = 1;
    return acc;
  }
  acc[l2s[0]] = 1;
  const WVec rho = rs.rho2();
  for (std::size_t j = 1; j < l2s.size(); ++j) {
    std::vector<std::pair<WVec, Int>> wts = weight_system(rs, l2s[j]);
    std::map<WVec, Int> next;
    for (const auto& [theta, c] : acc) {
      WVec base = add(theta, rho);
      for (const auto& [wt, m] : wts) {
        WVec kappa = add(base, wt);
        WVec dom;
        int sign;
        if (!dominantize_signed(rs, kappa, &dom, &sign)) continue;
        next[sub(dom, rho)] += c * m * Int(sign);
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second == 0 ? next.erase(it) : std::next(it);
    acc = std::move(next);
  }
  return acc;
}

Int weyl_dim(const RootSystem& rs, const WVec& lambda2) {
  WVec lr = add(lambda2, rs.rho2());
  Rat d(1);
  for (const auto& a : rs.positive_roots()) d *= Rat(dot(lr, a)) / Rat(dot(rs.rho2(), a));
  if (denominator(d) != 1) throw std::logic_error("weyl_dim: not an integer");
  return Int(numerator(d));
}

Int character_mass(const RootSystem& rs, const WVec& lambda2) {
  Int total = 0;
  for (const auto& [v, m] : weight_system(rs, lambda2)) total += m;
  return total;
}

namespace {

constexpr int kMaxCharRank = 9;
constexpr long kMaxCoord2 = 100;  // doubled-coordinate size cap

RootSystem system_for(GroupTag g, int rank) {
  switch (g) {
    case GroupTag::SL:
      return RootSystem{RSType::A, rank};
    case GroupTag::Sp:
      return RootSystem{RSType::C, rank};
    case GroupTag::SO:
    case GroupTag::Spin:
      return RootSystem{RSType::B, rank};
  }
  throw std::invalid_argument("bad group tag");
}

WVec doubled_coords(const Weight& w) {
  WVec v;
  for (const Rat& c : w.c) {
    Rat d = c * 2;
    if (denominator(d) != 1) throw std::invalid_argument("weight not half-integral");
    Int num = numerator(d);
    if (abs(num) > kMaxCoord2)
      throw std::invalid_argument("weight-size cap exceeded");
    v.push_back(static_cast<long>(num));
  }
  return v;
}

void check_weight(GroupTag group, const Weight& w) {
  if (w.group != group) throw std::invalid_argument("weight tagged for a different group");
  if (!w.dominant()) throw std::invalid_argument("weight not dominant");
  if (!w.integral()) throw std::invalid_argument("weight not integral for its group");
  int rank_for_system = group == GroupTag::SL ? w.rank : w.rank;
  if (rank_for_system > kMaxCharRank) throw std::invalid_argument("rank cap exceeded");
}

}  // namespace

Int invariant_dim(GroupTag group, const std::vector<Weight>& weights) {
  if (weights.empty()) return 1;
  int rank = weights[0].rank;
  RootSystem rs = system_for(group, rank);
  std::vector<WVec> l2s;
  long total = 0;
  for (const auto& w : weights) {
    check_weight(group, w);
    if (w.rank != rank) throw std::invalid_argument("mixed ranks");
    WVec v = doubled_coords(w);
    for (long x : v) total += x;
    l2s.push_back(v);
  }
  WVec trivial(rank, 0);
  if (group == GroupTag::SL) {
    // GL coordinates: the SL-trivial class is the rectangle (c, ..., c)
    if (total % rank != 0) return 0;
    std::fill(trivial.begin(), trivial.end(), total / rank);
  } else if (group == GroupTag::Spin || group == GroupTag::SO || group == GroupTag::Sp) {
    // a nonzero invariant needs the total weight to reach the zero weight
  }
  std::map<WVec, Int> dec = tensor_decompose(rs, l2s);
  auto it = dec.find(trivial);
  return it == dec.end() ? Int(0) : it->second;
}

Int invariant_dim_sl_partitions(int r, const std::vector<Partition>& mus) {
  std::vector<Weight> ws;
  for (const auto& m : mus) {
    if (static_cast<int>(m.rows()) > r) return 0;
    ws.push_back(partition_as_sl_weight(m, r));
  }
  return invariant_dim(GroupTag::SL, ws);
}

Int dim_of_irrep(GroupTag group, const Weight& w) {
  check_weight(group, w);
  return weyl_dim(system_for(group, w.rank), doubled_coords(w));
}

}  // namespace isohorn
