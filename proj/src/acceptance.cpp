#include "isohorn/acceptance.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "isohorn/bgg.hpp"
#include "isohorn/characters.hpp"
#include "isohorn/eigencone.hpp"
#include "isohorn/flags.hpp"
#include "isohorn/grassmann.hpp"
#include "isohorn/lr.hpp"
#include "isohorn/pluecker.hpp"
#include "isohorn/transfer.hpp"

namespace isohorn::accept {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  long cases = 0;

  void fail(const std::string& msg) {
    if (ok) detail << msg;
    ok = false;
  }
  void count() { ++cases; }
};

// ---------------------------------------------------------------- 1
Check criterion_grain() {
  Check c;
  for (int n = 1; n <= 3; ++n) {
    c.count();
    if (!two_power_ratio_check(n)) c.fail("power-of-two ratio fails at n=" + std::to_string(n));
  }
  if (c.ok) c.detail << "all Weyl elements match for n=1,2,3 (2+8+48 classes)";
  return c;
}

// ---------------------------------------------------------------- 2
Check criterion_lg24() {
  Check c;
  CIndex top({2, 4}, 2), mid({1, 3}, 2), pt({1, 2}, 2);
  CohomClassC sq = ig_product({top, top}, 2, 2);
  if (!(sq.coeffs.size() == 1 && sq.coeffs.count(mid) && sq.coeffs.at(mid) == 2))
    c.fail("[2,4]^2 != 2*[1,3]");
  CohomClassC prod = ig_product({top, mid}, 2, 2);
  if (!(prod.coeffs.size() == 1 && prod.coeffs.count(pt) && prod.coeffs.at(pt) == 1))
    c.fail("[2,4]*[1,3] != [1,2]");
  c.cases = 2;
  if (c.ok) c.detail << "LG(2,4) degree-2 and point products exact";
  return c;
}

// ---------------------------------------------------------------- 3
template <typename Index>
std::vector<std::vector<int>> multiset_triples(int count) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < count; ++a)
    for (int b = a; b < count; ++b)
      for (int cc = b; cc < count; ++cc) out.push_back({a, b, cc});
  return out;
}

Check criterion_grass_comparison() {
  Check c;
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= n; ++m) {
      std::vector<CIndex> cells = all_c_indices(m, n);
      for (const auto& pick : multiset_triples<CIndex>(static_cast<int>(cells.size()))) {
        std::vector<CIndex> tuple{cells[pick[0]], cells[pick[1]], cells[pick[2]]};
        if (!ig_nonvanishing(tuple, m, n)) continue;
        c.count();
        std::vector<AIndex> plain;
        for (const auto& I : tuple) plain.emplace_back(I.elements(), 2 * n);
        if (!gr_nonvanishing(plain, m, 2 * n))
          c.fail("IG(" + std::to_string(m) + "," + std::to_string(2 * n) +
                 ") triple nonzero but Gr counterpart vanishes: " + tuple[0].str() +
                 tuple[1].str() + tuple[2].str());
      }
      std::vector<BIndex> bcells = all_b_indices(m, n);
      for (const auto& pick : multiset_triples<BIndex>(static_cast<int>(bcells.size()))) {
        std::vector<BIndex> tuple{bcells[pick[0]], bcells[pick[1]], bcells[pick[2]]};
        if (!og_nonvanishing(tuple, m, n)) continue;
        c.count();
        std::vector<AIndex> plain;
        for (const auto& J : tuple) plain.emplace_back(J.elements(), 2 * n + 1);
        if (!gr_nonvanishing(plain, m, 2 * n + 1))
          c.fail("OG(" + std::to_string(m) + "," + std::to_string(2 * n + 1) +
                 ") triple nonzero but Gr counterpart vanishes: " + tuple[0].str() +
                 tuple[1].str() + tuple[2].str());
      }
    }
  if (c.ok) c.detail << c.cases << " nonvanishing isotropic triples all survive in Gr";
  return c;
}

// ---------------------------------------------------------------- 4
Check criterion_horn_c() {
  Check c;
  bool saw_example = false;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r) {
      long full = CIndex::ig_dim(r, n);
      std::vector<CIndex> cells = all_c_indices(r, n);
      int k = static_cast<int>(cells.size());
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int d = 0; d < k; ++d) {
            std::vector<CIndex> tuple{cells[a], cells[b], cells[d]};
            long deg = 0;
            for (const auto& I : tuple) deg += I.stats().codim;
            if (deg != full) continue;
            c.count();
            HornFactorization h = horn_c_check(tuple, r, n);
            if (!h.consistent())
              c.fail("alpha != beta1&beta2&beta3 at IG(" + std::to_string(r) + "," +
                     std::to_string(2 * n) + ") " + tuple[0].str() + tuple[1].str() +
                     tuple[2].str());
            if (n == 2 && r == 1 && tuple[0].elements() == std::vector<int>{3} &&
                tuple[1].elements() == std::vector<int>{3} &&
                tuple[2].elements() == std::vector<int>{3}) {
              saw_example = true;
              if (h.alpha) c.fail("IG(1,4) [3]^3 must have vanishing deformed product");
            }
          }
    }
  if (!saw_example) c.fail("IG(1,4) [3],[3],[3] instance not visited");
  if (c.ok) c.detail << c.cases << " complementary symplectic triples factor correctly";
  return c;
}

// ---------------------------------------------------------------- 5
Check criterion_horn_b() {
  Check c;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r) {
      long full = BIndex::og_dim(r, n);
      std::vector<BIndex> cells = all_b_indices(r, n);
      int k = static_cast<int>(cells.size());
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int d = 0; d < k; ++d) {
            std::vector<BIndex> tuple{cells[a], cells[b], cells[d]};
            long deg = 0;
            for (const auto& J : tuple) deg += J.stats().codim;
            if (deg != full) continue;
            c.count();
            HornFactorization h = horn_b_check(tuple, r, n);
            if (!h.consistent())
              c.fail("alpha != beta at OG(" + std::to_string(r) + "," +
                     std::to_string(2 * n + 1) + ") " + tuple[0].str() + tuple[1].str() +
                     tuple[2].str());
          }
    }
  if (c.ok) c.detail << c.cases << " complementary odd-orthogonal triples factor correctly";
  return c;
}

// ---------------------------------------------------------------- 6
Check criterion_key() {
  Check c;
  const std::uint64_t seeds[3] = {101, 20101, 777001};
  for (int r = 1; r <= 3; ++r)
    for (int n = 1; n <= 3; ++n) {
      SplitMix64 gen(static_cast<std::uint64_t>(9000 + 100 * r + n));
      for (int inst = 0; inst < 100; ++inst) {
        std::vector<Partition> mus;
        for (int j = 0; j < 3; ++j) {
          std::vector<long> parts(r);
          for (int a = 0; a < r; ++a) parts[a] = static_cast<long>(gen.next() % (2 * n + 1));
          std::sort(parts.begin(), parts.end(), std::greater<long>());
          mus.emplace_back(parts);
        }
        c.count();
        bool expect_b = horn_inequality_check(mus, 2L * n, r).ok;
        for (std::uint64_t seed : seeds) {
          KeyCheckReport rep = hom_dim_horn_check(mus, r, n, seed);
          if (rep.b_holds != expect_b) c.fail("horn verdict unstable");
          if (!rep.agree()) {
            std::ostringstream os;
            os << "Hom-dimension check disagrees with the Horn criterion at r=" << r
               << " n=" << n << " seed=" << seed << " mus=" << mus[0].str() << "|"
               << mus[1].str() << "|" << mus[2].str();
            c.fail(os.str());
          }
        }
      }
    }
  if (c.ok) c.detail << c.cases << " random length-r profiles, 3 seeds each, unanimous";
  return c;
}

// ---------------------------------------------------------------- 7
void partitions_up_to(int max_rows, long max_size, std::vector<Partition>* out) {
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long maxpart, long left) {
    out->emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_rows) return;
    for (long p = std::min(maxpart, left); p >= 1; --p) {
      cur.push_back(p);
      rec(p, left - p);
      cur.pop_back();
    }
  };
  rec(max_size, max_size);
}

void partitions_in_box(int rows, long width, std::vector<Partition>* out) {
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long maxpart) {
    if (static_cast<int>(cur.size()) == rows) {
      out->emplace_back(cur);
      return;
    }
    for (long p = maxpart; p >= 0; --p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(width);
  return;
}

Check criterion_transfer() {
  Check c;
  std::vector<Partition> lams;
  partitions_up_to(3, 6, &lams);  // SL(4) dominant classes of size <= 6
  int applicable = 0;
  for (std::size_t i = 0; i < lams.size(); ++i)
    for (std::size_t j = i; j < lams.size(); ++j)
      for (std::size_t k = j; k < lams.size(); ++k) {
        if (lams[i].size() + lams[j].size() + lams[k].size() > 6) continue;
        TransferCheck t = sl_transfer_check({lams[i], lams[j], lams[k]}, 2, GroupTag::Sp);
        if (!t.applicable) continue;
        ++applicable;
        c.count();
        if (!t.ok)
          c.fail("restriction loses the invariant at " + lams[i].str() + "|" + lams[j].str() +
                 "|" + lams[k].str());
      }
  if (applicable == 0) c.fail("no applicable transfer instances found");
  for (int r = 1; r <= 3; ++r) {
    std::vector<Partition> box;
    partitions_in_box(r, 4, &box);  // width 2n = 4
    for (std::size_t i = 0; i < box.size(); ++i)
      for (std::size_t j = i; j < box.size(); ++j)
        for (std::size_t k = j; k < box.size(); ++k) {
          if (box[i].size() + box[j].size() + box[k].size() != 4L * r) continue;
          FlipTransferCheck w = flip_transfer_check({box[i], box[j], box[k]}, r, 2);
          if (!w.applicable) continue;
          c.count();
          if (!w.ok)
            c.fail("flip transfer fails at r=" + std::to_string(r) + " " + box[i].str() +
                   "|" + box[j].str() + "|" + box[k].str());
        }
  }
  if (c.ok) c.detail << c.cases << " applicable transfer instances, no violation";
  return c;
}

// ---------------------------------------------------------------- 8
Check criterion_saturation() {
  Check c;
  SaturationReport sp = saturation_scan(GroupTag::Sp, 2, 2, 4);
  c.cases += sp.triples_scanned;
  if (!sp.passed()) c.fail("Sp(4) saturation violation found");
  if (sp.factor_witnesses.empty()) c.fail("Sp(4) scan found no factor-2 witness");
  SaturationReport so = saturation_scan(GroupTag::SO, 2, 2, 4);
  c.cases += so.triples_scanned;
  if (!so.passed()) c.fail("SO(5) saturation violation found");
  SaturationReport spin = saturation_scan(GroupTag::Spin, 2, 1, 4);
  c.cases += spin.triples_scanned;
  if (!spin.passed()) c.fail("Spin(5) factor-4 violation found");
  if (c.ok) {
    c.detail << "Sp(4): " << sp.positives << " positive triples, "
             << sp.factor_witnesses.size() << " factor-2 witnesses (first: "
             << sp.factor_witnesses[0].nu[0].str() << " ; " << sp.factor_witnesses[0].nu[1].str()
             << " ; " << sp.factor_witnesses[0].nu[2].str() << "); SO(5) and Spin(5) clean";
  }
  return c;
}

// ---------------------------------------------------------------- 9
Check criterion_cones() {
  Check c;
  for (int n = 2; n <= 3; ++n) {
    ConeCompareReport rep = compare_cones(GroupTag::Sp, n, 3, 1000, 42 + n);
    c.cases += rep.samples;
    if (rep.mismatches != 0)
      c.fail("Sp(" + std::to_string(2 * n) + ") vs SU membership verdicts disagree at " +
             std::to_string(rep.mismatches) + " points");
    if (rep.omega_identity_failures != 0)
      c.fail("fundamental-weight evaluation identity fails at n=" + std::to_string(n));
  }
  if (c.ok) c.detail << c.cases << " sampled tuples agree under both systems";
  return c;
}

// ---------------------------------------------------------------- 10
Check criterion_invariants() {
  Check c;
  // index combinatorics vs reduced words, n <= 4
  for (int n = 1; n <= 4; ++n)
    for (int r = 1; r <= n; ++r)
      for (const auto& I : all_c_indices(r, n)) {
        c.count();
        SignedPerm w = I.weyl();
        CellStatsC st = I.stats();
        std::vector<int> word = w.reduced_word();
        long sn = 0;
        for (int letter : word) sn += letter == n ? 1 : 0;
        if (sn != st.mu) c.fail("mu != s_n letter count at " + I.str());
        if (static_cast<long>(word.size()) != st.dim) c.fail("length != cell dim at " + I.str());
        if (w.length() != w.length_via_b()) c.fail("embedding lengths disagree at " + I.str());
        long gtbar = count_greater(I.elements(), I.barred());
        if (st.sym2 + st.wedge2 != gtbar) c.fail("sym2+wedge2 != |I>Ibar| at " + I.str());
        if (st.cosym2 - st.cowedge2 != r - st.mu) c.fail("cosym2-cowedge2 != mubar at " + I.str());
        CIndex small = I.reindexed();
        if (small.stats().sym2 != st.sym2 || (r - small.stats().mu) != (r - st.mu))
          c.fail("compression changes sym2 or mubar at " + I.str());
      }
  // chi evaluations and the sign identity, n <= 3
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r) {
      std::vector<CIndex> cells = all_c_indices(r, n);
      for (const auto& I : cells) {
        c.count();
        ChiEval chi = chi_eval(I);
        if (!chi.consistent()) c.fail("chi evaluation mismatch at " + I.str());
        CellStatsC st = I.stats();
        std::vector<Rat> pulled = coweight_pull(I.weyl(), x_coweight_b(n, r));
        Rat lhs(0);
        for (const Rat& x : pulled) lhs += x;
        if (lhs != Rat(r - 2 * st.mu)) c.fail("epsilon evaluation identity fails at " + I.str());
      }
      // theta difference identity against random contexts
      SplitMix64 gen(static_cast<std::uint64_t>(31 * n + r));
      for (int t = 0; t < 20; ++t) {
        std::vector<CIndex> ctx;
        for (int j = 0; j < 3; ++j) ctx.push_back(cells[gen.next() % cells.size()]);
        std::vector<Rat> xc = x_coweight_c(n, r), xb = x_coweight_b(n, r);
        std::vector<Rat> rc = rho_c(n), rb = rho_b(n);
        for (const auto& I : cells) {
          c.count();
          Rat theta_c = chi_value(I.weyl(), rc, xc);
          Rat theta_b = chi_value(I.weyl(), rb, xb);
          Rat mubar_delta(0);
          mubar_delta += Rat(r - I.stats().mu);
          for (const auto& K : ctx) {
            theta_c -= chi_value(K.weyl(), rc, xc);
            theta_b -= chi_value(K.weyl(), rb, xb);
            mubar_delta -= Rat(r - K.stats().mu);
          }
          Rat lhs = (r < n) ? theta_c : theta_c * 2;
          if (lhs != theta_b + mubar_delta) c.fail("theta difference identity fails");
        }
      }
    }
  // nonvanishing triples obey the three trace inequalities
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= n; ++r) {
      std::vector<CIndex> cells = all_c_indices(r, n);
      int k = static_cast<int>(cells.size());
      for (const auto& pick : multiset_triples<CIndex>(k)) {
        std::vector<CIndex> tuple{cells[pick[0]], cells[pick[1]], cells[pick[2]]};
        if (!ig_nonvanishing(tuple, r, n)) continue;
        c.count();
        long cosym = 0, cowedge = 0, mubar = 0, codim = 0;
        for (const auto& I : tuple) {
          CellStatsC st = I.stats();
          cosym += st.cosym2;
          cowedge += st.cowedge2;
          mubar += r - st.mu;
          codim += st.codim;
        }
        long half = static_cast<long>(r) * (r + 1) / 2;
        if (half - cosym < 0) c.fail("first trace inequality fails");
        if (mubar < r - (half - cosym)) c.fail("second trace inequality fails");
        if (static_cast<long>(r) * (r - 1) / 2 - cowedge < 0)
          c.fail("third trace inequality fails");
        if (n == r && codim == CIndex::ig_dim(r, r)) {
          // point-level bound on the Lagrangian space
          if (mubar < r) c.fail("Lagrangian bound fails");
        }
      }
    }
  // Poincare duality in the full flag algebras
  for (int n = 1; n <= 3; ++n)
    for (BC type : {BC::B, BC::C}) {
      SignedPerm w0 = SignedPerm::longest(n);
      for (const auto& u : all_signed_perms(n)) {
        c.count();
        std::map<SignedPerm, Int> prod = flag_structure_constants(u, w0 * u, type);
        auto it = prod.find(SignedPerm::identity(n));
        if (it == prod.end() || it->second != 1) c.fail("duality point coefficient != 1");
      }
    }
  // tableau ring sanity over small shapes
  {
    std::vector<Partition> ps;
    partitions_up_to(3, 4, &ps);
    for (const auto& a : ps)
      for (const auto& b : ps) {
        SchurExpansion ab = schur_product(a, b, 0);
        for (const auto& [nu, co] : ab) {
          c.count();
          if (lr_coefficient(a, b, nu) != co || lr_coefficient(b, a, nu) != co)
            c.fail("tableau coefficient asymmetry");
        }
      }
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (const auto& d : ps) {
          if (a.size() + b.size() + d.size() > 8) continue;
          c.count();
          SchurExpansion left = schur_product(schur_product(a, b, 0), d, 0);
          SchurExpansion right = schur_product(schur_product(b, d, 0), a, 0);
          if (left != right) c.fail("associativity failure in the tableau ring");
        }
  }
  // box dualities
  for (int r = 1; r <= 3; ++r)
    for (int k = 1; k <= 3; ++k) {
      std::vector<Partition> box;
      partitions_in_box(r, k, &box);
      for (std::size_t i = 0; i < box.size(); ++i)
        for (std::size_t j = i; j < box.size(); ++j)
          for (std::size_t l = j; l < box.size(); ++l) {
            long total = box[i].size() + box[j].size() + box[l].size();
            if (total > 12) continue;
            std::vector<Partition> tuple{box[i], box[j], box[l]};
            if (total == static_cast<long>(k) * r) {
              c.count();
              if (!grassmann_duality(tuple, r, k).equal())
                c.fail("conjugate-diagram invariant counts differ");
            }
            c.count();
            if (!ordinary_duality(tuple, r, k).equal())
              c.fail("dual-diagram invariant counts differ");
          }
    }
  // properness sweeps: symplectic and odd orthogonal pass, even orthogonal fails
  {
    PropernessOptions opt;
    opt.trials = 20;
    opt.seed = 2024;
    auto sweep = [&](int m, int N, FormTag form) {
      std::vector<AIndex> cells = all_a_indices(m, N);
      int k = static_cast<int>(cells.size());
      for (const auto& pick : multiset_triples<AIndex>(k)) {
        std::vector<AIndex> tuple{cells[pick[0]], cells[pick[1]], cells[pick[2]]};
        c.count();
        PropernessReport rep = mc_properness(tuple, form, opt);
        if (!rep.passed) {
          c.fail("properness violated for " + form_to_string(form) + " at Gr(" +
                 std::to_string(m) + "," + std::to_string(N) + ") " + tuple[0].str() +
                 tuple[1].str() + tuple[2].str());
          return;
        }
      }
    };
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= n; ++m) {
        sweep(m, 2 * n, FormTag::Symplectic);
        sweep(m, 2 * n + 1, FormTag::SymmetricOdd);
      }
    // n = 3: lines exhaustively, planes and 3-spaces on a deterministic slice
    sweep(1, 6, FormTag::Symplectic);
    sweep(1, 7, FormTag::SymmetricOdd);
    PropernessOptions big = opt;
    auto sparse_sweep = [&](int m, int N, FormTag form, int stride) {
      std::vector<AIndex> cells = all_a_indices(m, N);
      int k = static_cast<int>(cells.size());
      auto picks = multiset_triples<AIndex>(k);
      for (std::size_t t = 0; t < picks.size(); t += stride) {
        std::vector<AIndex> tuple{cells[picks[t][0]], cells[picks[t][1]], cells[picks[t][2]]};
        c.count();
        PropernessReport rep = mc_properness(tuple, form, big);
        if (!rep.passed) {
          c.fail("properness violated for " + form_to_string(form) + " at Gr(" +
                 std::to_string(m) + "," + std::to_string(N) + ") " + tuple[0].str() +
                 tuple[1].str() + tuple[2].str());
          return;
        }
      }
    };
    sparse_sweep(2, 6, FormTag::Symplectic, 7);
    sparse_sweep(3, 6, FormTag::Symplectic, 17);
    sparse_sweep(2, 7, FormTag::SymmetricOdd, 19);
    sparse_sweep(3, 7, FormTag::SymmetricOdd, 97);
    // negative control: even orthogonal form, maximal isotropic lines in C^6
    std::vector<AIndex> bad{AIndex({3}, 6), AIndex({3}, 6), AIndex({6}, 6)};
    PropernessReport neg = mc_properness(bad, FormTag::SymmetricEven, opt);
    c.count();
    if (neg.passed) c.fail("even-orthogonal negative control unexpectedly proper");
  }
  if (c.ok) c.detail << c.cases << " invariant checks passed (incl. properness sweeps)";
  return c;
}

struct Entry {
  const char* name;
  Check (*fn)();
};

const Entry kCriteria[] = {
    {"bgg-two-power-ratio", criterion_grain},
    {"lg24-structure-constants", criterion_lg24},
    {"isotropic-to-ordinary-nonvanishing", criterion_grass_comparison},
    {"symplectic-horn-factorization", criterion_horn_c},
    {"orthogonal-horn-factorization", criterion_horn_b},
    {"hom-dimension-vs-horn", criterion_key},
    {"invariant-transfer-scan", criterion_transfer},
    {"saturation-scan", criterion_saturation},
    {"eigencone-comparison", criterion_cones},
    {"invariant-suites", criterion_invariants},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionResult run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw std::out_of_range("criterion id");
  const Entry& e = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.name = e.name;
  auto start = std::chrono::steady_clock::now();
  Check c = e.fn();
  auto stop = std::chrono::steady_clock::now();
  res.passed = c.ok;
  res.detail = c.detail.str();
  res.seconds = std::chrono::duration<double>(stop - start).count();
  return res;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= criterion_count(); ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace isohorn::accept
