// Command-line surface for the isohorn library: exact Schubert calculus on
// ordinary and isotropic Grassmannians, tensor invariants, eigencone
// membership and the related verification suites.  Every run prints
// line-oriented key/value pairs followed by a single JSON document; exit code
// 0 means PASS/true, 1 means FAIL/false, 2 means a usage or precondition
// error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isohorn/acceptance.hpp"
#include "isohorn/bgg.hpp"
#include "isohorn/characters.hpp"
#include "isohorn/eigencone.hpp"
#include "isohorn/flags.hpp"
#include "isohorn/grassmann.hpp"
#include "isohorn/lr.hpp"
#include "isohorn/pluecker.hpp"
#include "isohorn/transfer.hpp"

using json = nlohmann::ordered_json;
using namespace isohorn;

namespace {

struct Output {
  json doc;
  std::string out_path;

  void set(const std::string& key, const json& value) { doc[key] = value; }
  void emit() const {
    std::ostringstream lines;
    for (auto it = doc.begin(); it != doc.end(); ++it)
      lines << it.key() << ": "
            << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
            << "\n";
    lines << doc.dump() << "\n";
    std::cout << lines.str();
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << lines.str();
    }
  }
};

std::vector<std::vector<int>> parse_index_lists(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::string cur;
  for (char ch : text + " ") {
    if (ch == ' ' || ch == '\t') {
      if (cur.empty()) continue;
      if (cur.front() != '[' || cur.back() != ']')
        throw std::invalid_argument("index literal must look like [2,4]: got " + cur);
      std::vector<int> elems;
      std::string item;
      for (char c : cur.substr(1, cur.size() - 2) + ",") {
        if (c == ',') {
          if (!item.empty()) elems.push_back(std::stoi(item));
          item.clear();
        } else {
          item += c;
        }
      }
      out.push_back(elems);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<long> parts;
  std::string item;
  for (char c : text + ",") {
    if (c == ',') {
      if (!item.empty()) parts.push_back(std::stol(item));
      item.clear();
    } else if (!isspace(c)) {
      item += c;
    }
  }
  return Partition(parts);
}

std::vector<Partition> parse_partitions(const std::string& text) {
  std::vector<Partition> out;
  std::string cur;
  for (char ch : text + " ") {
    if (ch == ' ' || ch == '\t' || ch == ';') {
      if (!cur.empty()) out.push_back(parse_partition(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(Int(text));
  return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

std::vector<std::vector<Rat>> parse_rat_tuples(const std::string& text) {
  std::vector<std::vector<Rat>> out;
  std::string chunk;
  for (char ch : text + ";") {
    if (ch == ';') {
      if (chunk.empty()) continue;
      std::vector<Rat> coords;
      std::string item;
      for (char c : chunk + ",") {
        if (c == ',') {
          if (!item.empty()) coords.push_back(parse_rat(item));
          item.clear();
        } else if (!isspace(c)) {
          item += c;
        }
      }
      out.push_back(coords);
      chunk.clear();
    } else {
      chunk += ch;
    }
  }
  return out;
}

GroupTag parse_group(const std::string& s) {
  if (s == "SL" || s == "sl") return GroupTag::SL;
  if (s == "Sp" || s == "sp") return GroupTag::Sp;
  if (s == "SO" || s == "so") return GroupTag::SO;
  if (s == "Spin" || s == "spin") return GroupTag::Spin;
  throw std::invalid_argument("unknown group: " + s);
}

json expansion_json(const std::map<AIndex, Int>& coeffs) {
  json j = json::object();
  for (const auto& [idx, c] : coeffs) j[idx.str()] = to_string(c);
  return j;
}
json expansion_json_c(const std::map<CIndex, Int>& coeffs) {
  json j = json::object();
  for (const auto& [idx, c] : coeffs) j[idx.str()] = to_string(c);
  return j;
}
json expansion_json_b(const std::map<BIndex, Int>& coeffs) {
  json j = json::object();
  for (const auto& [idx, c] : coeffs) j[idx.str()] = to_string(c);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Schubert calculus and eigencone toolkit"};
  app.require_subcommand(1);

  Output out;
  int exit_code = 0;
  std::uint64_t default_seed = 1;
  if (const char* env = std::getenv("ISOHORN_SEED")) default_seed = std::strtoull(env, nullptr, 10);
  if (const char* env = std::getenv("ISOHORN_PRIME")) Fp::modulus = std::strtoull(env, nullptr, 10);
  std::uint64_t prime_flag = Fp::modulus;
  app.add_option("--prime", prime_flag, "field prime for the linear-algebra oracles");
  app.add_option("--out", out.out_path, "also write the result document to this file");

  // ---- lrcoef
  std::string lam_s, mu_s, nu_s;
  auto* lrcoef = app.add_subcommand("lrcoef", "Littlewood-Richardson coefficient");
  lrcoef->add_option("--lambda", lam_s)->required();
  lrcoef->add_option("--mu", mu_s)->required();
  lrcoef->add_option("--nu", nu_s)->required();

  // ---- gr-product
  int gr_m = 0, gr_n2 = 0;
  std::string gr_indices;
  auto* grp = app.add_subcommand("gr-product", "Schubert product in Gr(m,N)");
  grp->add_option("--m", gr_m)->required();
  grp->add_option("--N", gr_n2)->required();
  grp->add_option("--indices", gr_indices)->required();

  // ---- ig-product / og-product
  int ig_r = 0, ig_n = 0;
  std::string ig_indices;
  auto* igp = app.add_subcommand("ig-product", "Schubert product in IG(r,2n)");
  igp->add_option("--r", ig_r)->required();
  igp->add_option("--n", ig_n)->required();
  igp->add_option("--indices", ig_indices)->required();
  int og_r = 0, og_n = 0;
  std::string og_indices;
  auto* ogp = app.add_subcommand("og-product", "Schubert product in OG(r,2n+1)");
  ogp->add_option("--r", og_r)->required();
  ogp->add_option("--n", og_n)->required();
  ogp->add_option("--indices", og_indices)->required();

  // ---- deformed
  int df_r = 0, df_n = 0;
  std::string df_indices;
  bool df_orth = false;
  auto* dfp = app.add_subcommand("deformed", "degenerated-product nonvanishing test");
  dfp->add_option("--r", df_r)->required();
  dfp->add_option("--n", df_n)->required();
  dfp->add_option("--indices", df_indices)->required();
  dfp->add_flag("--orthogonal", df_orth, "use OG(r,2n+1) instead of IG(r,2n)");

  // ---- horn-c / horn-b
  int hc_r = 0, hc_n = 0;
  std::string hc_indices;
  auto* hcp = app.add_subcommand("horn-c", "symplectic Horn factorization record");
  hcp->add_option("--r", hc_r)->required();
  hcp->add_option("--n", hc_n)->required();
  hcp->add_option("--indices", hc_indices)->required();
  int hb_r = 0, hb_n = 0;
  std::string hb_indices;
  auto* hbp = app.add_subcommand("horn-b", "odd orthogonal Horn factorization record");
  hbp->add_option("--r", hb_r)->required();
  hbp->add_option("--n", hb_n)->required();
  hbp->add_option("--indices", hb_indices)->required();

  // ---- grain
  int grain_n = 0;
  auto* grain = app.add_subcommand("grain", "power-of-two comparison of the two BGG bases");
  grain->add_option("--n", grain_n)->required();

  // ---- hom-dim
  int hd_r = 0, hd_n = 0;
  std::string hd_mu;
  std::uint64_t hd_seed = 0;
  auto* hdp = app.add_subcommand("hom-dim", "constrained Hom-space dimension for random flags");
  hdp->add_option("--r", hd_r)->required();
  hdp->add_option("--n", hd_n)->required();
  hdp->add_option("--mu", hd_mu)->required();
  hdp->add_option("--seed", hd_seed);

  // ---- key-check
  int kc_r = 0, kc_n = 0, kc_trials = 3;
  std::string kc_mu;
  std::uint64_t kc_seed = 0;
  auto* kcp = app.add_subcommand("key-check", "Hom-dimension vs Horn-inequality comparison");
  kcp->add_option("--r", kc_r)->required();
  kcp->add_option("--n", kc_n)->required();
  kcp->add_option("--mu", kc_mu)->required();
  kcp->add_option("--trials", kc_trials);
  kcp->add_option("--seed", kc_seed);

  // ---- properness
  std::string pr_form = "symplectic", pr_indices;
  int pr_trials = 20;
  std::uint64_t pr_seed = 0;
  bool pr_exact = false;
  auto* prp = app.add_subcommand("properness", "Monte-Carlo properness of cell intersections");
  prp->add_option("--form", pr_form, "symplectic | symmetric-odd | symmetric-even");
  prp->add_option("--indices", pr_indices)->required();
  prp->add_option("--N", gr_n2, "ambient dimension")->required();
  prp->add_option("--trials", pr_trials);
  prp->add_option("--seed", pr_seed);
  prp->add_flag("--exact-dims", pr_exact);

  // ---- invariant-dim
  std::string id_group, id_weights;
  auto* idp = app.add_subcommand("invariant-dim", "tensor invariant dimension");
  idp->add_option("--group", id_group)->required();
  idp->add_option("--rank", ig_n, "n for Sp(2n)/SO(2n+1)/Spin, N for SL(N)")->required();
  idp->add_option("--weights", id_weights, "semicolon-separated coordinate tuples")->required();

  // ---- clef-check / walk-check
  int cl_n = 0;
  std::string cl_lams, cl_target = "Sp";
  auto* clp = app.add_subcommand("clef-check", "restriction transfer of tensor invariants");
  clp->add_option("--n", cl_n)->required();
  clp->add_option("--lambdas", cl_lams)->required();
  clp->add_option("--target", cl_target, "Sp or SO");
  int wk_r = 0, wk_n = 0;
  std::string wk_mu;
  auto* wkp = app.add_subcommand("walk-check", "flip-and-restrict invariant transfer");
  wkp->add_option("--r", wk_r)->required();
  wkp->add_option("--n", wk_n)->required();
  wkp->add_option("--mu", wk_mu)->required();

  // ---- saturation-scan
  std::string st_group = "Sp";
  int st_n = 2, st_nmax = 4;
  long st_bound = 2;
  auto* stp = app.add_subcommand("saturation-scan", "saturation-factor scan over small weights");
  stp->add_option("--group", st_group);
  stp->add_option("--n", st_n);
  stp->add_option("--bound", st_bound);
  stp->add_option("--nmax", st_nmax);

  // ---- eigencone-gen / eigencone-member / compare-cones
  std::string eg_group = "Sp";
  int eg_rank = 2, eg_s = 3;
  auto* egp = app.add_subcommand("eigencone-gen", "generate the eigencone inequality system");
  egp->add_option("--group", eg_group);
  egp->add_option("--rank", eg_rank, "n for Sp/SO, N for SL");
  egp->add_option("--s", eg_s);
  std::string em_group = "Sp", em_h;
  int em_rank = 2;
  auto* emp = app.add_subcommand("eigencone-member", "membership of a coweight tuple");
  emp->add_option("--group", em_group);
  emp->add_option("--rank", em_rank);
  emp->add_option("--h", em_h, "semicolon-separated coweight tuples")->required();
  std::string cc_group = "Sp";
  int cc_n = 2, cc_s = 3;
  long cc_samples = 1000;
  std::uint64_t cc_seed = 0;
  auto* ccp = app.add_subcommand("compare-cones", "compare with the embedded SL system");
  ccp->add_option("--group", cc_group);
  ccp->add_option("--n", cc_n);
  ccp->add_option("--s", cc_s);
  ccp->add_option("--samples", cc_samples);
  ccp->add_option("--seed", cc_seed);

  // ---- verify-all
  int va_only = 0;
  auto* vap = app.add_subcommand("verify-all", "run the acceptance criteria");
  vap->add_option("--criterion", va_only, "run a single criterion (1..10)");

  CLI11_PARSE(app, argc, argv);
  Fp::modulus = prime_flag;

  try {
    if (*lrcoef) {
      Partition lam = parse_partition(lam_s), mu = parse_partition(mu_s),
                nu = parse_partition(nu_s);
      Int c = lr_coefficient(lam, mu, nu);
      out.set("command", "lrcoef");
      out.set("lambda", lam.str());
      out.set("mu", mu.str());
      out.set("nu", nu.str());
      out.set("coefficient", to_string(c));
      exit_code = c != 0 ? 0 : 1;
    } else if (*grp) {
      std::vector<AIndex> idx;
      for (auto& v : parse_index_lists(gr_indices)) idx.emplace_back(v, gr_n2);
      CohomClassA prod = gr_product(idx, gr_m, gr_n2);
      out.set("command", "gr-product");
      out.set("space", "Gr(" + std::to_string(gr_m) + "," + std::to_string(gr_n2) + ")");
      out.set("expansion", expansion_json(prod.coeffs));
      out.set("point_coefficient", to_string(gr_point_coefficient(idx, gr_m, gr_n2)));
      exit_code = prod.zero() ? 1 : 0;
    } else if (*igp) {
      std::vector<CIndex> idx;
      for (auto& v : parse_index_lists(ig_indices)) idx.emplace_back(v, ig_n);
      CohomClassC prod = ig_product(idx, ig_r, ig_n);
      out.set("command", "ig-product");
      out.set("space", "IG(" + std::to_string(ig_r) + "," + std::to_string(2 * ig_n) + ")");
      out.set("expansion", expansion_json_c(prod.coeffs));
      out.set("point_coefficient", to_string(ig_point_coefficient(idx, ig_r, ig_n)));
      exit_code = prod.zero() ? 1 : 0;
    } else if (*ogp) {
      std::vector<BIndex> idx;
      for (auto& v : parse_index_lists(og_indices)) idx.emplace_back(v, og_n);
      CohomClassB prod = og_product(idx, og_r, og_n);
      out.set("command", "og-product");
      out.set("space", "OG(" + std::to_string(og_r) + "," + std::to_string(2 * og_n + 1) + ")");
      out.set("expansion", expansion_json_b(prod.coeffs));
      out.set("point_coefficient", to_string(og_point_coefficient(idx, og_r, og_n)));
      exit_code = prod.zero() ? 1 : 0;
    } else if (*dfp) {
      out.set("command", "deformed");
      DeformedResult res;
      if (df_orth) {
        std::vector<BIndex> idx;
        for (auto& v : parse_index_lists(df_indices)) idx.emplace_back(v, df_n);
        res = deformed_nonvanishing_b(idx, df_r, df_n);
      } else {
        std::vector<CIndex> idx;
        for (auto& v : parse_index_lists(df_indices)) idx.emplace_back(v, df_n);
        res = deformed_nonvanishing(idx, df_r, df_n);
      }
      out.set("ordinary_nonzero", res.ordinary_nonzero);
      out.set("dimension_condition", res.beta1);
      out.set("deformed_nonzero", res.value);
      exit_code = res.value ? 0 : 1;
    } else if (*hcp) {
      std::vector<CIndex> idx;
      for (auto& v : parse_index_lists(hc_indices)) idx.emplace_back(v, hc_n);
      HornFactorization h = horn_c_check(idx, hc_r, hc_n);
      out.set("command", "horn-c");
      out.set("alpha", h.alpha);
      out.set("beta1", h.beta1);
      out.set("beta2", h.beta2);
      out.set("beta3", h.beta3);
      json mus = json::array();
      for (const auto& m : h.mu_data) mus.push_back(m.str());
      out.set("mu_data", mus);
      out.set("consistent", h.consistent());
      exit_code = h.consistent() ? (h.alpha ? 0 : 1) : 2;
    } else if (*hbp) {
      std::vector<BIndex> idx;
      for (auto& v : parse_index_lists(hb_indices)) idx.emplace_back(v, hb_n);
      HornFactorization h = horn_b_check(idx, hb_r, hb_n);
      out.set("command", "horn-b");
      out.set("alpha", h.alpha);
      out.set("beta1", h.beta1);
      out.set("beta2", h.beta2);
      out.set("beta3", h.beta3);
      json mus = json::array();
      for (const auto& m : h.mu_data) mus.push_back(m.str());
      out.set("mu_data", mus);
      out.set("consistent", h.consistent());
      exit_code = h.consistent() ? (h.alpha ? 0 : 1) : 2;
    } else if (*grain) {
      bool ok = two_power_ratio_check(grain_n);
      out.set("command", "grain");
      out.set("n", grain_n);
      out.set("verdict", ok ? "PASS" : "FAIL");
      exit_code = ok ? 0 : 1;
    } else if (*hdp) {
      std::vector<Partition> mus = parse_partitions(hd_mu);
      if (hd_seed == 0) hd_seed = default_seed;
      SplitMix64 rng(hd_seed);
      std::vector<FlagBasis<Fp>> fm, fv;
      for (std::size_t j = 0; j < mus.size(); ++j) {
        fm.push_back(random_flag<Fp>(FormTag::None, hd_r, rng.next()));
        fv.push_back(random_flag<Fp>(FormTag::Symplectic, 2 * hd_n, rng.next()));
      }
      long dim = hom_constrained_dim(mus, fm, fv);
      long total = 0;
      for (const auto& m : mus) total += m.size();
      out.set("command", "hom-dim");
      out.set("dimension", dim);
      out.set("expected_dimension", 2L * hd_n * hd_r - total);
      out.set("prime", Fp::modulus);
      out.set("seed", hd_seed);
      exit_code = 0;
    } else if (*kcp) {
      std::vector<Partition> mus = parse_partitions(kc_mu);
      if (kc_seed == 0) kc_seed = default_seed;
      out.set("command", "key-check");
      bool all_agree = true;
      json trials = json::array();
      SplitMix64 rng(kc_seed);
      for (int t = 0; t < kc_trials; ++t) {
        KeyCheckReport rep = hom_dim_horn_check(mus, kc_r, kc_n, rng.next());
        json tj;
        tj["observed_dim"] = rep.observed_dim;
        tj["expected_dim"] = rep.expected_dim;
        tj["a_holds"] = rep.a_holds;
        tj["b_holds"] = rep.b_holds;
        trials.push_back(tj);
        all_agree = all_agree && rep.agree();
      }
      out.set("trials", trials);
      out.set("prime", Fp::modulus);
      out.set("seed", kc_seed);
      out.set("verdict", all_agree ? "PASS" : "FAIL");
      exit_code = all_agree ? 0 : 1;
    } else if (*prp) {
      std::vector<AIndex> idx;
      for (auto& v : parse_index_lists(pr_indices)) idx.emplace_back(v, gr_n2);
      PropernessOptions opt;
      opt.trials = pr_trials;
      opt.seed = pr_seed == 0 ? default_seed : pr_seed;
      opt.exact_dims = pr_exact;
      PropernessReport rep = mc_properness(idx, form_from_string(pr_form), opt);
      out.set("command", "properness");
      out.set("form", pr_form);
      out.set("expected_dim", rep.expected_dim);
      out.set("trials", rep.trials);
      out.set("violations", rep.violations);
      out.set("inconclusive", rep.inconclusive);
      out.set("redraws", rep.redraws);
      json dims = json::array();
      for (const auto& o : rep.outcomes) dims.push_back(o.observed_dim);
      out.set("observed_dims", dims);
      out.set("prime", rep.prime);
      out.set("seed", opt.seed);
      out.set("verdict", rep.passed ? "PASS" : "FAIL");
      exit_code = rep.passed ? 0 : 1;
    } else if (*idp) {
      GroupTag g = parse_group(id_group);
      std::vector<Weight> ws;
      for (auto& coords : parse_rat_tuples(id_weights)) ws.emplace_back(g, ig_n, coords);
      Int dim = invariant_dim(g, ws);
      out.set("command", "invariant-dim");
      out.set("group", group_name(g, ig_n));
      out.set("dimension", to_string(dim));
      exit_code = dim != 0 ? 0 : 1;
    } else if (*clp) {
      std::vector<Partition> lams = parse_partitions(cl_lams);
      GroupTag target = parse_group(cl_target);
      TransferCheck t = sl_transfer_check(lams, cl_n, target);
      out.set("command", "clef-check");
      out.set("applicable", t.applicable);
      out.set("source_dim", to_string(t.source_dim));
      out.set("target_dim", to_string(t.target_dim));
      out.set("verdict", !t.applicable ? "INAPPLICABLE" : (t.ok ? "PASS" : "FAIL"));
      exit_code = !t.applicable ? 2 : (t.ok ? 0 : 1);
    } else if (*wkp) {
      std::vector<Partition> mus = parse_partitions(wk_mu);
      FlipTransferCheck w = flip_transfer_check(mus, wk_r, wk_n);
      out.set("command", "walk-check");
      out.set("applicable", w.applicable);
      out.set("sl_dim", to_string(w.sl_dim));
      out.set("sp_dim", to_string(w.sp_dim));
      json nus = json::array();
      for (const auto& nu : w.nu) nus.push_back(nu.str());
      out.set("nu", nus);
      out.set("verdict", !w.applicable ? "INAPPLICABLE" : (w.ok ? "PASS" : "FAIL"));
      exit_code = !w.applicable ? 2 : (w.ok ? 0 : 1);
    } else if (*stp) {
      SaturationReport rep = saturation_scan(parse_group(st_group), st_n, st_bound, st_nmax);
      out.set("command", "saturation-scan");
      out.set("group", group_name(rep.group, rep.n));
      out.set("factor", rep.factor);
      out.set("triples_scanned", rep.triples_scanned);
      out.set("positives", rep.positives);
      out.set("violations", rep.violations);
      json ws = json::array();
      for (const auto& w : rep.factor_witnesses) {
        json wj = json::array();
        for (const auto& nu : w.nu) wj.push_back(nu.str());
        ws.push_back(wj);
      }
      out.set("factor_witnesses", ws);
      out.set("verdict", rep.passed() ? "PASS" : "FAIL");
      exit_code = rep.passed() ? 0 : 1;
    } else if (*egp) {
      GroupTag g = parse_group(eg_group);
      const auto& sys = eigencone_system(g, eg_rank, eg_s);
      out.set("command", "eigencone-gen");
      out.set("group", eg_group);
      out.set("inequality_count", sys.size());
      json ineqs = json::array();
      for (const auto& ineq : sys) {
        json ij;
        ij["node"] = ineq.node;
        json idx = json::array();
        for (const auto& v : ineq.indices) idx.push_back(subset_str(v));
        ij["indices"] = idx;
        json rows = json::array();
        for (const auto& row : ineq.coeff) {
          json rj = json::array();
          for (const auto& c : row) rj.push_back(to_string(c));
          rows.push_back(rj);
        }
        ij["coefficients"] = rows;
        ineqs.push_back(ij);
      }
      out.set("inequalities", ineqs);
      exit_code = 0;
    } else if (*emp) {
      GroupTag g = parse_group(em_group);
      std::vector<std::vector<Rat>> h = parse_rat_tuples(em_h);
      bool member = eigencone_member(g, em_rank, h);
      out.set("command", "eigencone-member");
      out.set("group", em_group);
      out.set("member", member);
      exit_code = member ? 0 : 1;
    } else if (*ccp) {
      ConeCompareReport rep =
          compare_cones(parse_group(cc_group), cc_n, cc_s, cc_samples,
                        cc_seed == 0 ? default_seed : cc_seed);
      out.set("command", "compare-cones");
      out.set("samples", rep.samples);
      out.set("members", rep.members);
      out.set("mismatches", rep.mismatches);
      out.set("omega_identity_failures", rep.omega_identity_failures);
      out.set("seed", rep.seed);
      out.set("verdict", rep.passed() ? "PASS" : "FAIL");
      exit_code = rep.passed() ? 0 : 1;
    } else if (*vap) {
      out.set("command", "verify-all");
      bool all = true;
      json list = json::array();
      if (va_only > 0) {
        accept::CriterionResult r = accept::run_criterion(va_only);
        std::cout << "criterion " << r.id << " (" << r.name << "): "
                  << (r.passed ? "PASS" : "FAIL") << "  [" << r.detail << "]\n";
        all = r.passed;
        json rj;
        rj["id"] = r.id;
        rj["name"] = r.name;
        rj["passed"] = r.passed;
        rj["detail"] = r.detail;
        list.push_back(rj);
      } else {
        for (const auto& r : accept::run_all()) {
          std::cout << "criterion " << r.id << " (" << r.name << "): "
                    << (r.passed ? "PASS" : "FAIL") << "  [" << r.detail << "]\n";
          all = all && r.passed;
          json rj;
          rj["id"] = r.id;
          rj["name"] = r.name;
          rj["passed"] = r.passed;
          rj["detail"] = r.detail;
          list.push_back(rj);
        }
      }
      out.set("criteria", list);
      out.set("verdict", all ? "PASS" : "FAIL");
      exit_code = all ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  out.emit();
  return exit_code;
}
