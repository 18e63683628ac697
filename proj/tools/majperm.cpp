// majperm: command-line front end for the congruence-class counts.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "majperm/bijections.hpp"
#include "majperm/closed_forms.hpp"
#include "majperm/parallel.hpp"
#include "majperm/permutation.hpp"
#include "majperm/residue_matrix.hpp"
#include "majperm/shuffles.hpp"
#include "majperm/syt.hpp"
#include "majperm/verify.hpp"

using namespace majperm;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSize = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Global {
  int jobs = 1;
  int limit = 12;
};

ForEach make_for_each(const Global& g) { return g.jobs <= 1 ? sequential() : threaded(static_cast<unsigned>(g.jobs)); }

std::string render(const ResidueMatrix& m, const std::string& format) {
  if (format == "csv") return to_csv(m);
  if (format == "table") return to_table(m);
  return to_json(m) + "\n";
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

bool is_prime_power(int n, int& p, int& r) {
  if (n < 2) return false;
  for (int q = 2; q <= n; ++q) {
    if (n % q != 0) continue;
    int m = n, e = 0;
    while (m % q == 0) m /= q, ++e;
    if (m != 1) return false;
    p = q, r = e;
    return true;
  }
  return false;
}

const char* kFormulaFamilies =
    "closed forms cover: k = l = n (divisor sum), k = l = n - 1 (n + 1 corollary), n = p or p + 1 with k = l = p "
    "prime, n = p^r with k = l = n, k = l = 2 (b_n recursion), coprime k, l <= n (constant n!/kl)";

ResidueMatrix formula_matrix(int n, int k, int l, StatPair sp) {
  ResidueMatrix m = [&]() -> ResidueMatrix {
    int p = 0, r = 0;
    if (n >= 1 && k == n && l == n) {
      if (is_prime_power(n, p, r) && r > 1) return prime_power_matrix(p, r);
      if (is_prime(n)) return prime_matrix(n);
      return mnnn_matrix(n);
    }
    if (n >= 2 && k == n - 1 && l == n - 1) {
      if (is_prime(n - 1)) return prime_matrix_plus1(n - 1);
      return cor_n_plus_1_matrix(n - 1);
    }
    if (k == 2 && l == 2 && n >= 2) return b_recursion(n);
    if (k >= 1 && l >= 1 && k <= n && l <= n && gcd(k, l) == 1) {
      ResidueMatrix c(n, k, l, sp);
      const BigInt value = exact_div(factorial(static_cast<unsigned>(n)), BigInt(k * l), "n!/kl");
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) c.at(i, j) = value;
      }
      return c;
    }
    throw UsageError("no closed form for n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " l=" + std::to_string(l) + "; " + kFormulaFamilies);
  }();
  // The two statistic pairs are equidistributed, so the tag is all that changes.
  ResidueMatrix out(n, k, l, sp);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) out.at(i, j) = m.at(i, j);
  }
  return out;
}

void print_perm_line(const std::string& label, const Permutation& p, int k, int l) {
  std::cout << label << ' ' << p.to_string() << " maj=" << maj(p) << " inv=" << inv(p) << " imaj=" << imaj(p);
  if (k > 0) std::cout << " inv%" << k << '=' << inv(p) % k;
  if (l > 0) std::cout << " imaj%" << l << '=' << imaj(p) % l;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts permutations by congruence class of (maj or inv, imaj)."};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--jobs,-j", g.jobs, "worker threads")->envname("MAJPERM_JOBS")->check(CLI::Range(1, 256));
  app.add_option("--limit", g.limit, "largest n that may be enumerated")
      ->envname("MAJPERM_LIMIT")
      ->check(CLI::Range(0, kMaxEnumerationN));

  // stats
  auto* stats = app.add_subcommand("stats", "maj, inv, imaj and inverse of a permutation");
  std::string stats_perm;
  stats->add_option("perm", stats_perm, "one-line notation, e.g. 6371452 or 10,2,1,...")->required();
  bool stats_json = false;
  stats->add_flag("--json", stats_json, "print a JSON object");

  // matrix
  auto* matrix = app.add_subcommand("matrix", "residue-class count matrix");
  int mn = 0, mk = 0, ml = 0;
  std::string method = "enum", statpair_text = "MAJ_IMAJ", mformat = "json";
  matrix->add_option("--n", mn)->required()->check(CLI::Range(0, 1000));
  matrix->add_option("--k", mk)->required()->check(CLI::PositiveNumber);
  matrix->add_option("--l", ml)->required()->check(CLI::PositiveNumber);
  matrix->add_option("--method", method)->check(CLI::IsMember({"enum", "syt", "formula"}));
  matrix->add_option("--statpair", statpair_text);
  matrix->add_option("--format", mformat)->check(CLI::IsMember({"json", "csv", "table"}));

  // bijection
  auto* bijection = app.add_subcommand("bijection", "apply f_l, g or the prefix-max orbit map and trace residues");
  std::string bmap, bperm;
  int bl = 0, bd = 0, bk = 0;
  bijection->add_option("map", bmap)->required()->check(CLI::IsMember({"fl", "fl-inv", "g", "g-inv", "orbit"}));
  bijection->add_option("perm", bperm)->required();
  bijection->add_option("--l", bl, "threshold for fl");
  bijection->add_option("--d", bd, "d for g");
  bijection->add_option("--k", bk, "k for g and orbit");

  // shuffle
  auto* shuffle_cmd = app.add_subcommand("shuffle", "shuffle pi with sigma + |pi| at fixed gaps or positions");
  std::string spi, ssigma, sgamma, sindex;
  shuffle_cmd->add_option("--pi", spi)->required();
  shuffle_cmd->add_option("--sigma", ssigma)->required();
  auto* gamma_opt = shuffle_cmd->add_option("--gamma", sgamma, "comma-separated gaps");
  auto* index_opt = shuffle_cmd->add_option("--index", sindex, "comma-separated positions");
  gamma_opt->excludes(index_opt);

  // formula
  auto* formula = app.add_subcommand("formula", "evaluate a closed form");
  std::string fname;
  long long fn = 0, fi = 0, fj = 0;
  int fp = 0, fr = 0;
  std::string fformat = "json";
  formula->add_option("name", fname)->required()->check(
      CLI::IsMember({"mnnn", "prime", "prime-plus1", "prime-power", "b-rec", "n-plus-1"}));
  formula->add_option("--n", fn);
  formula->add_option("--i", fi);
  formula->add_option("--j", fj);
  formula->add_option("--p", fp);
  formula->add_option("--r", fr);
  formula->add_option("--format", fformat)->check(CLI::IsMember({"json", "csv", "table"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run theorem checks; prints a JSON report array");
  std::string vid;
  verify->add_option("id", vid, "theorem id, 'all' or 'list'")->required();
  std::string vconfig;
  verify->add_option("--config", vconfig, "JSON file with per-theorem ranges")->check(CLI::ExistingFile);
  bool vtiming = false;
  verify->add_flag("--timing", vtiming, "include elapsed_ms");
  const std::vector<std::string> range_params = {"n", "k", "l", "d", "p", "r", "companion"};
  std::map<std::string, long long> vmin, vmax, vexact;
  for (const auto& name : range_params) {
    verify->add_option_function<long long>("--" + name + "-min", [&vmin, name](long long v) { vmin[name] = v; });
    verify->add_option_function<long long>("--" + name + "-max", [&vmax, name](long long v) { vmax[name] = v; });
    verify->add_option_function<long long>("--" + name, [&vexact, name](long long v) { vexact[name] = v; });
  }
  std::map<std::string, long long> vlimits;
  for (const std::string name : {"size", "sets", "enum", "orbits"}) {
    verify->add_option_function<long long>("--" + name + "-max", [&vlimits, name](long long v) { vlimits[name] = v; },
                                           "limit '" + name + "'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*stats) {
      const auto p = Permutation::parse(stats_perm);
      if (stats_json) {
        nlohmann::ordered_json j;
        j["perm"] = p.to_string();
        j["maj"] = maj(p);
        j["inv"] = inv(p);
        j["imaj"] = imaj(p);
        j["inverse"] = inverse(p).to_string();
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "maj=" << maj(p) << " inv=" << inv(p) << " imaj=" << imaj(p)
                  << " inverse=" << inverse(p).to_string() << '\n';
      }
      return 0;
    }

    if (*matrix) {
      const StatPair sp = parse_statpair(statpair_text);
      ResidueMatrix m(mn, mk, ml, sp);
      if (method == "enum") {
        check_enumeration_limit(mn, g.limit);
        m = count_matrix(mn, mk, ml, sp, make_for_each(g), g.limit);
      } else if (method == "syt") {
        if (mn > g.limit) check_enumeration_limit(mn, std::max(g.limit, kMaxSytN));
        // the tableau count is a (maj, imaj) identity; inv/imaj follows by equidistribution
        const auto t = joint_matrix_syt(mn, mk, ml, make_for_each(g));
        for (int i = 0; i < mk; ++i) {
          for (int j = 0; j < ml; ++j) m.at(i, j) = t.at(i, j);
        }
      } else {
        m = formula_matrix(mn, mk, ml, sp);
      }
      std::cout << render(m, mformat);
      return 0;
    }

    if (*bijection) {
      const auto tau = Permutation::parse(bperm);
      const int n = tau.size();
      if (bmap == "fl" || bmap == "fl-inv") {
        if (bl < 1) throw UsageError("fl needs --l");
        const auto out = bmap == "fl" ? f_l(tau, bl) : f_l_inverse(tau, bl);
        print_perm_line("in ", tau, n, bl);
        print_perm_line("out", out, n, bl);
      } else if (bmap == "g" || bmap == "g-inv") {
        if (bd < 1 || bk < 2) throw UsageError("g needs --d >= 1 and --k >= 2");
        const auto out = bmap == "g" ? g_map(tau, bd, bk) : g_map_inverse(tau, bd, bk);
        print_perm_line("in ", tau, bk * bd, bd);
        print_perm_line("out", out, bk * bd, bd);
      } else {
        if (bk < 1) throw UsageError("orbit needs --k");
        const auto orbit = prefix_max_orbit(tau, bk);
        for (std::size_t i = 0; i < orbit.size(); ++i) print_perm_line(std::to_string(i), orbit[i], bk, 0);
      }
      return 0;
    }

    if (*shuffle_cmd) {
      const auto pi = Permutation::parse(spi);
      const auto sigma = Permutation::parse(ssigma);
      const int l = pi.size();
      const int n = l + sigma.size();
      std::vector<Permutation> result;
      if (!sgamma.empty()) {
        const GapComposition gamma(parse_ints(sgamma));
        result = shuffle_gamma(pi, sigma, gamma);
        std::cout << "wt_gamma=" << wt_gamma(gamma, l) << '\n';
      } else if (!sindex.empty()) {
        const IndexSet index(parse_ints(sindex), n);
        const std::vector<Permutation> one_pi{pi}, one_sigma{sigma};
        result = shuffle_at(one_pi, one_sigma, index);
        std::cout << "wt_index=" << wt_index(index, l) << '\n';
      } else {
        result = shuffle_plus(pi, sigma);
      }
      for (const auto& t : result) {
        std::cout << t.to_string() << " inv=" << inv(t) << " imaj=" << imaj(t) << " cross_inv=" << inv_between(t, l)
                  << '\n';
      }
      return 0;
    }

    if (*formula) {
      if (fname == "mnnn") {
        if (fn < 1) throw UsageError("mnnn needs --n >= 1");
        if (formula->count("--i") || formula->count("--j")) {
          std::cout << to_decimal(mnnn(static_cast<int>(fn), fi, fj)) << '\n';
        } else {
          std::cout << render(mnnn_matrix(static_cast<int>(fn)), fformat);
        }
      } else if (fname == "prime" || fname == "prime-plus1") {
        std::cout << render(fname == "prime" ? prime_matrix(fp) : prime_matrix_plus1(fp), fformat);
      } else if (fname == "prime-power") {
        if (formula->count("--i")) {
          std::cout << to_decimal(prime_power_entry(fp, fr, static_cast<int>(fi), static_cast<int>(fj))) << '\n';
        } else {
          std::cout << render(prime_power_matrix(fp, fr), fformat);
        }
      } else if (fname == "b-rec") {
        std::cout << render(b_recursion(static_cast<int>(fn)), fformat);
      } else {
        if (formula->count("--i")) {
          std::cout << to_decimal(cor_n_plus_1(static_cast<int>(fn), fi, fj)) << '\n';
        } else {
          std::cout << render(cor_n_plus_1_matrix(static_cast<int>(fn)), fformat);
        }
      }
      return 0;
    }

    if (*verify) {
      if (vid == "list") {
        for (const auto& t : theorems()) {
          std::cout << t.id << " (";
          for (std::size_t i = 0; i < t.params.size(); ++i) std::cout << (i ? "," : "") << t.params[i];
          std::cout << ")  " << t.summary << '\n';
        }
        return 0;
      }
      std::string config_text;
      if (!vconfig.empty()) {
        std::ifstream in(vconfig);
        std::stringstream ss;
        ss << in.rdbuf();
        config_text = ss.str();
      }
      std::vector<std::string> ids;
      if (vid == "all") {
        for (const auto& t : theorems()) ids.push_back(t.id);
      } else {
        ids.push_back(vid);
      }
      Verifier verifier(make_for_each(g), g.limit);
      std::vector<VerificationReport> reports;
      for (const auto& id : ids) {
        ParamRanges ranges;
        if (!config_text.empty()) ranges = ranges_from_config(config_text, id);
        if (!vmin.empty() || !vmax.empty() || !vexact.empty()) {
          ranges = default_ranges(id).merged_with(ranges);
          std::vector<std::string> own;
          for (const auto& t : theorems()) {
            if (t.id == id) own = t.params;
          }
          auto applies = [&own](const std::string& name) {
            return std::find(own.begin(), own.end(), name) != own.end();
          };
          for (const auto& [name, v] : vmin) {
            if (applies(name)) ranges.set_lower(name, v);
          }
          for (const auto& [name, v] : vmax) {
            if (applies(name)) ranges.set_upper(name, v);
          }
          for (const auto& [name, v] : vexact) {
            if (applies(name)) ranges.set_exact(name, v);
          }
        }
        for (const auto& [name, v] : vlimits) ranges.limits[name] = v;
        auto part = verifier.run(id, ranges);
        reports.insert(reports.end(), part.begin(), part.end());
      }
      std::cout << reports_to_json(reports, vtiming) << '\n';
      const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
      return failed ? kExitFail : 0;
    }
  } catch (const SizeLimitError& e) {
    std::cerr << "majperm: size limit: " << e.what() << '\n';
    return kExitSize;
  } catch (const std::invalid_argument& e) {
    std::cerr << "majperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "majperm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "majperm: error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
