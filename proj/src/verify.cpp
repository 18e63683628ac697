#include "majperm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <mutex>
#include <optional>
#include <set>

#include "json.hpp"
#include "majperm/bijections.hpp"
#include "majperm/closed_forms.hpp"
#include "majperm/shuffles.hpp"
#include "majperm/syt.hpp"
#include "majperm/verify_defaults.hpp"

namespace majperm {

// ---------------------------------------------------------------------------
// ParamRanges

void ParamRanges::convert_tuples_to_bounds() {
  for (const auto& t : tuples) {
    for (const auto& [name, value] : t) {
      auto it = bounds.find(name);
      if (it == bounds.end()) {
        bounds.emplace(name, std::make_pair(value, value));
      } else {
        it->second.first = std::min(it->second.first, value);
        it->second.second = std::max(it->second.second, value);
      }
    }
  }
  tuples.clear();
}

namespace {

// Keeps the tuples satisfying `keep`; an emptied list becomes an empty box.
void filter_tuples(ParamRanges& r, const std::function<bool(const std::map<std::string, long long>&)>& keep) {
  std::vector<std::map<std::string, long long>> kept;
  for (const auto& t : r.tuples) {
    if (keep(t)) kept.push_back(t);
  }
  if (kept.empty()) {
    for (const auto& [name, v] : r.tuples.front()) r.bounds[name] = {1, 0};
  }
  r.tuples = std::move(kept);
}

}  // namespace

void ParamRanges::set_lower(const std::string& name, long long value) {
  if (!tuples.empty()) {
    filter_tuples(*this, [&](const auto& t) { return !t.count(name) || t.at(name) >= value; });
    return;
  }
  auto [it, fresh] = bounds.try_emplace(name, value, value);
  it->second.first = value;
}

void ParamRanges::set_upper(const std::string& name, long long value) {
  if (!tuples.empty()) {
    filter_tuples(*this, [&](const auto& t) { return !t.count(name) || t.at(name) <= value; });
    return;
  }
  auto [it, fresh] = bounds.try_emplace(name, value, value);
  it->second.second = value;
}

void ParamRanges::set_exact(const std::string& name, long long value) {
  convert_tuples_to_bounds();
  bounds[name] = {value, value};
}

ParamRanges ParamRanges::merged_with(const ParamRanges& overrides) const {
  ParamRanges out = *this;
  if (!overrides.tuples.empty()) {
    out.tuples = overrides.tuples;
  } else if (!overrides.bounds.empty()) {
    out.convert_tuples_to_bounds();
    for (const auto& [name, b] : overrides.bounds) out.bounds[name] = b;
  }
  for (const auto& [name, v] : overrides.limits) out.limits[name] = v;
  return out;
}

namespace {

ParamRanges parse_entry(const nlohmann::json& entry) {
  ParamRanges r;
  if (entry.contains("bounds")) {
    for (const auto& [name, b] : entry.at("bounds").items()) {
      r.bounds[name] = {b.at(0).get<long long>(), b.at(1).get<long long>()};
    }
  }
  if (entry.contains("tuples")) {
    for (const auto& t : entry.at("tuples")) {
      std::map<std::string, long long> tuple;
      for (const auto& [name, v] : t.items()) tuple[name] = v.get<long long>();
      r.tuples.push_back(std::move(tuple));
    }
  }
  if (entry.contains("limits")) {
    for (const auto& [name, v] : entry.at("limits").items()) r.limits[name] = v.get<long long>();
  }
  return r;
}

}  // namespace

ParamRanges ranges_from_config(std::string_view json_text, std::string_view theorem_id) {
  const auto doc = nlohmann::json::parse(json_text);
  const std::string key(theorem_id);
  if (!doc.contains(key)) return {};
  return parse_entry(doc.at(key));
}

ParamRanges default_ranges(std::string_view theorem_id) {
  return ranges_from_config(detail::kVerifyDefaults, theorem_id);
}

// ---------------------------------------------------------------------------
// Distribution cache

namespace {

struct DistributionCache {
  ForEach for_each;
  int enumeration_limit;
  std::mutex mutex;
  std::map<std::pair<int, StatPair>, std::shared_future<std::shared_ptr<const JointDistribution>>> cache;

  const JointDistribution& get(int n, StatPair sp) {
    std::promise<std::shared_ptr<const JointDistribution>> promise;
    std::shared_future<std::shared_ptr<const JointDistribution>> future;
    bool owner = false;
    {
      std::lock_guard lock(mutex);
      auto it = cache.find({n, sp});
      if (it == cache.end()) {
        future = promise.get_future().share();
        cache.emplace(std::make_pair(n, sp), future);
        owner = true;
      } else {
        future = it->second;
      }
    }
    if (owner) {
      try {
        promise.set_value(
            std::make_shared<const JointDistribution>(joint_distribution(n, sp, for_each, enumeration_limit)));
      } catch (...) {
        promise.set_exception(std::current_exception());
      }
    }
    return *future.get();
  }
};

long long get(const Params& p, std::string_view name) {
  for (const auto& [k, v] : p) {
    if (k == name) return v;
  }
  throw std::logic_error("missing parameter " + std::string(name));
}

int iget(const Params& p, std::string_view name) { return static_cast<int>(get(p, name)); }

int mod(long long a, long long m) { return static_cast<int>(((a % m) + m) % m); }

long long ipow(long long base, long long exp) {
  long long r = 1;
  for (long long e = 0; e < exp; ++e) r *= base;
  return r;
}

using DistKey = std::pair<int, StatPair>;

class Context {
 public:
  Context(DistributionCache& impl, const std::map<std::string, long long>& limits)
      : impl_(impl), limits_(limits) {}

  ResidueMatrix matrix(int n, int k, int l, StatPair sp = StatPair::MajImaj) {
    return impl_.get(n, sp).fold(k, l);
  }
  const JointDistribution& dist(int n, StatPair sp) { return impl_.get(n, sp); }

  long long limit(const std::string& name, long long fallback) const {
    auto it = limits_.find(name);
    return it == limits_.end() ? fallback : it->second;
  }
  int enumeration_limit() const { return impl_.enumeration_limit; }

 private:
  DistributionCache& impl_;
  const std::map<std::string, long long>& limits_;
};

using SkipFn = std::function<std::optional<std::string>(const Params&, const Context&)>;
using NeedsFn = std::function<std::vector<DistKey>(const Params&)>;
using CheckFn = std::function<void(const Params&, Context&, ReportBuilder&)>;

struct TheoremDef {
  TheoremInfo info;
  SkipFn skip;
  NeedsFn needs;
  CheckFn check;
};

std::string cell(const ResidueMatrix& m, int i, int j) {
  return "m_" + std::to_string(m.n()) + "^{" + std::to_string(m.k()) + "," + std::to_string(m.l()) + "}(" +
         std::to_string(i) + "," + std::to_string(j) + ")";
}

// Every entry of m equals `value`.
void expect_constant(ReportBuilder& report, const ResidueMatrix& m, const BigInt& value) {
  for (int i = 0; i < m.k(); ++i) {
    for (int j = 0; j < m.l(); ++j) {
      if (!report.expect(m.at(i, j) == value,
                         cell(m, i, j) + " = " + m.at(i, j).str() + ", expected " + value.str())) {
        return;
      }
    }
  }
}

void expect_same(ReportBuilder& report, const ResidueMatrix& got, const ResidueMatrix& want,
                 const std::string& label) {
  if (got.k() != want.k() || got.l() != want.l()) {
    report.expect(false, label + ": shape mismatch");
    return;
  }
  for (int i = 0; i < got.k(); ++i) {
    for (int j = 0; j < got.l(); ++j) {
      if (!report.expect(got.at(i, j) == want.at(i, j), label + ": " + cell(got, i, j) + " = " +
                                                            got.at(i, j).str() + " vs " + want.at(i, j).str())) {
        return;
      }
    }
  }
}

void expect_union(ReportBuilder& report, std::vector<Permutation> pieces, const std::vector<Permutation>& target,
                  const std::string& label) {
  std::sort(pieces.begin(), pieces.end());
  const auto dup = std::adjacent_find(pieces.begin(), pieces.end());
  if (!report.expect(dup == pieces.end(),
                     label + ": union not disjoint at " + (dup == pieces.end() ? std::string() : dup->to_string()))) {
    return;
  }
  report.expect(pieces == target, label + ": union of " + std::to_string(pieces.size()) + " differs from class of " +
                                      std::to_string(target.size()));
}

std::optional<std::string> unless(bool ok, const char* reason) {
  if (ok) return std::nullopt;
  return std::string(reason);
}

std::vector<DistKey> maj_of_n(const Params& p) { return {{iget(p, "n"), StatPair::MajImaj}}; }
std::vector<DistKey> nothing(const Params&) { return {}; }

// Orbits of the prefix-maximum insertion partition S_n into classes of size
// k meeting every inv residue mod k once.
void check_orbit_partition(int n, int k, ReportBuilder& report) {
  const auto total = factorial_u64(n);
  std::vector<char> seen(static_cast<std::size_t>(total), 0);
  std::uint64_t orbits = 0;
  for (const auto& p : PermutationStream(n)) {
    if (seen[static_cast<std::size_t>(rank(p))]) continue;
    auto orbit = prefix_max_orbit(p, k);
    ++orbits;
    std::vector<Permutation> sorted = orbit;
    std::sort(sorted.begin(), sorted.end());
    if (!report.expect(std::binary_search(sorted.begin(), sorted.end(), p), p.to_string() + " missing from its orbit")) {
      return;
    }
    std::set<int> residues;
    for (const auto& q : orbit) residues.insert(mod(inv(q), k));
    if (!report.expect(static_cast<int>(residues.size()) == k,
                       "orbit of " + p.to_string() + " covers " + std::to_string(residues.size()) + " of " +
                           std::to_string(k) + " inv residues")) {
      return;
    }
    for (const auto& q : orbit) {
      auto& mark = seen[static_cast<std::size_t>(rank(q))];
      if (!report.expect(!mark, q.to_string() + " lies in two orbits")) return;
      mark = 1;
      auto again = prefix_max_orbit(q, k);
      std::sort(again.begin(), again.end());
      if (!report.expect(again == sorted, "orbit of " + q.to_string() + " differs from orbit of " + p.to_string())) {
        return;
      }
    }
  }
  report.expect(orbits * static_cast<std::uint64_t>(k) == total,
                std::to_string(orbits) + " orbits of size " + std::to_string(k) + " do not cover " +
                    std::to_string(total));
}

std::vector<TheoremDef> build_registry() {
  std::vector<TheoremDef> defs;

  defs.push_back({{"prop-2.1", "m_n^k(i) = n!/k for k <= n; prefix-max orbits partition S_n", {"n", "k"}},
                  [](const Params& p, const Context&) {
                    return unless(get(p, "k") >= 1 && get(p, "k") <= get(p, "n"), "needs 1 <= k <= n");
                  },
                  [](const Params& p) {
                    return std::vector<DistKey>{{iget(p, "n"), StatPair::MajImaj}, {iget(p, "n"), StatPair::InvImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), k = iget(p, "k");
                    const BigInt want = exact_div(factorial(static_cast<unsigned>(n)), BigInt(k), "n!/k");
                    auto check = [&](const std::vector<BigInt>& v, const char* stat) {
                      for (std::size_t i = 0; i < v.size(); ++i) {
                        if (!report.expect(v[i] == want, std::string(stat) + " class " + std::to_string(i) + " has " +
                                                             v[i].str() + ", expected " + want.str())) {
                          return;
                        }
                      }
                    };
                    check(marginal_row(ctx.matrix(n, k, 1)), "maj");
                    check(marginal_column(ctx.matrix(n, 1, k)), "imaj");
                    check(marginal_row(ctx.matrix(n, k, 1, StatPair::InvImaj)), "inv");
                    if (n <= ctx.limit("orbits", 8)) check_orbit_partition(n, k, report);
                  }});

  defs.push_back({{"thm-main", "m_n^{k,l}(i,j) = n!/(kl) for coprime k, l <= n", {"n", "k", "l"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    const auto n = get(p, "n"), k = get(p, "k"), l = get(p, "l");
                    if (k < 1 || l < 1 || k > n || l > n) return "needs 1 <= k, l <= n";
                    if (gcd(k, l) != 1) return "k and l are not coprime";
                    return std::nullopt;
                  },
                  maj_of_n,
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), k = iget(p, "k"), l = iget(p, "l");
                    expect_constant(report, ctx.matrix(n, k, l),
                                    exact_div(factorial(static_cast<unsigned>(n)), BigInt(k * l), "n!/kl"));
                  }});

  defs.push_back({{"lem-grbase", "m_n^{n,l}(i,j) = n!/(nl) for l < n coprime to n", {"n", "l"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    const auto n = get(p, "n"), l = get(p, "l");
                    if (l < 1 || l >= n) return "needs 1 <= l < n";
                    if (gcd(n, l) != 1) return "l is not coprime to n";
                    return std::nullopt;
                  },
                  maj_of_n,
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), l = iget(p, "l");
                    expect_constant(report, ctx.matrix(n, n, l),
                                    exact_div(factorial(static_cast<unsigned>(n)), BigInt(n * l), "n!/nl"));
                  }});

  defs.push_back({{"lem-grind", "M_n(i,j) is the disjoint union of index-set shuffles", {"n", "k", "l"}},
                  [](const Params& p, const Context& ctx) -> std::optional<std::string> {
                    const auto n = get(p, "n"), k = get(p, "k"), l = get(p, "l");
                    if (k < 1 || l < 1 || l > n) return "needs k >= 1 and 1 <= l <= n";
                    if (n > ctx.limit("sets", kWitnessLimit)) return "class sets are only materialized for small n";
                    return std::nullopt;
                  },
                  nothing,
                  [](const Params& p, Context&, ReportBuilder& report) {
                    const int n = iget(p, "n"), k = iget(p, "k"), l = iget(p, "l");
                    for (int i = 0; i < k; ++i) {
                      for (int j = 0; j < l; ++j) {
                        const auto r = verify_grind(n, k, l, i, j);
                        if (!report.expect(r.passed(), r.witness.value_or("?"))) return;
                      }
                    }
                  }});

  defs.push_back({{"lem-ind", "M_n^{l,l}(i,j) is the disjoint union of gap-composition shuffles", {"n", "l"}},
                  [](const Params& p, const Context& ctx) -> std::optional<std::string> {
                    const auto n = get(p, "n"), l = get(p, "l");
                    if (l < 1 || l > n) return "needs 1 <= l <= n";
                    if (n > ctx.limit("sets", kWitnessLimit)) return "class sets are only materialized for small n";
                    return std::nullopt;
                  },
                  nothing,
                  [](const Params& p, Context&, ReportBuilder& report) {
                    const int n = iget(p, "n"), l = iget(p, "l");
                    for (int i = 0; i < l; ++i) {
                      for (int j = 0; j < l; ++j) {
                        const auto r = verify_ind(n, l, i, j);
                        if (!report.expect(r.passed(), r.witness.value_or("?"))) return;
                      }
                    }
                  }});

  defs.push_back({{"cor-n+1", "m_{n+1}^{n,n}(i,j) = m_n^{n,n}(i,j) + (n-1)!", {"n"}},
                  [](const Params& p, const Context&) { return unless(get(p, "n") >= 1, "needs n >= 1"); },
                  [](const Params& p) {
                    return std::vector<DistKey>{{iget(p, "n"), StatPair::MajImaj}, {iget(p, "n") + 1, StatPair::MajImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n");
                    const auto big = ctx.matrix(n + 1, n, n);
                    const auto small = ctx.matrix(n, n, n);
                    const BigInt shift = factorial(static_cast<unsigned>(n - 1));
                    for (int i = 0; i < n; ++i) {
                      for (int j = 0; j < n; ++j) {
                        if (!report.expect(big.at(i, j) == small.at(i, j) + shift,
                                           cell(big, i, j) + " = " + big.at(i, j).str() + " but " + cell(small, i, j) +
                                               " + (n-1)! = " + BigInt(small.at(i, j) + shift).str())) {
                          return;
                        }
                      }
                    }
                    expect_same(report, cor_n_plus_1_matrix(n), big, "closed form vs enumeration");
                  }});

  defs.push_back({{"thm-dthm", "m_n^{kd,ld}(i,j) kl = m_n^{d,d}(i mod d, j mod d), coprime k, l", {"n", "d", "k", "l"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    const auto n = get(p, "n"), d = get(p, "d"), k = get(p, "k"), l = get(p, "l");
                    if (d < 1 || k < 1 || l < 1) return "needs d, k, l >= 1";
                    if (gcd(k, l) != 1) return "k and l are not coprime";
                    if (std::max(k, l) * d > n) return "needs max(k,l) d <= n";
                    return std::nullopt;
                  },
                  maj_of_n,
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), d = iget(p, "d"), k = iget(p, "k"), l = iget(p, "l");
                    const auto big = ctx.matrix(n, k * d, l * d);
                    const auto small = ctx.matrix(n, d, d);
                    const auto blocks = block_decompose(big, d);
                    for (std::size_t r = 0; r < blocks.size(); ++r) {
                      for (std::size_t s = 0; s < blocks[r].size(); ++s) {
                        for (int a = 0; a < d; ++a) {
                          for (int b = 0; b < d; ++b) {
                            const auto& got = blocks[r][s][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                            const int i = static_cast<int>(r) * d + a, j = static_cast<int>(s) * d + b;
                            if (!report.expect(got * (k * l) == small.at(a, b),
                                               cell(big, i, j) + " = " + got.str() + ", kl times it differs from " +
                                                   cell(small, a, b) + " = " + small.at(a, b).str())) {
                              return;
                            }
                          }
                        }
                      }
                    }
                    expect_same(report, residue_class_sums(big, d), small, "residue class sums");
                  }});

  defs.push_back({{"eq-mnkeq", "m_n^{kd,d}(i,j) k = m_n^{d,d}(i mod d, j) for n >= kd", {"n", "d", "k"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    const auto n = get(p, "n"), d = get(p, "d"), k = get(p, "k");
                    if (d < 1 || k < 1) return "needs d, k >= 1";
                    if (k * d > n) return "needs n >= kd";
                    return std::nullopt;
                  },
                  maj_of_n,
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), d = iget(p, "d"), k = iget(p, "k");
                    const auto big = ctx.matrix(n, k * d, d);
                    const auto small = ctx.matrix(n, d, d);
                    for (int i = 0; i < k * d; ++i) {
                      for (int j = 0; j < d; ++j) {
                        if (!report.expect(big.at(i, j) * k == small.at(i % d, j),
                                           cell(big, i, j) + " = " + big.at(i, j).str() + " vs " +
                                               cell(small, i % d, j) + " = " + small.at(i % d, j).str())) {
                          return;
                        }
                      }
                    }
                  }});

  defs.push_back({{"eq-grbaseeq", "m_{kd}^{kd,ld}(i,j) kl = m_{kd}^{d,d}(i mod d, j mod d), l < k coprime",
                   {"d", "k", "l"}},
                  [](const Params& p, const Context& ctx) -> std::optional<std::string> {
                    const auto d = get(p, "d"), k = get(p, "k"), l = get(p, "l");
                    if (d < 1 || l < 1 || l >= k) return "needs d >= 1 and 1 <= l < k";
                    if (gcd(k, l) != 1) return "k and l are not coprime";
                    if (k * d > ctx.limit("size", ctx.enumeration_limit())) return "kd exceeds the size limit";
                    return std::nullopt;
                  },
                  [](const Params& p) {
                    return std::vector<DistKey>{{iget(p, "k") * iget(p, "d"), StatPair::MajImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int d = iget(p, "d"), k = iget(p, "k"), l = iget(p, "l");
                    const int n = k * d;
                    const auto big = ctx.matrix(n, k * d, l * d);
                    const auto small = ctx.matrix(n, d, d);
                    for (int i = 0; i < k * d; ++i) {
                      for (int j = 0; j < l * d; ++j) {
                        if (!report.expect(big.at(i, j) * (k * l) == small.at(i % d, j % d),
                                           cell(big, i, j) + " = " + big.at(i, j).str() + " vs " +
                                               cell(small, i % d, j % d) + " = " + small.at(i % d, j % d).str())) {
                          return;
                        }
                      }
                    }
                  }});

  defs.push_back({{"thm-base", "divisor-sum formula for m_n^{n,n}(i,j)", {"n"}},
                  [](const Params& p, const Context&) { return unless(get(p, "n") >= 1, "needs n >= 1"); },
                  maj_of_n,
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n");
                    expect_same(report, mnnn_matrix(n), ctx.matrix(n, n, n), "formula vs enumeration");
                    for (int j = 0; j < n; ++j) {
                      report.expect(mnnn(n, 0, j) == mnnn(n, n, j),
                                    "residue 0 and representative n disagree at j=" + std::to_string(j));
                    }
                  }});

  defs.push_back({{"cor-gcd", "m_n^{n,n} and m_{n+1}^{n,n} depend only on gcd(i,n), gcd(j,n)", {"n"}},
                  [](const Params& p, const Context&) { return unless(get(p, "n") >= 1, "needs n >= 1"); },
                  [](const Params& p) {
                    return std::vector<DistKey>{{iget(p, "n"), StatPair::MajImaj}, {iget(p, "n") + 1, StatPair::MajImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n");
                    auto rep = [n](int i) { return static_cast<int>(cor_gcd_canonical(i, n) % n); };
                    for (const auto& m : {ctx.matrix(n, n, n), ctx.matrix(n + 1, n, n)}) {
                      for (int i = 0; i < n; ++i) {
                        for (int j = 0; j < n; ++j) {
                          if (!report.expect(m.at(i, j) == m.at(rep(i), rep(j)),
                                             cell(m, i, j) + " = " + m.at(i, j).str() + " differs from " +
                                                 cell(m, rep(i), rep(j)) + " = " + m.at(rep(i), rep(j)).str())) {
                            return;
                          }
                        }
                      }
                    }
                    for (int i = 0; i < n; ++i) {
                      for (int j = 0; j < n; ++j) {
                        report.expect(mnnn(n, i, j) == mnnn(n, cor_gcd_canonical(i, n), cor_gcd_canonical(j, n)),
                                      "formula not gcd-invariant at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                      }
                    }
                  }});

  defs.push_back({{"prop-prime", "explicit M_p^{p,p} and M_{p+1}^{p,p} for prime p", {"p"}},
                  [](const Params& p, const Context&) { return unless(is_prime(get(p, "p")), "p is not prime"); },
                  [](const Params& p) {
                    return std::vector<DistKey>{{iget(p, "p"), StatPair::MajImaj}, {iget(p, "p") + 1, StatPair::MajImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int q = iget(p, "p");
                    expect_same(report, prime_matrix(q), ctx.matrix(q, q, q), "S_p");
                    expect_same(report, prime_matrix_plus1(q), ctx.matrix(q + 1, q, q), "S_{p+1}");
                  }});

  defs.push_back({{"thm-prime", "M_{np}^{p,p} and M_{np+1}^{p,p} have (q, r, s) block form", {"p", "n", "companion"}},
                  [](const Params& p, const Context& ctx) -> std::optional<std::string> {
                    if (!is_prime(get(p, "p"))) return "p is not prime";
                    if (get(p, "n") < 1) return "needs n >= 1";
                    if (get(p, "n") * get(p, "p") + get(p, "companion") > ctx.limit("size", ctx.enumeration_limit())) {
                      return "np (+1) exceeds the size limit";
                    }
                    return std::nullopt;
                  },
                  [](const Params& p) {
                    return std::vector<DistKey>{
                        {iget(p, "n") * iget(p, "p") + iget(p, "companion"), StatPair::MajImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int q = iget(p, "p");
                    const int size = iget(p, "n") * q + iget(p, "companion");
                    try {
                      block_spec_of(ctx.matrix(size, q, q), q);
                    } catch (const BlockStructureError& e) {
                      report.expect(false, e.what());
                    }
                  }});

  defs.push_back({{"prop-prime-power", "m_{p^r}^{p^r,p^r}(p^i, p^j) from the prime-power sum", {"p", "r"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    if (!is_prime(get(p, "p"))) return "p is not prime";
                    if (get(p, "r") < 1) return "needs r >= 1";
                    return std::nullopt;
                  },
                  [](const Params& p) {
                    return std::vector<DistKey>{{static_cast<int>(ipow(get(p, "p"), get(p, "r"))), StatPair::MajImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int q = iget(p, "p"), r = iget(p, "r");
                    const int n = static_cast<int>(ipow(q, r));
                    const auto m = ctx.matrix(n, n, n);
                    for (int i = 0; i <= r; ++i) {
                      for (int j = i; j <= r; ++j) {
                        const BigInt want = prime_power_entry(q, r, i, j);
                        const int a = static_cast<int>(ipow(q, i) % n), b = static_cast<int>(ipow(q, j) % n);
                        report.expect(m.at(a, b) == want, cell(m, a, b) + " = " + m.at(a, b).str() +
                                                              ", prime-power sum gives " + want.str());
                        report.expect(mnnn(n, ipow(q, i), ipow(q, j)) == want,
                                      "divisor sum and prime-power sum disagree at (p^" + std::to_string(i) + ", p^" +
                                          std::to_string(j) + ")");
                      }
                    }
                  }});

  defs.push_back({{"thm-prime-power", "m_{np^r(+1)}^{p^r,p^r} is fixed by its (p^i, p^j) entries, equal for j > i",
                   {"p", "r", "n", "companion"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    if (!is_prime(get(p, "p"))) return "p is not prime";
                    if (get(p, "r") < 1 || get(p, "n") < 1) return "needs r, n >= 1";
                    return std::nullopt;
                  },
                  [](const Params& p) {
                    const auto size = get(p, "n") * ipow(get(p, "p"), get(p, "r")) + get(p, "companion");
                    return std::vector<DistKey>{{static_cast<int>(size), StatPair::MajImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int q = iget(p, "p"), r = iget(p, "r");
                    const int mod_n = static_cast<int>(ipow(q, r));
                    const int size = iget(p, "n") * mod_n + iget(p, "companion");
                    const auto m = ctx.matrix(size, mod_n, mod_n);
                    auto rep = [mod_n](int i) { return static_cast<int>(cor_gcd_canonical(i, mod_n) % mod_n); };
                    for (int i = 0; i < mod_n; ++i) {
                      for (int j = 0; j < mod_n; ++j) {
                        if (!report.expect(m.at(i, j) == m.at(rep(i), rep(j)),
                                           cell(m, i, j) + " = " + m.at(i, j).str() + " differs from gcd class entry " +
                                               cell(m, rep(i), rep(j)) + " = " + m.at(rep(i), rep(j)).str())) {
                          return;
                        }
                      }
                    }
                    for (int a = 0; a < r; ++a) {
                      const int i = static_cast<int>(ipow(q, a) % mod_n);
                      const int first = static_cast<int>(ipow(q, a + 1) % mod_n);
                      for (int b = a + 2; b <= r; ++b) {
                        const int j = static_cast<int>(ipow(q, b) % mod_n);
                        report.expect(m.at(i, j) == m.at(i, first), cell(m, i, j) + " = " + m.at(i, j).str() +
                                                                        " differs from " + cell(m, i, first) + " = " +
                                                                        m.at(i, first).str());
                      }
                    }
                  }});

  defs.push_back(
      {{"thm-p2-items-1-5", "b_n = m_n^{2,2}: shuffle set identity, recursions, c_n integrality, symmetries", {"n"}},
       [](const Params& p, const Context&) { return unless(get(p, "n") >= 2, "needs n >= 2"); },
       [](const Params& p) {
         std::vector<DistKey> keys;
         for (int t = std::max(1, iget(p, "n") - 2); t <= iget(p, "n"); ++t) keys.emplace_back(t, StatPair::MajImaj);
         return keys;
       },
       [](const Params& p, Context& ctx, ReportBuilder& report) {
         const int n = iget(p, "n");
         const auto b = ctx.matrix(n, 2, 2);

         // item 1
         if (n <= ctx.limit("sets", kWitnessLimit)) {
           const auto whole = witness_sets(n, 2, 2, StatPair::InvImaj);
           const auto rest = witness_sets(n - 2, 2, 2, StatPair::InvImaj);
           auto B = [](const auto& sets, int i, int j) -> const std::vector<Permutation>& {
             return sets[static_cast<std::size_t>(mod(i, 2) * 2 + mod(j, 2))];
           };
           const Permutation up = Permutation::parse("12"), down = Permutation::parse("21");
           for (int i = 0; i < 2; ++i) {
             for (int j = 0; j < 2; ++j) {
               std::vector<Permutation> pieces;
               auto add = [&](const Permutation& pi, bool odd, const std::vector<Permutation>& sigmas) {
                 for (int g = odd ? 1 : 2; g <= n - 1; g += 2) {
                   for (const auto& sigma : sigmas) {
                     auto part = shuffle_gamma(pi, sigma, GapComposition({g}));
                     pieces.insert(pieces.end(), part.begin(), part.end());
                   }
                 }
               };
               add(up, true, B(rest, i, j));
               add(up, false, B(rest, i + 1, j));
               add(down, false, B(rest, i, j + 1));
               add(down, true, B(rest, i + 1, j + 1));
               expect_union(report, std::move(pieces), B(whole, i, j),
                            "item 1 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
             }
           }
         }

         // items 2, 3
         if (n >= 4) {
           const auto prev = ctx.matrix(n - 2, 2, 2);
           expect_same(report, b_step(prev, n), b, "item 2 recursion");
           expect_same(report, c_step(c_from_b(prev), n), c_from_b(b), "item 3 recursion");
         }
         c_from_b(b);  // throws ExactnessError if c_n is not integral
         expect_same(report, b_recursion(n), b, "recursion chain from b_2, b_3");

         // item 4
         for (int i = 0; i < 2; ++i) {
           for (int j = 0; j < 2; ++j) {
             report.expect(b.at(i, j) == b.at((i + 1) % 2, (j + 1) % 2), "item 4 fails at " + cell(b, i, j));
           }
         }

         // item 5, stated for 2n >= 4
         if (n % 2 == 0 && n >= 4) {
           const auto odd = ctx.matrix(n - 1, 2, 2);
           for (int i = 0; i < 2; ++i) {
             for (int j = 0; j < 2; ++j) {
               report.expect(b.at(i, j) == odd.at(i, j) * n,
                             "item 5 fails at " + cell(b, i, j) + " = " + b.at(i, j).str());
             }
           }
         }
       }});

  defs.push_back({{"f_l-shift", "f_l maps class (i, j) to (i + l mod n, j mod l) bijectively", {"n", "l"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    return unless(get(p, "l") >= 1 && get(p, "l") < get(p, "n"), "needs 1 <= l < n");
                  },
                  nothing,
                  [](const Params& p, Context&, ReportBuilder& report) {
                    const int n = iget(p, "n"), l = iget(p, "l");
                    std::vector<char> hit(static_cast<std::size_t>(factorial_u64(n)), 0);
                    for (const auto& tau : PermutationStream(n)) {
                      const auto image = f_l(tau, l);
                      const std::string who = "tau=" + tau.to_string() + " f=" + image.to_string();
                      const bool wraps = tau[n] <= l;
                      const int cross_shift = wraps ? -(n - l) : l;
                      bool ok = report.expect(mod(inv(image) - inv(tau) - l, n) == 0, who + ": inv shift") &&
                                report.expect(mod(imaj(image) - imaj(tau), l) == 0, who + ": imaj shift") &&
                                report.expect(inv_between(image, l) == inv_between(tau, l) + cross_shift,
                                              who + ": cross inversions") &&
                                report.expect(f_l_inverse(image, l) == tau, who + ": inverse");
                      if (!ok) return;
                      auto& mark = hit[static_cast<std::size_t>(rank(image))];
                      if (!report.expect(!mark, who + ": image hit twice")) return;
                      mark = 1;
                    }
                  }});

  defs.push_back({{"g-shift", "g maps class (i, j) mod (kd, d) to (i + d, j) bijectively", {"n", "d", "k"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    const auto n = get(p, "n"), d = get(p, "d"), k = get(p, "k");
                    return unless(d >= 1 && k >= 2 && k * d <= n, "needs d >= 1, k >= 2, kd <= n");
                  },
                  nothing,
                  [](const Params& p, Context&, ReportBuilder& report) {
                    const int n = iget(p, "n"), d = iget(p, "d"), k = iget(p, "k");
                    std::vector<char> hit(static_cast<std::size_t>(factorial_u64(n)), 0);
                    for (const auto& tau : PermutationStream(n)) {
                      const auto image = g_map(tau, d, k);
                      const std::string who = "tau=" + tau.to_string() + " g=" + image.to_string();
                      bool ok = report.expect(mod(inv(image) - inv(tau) - d, k * d) == 0, who + ": inv shift") &&
                                report.expect(mod(imaj(image) - imaj(tau), d) == 0, who + ": imaj shift") &&
                                report.expect(g_map_inverse(image, d, k) == tau, who + ": inverse");
                      if (!ok) return;
                      auto& mark = hit[static_cast<std::size_t>(rank(image))];
                      if (!report.expect(!mark, who + ": image hit twice")) return;
                      mark = 1;
                    }
                  }});

  defs.push_back({{"syt-oracle", "tableau-pair count equals enumeration (and the divisor sum at k = l = n)",
                   {"n", "k", "l"}},
                  [](const Params& p, const Context& ctx) -> std::optional<std::string> {
                    const auto n = get(p, "n"), k = get(p, "k"), l = get(p, "l");
                    if (k < 1 || l < 1 || k > n || l > n) return "needs 1 <= k, l <= n";
                    if (n > kMaxSytN) return "n exceeds the tableau enumeration limit";
                    if (n > ctx.limit("enum", 9) && !(k == n && l == n)) {
                      return "beyond the enumeration range only k = l = n has an independent reference";
                    }
                    return std::nullopt;
                  },
                  nothing,
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), k = iget(p, "k"), l = iget(p, "l");
                    const auto syt = joint_matrix_syt(n, k, l);
                    if (n <= ctx.limit("enum", 9)) expect_same(report, syt, ctx.matrix(n, k, l), "tableaux vs enumeration");
                    if (k == n && l == n) expect_same(report, syt, mnnn_matrix(n), "tableaux vs divisor sum");
                    BigInt squares = 0;
                    for (const auto& shape : partitions(n)) {
                      const BigInt f = shape.hook_length_count();
                      squares += f * f;
                    }
                    report.expect(squares == factorial(static_cast<unsigned>(n)),
                                  "sum of squared tableau counts is " + squares.str());
                  }});

  defs.push_back({{"maj-inv-equidist", "(maj, imaj) and (inv, imaj) are equidistributed on S_n", {"n", "k", "l"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    return unless(get(p, "k") >= 1 && get(p, "l") >= 1, "needs k, l >= 1");
                  },
                  [](const Params& p) {
                    return std::vector<DistKey>{{iget(p, "n"), StatPair::MajImaj}, {iget(p, "n"), StatPair::InvImaj}};
                  },
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), k = iget(p, "k"), l = iget(p, "l");
                    expect_same(report, ctx.matrix(n, k, l, StatPair::InvImaj), ctx.matrix(n, k, l), "INV_IMAJ vs MAJ_IMAJ");
                    const auto& a = ctx.dist(n, StatPair::MajImaj);
                    const auto& b = ctx.dist(n, StatPair::InvImaj);
                    for (int s = 0; s <= a.max_stat(); ++s) {
                      for (int t = 0; t <= a.max_stat(); ++t) {
                        if (!report.expect(a.count(s, t) == b.count(s, t),
                                           "raw pair (" + std::to_string(s) + "," + std::to_string(t) + ") counts " +
                                               std::to_string(a.count(s, t)) + " vs " + std::to_string(b.count(s, t)))) {
                          return;
                        }
                      }
                    }
                  }});

  defs.push_back({{"transpose-law", "m_n^{k,l}(i,j) = m_n^{l,k}(j,i)", {"n", "k", "l"}},
                  [](const Params& p, const Context&) -> std::optional<std::string> {
                    return unless(get(p, "k") >= 1 && get(p, "l") >= 1, "needs k, l >= 1");
                  },
                  maj_of_n,
                  [](const Params& p, Context& ctx, ReportBuilder& report) {
                    const int n = iget(p, "n"), k = iget(p, "k"), l = iget(p, "l");
                    expect_same(report, ctx.matrix(n, k, l), ctx.matrix(n, l, k).transposed(), "transpose");
                  }});

  return defs;
}

const std::vector<TheoremDef>& registry() {
  static const std::vector<TheoremDef> defs = build_registry();
  return defs;
}

const TheoremDef& find(std::string_view id) {
  for (const auto& d : registry()) {
    if (d.info.id == id) return d;
  }
  throw UnknownTheoremError("unknown theorem id '" + std::string(id) + "'");
}

std::vector<Params> expand(const std::vector<std::string>& names, const ParamRanges& ranges) {
  std::vector<Params> out;
  if (!ranges.tuples.empty()) {
    for (const auto& t : ranges.tuples) {
      Params p;
      for (const auto& name : names) {
        auto it = t.find(name);
        if (it == t.end()) throw std::invalid_argument("tuple is missing parameter '" + name + "'");
        p.emplace_back(name, it->second);
      }
      out.push_back(std::move(p));
    }
  } else {
    std::vector<std::pair<long long, long long>> b;
    for (const auto& name : names) {
      auto it = ranges.bounds.find(name);
      if (it == ranges.bounds.end()) throw std::invalid_argument("no range given for parameter '" + name + "'");
      if (it->second.first > it->second.second) return out;
      b.push_back(it->second);
    }
    Params cur;
    for (std::size_t i = 0; i < names.size(); ++i) cur.emplace_back(names[i], b[i].first);
    while (true) {
      out.push_back(cur);
      std::size_t t = names.size();
      while (t > 0) {
        --t;
        if (cur[t].second < b[t].second) {
          ++cur[t].second;
          for (std::size_t u = t + 1; u < names.size(); ++u) cur[u].second = b[u].first;
          break;
        }
        if (t == 0) return out;
      }
      if (names.empty()) return out;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

struct Verifier::Impl : DistributionCache {};

const std::vector<TheoremInfo>& theorems() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> v;
    for (const auto& d : registry()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

Verifier::Verifier(ForEach for_each, int enumeration_limit)
    : impl_(std::make_unique<Impl>()) {
  impl_->for_each = std::move(for_each);
  impl_->enumeration_limit = std::min(enumeration_limit, kMaxEnumerationN);
}

Verifier::~Verifier() = default;

const JointDistribution& Verifier::distribution(int n, StatPair statpair) { return impl_->get(n, statpair); }

std::vector<VerificationReport> Verifier::run(std::string_view theorem_id) {
  return run(theorem_id, ParamRanges{});
}

std::vector<VerificationReport> Verifier::run(std::string_view theorem_id, const ParamRanges& ranges) {
  const auto& def = find(theorem_id);
  const auto merged = default_ranges(theorem_id).merged_with(ranges);
  const auto tuples = expand(def.info.params, merged);
  Context ctx(*impl_, merged.limits);

  std::vector<std::optional<std::string>> skip(tuples.size());
  std::set<DistKey> needed;
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    skip[t] = def.skip(tuples[t], ctx);
    if (skip[t]) continue;
    const auto keys = def.needs(tuples[t]);
    for (const auto& key : keys) {
      if (key.first > impl_->enumeration_limit) {
        skip[t] = "needs S_" + std::to_string(key.first) + ", beyond the enumeration limit " +
                  std::to_string(impl_->enumeration_limit);
      }
    }
    if (!skip[t]) needed.insert(keys.begin(), keys.end());
  }
  // largest groups first; each pass is spread over the workers
  for (auto it = needed.rbegin(); it != needed.rend(); ++it) impl_->get(it->first, it->second);

  std::vector<VerificationReport> reports(tuples.size());
  impl_->for_each(tuples.size(), [&](std::size_t t) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r;
    if (skip[t]) {
      r = VerificationReport::skip(def.info.id, tuples[t], *skip[t]);
    } else {
      ReportBuilder builder(def.info.id, tuples[t]);
      try {
        def.check(tuples[t], ctx, builder);
      } catch (const std::exception& e) {
        builder.expect(false, std::string("exception: ") + e.what());
      }
      r = builder.finish();
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    reports[t] = std::move(r);
  });
  return reports;
}

std::vector<VerificationReport> run(std::string_view theorem_id, const ParamRanges& ranges, const ForEach& for_each) {
  Verifier verifier(for_each);
  return verifier.run(theorem_id, ranges);
}

}  // namespace majperm
