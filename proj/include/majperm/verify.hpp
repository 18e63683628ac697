#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "majperm/parallel.hpp"
#include "majperm/permutation.hpp"
#include "majperm/report.hpp"
#include "majperm/residue_matrix.hpp"

namespace majperm {

class UnknownTheoremError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter space for one theorem check: inclusive bounds per parameter
/// (cartesian product), or an explicit tuple list, plus scalar limits such as
/// the largest group a check may enumerate.
struct ParamRanges {
  std::map<std::string, std::pair<long long, long long>> bounds;
  std::vector<std::map<std::string, long long>> tuples;
  std::map<std::string, long long> limits;

  // `overrides` wins per bound and per limit; any override bound or tuple
  // replaces the default tuple list.
  ParamRanges merged_with(const ParamRanges& overrides) const;

  // Replaces an explicit tuple list by the bounding box of its tuples, so
  // that single bounds can then be edited.
  void convert_tuples_to_bounds();
  // On a tuple list these filter the tuples; otherwise they move one bound.
  // A lower bound above the upper one gives an empty range.
  void set_lower(const std::string& name, long long value);
  void set_upper(const std::string& name, long long value);
  // Pins one parameter; a tuple list is first widened to its bounding box.
  void set_exact(const std::string& name, long long value);
};

struct TheoremInfo {
  std::string id;
  std::string summary;
  std::vector<std::string> params;
};

const std::vector<TheoremInfo>& theorems();

// Defaults compiled in from config/verify_defaults.json.
ParamRanges default_ranges(std::string_view theorem_id);

// Parses one theorem's entry from a config document with the same layout as
// config/verify_defaults.json; missing entries give empty ranges.
ParamRanges ranges_from_config(std::string_view json_text, std::string_view theorem_id);

/// Runs theorem checks. Owns a cache of exhaustive (stat, imaj) histograms so
/// that every check on S_n shares one pass over the group.
class Verifier {
 public:
  explicit Verifier(ForEach for_each = sequential(), int enumeration_limit = kMaxEnumerationN);
  ~Verifier();
  Verifier(const Verifier&) = delete;
  Verifier& operator=(const Verifier&) = delete;

  // One report per parameter tuple, sorted by parameter values. Tuples that
  // violate the theorem's hypotheses are reported as skipped. Throws
  // UnknownTheoremError for an unknown id.
  std::vector<VerificationReport> run(std::string_view theorem_id, const ParamRanges& ranges);
  std::vector<VerificationReport> run(std::string_view theorem_id);  // defaults

  const JointDistribution& distribution(int n, StatPair statpair);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<VerificationReport> run(std::string_view theorem_id, const ParamRanges& ranges,
                                    const ForEach& for_each = sequential());

}  // namespace majperm
