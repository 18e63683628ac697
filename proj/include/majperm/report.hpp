#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace majperm {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

// Ordered (name, value) list; order is the theorem's declared parameter order.
using Params = std::vector<std::pair<std::string, long long>>;

std::string describe(const Params& params);  // "n=4 k=3 l=2"

struct VerificationReport {
  std::string theorem_id;
  Params params;
  Status status = Status::Pass;
  std::optional<std::string> witness;  // always set when status == Fail
  std::chrono::duration<double, std::milli> elapsed{0};

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }

  static VerificationReport pass(std::string id, Params params);
  static VerificationReport fail(std::string id, Params params, std::string witness);
  static VerificationReport skip(std::string id, Params params, std::string reason);
};

// Accumulates sub-checks of one parameter tuple; the first failure wins.
class ReportBuilder {
 public:
  ReportBuilder(std::string id, Params params) : id_(std::move(id)), params_(std::move(params)) {}

  // Returns `ok` so callers can short-circuit.
  bool expect(bool ok, const std::string& witness);
  bool ok() const { return !witness_; }

  VerificationReport finish() const;

 private:
  std::string id_;
  Params params_;
  std::optional<std::string> witness_;
};

// JSON array, one object per report, in the given order.
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing = true);

}  // namespace majperm
