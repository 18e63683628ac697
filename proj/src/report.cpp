#include "majperm/report.hpp"

#include "json.hpp"

namespace majperm {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

std::string describe(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(value);
  }
  return out;
}

VerificationReport VerificationReport::pass(std::string id, Params params) {
  return {std::move(id), std::move(params), Status::Pass, std::nullopt, {}};
}

VerificationReport VerificationReport::fail(std::string id, Params params, std::string witness) {
  return {std::move(id), std::move(params), Status::Fail, std::move(witness), {}};
}

VerificationReport VerificationReport::skip(std::string id, Params params, std::string reason) {
  return {std::move(id), std::move(params), Status::Skipped, std::move(reason), {}};
}

bool ReportBuilder::expect(bool ok, const std::string& witness) {
  if (!ok && !witness_) witness_ = witness;
  return ok;
}

VerificationReport ReportBuilder::finish() const {
  if (witness_) return VerificationReport::fail(id_, params_, *witness_);
  return VerificationReport::pass(id_, params_);
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["theorem_id"] = r.theorem_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    j["params"] = std::move(params);
    j["status"] = std::string(to_string(r.status));
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    if (with_timing) j["elapsed_ms"] = r.elapsed.count();
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace majperm
