#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "majperm/verify.hpp"

using namespace majperm;

namespace {

ParamRanges bounds(std::map<std::string, std::pair<long long, long long>> b) {
  ParamRanges r;
  r.bounds = std::move(b);
  return r;
}

bool none_failed(const std::vector<VerificationReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
}

std::size_t count(const std::vector<VerificationReport>& reports, Status s) {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [s](const auto& r) { return r.status == s; }));
}

}  // namespace

TEST_CASE("registry") {
  std::vector<std::string> ids;
  for (const auto& t : theorems()) ids.push_back(t.id);
  for (const char* id : {"prop-2.1", "thm-main", "lem-grbase", "lem-grind", "lem-ind", "cor-n+1", "thm-dthm",
                         "eq-mnkeq", "eq-grbaseeq", "thm-base", "cor-gcd", "prop-prime", "thm-prime",
                         "prop-prime-power", "thm-prime-power", "thm-p2-items-1-5", "f_l-shift", "g-shift",
                         "syt-oracle"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK_THROWS_AS(run("thm-nope", {}), UnknownTheoremError);
}

TEST_CASE("main theorem and marginals") {
  const auto main = run("thm-main", bounds({{"n", {1, 7}}, {"k", {1, 7}}, {"l", {1, 7}}}));
  CHECK(main.size() == 7 * 7 * 7);
  CHECK(none_failed(main));
  CHECK(count(main, Status::Pass) > 0);

  const auto prop = run("prop-2.1", bounds({{"n", {1, 7}}, {"k", {1, 7}}}));
  CHECK(none_failed(prop));
  CHECK(count(prop, Status::Pass) == 28);
}

TEST_CASE("hypothesis violations are skipped, not failed") {
  const auto r = run("thm-main", bounds({{"n", {4, 4}}, {"k", {2, 2}}, {"l", {2, 2}}}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == Status::Skipped);
  CHECK(r[0].witness.has_value());
}

TEST_CASE("every theorem passes on a small range") {
  Verifier verifier(sequential(), 9);
  for (const auto& t : theorems()) {
    auto ranges = default_ranges(t.id);
    if (ranges.tuples.empty() && ranges.bounds.count("n")) ranges.set_upper("n", 6);
    const auto reports = verifier.run(t.id, ranges);
    CAPTURE(t.id);
    REQUIRE(!reports.empty());
    for (const auto& r : reports) {
      CAPTURE(describe(r.params));
      CAPTURE(r.witness.value_or(""));
      REQUIRE(!r.failed());
    }
  }
}

TEST_CASE("enumeration limit turns large tuples into skips") {
  Verifier verifier(sequential(), 6);
  const auto r = verifier.run("thm-base", bounds({{"n", {5, 8}}}));
  REQUIRE(r.size() == 4);
  CHECK(r[0].passed());
  CHECK(r[1].passed());
  CHECK(r[2].status == Status::Skipped);
  CHECK(r[3].status == Status::Skipped);
}

TEST_CASE("range editing") {
  auto grind = default_ranges("lem-grind");
  REQUIRE(grind.tuples.size() == 3);
  grind.set_upper("n", 5);
  CHECK(grind.tuples.size() == 2);
  grind.set_lower("n", 9);
  CHECK(grind.tuples.empty());
  CHECK(run("lem-grind", grind).empty());

  auto box = default_ranges("lem-grind");
  box.set_exact("n", 4);
  CHECK(box.tuples.empty());
  CHECK(box.bounds.at("n") == std::pair<long long, long long>{4, 4});
  CHECK(box.bounds.at("k") == std::pair<long long, long long>{3, 5});

  const auto merged = default_ranges("thm-main").merged_with(bounds({{"n", {2, 3}}}));
  CHECK(merged.bounds.at("n") == std::pair<long long, long long>{2, 3});
  CHECK(merged.bounds.at("k") == std::pair<long long, long long>{1, 8});

  const auto cfg = ranges_from_config(R"({"thm-base": {"bounds": {"n": [2, 4]}, "limits": {"size": 5}}})", "thm-base");
  CHECK(cfg.bounds.at("n") == std::pair<long long, long long>{2, 4});
  CHECK(cfg.limits.at("size") == 5);
  CHECK(ranges_from_config("{}", "thm-base").bounds.empty());
}

TEST_CASE("report serialization") {
  ReportBuilder b("demo", {{"n", 3}});
  CHECK(b.expect(true, "unused"));
  CHECK_FALSE(b.expect(false, "first"));
  b.expect(false, "second");
  const auto failed = b.finish();
  CHECK(failed.failed());
  CHECK(failed.witness == "first");

  const auto doc = nlohmann::json::parse(
      reports_to_json({failed, VerificationReport::pass("demo", {{"n", 4}, {"k", 2}})}, false));
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["theorem_id"] == "demo");
  CHECK(doc[0]["status"] == "fail");
  CHECK(doc[0]["witness"] == "first");
  CHECK(doc[1]["params"]["k"] == 2);
  CHECK(doc[1]["status"] == "pass");
  CHECK(doc[1]["witness"].is_null());
  CHECK_FALSE(doc[0].contains("elapsed_ms"));
  CHECK(describe({{"n", 4}, {"k", 3}}) == "n=4 k=3");
}

TEST_CASE("reports do not depend on the worker count") {
  const auto ranges = bounds({{"n", {1, 8}}, {"d", {1, 3}}, {"k", {1, 4}}, {"l", {1, 4}}});
  const auto a = reports_to_json(run("thm-dthm", ranges, sequential()), false);
  const auto b = reports_to_json(run("thm-dthm", ranges, threaded(8)), false);
  CHECK(a == b);
}
