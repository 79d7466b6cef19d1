#include <doctest.h>

#include <json.hpp>

#include "gwa/parse.hpp"
#include "gwa/verify.hpp"

using namespace gwa;

namespace {

VerifyOptions quick_options() {
  VerifyOptions o;
  o.bound = 2;
  o.random_iterations = 12;
  return o;
}

}  // namespace

TEST_CASE("the full suite passes on a regular quadratic polynomial") {
  auto ctx = AlgebraCtx::make(parse_zpoly("z^2-1"));
  VerificationReport r = run_verify_all(ctx, quick_options());
  for (const auto& c : r.checks) {
    INFO(c.name, ": ", c.counterexample);
    CHECK(c.status != CheckStatus::Fail);
  }
  CHECK(r.all_passed());
  CHECK(r.count(CheckStatus::Skipped) == 0);
}

TEST_CASE("non-separable p skips the regular-only checks with a reason") {
  auto ctx = AlgebraCtx::make(parse_zpoly("z"));
  VerificationReport r = run_verify_all(ctx, quick_options());
  CHECK(r.all_passed());  // skipped entries do not fail the run
  size_t skipped = 0;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Skipped) {
      ++skipped;
      CHECK(c.counterexample == "p not q^2-separable");
    }
  }
  CHECK(skipped > 0);
  // the core algebra checks still run
  for (const auto& c : r.checks) {
    if (c.name.rfind("algebra/", 0) == 0) CHECK(c.status == CheckStatus::Pass);
  }
}

TEST_CASE("constant p skips only the integral checks") {
  auto ctx = AlgebraCtx::make(parse_zpoly("1"));
  VerificationReport r = run_verify_all(ctx, quick_options());
  CHECK(r.all_passed());
  for (const auto& c : r.checks) {
    if (c.name.rfind("integral/", 0) == 0) {
      CHECK(c.status == CheckStatus::Skipped);
      CHECK(c.counterexample == "constant p has trivial integral space");
    } else {
      CHECK(c.status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("reports are deterministic and thread count does not matter") {
  auto ctx = AlgebraCtx::make(parse_zpoly("z^2-1"));
  VerifyOptions o = quick_options();
  VerificationReport a = run_verify_all(ctx, o);
  VerificationReport b = run_verify_all(ctx, o);
  o.threads = 4;
  VerificationReport c = run_verify_all(ctx, o);
  REQUIRE(a.checks.size() == b.checks.size());
  REQUIRE(a.checks.size() == c.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].name == c.checks[i].name);
    CHECK(a.checks[i].status == c.checks[i].status);
    // names arrive sorted
    if (i > 0) CHECK(a.checks[i - 1].name < a.checks[i].name);
  }
}

TEST_CASE("json report shape") {
  auto ctx = AlgebraCtx::make(parse_zpoly("1-z"));
  VerifyOptions o = quick_options();
  o.random_iterations = 4;
  VerificationReport r = run_verify_all(ctx, o);
  auto parsed = nlohmann::json::parse(r.to_json());
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == r.checks.size());
  for (const auto& entry : parsed) {
    CHECK(entry.contains("name"));
    CHECK(entry.contains("ref"));
    CHECK(entry.contains("status"));
    CHECK(entry.contains("counterexample"));
    CHECK(entry.contains("millis"));
    std::string st = entry["status"];
    CHECK((st == "pass" || st == "fail" || st == "skipped"));
  }
}

TEST_CASE("a broken parameter set is caught") {
  auto ctx = AlgebraCtx::make(parse_zpoly("z^2-1"));
  VerifyOptions o = quick_options();
  o.random_iterations = 4;
  o.spin.nu = Scalar::q() * o.spin.nu;  // violates the constraint
  VerificationReport r = run_verify_all(ctx, o);
  bool jd_failed = false;
  for (const auto& c : r.checks)
    if (c.name == "spin/j-d-commute" && c.status == CheckStatus::Fail) jd_failed = true;
  CHECK(jd_failed);
  CHECK_FALSE(r.all_passed());
}
