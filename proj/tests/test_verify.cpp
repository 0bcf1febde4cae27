#include "helpers.hpp"
#include "hlab/verify.hpp"

using namespace hlab;

TEST_SUITE("verify") {

TEST_CASE("every suite passes on a fixed seed") {
  for (const std::string& name : suite_names()) {
    CAPTURE(name);
    const SuiteReport r = run_suite(name, 12345, 40);
    CHECK(r.passed());
    CHECK(r.cases == 40);
    CHECK(r.checks >= 40);
  }
}

TEST_CASE("reports are deterministic for a seed") {
  CHECK(run_suite("content-laws", 3, 20).to_json().dump() == run_suite("content-laws", 3, 20).to_json().dump());
  CHECK(run_suite("curves", 3, 20).to_json() == run_suite("curves", 3, 20).to_json());
  const nlohmann::json j = run_suite("separation", 9, 5).to_json();
  CHECK(j["seed"] == 9);
  CHECK(j["passed"] == true);
  CHECK(j["failures"].empty());
}

TEST_CASE("unknown suite") { CHECK_CODE(run_suite("nope", 1, 1), ErrorCode::BadParams); }

}  // TEST_SUITE
