#include <doctest.h>

#include <stdexcept>
#include <string>

#include "catkit/sweep.hpp"
#include "catkit/verify.hpp"

using namespace catkit;

TEST_CASE("full-precision formatting") {
  CHECK(format_full(0.5) == "0.5");
  CHECK(format_full(1.0 / 3.0) == "0.33333333333333331");
  // round-trips through 17 significant digits
  double v = 0.1 + 0.2;
  CHECK(std::stod(format_full(v)) == v);
}

TEST_CASE("sweep result validation") {
  CHECK_THROWS_AS(SweepResult({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(SweepResult({}), std::invalid_argument);

  SweepResult table({"x", "y"});
  CHECK_THROWS_AS(table.add_row({1.0}), std::invalid_argument);
}

TEST_CASE("csv body is stable and excludes metadata") {
  SweepResult table({"x", "y"});
  table.add_row({1.0, 2.0 / 3.0});
  table.add_row({-0.25, 1e-12});
  table.add_metadata("generated_at", "2026-01-01T00:00:00Z");

  std::string body = table.body_csv();
  CHECK(body == "x,y\n1,0.66666666666666663\n-0.25,9.9999999999999998e-13\n");
  CHECK(body.find("generated_at") == std::string::npos);

  std::string full = table.to_csv();
  CHECK(full.find("# generated_at: 2026-01-01T00:00:00Z\n") == 0);
  CHECK(full.find(body) != std::string::npos);

  // byte-identical across repeated serialization
  CHECK(table.body_csv() == body);
}

TEST_CASE("json serializes numbers as strings") {
  SweepResult table({"value"});
  table.add_row({1.0 / 3.0});
  std::string json = table.to_json();
  CHECK(json.find("\"0.33333333333333331\"") != std::string::npos);
  CHECK(json.find("\"columns\": [\"value\"]") != std::string::npos);
}

TEST_CASE("verification report formatting") {
  VerifyReport report;
  report.checks.push_back({"fock", "ladder", 1e-15, 1e-12, true, false});
  report.checks.push_back({"channels", "ordering", 0.2, 0.0, false, true});
  report.checks.push_back({"su11", "casimir", 1e-3, 1e-10, false, false});

  CHECK(report.warnings() == 1);
  CHECK(report.hard_failures() == 1);
  CHECK(!report.all_hard_passed());

  std::string csv = report.to_csv();
  CHECK(csv.find("suite,check,measured,threshold,status\n") == 0);
  CHECK(csv.find("fock,ladder,") != std::string::npos);
  CHECK(csv.find(",pass\n") != std::string::npos);
  CHECK(csv.find(",warn\n") != std::string::npos);
  CHECK(csv.find(",fail\n") != std::string::npos);
}
