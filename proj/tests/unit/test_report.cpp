#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "schlomilch/report.hpp"

using namespace schlomilch;

TEST_CASE("finalize applies the relative pass rule") {
  VerificationReport r;
  r.lhs = 100.0 + 5e-7;
  r.rhs = 100.0;
  r.tol = 1e-8;
  r.converged = true;
  finalize(r);
  CHECK(r.pass);
  CHECK(r.abs_err == doctest::Approx(5e-7).epsilon(1e-6));
  CHECK(r.rel_err == doctest::Approx(5e-9).epsilon(1e-6));

  r.lhs = 100.0 + 2e-6;
  finalize(r);
  CHECK_FALSE(r.pass);

  // Below |rhs| = 1 the rule is absolute.
  r.lhs = 1e-3 + 5e-9;
  r.rhs = 1e-3;
  finalize(r);
  CHECK(r.pass);

  r.converged = false;
  finalize(r);
  CHECK_FALSE(r.pass);

  r.converged = true;
  finalize(r, false);
  CHECK_FALSE(r.pass);

  r.lhs = std::numeric_limits<double>::quiet_NaN();
  finalize(r);
  CHECK_FALSE(r.pass);
}

TEST_CASE("quadrature_tol stays inside the quadrature limits") {
  CHECK(quadrature_tol(1e-8, 1.0) == doctest::Approx(1e-10));
  CHECK(quadrature_tol(1e-12, 1.0) == doctest::Approx(1e-14));
  CHECK(quadrature_tol(1e-3, 1e9) == doctest::Approx(1e-3));
  CHECK(quadrature_tol(1e-8, 100.0) == doctest::Approx(1e-8));
  CHECK(quadrature_tol(1e-8, NAN) == doctest::Approx(1e-10));
}

TEST_CASE("JSON has exactly the report fields and round-trips") {
  VerificationReport r;
  r.id = "x";
  r.params = {{"a", 0.5}, {"b", 2.0}};
  r.lhs = 1.25;
  r.rhs = 1.25;
  r.tol = 1e-8;
  r.converged = true;
  r.flags = {"f1"};
  r.evaluations = 17;
  r.notes = {"not serialized"};
  finalize(r);
  auto j = to_json(r);
  CHECK(j.size() == 10);
  for (const char* k : {"id", "params", "lhs", "rhs", "abs_err", "rel_err", "tol", "pass",
                        "flags", "evaluations"})
    CHECK(j.contains(k));
  CHECK_NOTHROW(validate_report_json(j));
  auto back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.id == r.id);
  CHECK(back.params == r.params);
  CHECK(back.lhs == r.lhs);
  CHECK(back.pass == r.pass);
  CHECK(back.flags == r.flags);
  CHECK(back.evaluations == r.evaluations);
  CHECK(to_json(back) == j);
}

TEST_CASE("non-finite values serialize as null") {
  VerificationReport r;
  r.id = "nan";
  r.lhs = std::numeric_limits<double>::quiet_NaN();
  r.rhs = 1.0;
  r.tol = 1e-8;
  finalize(r);
  auto j = to_json(r);
  CHECK(j["lhs"].is_null());
  CHECK_NOTHROW(validate_report_json(j));
  CHECK(std::isnan(report_from_json(j).lhs));
}

TEST_CASE("schema violations are rejected") {
  VerificationReport r;
  r.id = "x";
  auto j = to_json(r);
  auto missing = j;
  missing.erase("tol");
  CHECK_THROWS_AS(validate_report_json(missing), std::invalid_argument);
  auto extra = j;
  extra["notes"] = "x";
  CHECK_THROWS_AS(validate_report_json(extra), std::invalid_argument);
  auto mistyped = j;
  mistyped["pass"] = "yes";
  CHECK_THROWS_AS(validate_report_json(mistyped), std::invalid_argument);
  CHECK_THROWS_AS(validate_report_json(nlohmann::json::array()), std::invalid_argument);
}
