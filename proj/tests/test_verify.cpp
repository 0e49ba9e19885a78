#include <string>

#include "doctest.h"
#include "mlqm/verify.hpp"

using namespace mlqm;

TEST_CASE("full suite passes at the default configuration") {
  const auto report = verify::run_all(verify::Options{});
  CHECK(report.all_passed());
  CHECK(report.checks.size() > std::size_t{40});

  // Documented convention discrepancies surface as informational entries,
  // each carrying a measured value; they never fail the suite.
  for (const char* name :
       {"kinetic-alternate-constant", "delta-asymptotic-order",
        "phi-prefactor-convention", "coulomb-expansion-sign",
        "coulomb-veff-envelope"}) {
    const auto* c = report.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->status == verify::Status::info);
    CHECK(c->measured != 0.0);
    CHECK_FALSE(c->detail.empty());
  }

  // The oracle cross-checks must genuinely pass, not be downgraded.
  for (const char* name :
       {"nystrom-delta-ground", "nystrom-coulomb-ground",
        "nystrom-coulomb-direct-no-level", "assemble-parallel-serial-identical",
        "gradshteyn-whittaker-identity", "ml-overlap-quadrature"}) {
    const auto* c = report.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->status == verify::Status::pass);
  }
}

TEST_CASE("coarse grids downgrade oracle checks to warnings") {
  verify::Options opt;
  opt.grid_size = 50;
  const auto report = verify::run_all(opt);
  CHECK(report.all_passed());
  for (const char* name : {"nystrom-delta-ground", "nystrom-coulomb-ground",
                           "nystrom-coulomb-direct-no-level"}) {
    const auto* c = report.find(name);
    REQUIRE(c != nullptr);
    CHECK(c->status == verify::Status::warn);
    CHECK(c->detail.find("coarse grid") != std::string::npos);
  }
}

TEST_CASE("reports are deterministic for fixed options") {
  verify::Options opt;
  opt.grid_size = 120;
  const auto a = verify::run_all(opt);
  const auto b = verify::run_all(opt);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].measured == b.checks[i].measured);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("status names match the serialization contract") {
  CHECK(std::string(verify::to_string(verify::Status::pass)) == "pass");
  CHECK(std::string(verify::to_string(verify::Status::fail)) == "fail");
  CHECK(std::string(verify::to_string(verify::Status::info)) == "info");
  CHECK(std::string(verify::to_string(verify::Status::warn)) == "warn");
}
