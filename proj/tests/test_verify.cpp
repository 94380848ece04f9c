#include <doctest.h>

#include <stdexcept>

#include "ordcalc/verify.hpp"

TEST_CASE("verify suites all pass") {
  for (const char* suite : {"stirling", "lemmas", "fock"}) {
    CAPTURE(suite);
    for (const auto& check : ordcalc::verify_suite(suite)) {
      CAPTURE(check.name);
      CAPTURE(check.max_error);
      CHECK(check.pass);
      CHECK(check.max_error <= check.tolerance);
    }
  }
  CHECK(ordcalc::verify_suite("all").size() == 11);
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(ordcalc::verify_suite("bogus"), std::invalid_argument);
}
