#include "doctest.h"
#include "properties.hpp"

using namespace og10::test;

namespace {

constexpr int kCases = 1000;

void check_run(const PropertyRun& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= kCases);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("smith normal form") { check_run(snf_property(kCases)); }
TEST_CASE("hermite normal form") { check_run(hnf_property(kCases)); }
TEST_CASE("saturation") { check_run(saturation_property(kCases)); }
TEST_CASE("double orthogonal complement") { check_run(double_complement_property(kCases)); }
TEST_CASE("reflections are involutive isometries") { check_run(reflection_property(kCases)); }
TEST_CASE("Eichler invariants") { check_run(eichler_property(kCases)); }
TEST_CASE("chamber partition") { check_run(chamber_property(kCases)); }
TEST_CASE("divisibility") { check_run(divisibility_property(kCases)); }
