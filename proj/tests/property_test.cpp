#include <gtest/gtest.h>

#include "properties.hpp"

namespace mlts::testing {
namespace {

constexpr std::size_t kCases = 1000;

void expect_ok(const SuiteResult& r) {
  EXPECT_GE(r.cases, kCases);
  EXPECT_TRUE(r.ok()) << r.failures << " failures; first: " << r.first_failure;
}

TEST(Property, ClosedProgramsHaveClosedValues) { expect_ok(no_free_atoms(11, kCases)); }
TEST(Property, StepsPreserveTypes) { expect_ok(preservation(12, kCases)); }
TEST(Property, PoliciesAndBigStepAgree) { expect_ok(determinacy(13, kCases)); }
TEST(Property, MatchingIsUnitary) { expect_ok(unitary_matching(14, kCases)); }
TEST(Property, OpenCloseAndAlphaLaws) { expect_ok(syntax_laws(15, kCases)); }

}  // namespace
}  // namespace mlts::testing
