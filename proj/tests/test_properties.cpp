#include <gtest/gtest.h>

#include "suites.hpp"

using namespace crtube;
using namespace crtube::suites;

namespace {

const std::vector<std::pair<std::string, GradedLieAlgebra>>& algebras() {
  static const auto algs = computed_algebras();
  return algs;
}

void expect_pass(const Verdict& v) {
  EXPECT_GT(v.cases, 0u);
  EXPECT_TRUE(v.failures.empty()) << v.summary();
}

}  // namespace

TEST(Properties, KernelChainMonotone) { expect_pass(property_chain_monotone()); }

TEST(Properties, GradingClosure) { expect_pass(property_grading_closure(algebras())); }

TEST(Properties, CoefficientParity) { expect_pass(property_parity(algebras())); }

TEST(Properties, GammaInvariance) {
  Verdict v = property_gamma_invariance();
  EXPECT_EQ(v.cases, 200u);
  expect_pass(v);
}

TEST(Properties, BackendAgreement) { expect_pass(property_backend_agreement()); }

TEST(Properties, StoppingRule) { expect_pass(property_stopping_rule()); }

TEST(Properties, EveryDefaultAlgebraComputed) {
  // All default entries except the verification-only one yield an algebra.
  EXPECT_EQ(algebras().size() + 1, default_entry_names().size());
}
