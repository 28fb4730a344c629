#include <doctest.h>

#include "../tools/property_suites.hpp"

using namespace mb;
using suites::SuiteResult;

namespace {

void assert_suite(const SuiteResult& r) {
  INFO(r.summary());
  CHECK(r.cases >= 200);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("bulk law: smallest Markov degree is two to the nonface size minus one") {
  assert_suite(suites::suite_initial_degree_law());
}

TEST_CASE("bulk law: completion engine agrees with the exhaustive scan") {
  assert_suite(suites::suite_engine_scan_agreement());
}

TEST_CASE("bulk law: every basis move is canonical, homogeneous, and margin-balanced") {
  assert_suite(suites::suite_move_laws());
}

TEST_CASE("bulk law: Euler characteristics agree and cones are acyclic") {
  assert_suite(suites::suite_euler_and_cones());
}

TEST_CASE("bulk law: invariants survive vertex relabeling") {
  assert_suite(suites::suite_relabel_invariance());
}

TEST_CASE("bulk law: recipe tableaux counts and kernel membership") {
  assert_suite(suites::suite_recipe_counts());
}
