#include "doctest.h"
#include "helpers.hpp"
#include "sqperc/verify.hpp"

using namespace sqperc;
using test::kind_of;

namespace {

const Check* find_check(const ConstructionVerdict& v, const std::string& prefix) {
  for (const auto& c : v.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("g-prime") == Family::GPrime);
  CHECK(parse_family("g") == Family::G);
  CHECK(parse_family("ladder") == Family::Ladder);
  CHECK(parse_family("bipartite-demo") == Family::BipartiteDemo);
  CHECK_FALSE(parse_family("G"));
}

TEST_CASE("G prime verdict") {
  const auto v = verify_construction(Family::GPrime);
  CHECK(v.passed());
  CHECK(v.first_failure() == nullptr);
  CHECK(v.certificate.find("(size 33, support 22/22)") != std::string::npos);
}

TEST_CASE("bipartite demo verdict") {
  const auto v = verify_construction(Family::BipartiteDemo);
  CHECK(v.passed());
  CHECK(v.checks.size() == 3);
}

TEST_CASE("G verdict reports its component structure") {
  const auto v = verify_construction(Family::G);
  const Check* count = find_check(v, "non-trivial components = 2");
  REQUIRE(count);
  CHECK(count->passed);
  const Check* full = find_check(v, "all non-trivial components have full support");
  REQUIRE(full);
  CHECK(full->passed);
  CHECK(v.certificate.find("support 22/22") != std::string::npos);
}

TEST_CASE("ladder verdict carries the decomposition") {
  const auto v = verify_construction(Family::Ladder, {22, 12}, 1);
  CHECK(v.passed());
  CHECK(v.certificate.find("component ") != std::string::npos);
  const auto bad = verify_construction(Family::Ladder, {11, 2}, 1);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.first_failure());
  CHECK(bad.first_failure()->detail.find("OverlapDetected") != std::string::npos);
}

TEST_CASE("verdict with no checks does not pass") {
  ConstructionVerdict v;
  CHECK_FALSE(v.passed());
}

TEST_CASE("oracle suite") {
  const auto s = run_oracle_suite(25, 200, 12345);
  CHECK(s.instances == 200);
  CHECK_FALSE(s.failure);
  CHECK(s.squares_checked > 0);
  CHECK(kind_of([] { run_oracle_suite(65, 10, 1); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { run_oracle_suite(1, 10, 1); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { run_oracle_suite(10, 0, 1); }) == ErrorKind::InvalidParams);
  CHECK_FALSE(check_oracles(build_g()));
  CHECK_FALSE(check_oracles(build_complete_bipartite(3, 5)));
}
