#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bsdh/fixtures.hpp"
#include "bsdh/verify.hpp"

using namespace bsdh;

namespace {

const char* kCorpus = R"(# toy corpus
[fixture]
name = a2-line
type = A
rank = 2
word = 1
m    = 2
gg   = yes
fano = yes

[fixture]
name   = g2-bad
type   = G
rank   = 2
word   = 1,2
m      = -1,2
gg     = no
fano   = no
source = long root first
)";

}  // namespace

TEST_CASE("fixture parsing") {
  std::istringstream in(kCorpus);
  std::vector<Fixture> fx = parse_fixtures(in);
  REQUIRE(fx.size() == 2);
  CHECK(fx[0].name == "a2-line");
  CHECK(fx[0].type == DynkinType::parse("A2"));
  CHECK(fx[0].word == Word{{1}});
  REQUIRE(fx[0].expected_m.has_value());
  CHECK(*fx[0].expected_m == std::vector<long long>{2});
  CHECK(fx[0].expected_gg == true);
  CHECK(fx[0].source.empty());
  CHECK(fx[1].name == "g2-bad");
  CHECK(fx[1].expected_fano == false);
  CHECK(fx[1].source == "long root first");
}

TEST_CASE("fixture parse errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_fixtures(in);
  };
  // unknown key
  CHECK_THROWS_AS(parse("[fixture]\nname=x\ntype=A\nrank=2\nword=1\ncolor=red\n"),
                  std::invalid_argument);
  // bad flag value
  CHECK_THROWS_AS(parse("[fixture]\nname=x\ntype=A\nrank=2\nword=1\ngg=maybe\n"),
                  std::invalid_argument);
  // m length disagrees with word length
  CHECK_THROWS_AS(parse("[fixture]\nname=x\ntype=A\nrank=2\nword=1,2\nm=2\n"),
                  std::invalid_argument);
  // missing name / missing type
  CHECK_THROWS_AS(parse("[fixture]\ntype=A\nrank=2\nword=1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse("[fixture]\nname=x\nword=1\n"), std::invalid_argument);
  // text outside a block
  CHECK_THROWS_AS(parse("name=x\n"), std::invalid_argument);
  // rank out of range for the family is a domain error, not a parse error
  CHECK_THROWS_AS(parse("[fixture]\nname=x\ntype=G\nrank=3\nword=1\n"),
                  DomainError);
}

TEST_CASE("running fixtures") {
  std::istringstream in(kCorpus);
  std::vector<Fixture> fx = parse_fixtures(in);
  std::vector<FixtureResult> res = run_fixtures(fx);
  REQUIRE(res.size() == 2);
  CHECK(res[0].pass);
  CHECK(res[1].pass);
  CHECK(res[1].computed.m.coeffs == std::vector<long long>{-1, 2});

  // a planted mismatch is reported, not thrown
  fx[0].expected_fano = false;
  res = run_fixtures(fx);
  CHECK_FALSE(res[0].pass);
  CHECK_FALSE(res[0].detail.empty());
}

TEST_CASE("shipped corpus") {
  std::vector<Fixture> fx = load_fixtures(BSDH_FIXTURE_FILE);
  CHECK(fx.size() == 18);
  std::vector<FixtureResult> res = run_fixtures(fx);
  for (const FixtureResult& r : res) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(load_fixtures("/nonexistent/fixtures.txt"),
                  std::invalid_argument);
}

TEST_CASE("type list parsing") {
  std::vector<TypeScope> ts = parse_type_list("A3,B3,G2");
  REQUIRE(ts.size() == 3);
  CHECK(ts[0].type == DynkinType::parse("A3"));
  CHECK_FALSE(ts[0].param.has_value());
  CHECK(ts[2].type == DynkinType::parse("G2"));

  ts = parse_type_list("A4:2,D4:4");
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].param == 2);
  CHECK(ts[1].type == DynkinType::parse("D4"));
  CHECK(ts[1].param == 4);

  CHECK_THROWS_AS(parse_type_list("A3:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_list("A3,,B2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_type_list("Q7"), std::invalid_argument);
}

TEST_CASE("suite dispatch") {
  CHECK(suite_names().size() == 7);
  CHECK_THROWS_AS(run_suite("no-such-suite", VerifyScope{}), DomainError);
  // fixtures suite needs a file path
  CHECK_THROWS_AS(run_suite("fixtures", VerifyScope{}), DomainError);

  VerifyScope scope;
  scope.fixtures_path = BSDH_FIXTURE_FILE;
  SuiteResult fr = run_suite("fixtures", scope);
  CHECK(fr.suite == "fixtures");
  CHECK(fr.checks == 18);
  CHECK(fr.pass());
}

TEST_CASE("census suite default sweep") {
  SuiteResult r = run_suite("census", VerifyScope{});
  CHECK(r.pass());
  CHECK(r.checks > 0);
}

TEST_CASE("scoped suites") {
  VerifyScope scope;
  scope.types = parse_type_list("A3,B2");
  SuiteResult r = run_suite("oracle-m", scope);
  CHECK(r.pass());
  CHECK(r.checks > 0);

  scope.types = parse_type_list("B3:3");
  r = run_suite("thm58", scope);
  CHECK(r.pass());
  // the minuscule suite insists on its index parameter
  scope.types = parse_type_list("B3");
  CHECK_THROWS_AS(run_suite("thm58", scope), DomainError);

  scope.types = parse_type_list("A3,G2");
  r = run_suite("cor54", scope);
  CHECK(r.pass());
  r = run_suite("character", scope);
  CHECK(r.pass());
  r = run_suite("thm56", scope);
  CHECK(r.pass());

  // max_rank filter drops types above the bound
  VerifyScope capped;
  capped.types = parse_type_list("A2,A3");
  capped.max_rank = 2;
  SuiteResult small = run_suite("character", capped);
  VerifyScope only_a2;
  only_a2.types = parse_type_list("A2");
  CHECK(small.checks == run_suite("character", only_a2).checks);
}
