#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "bsdh/character.hpp"

using namespace bsdh;

namespace {

RootSystem make(const char* t) { return RootSystem(DynkinType::parse(t)); }

Character single(const RootSystem& rs, const Weight& w) {
  Character c;
  c.add(w, 1);
  return c;
}

}  // namespace

TEST_CASE("character arithmetic") {
  RootSystem a2 = make("A2");
  Character c = Character::unit(2);
  CHECK(c.dimension() == 1);
  CHECK(c.multiplicity(Weight{{0, 0}}) == 1);
  c.add(Weight{{1, 0}}, 2);
  c.add(Weight{{1, 0}}, -2);  // cancels away, no stored zero
  CHECK(c.terms().size() == 1);
  c.add(Weight{{0, 1}}, -3);
  CHECK(c.dimension() == -2);
  CHECK_FALSE(c.all_nonnegative());
}

TEST_CASE("step operator cases") {
  RootSystem a1 = make("A1");
  Weight alpha = a1.to_weight(a1.simple_root(1));  // (2)

  // m = 2: three-term string alpha, 0, -alpha
  Character up = demazure_operator(a1, 1, single(a1, alpha));
  CHECK(up.dimension() == 3);
  CHECK(up.multiplicity(alpha) == 1);
  CHECK(up.multiplicity(Weight{{0}}) == 1);
  CHECK(up.multiplicity(Weight{{-2}}) == 1);

  // m = 0: fixed
  Character fixed = demazure_operator(a1, 1, single(a1, Weight{{0}}));
  CHECK(fixed == single(a1, Weight{{0}}));

  // m = -1: annihilated
  CHECK(demazure_operator(a1, 1, single(a1, Weight{{-1}})).empty());

  // m = -3: two negative terms at lambda + alpha, lambda + 2 alpha
  Character down = demazure_operator(a1, 1, single(a1, Weight{{-3}}));
  CHECK(down.dimension() == -2);
  CHECK(down.multiplicity(Weight{{-1}}) == -1);
  CHECK(down.multiplicity(Weight{{1}}) == -1);

  // m >= 0 images are reflection-invariant, so the operator is idempotent
  RootSystem a2 = make("A2");
  Character chi = demazure_operator(a2, 1, single(a2, Weight{{2, 1}}));
  CHECK(demazure_operator(a2, 1, chi) == chi);
}

TEST_CASE("length-one section characters") {
  for (const char* t : {"A2", "B2", "G2"}) {
    RootSystem rs = make(t);
    for (int i = 1; i <= rs.rank(); ++i) {
      Character chi = anticanonical_character(rs, Word{{i}});
      Weight alpha = rs.to_weight(rs.simple_root(i));
      Weight zero{std::vector<int>(2, 0)};
      CHECK(chi.dimension() == 3);
      CHECK(chi.multiplicity(alpha) == 1);
      CHECK(chi.multiplicity(zero) == 1);
      CHECK(chi.multiplicity(zero - alpha) == 1);
    }
  }
}

TEST_CASE("two-step section character") {
  RootSystem a2 = make("A2");
  Character chi = anticanonical_character(a2, Word{{1, 2}});
  CHECK(chi.dimension() == 9);
  CHECK(chi.terms().size() == 9);  // multiplicity-free
  CHECK(chi.all_nonnegative());
  // bottom weight is the dot action at zero: s_1 s_2 . 0 = (-3, 0)
  CHECK(chi.multiplicity(Weight{{-3, 0}}) == 1);
  CHECK(anticanonical_character(a2, Word{}).dimension() == 1);
  CHECK_THROWS_AS(anticanonical_character(a2, Word{{1, 1}}), DomainError);
}

TEST_CASE("lowest-weight reports on ordering words") {
  for (const char* t : {"A2", "A3", "B3", "C3", "G2"}) {
    RootSystem rs = make(t);
    std::vector<int> perm(static_cast<std::size_t>(rs.rank()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      LowestWeightReport report =
          character_lowest_weight_report(rs, Word{perm});
      CHECK(report.certified);
      CHECK(report.lowest_ok);
      CHECK(report.dominance_ok);
      CHECK(report.pass());
      CHECK_FALSE(report.witness.has_value());
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("lowest-weight report on a longer word") {
  RootSystem a3 = make("A3");
  LowestWeightReport report =
      character_lowest_weight_report(a3, Word{{1, 2, 1, 3, 2, 1}});
  // the longest A3 element: expected bottom is w(rho) - rho = -2 rho
  CHECK(report.expected_lowest == Weight{{-2, -2, -2}});
  CHECK(report.dimension == anticanonical_character(a3, Word{{1, 2, 1, 3, 2, 1}}).dimension());

  RootSystem d4 = make("D4");
  LowestWeightReport d4r = character_lowest_weight_report(d4, Word{{2, 1, 3, 4}});
  // the class is not globally generated, yet the character is still an
  // honest multiplicity pattern with the predicted bottom
  CHECK(d4r.certified);
  CHECK(d4r.pass());
  CHECK(d4r.dimension == 81);
  CHECK(d4r.expected_lowest ==
        w_dot_zero(d4, element_of(d4, Word{{2, 1, 3, 4}})));
}

TEST_CASE("empty word report") {
  RootSystem a2 = make("A2");
  LowestWeightReport report = character_lowest_weight_report(a2, Word{});
  CHECK(report.certified);
  CHECK(report.pass());
  CHECK(report.dimension == 1);
  CHECK(report.expected_lowest == Weight{{0, 0}});
}
