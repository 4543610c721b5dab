#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bsdh/picard.hpp"

using namespace bsdh;

namespace {

RootSystem make(const char* t) { return RootSystem(DynkinType::parse(t)); }

std::vector<long long> m_of(const char* t, std::initializer_list<int> letters) {
  RootSystem rs = make(t);
  return anticanonical_o_coeffs(rs, Word{std::vector<int>(letters)}).coeffs;
}

}  // namespace

TEST_CASE("known m-vectors") {
  CHECK(m_of("A3", {1, 2, 1, 3, 2, 1}) == std::vector<long long>{1, 0, 1, 1, 1, 2});
  CHECK(m_of("A3", {1, 2, 3, 2, 1, 2}) == std::vector<long long>{0, 1, 0, 1, 1, 2});
  CHECK(m_of("A3", {2, 3, 1, 2, 1, 3}) == std::vector<long long>{0, 1, 1, 0, 2, 2});
  CHECK(m_of("A4", {3, 2, 1, 4, 3, 2, 3, 1, 4, 3}) ==
        std::vector<long long>{0, 0, 1, 0, 1, -1, 1, 2, 1, 2});
  CHECK(m_of("A5", {3, 4, 5, 4, 2, 1, 2}) ==
        std::vector<long long>{-2, 1, 1, 2, 1, 1, 2});
  CHECK(m_of("D4", {2, 1, 3, 4}) == std::vector<long long>{-1, 2, 2, 2});
  CHECK(m_of("A1", {1}) == std::vector<long long>{2});
  CHECK(m_of("G2", {2, 1}) == std::vector<long long>{1, 2});
  CHECK(m_of("G2", {1, 2}) == std::vector<long long>{-1, 2});
}

TEST_CASE("decomposition route agrees on every longest-element word") {
  RootSystem a3 = make("A3");
  for (const Word& w : all_reduced_words(a3, longest_element(a3)))
    CHECK(anticanonical_o_coeffs(a3, w).coeffs ==
          o_coeffs_via_decomposition(a3, w).coeffs);
}

TEST_CASE("fibration coefficients of one pullback") {
  RootSystem a2 = make("A2");
  Word w{{1, 2}};
  // k = 2, lambda = omega_2: entries (<omega_2, s_2(alpha_1)>, <omega_2, alpha_2>)
  CHECK(demazure_x_coeffs(a2, w, 2, a2.fundamental_weight(2)) ==
        std::vector<long long>{1, 1});
  // k = 1 is the bare pairing
  CHECK(demazure_x_coeffs(a2, w, 1, a2.fundamental_weight(1)) ==
        std::vector<long long>{1});
  CHECK_THROWS_AS(demazure_x_coeffs(a2, w, 3, a2.rho()), DomainError);
  CHECK_THROWS_AS(demazure_x_coeffs(a2, w, 0, a2.rho()), DomainError);
  CHECK_THROWS_AS(demazure_x_coeffs(a2, Word{{1, 1}}, 1, a2.rho()), DomainError);
}

TEST_CASE("anti-canonical class in the divisor basis") {
  RootSystem a2 = make("A2");
  CHECK(anticanonical_x_coeffs(a2, Word{{1}}).coeffs == std::vector<long long>{2});
  CHECK(anticanonical_x_coeffs(a2, Word{{1, 2}}).coeffs ==
        std::vector<long long>{3, 2});
  RootSystem a3 = make("A3");
  for (const Word& w : all_reduced_words(a3, longest_element(a3))) {
    PicardClass x = anticanonical_x_coeffs(a3, w);
    CHECK(std::all_of(x.coeffs.begin(), x.coeffs.end(),
                      [](long long v) { return v >= 2; }));
  }
}

TEST_CASE("basis conversions invert each other") {
  RootSystem b3 = make("B3");
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> dist(-40, 40);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_reduced_word(b3, rng);
    PicardClass o{Basis::O, {}, w};
    for (int k = 0; k < w.size(); ++k) o.coeffs.push_back(dist(rng));
    PicardClass x = o_to_x(b3, w, o);
    CHECK(x.basis == Basis::X);
    CHECK(x_to_o(b3, w, x).coeffs == o.coeffs);
    // the two anti-canonical descriptions are the same class
    CHECK(x_to_o(b3, w, anticanonical_x_coeffs(b3, w)).coeffs ==
          anticanonical_o_coeffs(b3, w).coeffs);
  }
  Word w{{1, 2}};
  PicardClass zero{Basis::O, {0, 0}, w};
  CHECK(o_to_x(b3, w, zero).coeffs == std::vector<long long>{0, 0});
  PicardClass wrong_tag{Basis::X, {0, 0}, w};
  CHECK_THROWS_AS(o_to_x(b3, w, wrong_tag), DomainError);
  PicardClass short_class{Basis::O, {1}, w};
  CHECK_THROWS_AS(o_to_x(b3, w, short_class), DomainError);
}

TEST_CASE("positivity flags") {
  RootSystem a3 = make("A3");
  Classification staircase = classify(a3, Word{{1, 2, 1, 3, 2, 1}});
  CHECK(staircase.globally_generated);
  CHECK_FALSE(staircase.fano);
  CHECK_FALSE(staircase.very_ample);
  CHECK(staircase.weak_fano_certified);
  CHECK(staircase.big);

  RootSystem d4 = make("D4");
  Classification bad = classify(d4, Word{{2, 1, 3, 4}});
  CHECK_FALSE(bad.globally_generated);
  CHECK_FALSE(bad.weak_fano_certified);
  CHECK(bad.big);

  RootSystem a2 = make("A2");
  Classification fano = classify(a2, Word{{1, 2, 1}});
  CHECK(fano.fano);
  CHECK(fano.very_ample);
  CHECK(fano.globally_generated);

  Classification point = classify(a2, Word{});
  CHECK(point.globally_generated);
  CHECK(point.fano);
  CHECK(point.m.coeffs.empty());

  CHECK_THROWS_AS(classify(a2, Word{{1, 1}}), DomainError);
}

TEST_CASE("single-occurrence criterion") {
  RootSystem d4 = make("D4");
  CHECK_FALSE(coxeter_gg_criterion(d4, Word{{2, 1, 3, 4}}));
  CHECK(coxeter_gg_criterion(d4, Word{{1, 3, 4, 2}}));
  RootSystem a2 = make("A2");
  CHECK(coxeter_gg_criterion(a2, Word{{1, 2}}));
  CHECK_THROWS_AS(coxeter_gg_criterion(a2, Word{{1}}), DomainError);
  CHECK_THROWS_AS(coxeter_gg_criterion(a2, Word{{1, 1}}), DomainError);
  // agreement with the m-vector on every ordering of D4
  std::vector<int> perm{1, 2, 3, 4};
  do {
    Word w{perm};
    CHECK(coxeter_gg_criterion(d4, w) == classify(d4, w).globally_generated);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("all-expressions Fano decision") {
  RootSystem a3 = make("A3");
  // the census element for alpha_1 passes both routes
  WeylElement good = element_of(a3, Word{{3, 2, 1}});
  CHECK(fano_all_expressions_criterion(a3, good));
  CHECK(fano_all_expressions_bruteforce(a3, good));
  // the longest element is not a product of distinct reflections
  WeylElement w0 = longest_element(a3);
  CHECK_FALSE(fano_all_expressions_criterion(a3, w0));
  CHECK_FALSE(fano_all_expressions_bruteforce(a3, w0));
  // partial support is rejected by both
  WeylElement partial = element_of(a3, Word{{1, 2}});
  CHECK_THROWS_AS(fano_all_expressions_criterion(a3, partial), DomainError);
  CHECK_THROWS_AS(fano_all_expressions_bruteforce(a3, partial), DomainError);

  // rank 2 of type A sits outside the decision procedure's hypothesis: its
  // longest element is Fano for both expressions yet is not a product of
  // distinct reflections, so only the brute-force route applies
  RootSystem a2 = make("A2");
  WeylElement w0a2 = longest_element(a2);
  CHECK_THROWS_AS(fano_all_expressions_criterion(a2, w0a2), DomainError);
  CHECK(fano_all_expressions_bruteforce(a2, w0a2));
}

TEST_CASE("census tables") {
  auto words_of = [](const char* t) {
    RootSystem rs = make(t);
    auto census = coxeter_census(rs);
    std::vector<std::string> out;
    for (const auto& entry : census)
      out.push_back(entry ? format_word(entry->word) : "-");
    return out;
  };
  CHECK(words_of("A2") == std::vector<std::string>{"2,1", "1,2"});
  CHECK(words_of("A3") == std::vector<std::string>{"3,2,1", "1,3,2", "1,2,3"});
  CHECK(words_of("D4") ==
        std::vector<std::string>{"3,4,2,1", "1,3,4,2", "1,4,2,3", "1,3,2,4"});
  CHECK(words_of("B2") == std::vector<std::string>{"-", "1,2"});
  CHECK(words_of("B3") == std::vector<std::string>{"-", "-", "1,2,3"});
  CHECK(words_of("C3") == std::vector<std::string>{"3,2,1", "1,3,2", "-"});
  CHECK(words_of("G2") == std::vector<std::string>{"2,1", "-"});
  CHECK(words_of("F4") ==
        std::vector<std::string>{"-", "-", "1,2,4,3", "1,2,3,4"});
  CHECK_THROWS_AS(coxeter_census(make("A1")), DomainError);

  // entries appear exactly at the short simple roots
  for (const char* t : {"A4", "B4", "C4", "D4", "F4", "G2"}) {
    RootSystem rs = make(t);
    auto census = coxeter_census(rs);
    auto shorts = rs.short_simple_indices();
    for (int i = 1; i <= rs.rank(); ++i) {
      bool expect = std::count(shorts.begin(), shorts.end(), i) > 0;
      CHECK(census[static_cast<std::size_t>(i - 1)].has_value() == expect);
    }
  }
}

TEST_CASE("J-sets along census words") {
  RootSystem c3 = make("C3");
  Word w{{3, 2, 1}};
  // J_1 pairs the full simple-root sum against each candidate
  CHECK(j_set(c3, w, 1) == std::vector<int>{1, 3});
  RootSystem g2 = make("G2");
  CHECK(j_set(g2, Word{{2, 1}}, 1) == std::vector<int>{2});
  RootSystem b3 = make("B3");
  CHECK(j_set(b3, Word{{1, 2, 3}}, 1) == std::vector<int>{1});
  RootSystem a3 = make("A3");
  CHECK(j_set(a3, Word{{1, 2, 3}}, 1) == std::vector<int>{1, 3});
  // chain membership: the letter at each position sits in its J-set
  for (const auto& entry : coxeter_census(a3)) {
    REQUIRE(entry.has_value());
    for (int r = 1; r < 3; ++r) {
      auto j = j_set(a3, entry->word, r);
      CHECK(std::count(j.begin(), j.end(),
                       entry->word.letters[static_cast<std::size_t>(r - 1)]) == 1);
    }
  }
  CHECK_THROWS_AS(j_set(a3, Word{{1, 2, 1}}, 1), DomainError);
  CHECK_THROWS_AS(j_set(a3, Word{{1, 2, 3}}, 4), DomainError);
}

TEST_CASE("minuscule sweep reports") {
  RootSystem a4 = make("A4");
  MinusculeReport report = minuscule_gg_check(a4, 2);
  CHECK(report.elements_checked == 10);
  CHECK(report.words_checked == 22);
  CHECK(report.violations.empty());
  CHECK(report.pass());

  RootSystem d4 = make("D4");
  MinusculeReport d4r = minuscule_gg_check(d4, 4);
  CHECK(d4r.elements_checked == 8);
  CHECK(d4r.words_checked == 11);
  CHECK(d4r.pass());

  CHECK_THROWS_AS(minuscule_gg_check(make("B3"), 1), DomainError);
}
