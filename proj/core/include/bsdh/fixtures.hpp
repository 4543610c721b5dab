#ifndef BSDH_FIXTURES_HPP
#define BSDH_FIXTURES_HPP

/*
  Worked-example corpus: known words with their expected anti-canonical
  coefficients and positivity flags, kept as human-editable text.

  Format, one record per block:

      [fixture]
      name  = a3-staircase
      type  = A
      rank  = 3
      word  = 1,2,1,3,2,1
      m     = 1,0,1,1,1,2
      gg    = yes
      fano  = no
      source = longest element of A3, staircase expression

  '#' starts a comment; m, gg, fano and source are optional; a present m
  must have one entry per letter of word.
*/

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bsdh/picard.hpp"
#include "bsdh/root_system.hpp"
#include "bsdh/weyl.hpp"

namespace bsdh {

struct Fixture {
  std::string name;
  DynkinType type;
  Word word;
  std::optional<std::vector<long long>> expected_m;
  std::optional<bool> expected_gg;
  std::optional<bool> expected_fano;
  std::string source;
};

struct FixtureResult {
  std::string name;
  bool pass = false;
  std::string detail;  // mismatch description when failing
  Classification computed;
};

// Throws std::invalid_argument on malformed text (unknown key, bad value,
// missing name/type); DomainError surfaces for bad ranks or letters.
std::vector<Fixture> parse_fixtures(std::istream& in);
std::vector<Fixture> load_fixtures(const std::string& path);  // and on unreadable files

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures);

}  // namespace bsdh

#endif
