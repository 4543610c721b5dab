#ifndef BSDH_VERIFY_HPP
#define BSDH_VERIFY_HPP

/*
  Brute-force verification suites.  Each suite sweeps a list of root
  systems, checks one family of identities on everything in range, and
  reports check/violation counts; a violation is data for the caller, not
  an exception.  Suites:

    oracle-m   two independent m-vector computations agree; last entry 2;
               X-coefficients >= 2; X<->O conversions invert each other
               and tie the two anti-canonical descriptions together
    thm56      "every reduced expression is Fano" decision procedure
               against exhaustive brute force on full-support elements
    thm58      no negative m-entry across all words of all minimal coset
               representatives for a chosen minuscule weight (TYPE:INDEX)
    cor54      single-occurrence-word criterion vs m-vector nonnegativity
               on every ordering of the simple reflections
    census     census shape (entries exactly at the short simple roots),
               membership chain of each census word in its J-sets, and
               the J_1 cardinality census
    character  section characters of every ordering word: nonnegative
               multiplicities, simple lowest weight, dominance; length-1
               and empty-word base cases
    fixtures   the worked-example corpus

  An empty type list selects the suite's default sweep.
*/

#include <optional>
#include <string>
#include <vector>

#include "bsdh/root_system.hpp"

namespace bsdh {

struct TypeScope {
  DynkinType type;
  std::optional<int> param;  // minuscule index for the minuscule suite
  bool exhaustive = true;
};

// "A3,B3,G2" or with per-type parameters "A4:2,D4:4"; malformed text
// throws std::invalid_argument.
std::vector<TypeScope> parse_type_list(const std::string& text);

struct VerifyScope {
  std::vector<TypeScope> types;    // empty -> suite default
  std::optional<bool> exhaustive;  // overrides per-type mode when set
  int sample = 200;                // words per sampled type
  unsigned int seed = 0;
  std::optional<int> max_rank;
  std::string fixtures_path;       // fixtures suite only
};

struct SuiteResult {
  std::string suite;
  long long checks = 0;
  long long violations = 0;
  std::vector<std::string> notes;  // per-type summaries plus capped violation details

  bool pass() const { return violations == 0; }
};

const std::vector<std::string>& suite_names();

// Unknown suite names and unusable scopes (missing TYPE:INDEX, missing
// fixture file) throw DomainError.
SuiteResult run_suite(const std::string& suite, const VerifyScope& scope);

}  // namespace bsdh

#endif
