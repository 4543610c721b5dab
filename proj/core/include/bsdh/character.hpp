#ifndef BSDH_CHARACTER_HPP
#define BSDH_CHARACTER_HPP

/*
  Formal exponential sums over the weight lattice and the induced-section
  recursion for the anti-canonical bundle of a fibration tower.

  A Character is a finite integer combination of symbols e^lambda; the
  multiplicities may go negative, in which case the object is the Euler
  characteristic of the tower's cohomology rather than an honest space of
  sections.  The step operator replaces e^lambda by the weight string of a
  degree-m rational curve, m = <lambda, alpha_i>:

      m >= 0:  e^lambda + e^{lambda - alpha_i} + ... + e^{lambda - m alpha_i}
      m = -1:  0
      m <= -2: -(e^{lambda + alpha_i} + ... + e^{lambda + (-m-1) alpha_i})

  Applying the steps right to left with a twist by alpha at each stage gives
  the section character of the anti-canonical bundle; when some multiplicity
  is negative, higher cohomology interferes and the result is certified only
  as an Euler characteristic.
*/

#include <map>
#include <optional>
#include <vector>

#include "bsdh/root_system.hpp"
#include "bsdh/weyl.hpp"

namespace bsdh {

class Character {
 public:
  // Weight coordinates -> nonzero multiplicity; zero entries are erased.
  using TermMap = std::map<std::vector<int>, long long>;

  Character() = default;

  static Character unit(int rank);  // e^0

  void add(const Weight& lambda, long long mult);
  long long multiplicity(const Weight& lambda) const;
  long long dimension() const;  // sum of multiplicities
  bool all_nonnegative() const;
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const Character&, const Character&) = default;

 private:
  TermMap terms_;
};

// The weight-string step operator above, extended linearly.
Character demazure_operator(const RootSystem& rs, int i, const Character& chi);

// chi(empty) = e^0; chi(i_1, ..., i_r) = D_{i_1}(chi(i_2, ..., i_r) twisted
// by e^{alpha_{i_1}}).  The word must be reduced.
Character anticanonical_character(const RootSystem& rs, const Word& word);

struct LowestWeightReport {
  bool certified = false;        // all multiplicities >= 0
  Weight expected_lowest;        // w(rho) - rho for the word's element
  long long lowest_multiplicity = 0;
  bool lowest_ok = false;        // multiplicity of the expected lowest is 1
  bool dominance_ok = false;     // every weight >= expected lowest, root-cone order
  std::optional<Weight> witness; // a weight violating dominance, if any
  long long dimension = 0;

  bool pass() const { return lowest_ok && dominance_ok; }
};

// Checks that the character sits inside the cone w(rho) - rho + (nonnegative
// span of simple roots) with a simple bottom.  Failures are data, not
// errors, except on inputs where the section interpretation is guaranteed
// (certified plus a single-occurrence word or a globally generated class);
// there a failure is a fatal logic error.
LowestWeightReport character_lowest_weight_report(const RootSystem& rs,
                                                  const Word& word);

}  // namespace bsdh

#endif
