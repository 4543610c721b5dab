#ifndef BSDH_PICARD_HPP
#define BSDH_PICARD_HPP

/*
  Picard-group calculus of the tower of P^1-fibrations attached to a reduced
  word (i_1, ..., i_r).

  Two bases of the rank-r Picard lattice are used.  The X-basis consists of
  the invariant divisors X_1, ..., X_r given by the subtowers that omit one
  fibration step; the O-basis consists of the pulled-back fundamental-weight
  bundles O_1(1), ..., O_r(1).  The change of basis is integer unitriangular
  with entries r_kl(omega_{i_k}), where

      r_kl(lambda) = <lambda, s_{i_k} ... s_{i_{l+1}}(alpha_{i_l})>,

  the l = k factor being the empty product.  The anti-canonical class has
  X-coefficients 1 + r_rl(rho) (all >= 2) and O-coefficients the m-vector

      m_j = <alpha_{i_j} + alpha_{i_{j+1}} + ... + alpha_{i_{q-1}}, alpha_{i_j}>,

  q the least recurrence of the letter i_j after j (q = r + 1 when none, so
  the sum runs to the end; in particular m_r = 2).  Positivity of the tower's
  anti-canonical bundle is decided coefficientwise from the m-vector.
*/

#include <optional>
#include <vector>

#include "bsdh/root_system.hpp"
#include "bsdh/weyl.hpp"

namespace bsdh {

enum class Basis { X, O };

struct PicardClass {
  Basis basis = Basis::O;
  std::vector<long long> coeffs;
  Word word;

  friend bool operator==(const PicardClass&, const PicardClass&) = default;
};

struct Classification {
  bool globally_generated = false;
  bool very_ample = false;
  bool fano = false;
  bool weak_fano_certified = false;
  bool big = true;
  PicardClass m;  // O-basis anti-canonical coefficients
};

// r_kl(lambda) for l = 1..k; the word must be reduced and 1 <= k <= r.
std::vector<long long> demazure_x_coeffs(const RootSystem& rs, const Word& word,
                                         int k, const Weight& lambda);

// Anti-canonical class, X-basis: coefficient l is 1 + r_rl(rho).
PicardClass anticanonical_x_coeffs(const RootSystem& rs, const Word& word);

// Anti-canonical class, O-basis: the m-vector via the least-recurrence sums.
PicardClass anticanonical_o_coeffs(const RootSystem& rs, const Word& word);

// Independent route to the m-vector: each step k contributes the bundle
// O(alpha_{i_k}), expanded over the last occurrence of every letter in the
// prefix 1..k; agreement with anticanonical_o_coeffs is a test oracle.
PicardClass o_coeffs_via_decomposition(const RootSystem& rs, const Word& word);

// Unitriangular change of basis.  The class length must match the word
// length and the basis tag must be the source basis.
PicardClass o_to_x(const RootSystem& rs, const Word& word, const PicardClass& oclass);
PicardClass x_to_o(const RootSystem& rs, const Word& word, const PicardClass& xclass);

// Coefficientwise positivity flags; the empty word is a point and counts as
// globally generated and Fano by convention.
Classification classify(const RootSystem& rs, const Word& word);

// For a word using every simple reflection exactly once: true iff every
// suffix sum pairs nonnegatively with its leading letter,
// <alpha_{i_r} + ... + alpha_{i_n}, alpha_{i_r}> >= 0.  Agrees with
// classify(...).globally_generated but is computed without the m-vector.
bool coxeter_gg_criterion(const RootSystem& rs, const Word& word);

// Decision procedure for "every reduced expression of w is Fano" on a
// full-support w: true iff w is a Coxeter element and w^{-1}(sum of all
// simple roots) is the negative of a simple root.  Type A2 lies outside the
// hypothesis of this criterion and is rejected; use the brute-force form
// there.
bool fano_all_expressions_criterion(const RootSystem& rs, const WeylElement& w);

// Brute-force ground truth for the same question: classifies every reduced
// word of w.  Requires full support only (A2 is fine here).
bool fano_all_expressions_bruteforce(const RootSystem& rs, const WeylElement& w);

struct CensusEntry {
  WeylElement element;
  Word word;  // lexicographically least reduced word
};

// For each simple index i (slot i-1): the unique Coxeter element c with
// c^{-1}(alpha_1 + ... + alpha_n) = -alpha_i, when one exists.  Exactly the
// short simple roots get an entry (every index in the simply-laced types).
// A duplicate hit would break uniqueness and throws logic_error.  Rank 1 is
// rejected.
std::vector<std::optional<CensusEntry>> coxeter_census(const RootSystem& rs);

// For a word using every simple reflection exactly once and 1 <= r <= n:
// the simple indices a outside {i_1, ..., i_{r-1}} with
// <alpha_{i_r} + ... + alpha_{i_n}, alpha_a> = 1, sorted ascending.
std::vector<int> j_set(const RootSystem& rs, const Word& word, int r);

struct MinusculeReport {
  int weight_index = 0;
  long long elements_checked = 0;
  long long words_checked = 0;
  std::vector<Word> violations;  // words with some m_j < 0 (expected none)

  bool pass() const { return violations.empty(); }
};

// Sweeps every reduced word of every minimal coset representative attached
// to the minuscule weight omega_m and records any word whose m-vector has a
// negative entry.  Non-minuscule m is rejected.
MinusculeReport minuscule_gg_check(const RootSystem& rs, int m);

}  // namespace bsdh

#endif
