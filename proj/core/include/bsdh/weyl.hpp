#ifndef BSDH_WEYL_HPP
#define BSDH_WEYL_HPP

/*
  Weyl group words and elements.

  A Word is a sequence of 1-based simple-root indices (i_1, ..., i_r)
  standing for the product s_{i_1} ... s_{i_r}; the wire format is the
  comma-separated list "1,2,1".  Elements are identified by their action on
  rho: rho is regular, so w(rho) pins w down exactly, and the stored
  canonical word is the lexicographically least reduced word, obtained by
  repeatedly peeling the smallest left descent.
*/

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bsdh/root_system.hpp"

namespace bsdh {

struct Word {
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// "1,2,1" <-> Word{{1,2,1}}; the empty string is the empty word.
std::string format_word(const Word& w);
Word parse_word(std::string_view text, int rank);

struct WeylElement {
  Weight fingerprint;  // w(rho)
  int length = 0;
  Word canonical_word;
};

inline bool operator==(const WeylElement& a, const WeylElement& b) {
  return a.fingerprint == b.fingerprint;
}
inline bool operator<(const WeylElement& a, const WeylElement& b) {
  if (a.length != b.length) return a.length < b.length;
  return a.canonical_word < b.canonical_word;
}

// s_{i_1}(s_{i_2}(... s_{i_r}(x))): rightmost letter acts first.
Weight apply_word(const RootSystem& rs, const Word& w, Weight lambda);
RootVector apply_word(const RootSystem& rs, const Word& w, RootVector v);

// True when every suffix-reflected letter root s_{i_r}...s_{i_{k+1}}(alpha_{i_k})
// stays positive.  first_non_reduced_prefix reports the least k (1-based)
// whose prefix (i_1..i_k) drops in length, nullopt when reduced.
bool is_reduced(const RootSystem& rs, const Word& w);
std::optional<int> first_non_reduced_prefix(const RootSystem& rs, const Word& w);

// Word letters must lie in 1..rank; throws DomainError otherwise.
void check_word(const RootSystem& rs, const Word& w);
// Throws DomainError naming the failing prefix position when non-reduced.
void require_reduced(const RootSystem& rs, const Word& w);

WeylElement element_of(const RootSystem& rs, const Word& w);  // any word
WeylElement identity_element(const RootSystem& rs);
WeylElement longest_element(const RootSystem& rs);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

// Indices k with w(positive_root(k)) negative; |inversion_set| = length(w).
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);

// All reduced words of w, lexicographically sorted.  Memoization is local
// to the call (keyed on group elements), so concurrent calls do not share
// state.
std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& w);

// Partition of the given reduced words of one element into commutation
// classes: two words are adjacent when they differ by swapping neighboring
// letters i, j with cartan(i, j) = 0.  Classes and their members are sorted.
std::vector<std::vector<Word>> commutation_classes(const RootSystem& rs,
                                                   const std::vector<Word>& words);

// Distinct products of all n simple reflections, each with its
// lexicographically least word; sorted by that word.
std::vector<std::pair<WeylElement, Word>> coxeter_elements(const RootSystem& rs);

bool is_coxeter_word(const RootSystem& rs, const Word& w);
bool is_coxeter_element(const RootSystem& rs, const WeylElement& w);

// Sorted letter set of a reduced word (invariant across reduced words of
// the same element).
std::vector<int> support(const RootSystem& rs, const Word& w);
bool has_full_support(const RootSystem& rs, const Word& w);

// Minimal-length coset representatives for the parabolic quotient attached
// to a minuscule fundamental weight omega_m: elements w with w(alpha) > 0
// for every simple alpha != alpha_m.  Grown from the identity by length-
// increasing left multiplications.
std::vector<WeylElement> minuscule_elements(const RootSystem& rs, int m);

// w . 0 = w(rho) - rho; cross-checked internally against the negated sum of
// the inversions of w^{-1} (mismatch would be a fatal logic error).
Weight w_dot_zero(const RootSystem& rs, const WeylElement& w);

// Whole group by breadth-first closure; guarded against orders that would
// not fit in memory.
std::vector<WeylElement> all_elements(const RootSystem& rs);

// Uniform-length random reduced word: random length in [0, |R+|], then a
// random length-increasing walk from the identity.
Word random_reduced_word(const RootSystem& rs, std::mt19937& rng);

}  // namespace bsdh

#endif
