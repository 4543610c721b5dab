#include "bsdh/picard.hpp"

#include <algorithm>
#include <string>

namespace bsdh {
namespace {

// (root, coroot) coordinate pair of one root, transported by simple
// reflections so the pairing <lambda, gamma> = dot(coroot coords, lambda)
// stays available without a root-table lookup.
struct RootPair {
  RootVector root;
  std::vector<int> coroot;
};

RootPair simple_pair(const RootSystem& rs, int i) {
  std::vector<int> e(static_cast<std::size_t>(rs.rank()), 0);
  e[static_cast<std::size_t>(i - 1)] = 1;
  return {RootVector{e}, e};
}

void reflect_pair(const RootSystem& rs, int i, RootPair& p) {
  p.root = rs.reflect(i, p.root);
  p.coroot = rs.reflect_coroot(i, std::move(p.coroot));
}

long long pair_with(const RootPair& p, const Weight& lambda) {
  long long s = 0;
  for (std::size_t b = 0; b < p.coroot.size(); ++b)
    s += static_cast<long long>(p.coroot[b]) * lambda.coords[b];
  return s;
}

void check_class(const Word& word, const PicardClass& c, Basis expected,
                 const char* op) {
  if (c.basis != expected)
    throw DomainError(std::string(op) + ": class carries the wrong basis tag");
  if (static_cast<int>(c.coeffs.size()) != word.size())
    throw DomainError(std::string(op) + ": class has " +
                      std::to_string(c.coeffs.size()) + " coefficients for a length-" +
                      std::to_string(word.size()) + " word");
}

// T[l][j] = r_{j+1,l+1}(omega_{i_{j+1}}) for l <= j, 0-based storage; the
// diagonal is 1, so the system is unitriangular over the integers.
std::vector<std::vector<long long>> basis_matrix(const RootSystem& rs,
                                                 const Word& word) {
  const int r = word.size();
  std::vector<std::vector<long long>> t(static_cast<std::size_t>(r),
                                        std::vector<long long>(static_cast<std::size_t>(r), 0));
  for (int l = 0; l < r; ++l) {
    RootPair p = simple_pair(rs, word.letters[static_cast<std::size_t>(l)]);
    t[static_cast<std::size_t>(l)][static_cast<std::size_t>(l)] = 1;
    for (int j = l + 1; j < r; ++j) {
      reflect_pair(rs, word.letters[static_cast<std::size_t>(j)], p);
      Weight omega = rs.fundamental_weight(word.letters[static_cast<std::size_t>(j)]);
      t[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] = pair_with(p, omega);
    }
  }
  return t;
}

}  // namespace

std::vector<long long> demazure_x_coeffs(const RootSystem& rs, const Word& word,
                                         int k, const Weight& lambda) {
  require_reduced(rs, word);
  if (lambda.coords.size() != static_cast<std::size_t>(rs.rank()))
    throw DomainError("weight rank mismatch");
  if (k < 1 || k > word.size())
    throw DomainError("fibration step " + std::to_string(k) + " out of range 1.." +
                      std::to_string(word.size()));
  std::vector<long long> out(static_cast<std::size_t>(k), 0);
  for (int l = 1; l <= k; ++l) {
    RootPair p = simple_pair(rs, word.letters[static_cast<std::size_t>(l - 1)]);
    for (int t = l + 1; t <= k; ++t)
      reflect_pair(rs, word.letters[static_cast<std::size_t>(t - 1)], p);
    out[static_cast<std::size_t>(l - 1)] = pair_with(p, lambda);
  }
  return out;
}

PicardClass anticanonical_x_coeffs(const RootSystem& rs, const Word& word) {
  require_reduced(rs, word);
  PicardClass out{Basis::X, {}, word};
  const int r = word.size();
  if (r == 0) return out;
  std::vector<long long> rho_pairings = demazure_x_coeffs(rs, word, r, rs.rho());
  out.coeffs.reserve(static_cast<std::size_t>(r));
  for (long long v : rho_pairings) out.coeffs.push_back(1 + v);
  return out;
}

PicardClass anticanonical_o_coeffs(const RootSystem& rs, const Word& word) {
  require_reduced(rs, word);
  const int r = word.size();
  PicardClass out{Basis::O, std::vector<long long>(static_cast<std::size_t>(r), 0), word};
  const int n = rs.rank();
  for (int j = 0; j < r; ++j) {
    int stop = r;  // one past the last summand
    for (int k = j + 1; k < r; ++k)
      if (word.letters[static_cast<std::size_t>(k)] == word.letters[static_cast<std::size_t>(j)]) {
        stop = k;
        break;
      }
    std::vector<int> sigma(static_cast<std::size_t>(n), 0);
    for (int k = j; k < stop; ++k)
      ++sigma[static_cast<std::size_t>(word.letters[static_cast<std::size_t>(k)] - 1)];
    out.coeffs[static_cast<std::size_t>(j)] =
        rs.pair_with_simple(RootVector{sigma}, word.letters[static_cast<std::size_t>(j)]);
  }
  return out;
}

PicardClass o_coeffs_via_decomposition(const RootSystem& rs, const Word& word) {
  require_reduced(rs, word);
  const int r = word.size();
  PicardClass out{Basis::O, std::vector<long long>(static_cast<std::size_t>(r), 0), word};
  for (int k = 0; k < r; ++k) {
    const int ik = word.letters[static_cast<std::size_t>(k)];
    for (int t = 0; t <= k; ++t) {
      const int it = word.letters[static_cast<std::size_t>(t)];
      bool recurs = false;
      for (int l = t + 1; l <= k; ++l)
        if (word.letters[static_cast<std::size_t>(l)] == it) {
          recurs = true;
          break;
        }
      if (recurs) continue;  // only the last occurrence in the prefix absorbs
      out.coeffs[static_cast<std::size_t>(t)] += rs.cartan(it, ik);
    }
  }
  return out;
}

PicardClass o_to_x(const RootSystem& rs, const Word& word, const PicardClass& oclass) {
  require_reduced(rs, word);
  check_class(word, oclass, Basis::O, "o_to_x");
  const int r = word.size();
  auto t = basis_matrix(rs, word);
  PicardClass out{Basis::X, std::vector<long long>(static_cast<std::size_t>(r), 0), word};
  for (int l = 0; l < r; ++l)
    for (int j = l; j < r; ++j)
      out.coeffs[static_cast<std::size_t>(l)] +=
          t[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] *
          oclass.coeffs[static_cast<std::size_t>(j)];
  return out;
}

PicardClass x_to_o(const RootSystem& rs, const Word& word, const PicardClass& xclass) {
  require_reduced(rs, word);
  check_class(word, xclass, Basis::X, "x_to_o");
  const int r = word.size();
  auto t = basis_matrix(rs, word);
  PicardClass out{Basis::O, std::vector<long long>(static_cast<std::size_t>(r), 0), word};
  for (int l = r - 1; l >= 0; --l) {
    long long v = xclass.coeffs[static_cast<std::size_t>(l)];
    for (int j = l + 1; j < r; ++j)
      v -= t[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)] *
           out.coeffs[static_cast<std::size_t>(j)];
    out.coeffs[static_cast<std::size_t>(l)] = v;
  }
  return out;
}

Classification classify(const RootSystem& rs, const Word& word) {
  Classification c;
  c.m = anticanonical_o_coeffs(rs, word);
  bool all0 = true, all1 = true;
  for (long long v : c.m.coeffs) {
    if (v < 0) all0 = false;
    if (v < 1) all1 = false;
  }
  c.globally_generated = all0;
  c.very_ample = all1;
  c.fano = all1;
  c.weak_fano_certified = all0;
  c.big = true;
  return c;
}

bool coxeter_gg_criterion(const RootSystem& rs, const Word& word) {
  require_reduced(rs, word);
  const int n = rs.rank();
  if (word.size() != n)
    throw DomainError("expected a word using every simple reflection exactly once");
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  for (int r = n; r >= 1; --r) {
    const int i = word.letters[static_cast<std::size_t>(r - 1)];
    if (sigma[static_cast<std::size_t>(i - 1)] != 0)
      throw DomainError("expected a word using every simple reflection exactly once");
    ++sigma[static_cast<std::size_t>(i - 1)];
    if (rs.pair_with_simple(RootVector{sigma}, i) < 0) return false;
  }
  return true;
}

bool fano_all_expressions_criterion(const RootSystem& rs, const WeylElement& w) {
  if (rs.type().family == Family::A && rs.rank() == 2)
    throw DomainError(
        "type A2 is outside the hypothesis of the all-expressions criterion; "
        "use the brute-force check");
  if (!has_full_support(rs, w.canonical_word))
    throw DomainError("the all-expressions criterion needs full support");
  if (!is_coxeter_element(rs, w)) return false;
  const int n = rs.rank();
  WeylElement inv = inverse(rs, w);
  RootVector sigma{std::vector<int>(static_cast<std::size_t>(n), 1)};
  RootVector img = apply_word(rs, inv.canonical_word, sigma);
  int negs = 0;
  for (int v : img.coords) {
    if (v > 0 || v < -1) return false;
    if (v == -1) ++negs;
  }
  return negs == 1;
}

bool fano_all_expressions_bruteforce(const RootSystem& rs, const WeylElement& w) {
  if (!has_full_support(rs, w.canonical_word))
    throw DomainError("the all-expressions check needs full support");
  for (const Word& word : all_reduced_words(rs, w))
    if (!classify(rs, word).fano) return false;
  return true;
}

std::vector<std::optional<CensusEntry>> coxeter_census(const RootSystem& rs) {
  const int n = rs.rank();
  if (n < 2) throw DomainError("the census needs rank >= 2");
  std::vector<std::optional<CensusEntry>> out(static_cast<std::size_t>(n));
  RootVector sigma{std::vector<int>(static_cast<std::size_t>(n), 1)};
  for (const auto& [element, word] : coxeter_elements(rs)) {
    Word rev{std::vector<int>(word.letters.rbegin(), word.letters.rend())};
    RootVector img = apply_word(rs, rev, sigma);  // c^{-1}(sum of simples)
    int index = 0, negs = 0;
    bool simple_neg = true;
    for (int b = 0; b < n && simple_neg; ++b) {
      const int v = img.coords[static_cast<std::size_t>(b)];
      if (v > 0 || v < -1) simple_neg = false;
      if (v == -1) {
        ++negs;
        index = b + 1;
      }
    }
    if (!simple_neg || negs != 1) continue;
    auto& slot = out[static_cast<std::size_t>(index - 1)];
    if (slot.has_value())
      throw std::logic_error("duplicate census entry for simple root " +
                             std::to_string(index));
    slot = CensusEntry{element, word};
  }
  return out;
}

std::vector<int> j_set(const RootSystem& rs, const Word& word, int r) {
  require_reduced(rs, word);
  const int n = rs.rank();
  if (word.size() != n || !is_coxeter_word(rs, word))
    throw DomainError("expected a word using every simple reflection exactly once");
  if (r < 1 || r > n)
    throw DomainError("position " + std::to_string(r) + " out of range 1.." +
                      std::to_string(n));
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 0; t < r - 1; ++t)
    used[static_cast<std::size_t>(word.letters[static_cast<std::size_t>(t)])] = 1;
  std::vector<int> sigma(static_cast<std::size_t>(n), 0);
  for (int t = r - 1; t < n; ++t)
    ++sigma[static_cast<std::size_t>(word.letters[static_cast<std::size_t>(t)] - 1)];
  std::vector<int> out;
  for (int a = 1; a <= n; ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    if (rs.pair_with_simple(RootVector{sigma}, a) == 1) out.push_back(a);
  }
  return out;
}

MinusculeReport minuscule_gg_check(const RootSystem& rs, int m) {
  MinusculeReport report;
  report.weight_index = m;
  for (const WeylElement& w : minuscule_elements(rs, m)) {
    ++report.elements_checked;
    for (const Word& word : all_reduced_words(rs, w)) {
      ++report.words_checked;
      PicardClass mv = anticanonical_o_coeffs(rs, word);
      if (std::any_of(mv.coeffs.begin(), mv.coeffs.end(),
                      [](long long v) { return v < 0; }))
        report.violations.push_back(word);
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

}  // namespace bsdh
