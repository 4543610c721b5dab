#include "bsdh/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bsdh {
namespace {

// n x n integer matrix acting on root coordinates; column i-1 is the image
// of alpha_i, so descent tests are column sign scans.
struct RootAction {
  int n = 0;
  std::vector<int> a;

  static RootAction identity(int n) {
    RootAction m{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
    for (int k = 0; k < n; ++k) m.a[static_cast<std::size_t>(k) * n + k] = 1;
    return m;
  }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  int& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  bool is_identity() const {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (at(r, c) != (r == c)) return false;
    return true;
  }
  bool column_nonpositive(int c) const {
    for (int r = 0; r < n; ++r)
      if (at(r, c) > 0) return false;
    return true;
  }
};

RootAction simple_action(const RootSystem& rs, int i) {
  const int n = rs.rank();
  RootAction m = RootAction::identity(n);
  for (int b = 0; b < n; ++b) m.at(i - 1, b) -= rs.cartan(i, b + 1);
  return m;
}

RootAction mul(const RootAction& x, const RootAction& y) {
  RootAction out{x.n, std::vector<int>(static_cast<std::size_t>(x.n) * x.n, 0)};
  for (int r = 0; r < x.n; ++r)
    for (int k = 0; k < x.n; ++k) {
      const int v = x.at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < x.n; ++c) out.at(r, c) += v * y.at(k, c);
    }
  return out;
}

RootAction action_of(const RootSystem& rs, const Word& w) {
  RootAction m = RootAction::identity(rs.rank());
  for (int i : w.letters) m = mul(m, simple_action(rs, i));
  return m;
}

Word reversed(const Word& w) {
  Word out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w.letters[k]);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  Word out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    if (item.empty())
      throw std::invalid_argument("malformed word '" + std::string(text) +
                                  "': empty item; expected comma-separated letters like 1,2,1");
    int v = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9')
        throw std::invalid_argument("malformed word '" + std::string(text) +
                                    "': letter '" + std::string(item) + "' is not a number");
      v = v * 10 + (ch - '0');
    }
    if (v < 1 || v > rank)
      throw DomainError("word letter " + std::to_string(v) +
                        " out of range 1.." + std::to_string(rank));
    out.letters.push_back(v);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

void check_word(const RootSystem& rs, const Word& w) {
  for (int i : w.letters)
    if (i < 1 || i > rs.rank())
      throw DomainError("word letter " + std::to_string(i) +
                        " out of range 1.." + std::to_string(rs.rank()));
}

Weight apply_word(const RootSystem& rs, const Word& w, Weight lambda) {
  check_word(rs, w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    lambda = rs.reflect(*it, lambda);
  return lambda;
}

RootVector apply_word(const RootSystem& rs, const Word& w, RootVector v) {
  check_word(rs, w);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = rs.reflect(*it, v);
  return v;
}

bool is_reduced(const RootSystem& rs, const Word& w) {
  check_word(rs, w);
  const int r = w.size();
  for (int k = 0; k < r; ++k) {
    RootVector v = rs.simple_root(w.letters[k]);
    for (int t = k + 1; t < r; ++t) v = rs.reflect(w.letters[t], v);
    if (std::any_of(v.coords.begin(), v.coords.end(), [](int x) { return x < 0; }))
      return false;
  }
  return true;
}

std::optional<int> first_non_reduced_prefix(const RootSystem& rs, const Word& w) {
  check_word(rs, w);
  RootAction m = RootAction::identity(rs.rank());
  for (int k = 0; k < w.size(); ++k) {
    const int i = w.letters[k];
    if (m.column_nonpositive(i - 1)) return k + 1;  // prefix length drops here
    m = mul(m, simple_action(rs, i));
  }
  return std::nullopt;
}

void require_reduced(const RootSystem& rs, const Word& w) {
  if (auto k = first_non_reduced_prefix(rs, w))
    throw DomainError("word " + format_word(w) + " is not reduced: the letter at position " +
                      std::to_string(*k) + " shortens the prefix");
}

WeylElement element_of(const RootSystem& rs, const Word& w) {
  check_word(rs, w);
  WeylElement out;
  out.fingerprint = apply_word(rs, w, rs.rho());

  RootAction inv = action_of(rs, reversed(w));
  // Peel the smallest left descent until the identity; the collected
  // letters form the lexicographically least reduced word.
  while (true) {
    int descent = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (inv.column_nonpositive(i - 1)) { descent = i; break; }
    }
    if (descent == 0) break;
    out.canonical_word.letters.push_back(descent);
    inv = mul(inv, simple_action(rs, descent));  // (s_i w)^{-1} = w^{-1} s_i
  }
  out.length = out.canonical_word.size();
  return out;
}

WeylElement identity_element(const RootSystem& rs) {
  return WeylElement{rs.rho(), 0, Word{}};
}

WeylElement longest_element(const RootSystem& rs) {
  Word w;
  RootAction m = RootAction::identity(rs.rank());
  while (true) {
    int ascent = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!m.column_nonpositive(i - 1)) { ascent = i; break; }
    }
    if (ascent == 0) break;
    w.letters.push_back(ascent);
    m = mul(m, simple_action(rs, ascent));
  }
  return element_of(rs, w);
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  return element_of(rs, reversed(w.canonical_word));
}

std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> out;
  const RootAction m = action_of(rs, w.canonical_word);
  for (int k = 0; k < rs.positive_root_count(); ++k) {
    const std::vector<int>& beta = rs.positive_root(k).coords;
    bool nonpos = true;
    for (int r = 0; r < rs.rank() && nonpos; ++r) {
      int acc = 0;
      for (int c = 0; c < rs.rank(); ++c) acc += m.at(r, c) * beta[c];
      if (acc > 0) nonpos = false;
    }
    if (nonpos) out.push_back(k);
  }
  return out;
}

std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElement& w) {
  std::map<std::vector<int>, std::vector<Word>> memo;  // key: action matrix
  std::function<const std::vector<Word>&(const RootAction&)> rec =
      [&](const RootAction& m) -> const std::vector<Word>& {
    auto it = memo.find(m.a);
    if (it != memo.end()) return it->second;
    std::vector<Word> out;
    if (m.is_identity()) {
      out.push_back(Word{});
    } else {
      for (int i = 1; i <= rs.rank(); ++i) {
        if (!m.column_nonpositive(i - 1)) continue;  // need a right descent
        const std::vector<Word>& shorter = rec(mul(m, simple_action(rs, i)));
        for (const Word& u : shorter) {
          Word v = u;
          v.letters.push_back(i);
          out.push_back(std::move(v));
        }
      }
      std::sort(out.begin(), out.end());
    }
    return memo.emplace(m.a, std::move(out)).first->second;
  };
  return rec(action_of(rs, w.canonical_word));
}

std::vector<std::vector<Word>> commutation_classes(const RootSystem& rs,
                                                   const std::vector<Word>& words) {
  if (words.empty()) throw DomainError("commutation_classes: empty word list");
  std::map<std::vector<int>, int> index;
  Weight fp;
  for (std::size_t k = 0; k < words.size(); ++k) {
    require_reduced(rs, words[k]);
    const Weight f = apply_word(rs, words[k], rs.rho());
    if (k == 0)
      fp = f;
    else if (!(f == fp))
      throw DomainError("commutation_classes: words " + format_word(words[0]) +
                        " and " + format_word(words[k]) +
                        " are not expressions of the same element");
    if (!index.emplace(words[k].letters, static_cast<int>(k)).second)
      throw DomainError("commutation_classes: duplicate word " + format_word(words[k]));
  }
  Dsu dsu(static_cast<int>(words.size()));
  for (const Word& w : words) {
    const int self = index.at(w.letters);
    for (int k = 0; k + 1 < w.size(); ++k) {
      const int a = w.letters[k], b = w.letters[k + 1];
      if (a == b || rs.cartan(a, b) != 0) continue;
      std::vector<int> swapped = w.letters;
      std::swap(swapped[k], swapped[k + 1]);
      auto it = index.find(swapped);
      if (it != index.end()) dsu.unite(self, it->second);
    }
  }
  std::map<int, std::vector<Word>> grouped;
  for (std::size_t k = 0; k < words.size(); ++k)
    grouped[dsu.find(static_cast<int>(k))].push_back(words[k]);
  std::vector<std::vector<Word>> out;
  for (auto& [root, members] : grouped) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<std::pair<WeylElement, Word>> coxeter_elements(const RootSystem& rs) {
  std::vector<int> letters(rs.rank());
  std::iota(letters.begin(), letters.end(), 1);
  std::map<std::vector<int>, std::pair<WeylElement, Word>> seen;  // by fingerprint
  do {
    const Word w{letters};
    const Weight fp = apply_word(rs, w, rs.rho());
    if (!seen.count(fp.coords)) seen.emplace(fp.coords, std::make_pair(element_of(rs, w), w));
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::vector<std::pair<WeylElement, Word>> out;
  for (auto& [fp, entry] : seen) out.push_back(std::move(entry));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

bool is_coxeter_word(const RootSystem& rs, const Word& w) {
  check_word(rs, w);
  if (w.size() != rs.rank()) return false;
  std::vector<int> sorted = w.letters;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= rs.rank(); ++i)
    if (sorted[i - 1] != i) return false;
  return true;
}

bool is_coxeter_element(const RootSystem& rs, const WeylElement& w) {
  return w.length == rs.rank() && is_coxeter_word(rs, w.canonical_word);
}

std::vector<int> support(const RootSystem& rs, const Word& w) {
  require_reduced(rs, w);
  std::set<int> letters(w.letters.begin(), w.letters.end());
  return std::vector<int>(letters.begin(), letters.end());
}

bool has_full_support(const RootSystem& rs, const Word& w) {
  return static_cast<int>(support(rs, w).size()) == rs.rank();
}

std::vector<WeylElement> minuscule_elements(const RootSystem& rs, int m) {
  const std::vector<int> valid = rs.minuscule_weight_indices();
  if (!std::count(valid.begin(), valid.end(), m)) {
    std::string list;
    for (int v : valid) list += (list.empty() ? "" : ",") + std::to_string(v);
    throw DomainError("omega_" + std::to_string(m) + " is not minuscule for " +
                      rs.type().name() + "; valid indices: " +
                      (list.empty() ? "none" : list));
  }
  auto in_quotient = [&](const Word& w) {
    for (int j = 1; j <= rs.rank(); ++j) {
      if (j == m) continue;
      const RootVector img = apply_word(rs, w, rs.simple_root(j));
      if (std::any_of(img.coords.begin(), img.coords.end(),
                      [](int x) { return x < 0; }))
        return false;
    }
    return true;
  };
  std::map<std::vector<int>, Word> seen;
  seen.emplace(rs.rho().coords, Word{});
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      const Word winv = reversed(w);
      for (int i = 1; i <= rs.rank(); ++i) {
        // s_i w lengthens iff w^{-1}(alpha_i) > 0
        const RootVector img = apply_word(rs, winv, rs.simple_root(i));
        if (std::any_of(img.coords.begin(), img.coords.end(),
                        [](int x) { return x < 0; }))
          continue;
        Word w2;
        w2.letters.push_back(i);
        w2.letters.insert(w2.letters.end(), w.letters.begin(), w.letters.end());
        if (!in_quotient(w2)) continue;
        const Weight fp = apply_word(rs, w2, rs.rho());
        if (seen.emplace(fp.coords, w2).second) next.push_back(w2);
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (const auto& [fp, w] : seen) out.push_back(element_of(rs, w));
  std::sort(out.begin(), out.end());
  return out;
}

Weight w_dot_zero(const RootSystem& rs, const WeylElement& w) {
  const Weight direct = w.fingerprint - rs.rho();

  // Independent route: minus the sum of the inversions of w^{-1}.
  const WeylElement winv = inverse(rs, w);
  RootVector sum{std::vector<int>(rs.rank(), 0)};
  for (int k : inversion_set(rs, winv)) sum = sum + rs.positive_root(k);
  const Weight viaInversions = rs.to_weight(-sum);

  if (!(direct == viaInversions))
    throw std::logic_error("w_dot_zero: w(rho)-rho disagrees with the inversion sum for " +
                           format_word(w.canonical_word));
  return direct;
}

std::vector<WeylElement> all_elements(const RootSystem& rs) {
  constexpr long long kMaxOrder = 2'000'000;
  if (rs.weyl_order() > kMaxOrder)
    throw DomainError("Weyl group of " + rs.type().name() + " has order " +
                      std::to_string(rs.weyl_order()) +
                      "; exhaustive enumeration is capped at " +
                      std::to_string(kMaxOrder) + ", use sampling instead");
  std::map<std::vector<int>, Word> seen;
  seen.emplace(rs.rho().coords, Word{});
  std::vector<Word> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      const RootAction m = action_of(rs, w);
      for (int i = 1; i <= rs.rank(); ++i) {
        if (m.column_nonpositive(i - 1)) continue;  // w s_i must lengthen
        Word w2 = w;
        w2.letters.push_back(i);
        const Weight fp = apply_word(rs, w2, rs.rho());
        if (seen.emplace(fp.coords, w2).second) next.push_back(w2);
      }
    }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (const auto& [fp, w] : seen) out.push_back(element_of(rs, w));
  std::sort(out.begin(), out.end());
  return out;
}

Word random_reduced_word(const RootSystem& rs, std::mt19937& rng) {
  const int target = static_cast<int>(rng() % (rs.positive_root_count() + 1));
  Word w;
  RootAction m = RootAction::identity(rs.rank());
  for (int step = 0; step < target; ++step) {
    std::vector<int> ascents;
    for (int i = 1; i <= rs.rank(); ++i)
      if (!m.column_nonpositive(i - 1)) ascents.push_back(i);
    if (ascents.empty()) break;
    const int i = ascents[rng() % ascents.size()];
    w.letters.push_back(i);
    m = mul(m, simple_action(rs, i));
  }
  return w;
}

}  // namespace bsdh
