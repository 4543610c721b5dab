#include "bsdh/character.hpp"

#include <stdexcept>
#include <string>

#include "bsdh/picard.hpp"

namespace bsdh {

Character Character::unit(int rank) {
  Character c;
  c.terms_[std::vector<int>(static_cast<std::size_t>(rank), 0)] = 1;
  return c;
}

void Character::add(const Weight& lambda, long long mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda.coords, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

long long Character::multiplicity(const Weight& lambda) const {
  auto it = terms_.find(lambda.coords);
  return it == terms_.end() ? 0 : it->second;
}

long long Character::dimension() const {
  long long s = 0;
  for (const auto& [_, mult] : terms_) s += mult;
  return s;
}

bool Character::all_nonnegative() const {
  for (const auto& [_, mult] : terms_)
    if (mult < 0) return false;
  return true;
}

Character demazure_operator(const RootSystem& rs, int i, const Character& chi) {
  Weight alpha = rs.to_weight(rs.simple_root(i));
  Character out;
  for (const auto& [coords, mult] : chi.terms()) {
    Weight lambda{coords};
    const int m = coords[static_cast<std::size_t>(i - 1)];
    if (m >= 0) {
      Weight mu = lambda;
      for (int k = 0; k <= m; ++k) {
        out.add(mu, mult);
        mu = mu - alpha;
      }
    } else if (m <= -2) {
      Weight mu = lambda + alpha;
      for (int k = 1; k <= -m - 1; ++k) {
        out.add(mu, -mult);
        mu = mu + alpha;
      }
    }
    // m = -1 contributes nothing
  }
  return out;
}

Character anticanonical_character(const RootSystem& rs, const Word& word) {
  require_reduced(rs, word);
  Character chi = Character::unit(rs.rank());
  for (int j = word.size(); j >= 1; --j) {
    const int i = word.letters[static_cast<std::size_t>(j - 1)];
    Weight alpha = rs.to_weight(rs.simple_root(i));
    Character twisted;
    for (const auto& [coords, mult] : chi.terms())
      twisted.add(Weight{coords} + alpha, mult);
    chi = demazure_operator(rs, i, twisted);
  }
  return chi;
}

LowestWeightReport character_lowest_weight_report(const RootSystem& rs,
                                                  const Word& word) {
  require_reduced(rs, word);
  Character chi = anticanonical_character(rs, word);
  WeylElement w = element_of(rs, word);

  LowestWeightReport report;
  report.certified = chi.all_nonnegative();
  report.expected_lowest = w_dot_zero(rs, w);
  report.lowest_multiplicity = chi.multiplicity(report.expected_lowest);
  report.lowest_ok = report.lowest_multiplicity == 1;
  report.dimension = chi.dimension();

  report.dominance_ok = true;
  for (const auto& [coords, mult] : chi.terms()) {
    Weight nu{coords};
    auto diff = rs.root_coordinates(nu - report.expected_lowest);
    bool above = diff.has_value();
    if (above)
      for (int v : diff->coords)
        if (v < 0) {
          above = false;
          break;
        }
    if (!above) {
      report.dominance_ok = false;
      if (!report.witness) report.witness = nu;
    }
  }

  if (!report.pass() && report.certified) {
    bool guaranteed = is_coxeter_word(rs, word) ||
                      classify(rs, word).globally_generated;
    if (guaranteed)
      throw std::logic_error(
          "section character of a certified class fails its lowest-weight "
          "invariants on word " + format_word(word));
  }
  return report;
}

}  // namespace bsdh
