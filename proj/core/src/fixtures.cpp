#include "bsdh/fixtures.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace bsdh {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool parse_yesno(const std::string& v, const std::string& key, int line) {
  if (v == "yes" || v == "true") return true;
  if (v == "no" || v == "false") return false;
  throw std::invalid_argument("fixture line " + std::to_string(line) + ": " + key +
                              " wants yes/no, got '" + v + "'");
}

std::vector<long long> parse_int_list(const std::string& v, int line) {
  std::vector<long long> out;
  if (trim(v).empty()) return out;
  std::istringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      std::size_t used = 0;
      long long x = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(x);
    } catch (const std::exception&) {
      throw std::invalid_argument("fixture line " + std::to_string(line) +
                                  ": '" + item + "' is not an integer");
    }
  }
  return out;
}

struct RawFixture {
  std::string name, type_letter, word_text, source;
  std::optional<int> rank;
  std::optional<std::vector<long long>> m;
  std::optional<bool> gg, fano;
  int start_line = 0;
};

Fixture finish(const RawFixture& raw) {
  if (raw.name.empty())
    throw std::invalid_argument("fixture starting at line " +
                                std::to_string(raw.start_line) + " has no name");
  if (raw.type_letter.size() != 1 || !raw.rank)
    throw std::invalid_argument("fixture '" + raw.name +
                                "' needs a one-letter type and a rank");
  Fixture f;
  f.name = raw.name;
  f.type = DynkinType::parse(raw.type_letter + std::to_string(*raw.rank));
  f.word = parse_word(raw.word_text, f.type.rank);
  f.expected_m = raw.m;
  f.expected_gg = raw.gg;
  f.expected_fano = raw.fano;
  f.source = raw.source;
  if (f.expected_m && static_cast<int>(f.expected_m->size()) != f.word.size())
    throw std::invalid_argument("fixture '" + f.name + "': m has " +
                                std::to_string(f.expected_m->size()) +
                                " entries for a length-" +
                                std::to_string(f.word.size()) + " word");
  return f;
}

}  // namespace

std::vector<Fixture> parse_fixtures(std::istream& in) {
  std::vector<Fixture> out;
  std::optional<RawFixture> current;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line == "[fixture]") {
      if (current) out.push_back(finish(*current));
      current = RawFixture{};
      current->start_line = lineno;
      continue;
    }
    std::size_t eq = line.find('=');
    if (!current || eq == std::string::npos)
      throw std::invalid_argument("fixture line " + std::to_string(lineno) +
                                  ": expected '[fixture]' or 'key = value', got '" +
                                  line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "name")
      current->name = value;
    else if (key == "type")
      current->type_letter = value;
    else if (key == "rank")
      current->rank = static_cast<int>(parse_int_list(value, lineno).at(0));
    else if (key == "word")
      current->word_text = value;
    else if (key == "m")
      current->m = parse_int_list(value, lineno);
    else if (key == "gg")
      current->gg = parse_yesno(value, key, lineno);
    else if (key == "fano")
      current->fano = parse_yesno(value, key, lineno);
    else if (key == "source")
      current->source = value;
    else
      throw std::invalid_argument("fixture line " + std::to_string(lineno) +
                                  ": unknown key '" + key + "'");
  }
  if (current) out.push_back(finish(*current));
  return out;
}

std::vector<Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file '" + path + "'");
  return parse_fixtures(in);
}

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures) {
  std::vector<FixtureResult> out;
  out.reserve(fixtures.size());
  for (const Fixture& f : fixtures) {
    FixtureResult r;
    r.name = f.name;
    RootSystem rs(f.type);
    r.computed = classify(rs, f.word);
    r.pass = true;
    std::string detail;
    auto mismatch = [&](const std::string& what) {
      r.pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    };
    if (f.expected_m && r.computed.m.coeffs != *f.expected_m) {
      std::string got;
      for (std::size_t k = 0; k < r.computed.m.coeffs.size(); ++k)
        got += (k ? "," : "") + std::to_string(r.computed.m.coeffs[k]);
      mismatch("m = " + got + " differs from the expected vector");
    }
    if (f.expected_gg && r.computed.globally_generated != *f.expected_gg)
      mismatch(std::string("globally generated = ") +
               (r.computed.globally_generated ? "yes" : "no"));
    if (f.expected_fano && r.computed.fano != *f.expected_fano)
      mismatch(std::string("fano = ") + (r.computed.fano ? "yes" : "no"));
    r.detail = detail;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bsdh
