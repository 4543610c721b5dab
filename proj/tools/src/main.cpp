// Command-line front end.  Subcommands query one word (coeffs, classify,
// character), sweep one root system (words, census), or run the brute-force
// verification suites (verify, fixtures).  Exit codes: 0 success, 1 usage
// error, 2 violated precondition, 3 verification violation.

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsdh/character.hpp"
#include "bsdh/fixtures.hpp"
#include "bsdh/picard.hpp"
#include "bsdh/root_system.hpp"
#include "bsdh/verify.hpp"
#include "bsdh/weyl.hpp"

namespace {

using nlohmann::json;

struct Output {
  std::string command;
  json input = json::object();
  json result = json::object();
  json verdicts = json::object();
  std::vector<std::string> lines;
  int exit_code = 0;
};

int emit(const Output& out, bool as_json,
         std::chrono::steady_clock::time_point t0) {
  if (as_json) {
    json envelope;
    envelope["command"] = out.command;
    envelope["input"] = out.input;
    envelope["result"] = out.result;
    envelope["verdicts"] = out.verdicts;
    envelope["duration_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count();
    std::cout << envelope.dump(2) << "\n";
  } else {
    for (const std::string& line : out.lines) std::cout << line << "\n";
  }
  return out.exit_code;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

json coeff_json(const std::vector<long long>& v) { return json(v); }

std::string coeff_text(const std::vector<long long>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k)
    out += (k ? "," : "") + std::to_string(v[k]);
  return out.empty() ? "(empty)" : out;
}

std::string weight_text(const bsdh::Weight& w) {
  std::string out;
  for (std::size_t k = 0; k < w.coords.size(); ++k)
    out += (k ? "," : "") + std::to_string(w.coords[k]);
  return out;
}

struct CommonArgs {
  std::string type_letter;
  int rank = 0;
  std::string word_text;
  bool as_json = false;
};

void add_system_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--type", args.type_letter, "family letter A..G")->required();
  cmd->add_option("--rank", args.rank, "rank of the root system")->required();
  cmd->add_flag("--json", args.as_json, "machine-readable report");
}

bsdh::RootSystem make_system(const CommonArgs& args) {
  if (args.type_letter.size() != 1)
    throw std::invalid_argument("--type wants a single family letter A..G");
  return bsdh::RootSystem(
      bsdh::DynkinType::parse(args.type_letter + std::to_string(args.rank)));
}

json input_echo(const CommonArgs& args, bool with_word) {
  json in;
  in["type"] = args.type_letter + std::to_string(args.rank);
  if (with_word) in["word"] = args.word_text;
  return in;
}

Output run_coeffs(const CommonArgs& args) {
  Output out;
  out.command = "coeffs";
  out.input = input_echo(args, true);
  bsdh::RootSystem rs = make_system(args);
  bsdh::Word word = bsdh::parse_word(args.word_text, rs.rank());
  bsdh::PicardClass o = bsdh::anticanonical_o_coeffs(rs, word);
  bsdh::PicardClass x = bsdh::anticanonical_x_coeffs(rs, word);
  out.result["o_basis"] = coeff_json(o.coeffs);
  out.result["x_basis"] = coeff_json(x.coeffs);
  out.lines.push_back("type " + rs.type().name() + ", word " +
                      (word.empty() ? "(empty)" : bsdh::format_word(word)));
  out.lines.push_back("anti-canonical, O-basis (m-vector): " + coeff_text(o.coeffs));
  out.lines.push_back("anti-canonical, X-basis:            " + coeff_text(x.coeffs));
  return out;
}

Output run_classify(const CommonArgs& args) {
  Output out;
  out.command = "classify";
  out.input = input_echo(args, true);
  bsdh::RootSystem rs = make_system(args);
  bsdh::Word word = bsdh::parse_word(args.word_text, rs.rank());
  bsdh::Classification c = bsdh::classify(rs, word);
  out.result["m"] = coeff_json(c.m.coeffs);
  out.verdicts["globally_generated"] = c.globally_generated;
  out.verdicts["very_ample"] = c.very_ample;
  out.verdicts["fano"] = c.fano;
  out.verdicts["weak_fano_certified"] = c.weak_fano_certified;
  out.verdicts["big"] = c.big;
  out.lines.push_back("type " + rs.type().name() + ", word " +
                      (word.empty() ? "(empty)" : bsdh::format_word(word)));
  if (word.empty()) {
    out.lines.push_back("point: Fano (convention)");
    return out;
  }
  out.lines.push_back("m-vector: " + coeff_text(c.m.coeffs));
  out.lines.push_back("globally generated: " + yesno(c.globally_generated));
  out.lines.push_back("very ample:         " + yesno(c.very_ample));
  out.lines.push_back("Fano:               " + yesno(c.fano));
  out.lines.push_back("weak Fano (certified via globally generated + big): " +
                      yesno(c.weak_fano_certified));
  out.lines.push_back("big:                " + yesno(c.big));
  return out;
}

Output run_words(const CommonArgs& args, bool longest, bool classes) {
  Output out;
  out.command = "words";
  out.input = input_echo(args, !longest);
  if (longest) out.input["longest"] = true;
  bsdh::RootSystem rs = make_system(args);
  bsdh::WeylElement w;
  if (longest) {
    if (!args.word_text.empty())
      throw std::invalid_argument("--word and --longest are mutually exclusive");
    w = bsdh::longest_element(rs);
  } else {
    w = bsdh::element_of(rs, bsdh::parse_word(args.word_text, rs.rank()));
  }
  std::vector<bsdh::Word> words = bsdh::all_reduced_words(rs, w);
  out.result["element"] = bsdh::format_word(w.canonical_word);
  out.result["length"] = w.length;
  out.result["word_count"] = words.size();
  json word_list = json::array();
  for (const bsdh::Word& word : words) word_list.push_back(bsdh::format_word(word));
  out.result["words"] = word_list;
  out.lines.push_back("type " + rs.type().name() + ", element " +
                      (w.canonical_word.empty() ? "(identity)"
                                                : bsdh::format_word(w.canonical_word)) +
                      ", length " + std::to_string(w.length));
  out.lines.push_back("reduced words: " + std::to_string(words.size()));
  for (const bsdh::Word& word : words) out.lines.push_back("  " + bsdh::format_word(word));
  if (classes) {
    auto parts = bsdh::commutation_classes(rs, words);
    out.result["class_count"] = parts.size();
    json class_list = json::array();
    for (const auto& part : parts) {
      json one = json::array();
      for (const bsdh::Word& word : part) one.push_back(bsdh::format_word(word));
      class_list.push_back(one);
    }
    out.result["classes"] = class_list;
    out.lines.push_back("commutation classes: " + std::to_string(parts.size()));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      std::string line = "  class " + std::to_string(k + 1) + ":";
      for (const bsdh::Word& word : parts[k]) line += " " + bsdh::format_word(word);
      out.lines.push_back(line);
    }
  }
  return out;
}

Output run_census(const CommonArgs& args) {
  Output out;
  out.command = "census";
  out.input = input_echo(args, false);
  bsdh::RootSystem rs = make_system(args);
  auto census = bsdh::coxeter_census(rs);
  std::vector<int> shorts = rs.short_simple_indices();
  out.lines.push_back("type " + rs.type().name() +
                      (rs.simply_laced() ? " (simply laced)" : ""));
  json table = json::object();
  for (int i = 1; i <= rs.rank(); ++i) {
    const auto& entry = census[static_cast<std::size_t>(i - 1)];
    bool is_short = !rs.simply_laced() &&
                    std::find(shorts.begin(), shorts.end(), i) != shorts.end();
    std::string label = "alpha_" + std::to_string(i) + (is_short ? " (short)" : "");
    if (entry) {
      table[std::to_string(i)] = bsdh::format_word(entry->word);
      out.lines.push_back(label + ": " + bsdh::format_word(entry->word));
    } else {
      table[std::to_string(i)] = nullptr;
      out.lines.push_back(label + ": none");
    }
  }
  out.result["census"] = table;
  return out;
}

Output run_character(const CommonArgs& args) {
  Output out;
  out.command = "character";
  out.input = input_echo(args, true);
  bsdh::RootSystem rs = make_system(args);
  bsdh::Word word = bsdh::parse_word(args.word_text, rs.rank());
  bsdh::Character chi = bsdh::anticanonical_character(rs, word);
  bsdh::LowestWeightReport report = bsdh::character_lowest_weight_report(rs, word);
  out.result["dimension"] = chi.dimension();
  out.result["distinct_weights"] = chi.terms().size();
  json weights = json::object();
  for (const auto& [coords, mult] : chi.terms())
    weights[weight_text(bsdh::Weight{coords})] = mult;
  out.result["weights"] = weights;
  out.result["lowest_weight"] = weight_text(report.expected_lowest);
  out.verdicts["certified_sections"] = report.certified;
  out.verdicts["lowest_weight_simple"] = report.lowest_ok;
  out.verdicts["dominance"] = report.dominance_ok;
  out.lines.push_back("type " + rs.type().name() + ", word " +
                      (word.empty() ? "(empty)" : bsdh::format_word(word)));
  out.lines.push_back("dimension " + std::to_string(chi.dimension()) + ", " +
                      std::to_string(chi.terms().size()) + " distinct weights");
  out.lines.push_back(std::string("certified section character: ") +
                      (report.certified ? "yes" : "no (Euler characteristic only)"));
  out.lines.push_back("lowest weight " + weight_text(report.expected_lowest) +
                      ", multiplicity " + std::to_string(report.lowest_multiplicity) +
                      " (" + (report.lowest_ok ? "ok" : "unexpected") + ")");
  out.lines.push_back(std::string("dominance above the lowest weight: ") +
                      (report.dominance_ok ? "pass" : "fail"));
  return out;
}

Output run_fixtures_cmd(const std::string& path, bool as_json) {
  Output out;
  out.command = "fixtures";
  out.input["file"] = path;
  (void)as_json;
  std::vector<bsdh::Fixture> fixtures = bsdh::load_fixtures(path);
  auto results = bsdh::run_fixtures(fixtures);
  long long failures = 0;
  json rows = json::array();
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    json row;
    row["name"] = r.name;
    row["pass"] = r.pass;
    row["m"] = coeff_json(r.computed.m.coeffs);
    if (!r.pass) row["detail"] = r.detail;
    rows.push_back(row);
    out.lines.push_back((r.pass ? "PASS " : "FAIL ") + r.name +
                        (r.pass ? "" : ": " + r.detail));
  }
  out.result["fixtures"] = rows;
  out.result["failures"] = failures;
  out.verdicts["pass"] = failures == 0;
  out.lines.push_back(std::to_string(results.size() - failures) + "/" +
                      std::to_string(results.size()) + " fixtures pass");
  out.exit_code = failures == 0 ? 0 : 3;
  return out;
}

Output run_verify(const std::string& suite, const std::string& types_text,
                  bool exhaustive, int sample, unsigned int seed, int max_rank,
                  const std::string& fixtures_path) {
  Output out;
  out.command = "verify";
  out.input["suite"] = suite;
  if (!types_text.empty()) out.input["types"] = types_text;
  bsdh::VerifyScope scope;
  if (!types_text.empty()) scope.types = bsdh::parse_type_list(types_text);
  if (exhaustive) scope.exhaustive = true;
  scope.sample = sample;
  scope.seed = seed;
  if (max_rank > 0) scope.max_rank = max_rank;
  scope.fixtures_path = fixtures_path;
  bsdh::SuiteResult result = bsdh::run_suite(suite, scope);
  out.result["checks"] = result.checks;
  out.result["violations"] = result.violations;
  json notes = json::array();
  for (const std::string& n : result.notes) notes.push_back(n);
  out.result["notes"] = notes;
  out.verdicts["pass"] = result.pass();
  out.lines.push_back("suite " + result.suite);
  for (const std::string& n : result.notes) out.lines.push_back("  " + n);
  out.lines.push_back(std::to_string(result.checks) + " checks, " +
                      std::to_string(result.violations) + " violations");
  out.lines.push_back(result.pass() ? "PASS" : "FAIL");
  out.exit_code = result.pass() ? 0 : 3;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"anti-canonical positivity calculator for fibration towers over root systems"};
  app.require_subcommand(1);

  CommonArgs coeffs_args, classify_args, words_args, census_args, character_args;

  CLI::App* coeffs = app.add_subcommand("coeffs", "anti-canonical coefficients in both bases");
  add_system_flags(coeffs, coeffs_args);
  coeffs->add_option("--word", coeffs_args.word_text, "comma-separated 1-based letters");

  CLI::App* classify = app.add_subcommand("classify", "positivity flags of one word");
  add_system_flags(classify, classify_args);
  classify->add_option("--word", classify_args.word_text, "comma-separated 1-based letters");

  bool words_longest = false, words_classes = false;
  CLI::App* words = app.add_subcommand("words", "reduced words of one element");
  add_system_flags(words, words_args);
  words->add_option("--word", words_args.word_text, "a word for the target element");
  words->add_flag("--longest", words_longest, "target the longest element");
  words->add_flag("--classes", words_classes, "also print commutation classes");

  CLI::App* census = app.add_subcommand(
      "census", "which simple roots carry a Coxeter element sending the "
                "simple-root sum to their negative");
  add_system_flags(census, census_args);

  CLI::App* character = app.add_subcommand("character", "section character of one word");
  add_system_flags(character, character_args);
  character->add_option("--word", character_args.word_text, "comma-separated 1-based letters");

  std::string fixtures_path = "data/fixtures.txt";
  bool fixtures_json = false;
  CLI::App* fixtures = app.add_subcommand("fixtures", "run the worked-example corpus");
  fixtures->add_option("--file", fixtures_path, "fixture corpus path");
  fixtures->add_flag("--json", fixtures_json, "machine-readable report");

  std::string verify_suite, verify_types, verify_fixtures_path = "data/fixtures.txt";
  bool verify_exhaustive = false, verify_json = false;
  int verify_sample = 200, verify_max_rank = 0;
  unsigned int verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a brute-force verification suite");
  verify->add_option("suite", verify_suite, "one of oracle-m, thm56, thm58, cor54, census, character, fixtures")
      ->required();
  verify->add_option("--types", verify_types, "comma-separated types, e.g. A3,B3,G2 or A4:2,D4:4");
  verify->add_flag("--exhaustive", verify_exhaustive, "sweep every element instead of sampling");
  verify->add_option("--sample", verify_sample, "words per sampled type");
  verify->add_option("--seed", verify_seed, "seed for sampled sweeps");
  verify->add_option("--max-rank", verify_max_rank, "drop types above this rank");
  verify->add_option("--file", verify_fixtures_path, "fixture corpus path (fixtures suite)");
  verify->add_flag("--json", verify_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (coeffs->parsed()) return emit(run_coeffs(coeffs_args), coeffs_args.as_json, t0);
    if (classify->parsed())
      return emit(run_classify(classify_args), classify_args.as_json, t0);
    if (words->parsed())
      return emit(run_words(words_args, words_longest, words_classes),
                  words_args.as_json, t0);
    if (census->parsed()) return emit(run_census(census_args), census_args.as_json, t0);
    if (character->parsed())
      return emit(run_character(character_args), character_args.as_json, t0);
    if (fixtures->parsed())
      return emit(run_fixtures_cmd(fixtures_path, fixtures_json), fixtures_json, t0);
    if (verify->parsed())
      return emit(run_verify(verify_suite, verify_types, verify_exhaustive,
                             verify_sample, verify_seed, verify_max_rank,
                             verify_fixtures_path),
                  verify_json, t0);
  } catch (const bsdh::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 70;
  }
  return 1;
}
