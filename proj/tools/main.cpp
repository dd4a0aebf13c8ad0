// syl: categorical syllogism toolkit.
//
// Subcommands: validate, translate, analyze, complete, sorites, generate,
// coverage, breakdown. Exit codes: 0 success, 1 domain rejection (malformed
// or untranslatable input), 2 usage error. The CLI only arranges I/O; every
// result is reproducible through the library calls directly.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "syl/analysis.hpp"
#include "syl/bench.hpp"
#include "syl/lang.hpp"
#include "syl/validity.hpp"

namespace {

using namespace syl;

struct CommonOpts {
  std::string interpretation = "modern";
  std::string format = "human";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-i,--interpretation", opts.interpretation,
                  "modern (no existential import) or aristotelian")
      ->check(CLI::IsMember({"modern", "aristotelian"}));
  cmd->add_option("-f,--format", opts.format, "human or structured (JSON)")
      ->check(CLI::IsMember({"human", "structured"}));
}

Interpretation interp_of(const CommonOpts& opts) {
  return *interpretation_from_name(opts.interpretation);
}

bool structured(const CommonOpts& opts) { return opts.format == "structured"; }

int fail(const Error& e) {
  std::cerr << "error: " << e.describe() << "\n";
  return 1;
}

Result<std::vector<std::string>> read_lines(const std::string& path) {
  std::vector<std::string> lines;
  auto drain = [&](std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
      if (!canonical_label(line).empty()) lines.push_back(line);
    }
  };
  if (path.empty() || path == "-") {
    drain(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) return make_error(Errc::io_error, "cannot open " + path);
    drain(in);
  }
  return lines;
}

void print_translation(std::ostream& out, const lang::TranslationResult& t) {
  out << "category:  " << lang::category_name(t.category) << "\n";
  for (const auto& p : t.propositions) out << "  " << lang::render(p) << "\n";
  if (!t.trace.empty()) {
    out << "trace:    ";
    for (const auto& id : t.trace) out << " " << id;
    out << "\n";
  }
  out << "verified:  " << (t.verified ? "yes" : "no") << "\n";
}

nlohmann::json translation_json(const lang::TranslationResult& t) {
  auto props = nlohmann::json::array();
  for (const auto& p : t.propositions) props.push_back(lang::render(p));
  return {{"category", lang::category_name(t.category)},
          {"propositions", props},
          {"trace", t.trace},
          {"verified", t.verified}};
}

void print_verdict_line(std::ostream& out, Interpretation i,
                        const analysis::MethodVerdicts& mv) {
  auto cell = [](const ValidityVerdict& v) {
    std::string s = status_label(v.status);
    if (!v.violated_rules.empty()) {
      s += " [";
      for (std::size_t k = 0; k < v.violated_rules.size(); ++k) {
        if (k) s += " ";
        s += v.violated_rules[k];
      }
      s += "]";
    }
    return s;
  };
  std::string name = interpretation_name(i);
  name += ":";
  name.resize(14, ' ');
  out << name << cell(mv.table) << " (table), " << cell(mv.rules)
      << " (rules), " << cell(mv.semantics) << " (semantics)\n";
}

void print_conditional_note(std::ostream& out,
                            const analysis::AnalysisReport& report) {
  auto it = report.verdicts.find(Interpretation::modern);
  if (it == report.verdicts.end()) return;
  if (it->second.table.status != ValidityStatus::conditionally_valid) return;
  out << "note: valid only with existential import; requires non-empty";
  for (TermRole r : it->second.table.required_nonempty) {
    out << " " << role_letter(r);
  }
  out << " (assumed under the aristotelian interpretation)\n";
}

void print_report(std::ostream& out, const analysis::AnalysisReport& report,
                  const std::vector<std::string>& statements) {
  for (std::size_t i = 0; i < statements.size(); ++i) {
    const char* role = report.conclusion_index && *report.conclusion_index == i
                           ? "conclusion"
                           : "premise   ";
    out << role << ": " << statements[i] << "\n";
    if (i < report.translations.size()) {
      const auto& t = report.translations[i];
      out << "            -> " << lang::category_name(t.category);
      for (const auto& p : t.propositions) out << " | " << lang::render(p);
      out << "\n";
    }
  }
  if (report.standardized) {
    out << "standard form:\n";
    out << "  major:      " << lang::render(report.standardized->major_premise()) << "\n";
    out << "  minor:      " << lang::render(report.standardized->minor_premise()) << "\n";
    out << "  conclusion: " << lang::render(report.standardized->conclusion()) << "\n";
    out << "configuration: " << report.configuration->str() << "\n";
    for (Interpretation i : kAllInterpretations) {
      print_verdict_line(out, i, report.verdicts.at(i));
    }
    print_conditional_note(out, report);
    const auto& semantics =
        report.verdicts.at(Interpretation::modern).semantics;
    if (semantics.status != ValidityStatus::valid && semantics.countermodel) {
      ModelFrame frame = report.standardized->frame();
      out << "countermodel (non-empty regions):";
      for (int r = 0; r < RegionModel::kRegions; ++r) {
        if (semantics.countermodel->region_occupied(r)) {
          out << " [" << region_name(frame, r) << "]";
        }
      }
      out << "\n";
    }
  }
  if (!report.chain.empty()) {
    out << "sorites chain:\n";
    for (const Syllogism& step : report.chain) {
      out << "  [" << step.configuration().str() << "] "
          << lang::render(step.major_premise()) << " + "
          << lang::render(step.minor_premise()) << " => "
          << lang::render(step.conclusion()) << "\n";
    }
  }
  if (!report.completions.empty()) {
    out << "missing " << proposition_role_name(*report.missing_role)
        << "; completions that make the syllogism valid:\n";
    for (const auto& p : report.completions) {
      out << "  " << lang::render(p) << "\n";
    }
  }
  if (!report.flags.empty()) {
    out << "flags:";
    for (analysis::Flag f : report.flags) out << " " << analysis::flag_name(f);
    out << "\n";
  }
  for (const auto& note : report.notes) out << "note: " << note << "\n";
}

int run_analysis(const std::vector<std::string>& statements,
                 std::optional<std::size_t> conclusion_index,
                 const CommonOpts& opts, bool expect_syllogism) {
  auto arg = analysis::Argument::make(statements, conclusion_index);
  if (!arg.ok()) return fail(arg.error());
  analysis::AnalysisReport report = analysis::analyze(*arg, interp_of(opts));
  if (structured(opts)) {
    std::cout << report.to_json() << "\n";
  } else {
    print_report(std::cout, report, statements);
  }
  bool rejected = report.has_flag(analysis::Flag::untranslatable) ||
                  report.has_flag(analysis::Flag::too_many_terms) ||
                  (expect_syllogism && !report.standardized);
  return rejected ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_validate(const std::vector<std::string>& texts, const std::string& in,
                 const CommonOpts& opts) {
  std::vector<std::string> statements = texts;
  if (statements.empty() && !in.empty()) {
    auto lines = read_lines(in);
    if (!lines.ok()) return fail(lines.error());
    statements = *lines;
  }
  if (statements.size() != 3) {
    std::cerr << "error: validate needs two premises and a conclusion\n";
    return 2;
  }
  return run_analysis(statements, 2, opts, /*expect_syllogism=*/true);
}

int cmd_translate(const std::string& text, const CommonOpts& opts) {
  auto t = lang::translate(text);
  if (!t.ok()) return fail(t.error());
  if (structured(opts)) {
    std::cout << translation_json(*t).dump() << "\n";
  } else {
    print_translation(std::cout, *t);
  }
  return 0;
}

int cmd_analyze(const std::vector<std::string>& texts, const std::string& in,
                const CommonOpts& opts) {
  std::vector<std::string> statements = texts;
  if (statements.empty()) {
    auto lines = read_lines(in);
    if (!lines.ok()) return fail(lines.error());
    statements = *lines;
  }
  return run_analysis(statements, std::nullopt, opts, /*expect_syllogism=*/false);
}

int cmd_complete(const std::string& missing, const std::string& first_text,
                 const std::string& second_text, const CommonOpts& opts) {
  auto role = analysis::proposition_role_from_name(missing);
  if (!role) {
    std::cerr << "error: --missing must be major, minor or conclusion\n";
    return 2;
  }
  auto parse_one = [&](const std::string& text) -> Result<CategoricalProposition> {
    auto t = lang::translate(text);
    if (!t.ok()) return t.error();
    return t->propositions.front();
  };
  auto first = parse_one(first_text);
  if (!first.ok()) return fail(first.error());
  auto second = parse_one(second_text);
  if (!second.ok()) return fail(second.error());
  auto candidates =
      analysis::complete_enthymeme(*first, *second, *role, interp_of(opts));
  if (!candidates.ok()) return fail(candidates.error());
  if (structured(opts)) {
    auto arr = nlohmann::json::array();
    for (const auto& p : *candidates) arr.push_back(lang::render(p));
    std::cout << nlohmann::json{{"missing", missing}, {"candidates", arr}}.dump()
              << "\n";
  } else if (candidates->empty()) {
    std::cout << "no completion yields a valid syllogism\n";
  } else {
    for (const auto& p : *candidates) std::cout << lang::render(p) << "\n";
  }
  return 0;
}

int cmd_sorites(const std::vector<std::string>& texts, const std::string& in,
                const CommonOpts& opts) {
  std::vector<std::string> statements = texts;
  if (statements.empty()) {
    auto lines = read_lines(in);
    if (!lines.ok()) return fail(lines.error());
    statements = *lines;
  }
  if (statements.size() < 3) {
    std::cerr << "error: sorites needs at least two premises plus a conclusion "
                 "(conclusion last)\n";
    return 2;
  }
  std::vector<CategoricalProposition> props;
  for (const std::string& text : statements) {
    std::string body = text;
    if (auto stripped = analysis::strip_conclusion_cue(body)) body = *stripped;
    auto t = lang::translate(body);
    if (!t.ok()) return fail(t.error());
    props.push_back(t->propositions.front());
  }
  CategoricalProposition conclusion = props.back();
  props.pop_back();
  auto chain = analysis::decompose_sorites(props, conclusion, interp_of(opts));
  if (!chain.ok()) return fail(chain.error());
  if (structured(opts)) {
    auto arr = nlohmann::json::array();
    for (const Syllogism& step : *chain) {
      arr.push_back({{"major", lang::render(step.major_premise())},
                     {"minor", lang::render(step.minor_premise())},
                     {"conclusion", lang::render(step.conclusion())},
                     {"configuration", step.configuration().str()}});
    }
    std::cout << nlohmann::json{{"chain", arr}}.dump() << "\n";
  } else {
    for (const Syllogism& step : *chain) {
      std::cout << "[" << step.configuration().str() << "] "
                << lang::render(step.major_premise()) << " + "
                << lang::render(step.minor_premise()) << " => "
                << lang::render(step.conclusion()) << "\n";
    }
  }
  return 0;
}

Result<std::vector<bench::TermTriple>> read_triples(const std::string& path) {
  auto lines = read_lines(path);
  if (!lines.ok()) return lines.error();
  std::vector<bench::TermTriple> triples;
  for (const std::string& line : *lines) {
    if (line.rfind("#", 0) == 0) continue;
    std::istringstream row(line);
    std::string s, m, p;
    if (!std::getline(row, s, ',') || !std::getline(row, m, ',') ||
        !std::getline(row, p)) {
      return make_error(Errc::invalid_triple,
                        "triple line needs 'subject,middle,predicate': " + line);
    }
    auto t = bench::TermTriple::make(s, m, p);
    if (!t.ok()) return t.error();
    triples.push_back(*t);
  }
  return triples;
}

int cmd_generate(const std::string& triples_path, const std::string& out_path,
                 std::uint64_t seed, bool shuffle, bool candidates,
                 const CommonOpts& opts) {
  auto triples = read_triples(triples_path);
  if (!triples.ok()) return fail(triples.error());
  bench::GenerateOptions gen;
  gen.seed = seed;
  gen.shuffle_premises = shuffle;
  gen.candidate_conclusions = candidates;
  auto records = bench::generate(*triples, interp_of(opts), gen);
  if (!records.ok()) return fail(records.error());
  bench::Dataset dataset;
  dataset.header.seed = seed;
  dataset.header.interpretation = interp_of(opts);
  dataset.header.generator = "syl";
  dataset.records = std::move(records).value();
  if (out_path.empty() || out_path == "-") {
    bench::write_dataset(std::cout, dataset);
  } else {
    std::ofstream out(out_path);
    if (!out) return fail(make_error(Errc::io_error, "cannot write " + out_path));
    bench::write_dataset(out, dataset);
    std::cerr << dataset.records.size() << " records written to " << out_path
              << "\n";
  }
  return 0;
}

Result<bench::Dataset> load_dataset(const std::string& path) {
  if (path.empty() || path == "-") return bench::read_dataset(std::cin);
  std::ifstream in(path);
  if (!in) return make_error(Errc::io_error, "cannot open " + path);
  return bench::read_dataset(in);
}

int write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 1;
  }
  out << content;
  return 0;
}

int cmd_coverage(const std::string& in, const std::string& annotations_path,
                 const std::string& out_prefix, const CommonOpts& opts) {
  auto dataset = load_dataset(in);
  if (!dataset.ok()) return fail(dataset.error());
  bench::AnnotationMap annotations;
  const bench::AnnotationMap* ann = nullptr;
  if (!annotations_path.empty()) {
    std::ifstream astream(annotations_path);
    if (!astream) {
      return fail(make_error(Errc::io_error, "cannot open " + annotations_path));
    }
    auto parsed = bench::read_annotations(astream);
    if (!parsed.ok()) return fail(parsed.error());
    annotations = std::move(parsed).value();
    ann = &annotations;
  }
  Interpretation fallback =
      dataset->header.interpretation.value_or(interp_of(opts));
  auto report = bench::assess_coverage(dataset->records, ann, fallback);
  if (!report.ok()) return fail(report.error());
  std::cout << (structured(opts) ? report->to_json() + "\n" : report->to_text());
  if (!out_prefix.empty()) {
    if (int rc = write_file(out_prefix + "-phraseology.csv",
                            report->phraseology_csv()))
      return rc;
    if (int rc = write_file(out_prefix + "-configurations.csv",
                            report->configurations_csv()))
      return rc;
  }
  return 0;
}

int cmd_breakdown(const std::string& in, const std::string& predictions_path,
                  const std::string& out_prefix, const CommonOpts& opts) {
  auto dataset = load_dataset(in);
  if (!dataset.ok()) return fail(dataset.error());
  std::ifstream pstream(predictions_path);
  if (!pstream) {
    return fail(make_error(Errc::io_error, "cannot open " + predictions_path));
  }
  auto predictions = bench::read_predictions(pstream);
  if (!predictions.ok()) return fail(predictions.error());
  Interpretation fallback =
      dataset->header.interpretation.value_or(interp_of(opts));
  auto breakdown =
      bench::error_breakdown(dataset->records, *predictions, fallback);
  if (!breakdown.ok()) return fail(breakdown.error());
  std::cout << (structured(opts) ? breakdown->to_json() + "\n"
                                 : breakdown->to_text());
  if (!out_prefix.empty()) {
    if (int rc = write_file(out_prefix + "-matrix.csv", breakdown->matrix_csv()))
      return rc;
    if (int rc = write_file(out_prefix + "-cells.csv", breakdown->cells_csv()))
      return rc;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"categorical syllogism toolkit"};
  app.require_subcommand(1);

  CommonOpts opts;

  std::vector<std::string> texts;
  std::string in_path;
  auto* validate = app.add_subcommand(
      "validate", "configuration and three validity verdicts for a syllogism");
  validate->add_option("statements", texts,
                       "two premises and the conclusion (or use --in)");
  validate->add_option("--in", in_path, "file with one statement per line");
  add_common(validate, opts);

  std::string translate_text;
  auto* translate =
      app.add_subcommand("translate", "translate a statement to standard form");
  translate->add_option("statement", translate_text, "surface statement")
      ->required();
  add_common(translate, opts);

  auto* analyze = app.add_subcommand(
      "analyze", "standardize and check an ordinary argument");
  analyze->add_option("statements", texts, "argument statements (or use --in)");
  analyze->add_option("--in", in_path, "file with one statement per line");
  add_common(analyze, opts);

  std::string missing;
  std::vector<std::string> given;
  auto* complete =
      app.add_subcommand("complete", "complete an enthymeme");
  complete->add_option("--missing", missing, "major, minor or conclusion")
      ->required();
  complete->add_option("statements", given, "the two given statements")
      ->expected(2);
  add_common(complete, opts);

  auto* sorites = app.add_subcommand(
      "sorites", "decompose a sorites into valid syllogisms (conclusion last)");
  sorites->add_option("statements", texts, "premises then conclusion");
  sorites->add_option("--in", in_path, "file with one statement per line");
  add_common(sorites, opts);

  std::string triples_path, out_path;
  std::uint64_t seed = 0;
  bool shuffle = false, candidates = false;
  auto* generate = app.add_subcommand(
      "generate", "generate the 256-configuration benchmark for term triples");
  generate->add_option("--triples", triples_path,
                       "CSV file: subject,middle,predicate per line")
      ->required();
  generate->add_option("--out", out_path, "output dataset file (default stdout)");
  generate->add_option("--seed", seed, "seed for premise shuffling");
  generate->add_flag("--shuffle-premises", shuffle,
                     "randomize premise order per record");
  generate->add_flag("--candidate-conclusions", candidates,
                     "attach all 8 conclusion variants with validity");
  add_common(generate, opts);

  std::string annotations_path, out_prefix;
  auto* coverage = app.add_subcommand(
      "coverage", "phraseology and configuration coverage of a dataset");
  coverage->add_option("--in", in_path, "dataset file (default stdin)");
  coverage->add_option("--annotations", annotations_path,
                       "external annotations (JSON lines keyed by id)");
  coverage->add_option("--out", out_prefix, "prefix for CSV outputs");
  add_common(coverage, opts);

  std::string predictions_path;
  auto* breakdown = app.add_subcommand(
      "breakdown", "per-configuration error rates for a prediction file");
  breakdown->add_option("--in", in_path, "dataset file (default stdin)");
  breakdown->add_option("--predictions", predictions_path,
                        "CSV file: id,label per line")
      ->required();
  breakdown->add_option("--out", out_prefix, "prefix for CSV outputs");
  add_common(breakdown, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(texts, in_path, opts);
    if (app.got_subcommand(translate)) return cmd_translate(translate_text, opts);
    if (app.got_subcommand(analyze)) return cmd_analyze(texts, in_path, opts);
    if (app.got_subcommand(complete))
      return cmd_complete(missing, given[0], given[1], opts);
    if (app.got_subcommand(sorites)) return cmd_sorites(texts, in_path, opts);
    if (app.got_subcommand(generate))
      return cmd_generate(triples_path, out_path, seed, shuffle, candidates, opts);
    if (app.got_subcommand(coverage))
      return cmd_coverage(in_path, annotations_path, out_prefix, opts);
    if (app.got_subcommand(breakdown))
      return cmd_breakdown(in_path, predictions_path, out_prefix, opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
