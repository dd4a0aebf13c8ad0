#include "syl/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "syl/analysis.hpp"
#include "syl/lang.hpp"
#include "syl/syllogism.hpp"
#include "syl/validity.hpp"
#include "serialize.hpp"

namespace syl::bench {

namespace {

using nlohmann::json;

std::string format_rate(double rate) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", rate);
  return buf;
}

Error schema_error(std::string msg, int line = -1) {
  if (line >= 0) msg += " (line " + std::to_string(line) + ")";
  return make_error(Errc::schema_error, std::move(msg));
}

// Ids are matched verbatim; only surrounding whitespace is dropped.
std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return std::string(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// Triples and generation
// ---------------------------------------------------------------------------

Result<TermTriple> TermTriple::make(std::string_view subject,
                                    std::string_view middle,
                                    std::string_view predicate) {
  std::array<std::string_view, 3> raw = {subject, middle, predicate};
  std::vector<Term> terms;
  for (std::string_view label : raw) {
    try {
      terms.emplace_back(label);
    } catch (const std::invalid_argument&) {
      return make_error(Errc::invalid_triple, "empty term label in triple");
    }
    if (terms.back().complemented()) {
      return make_error(Errc::invalid_triple,
                        "triple labels must be plain classes, not complements");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (lang::labels_match(terms[i].label(), terms[j].label())) {
        return make_error(Errc::invalid_triple,
                          "triple labels '" + terms[i].label() + "' and '" +
                              terms[j].label() + "' name the same class");
      }
    }
  }
  return TermTriple{terms[0], terms[1], terms[2]};
}

Result<std::vector<DatasetRecord>> generate(std::span<const TermTriple> triples,
                                            Interpretation i,
                                            const GenerateOptions& opts) {
  for (const TermTriple& t : triples) {
    auto check = TermTriple::make(t.subject.label(), t.middle.label(),
                                  t.predicate.label());
    if (!check.ok()) return check.error();
  }

  std::vector<DatasetRecord> records;
  records.reserve(triples.size() * 256);
  // One draw per record, in record order; the low bit decides the premise
  // swap. mt19937_64 output is specified by the standard, so a fixed seed
  // reproduces the file bit for bit.
  std::mt19937_64 rng(opts.seed);

  for (std::size_t ti = 0; ti < triples.size(); ++ti) {
    const TermTriple& triple = triples[ti];
    char prefix[32];
    std::snprintf(prefix, sizeof prefix, "t%04zu", ti + 1);
    for (const Configuration& config : enumerate_configurations()) {
      Syllogism s = instantiate(config, triple.subject, triple.middle,
                                triple.predicate);
      DatasetRecord rec;
      rec.id = std::string(prefix) + "-" + config.str();
      rec.premise_texts = {lang::render(s.major_premise()),
                           lang::render(s.minor_premise())};
      if (opts.shuffle_premises && (rng() & 1u)) {
        std::swap(rec.premise_texts[0], rec.premise_texts[1]);
      }
      rec.conclusion_text = lang::render(s.conclusion());
      GoldAnnotation gold;
      gold.configuration = config;
      gold.validity = status_label(validity_by_table(config, i).status);
      gold.interpretation = i;
      gold.phraseology = {"Standard", "Standard", "Standard"};
      rec.gold = std::move(gold);
      rec.source = "generator";
      if (opts.candidate_conclusions) {
        for (PropositionType type : kAllTypes) {
          for (const auto& [x, y] :
               {std::pair{s.minor_term(), s.major_term()},
                std::pair{s.major_term(), s.minor_term()}}) {
            CategoricalProposition cand(type, x, y);
            auto alt = Syllogism::standard_order(s.major_premise(),
                                                 s.minor_premise(), cand);
            rec.candidates.push_back(
                {lang::render(cand),
                 status_label(
                     validity_by_table(alt->configuration(), i).status)});
          }
        }
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

// ---------------------------------------------------------------------------
// Dataset file I/O (line-delimited JSON, schema "syl-dataset/1")
// ---------------------------------------------------------------------------

namespace {

json record_json(const DatasetRecord& rec) {
  json j;
  j["record"] = "item";
  j["id"] = rec.id;
  j["premises"] = rec.premise_texts;
  j["conclusion"] = rec.conclusion_text;
  if (rec.gold) {
    json g;
    if (rec.gold->configuration) {
      g["configuration"] = rec.gold->configuration->str();
      g["mood"] = rec.gold->configuration->mood.str();
      g["figure"] = figure_number(rec.gold->configuration->figure);
    }
    if (rec.gold->validity) g["validity"] = *rec.gold->validity;
    if (rec.gold->interpretation)
      g["interpretation"] = interpretation_name(*rec.gold->interpretation);
    if (!rec.gold->phraseology.empty()) g["phraseology"] = rec.gold->phraseology;
    j["gold"] = g;
  }
  if (!rec.candidates.empty()) {
    auto arr = json::array();
    for (const auto& c : rec.candidates) {
      arr.push_back({{"text", c.text}, {"validity", c.validity}});
    }
    j["candidates"] = arr;
  }
  if (rec.prediction) j["prediction"] = *rec.prediction;
  if (!rec.source.empty()) j["source"] = rec.source;
  return j;
}

Result<std::optional<Configuration>> configuration_from_json(const json& j,
                                                             int line) {
  if (j.contains("configuration")) {
    auto c = Configuration::parse(j["configuration"].get<std::string>());
    if (!c) return schema_error("bad configuration string", line);
    return std::optional<Configuration>(*c);
  }
  if (j.contains("mood") && j.contains("figure")) {
    auto mood = Mood::parse(j["mood"].get<std::string>());
    auto figure = figure_from_number(j["figure"].get<int>());
    if (!mood || !figure) return schema_error("bad mood/figure", line);
    return std::optional<Configuration>(Configuration{*mood, *figure});
  }
  return std::optional<Configuration>();
}

}  // namespace

void write_dataset(std::ostream& out, const Dataset& dataset) {
  json header;
  header["record"] = "header";
  header["schema"] = dataset.header.schema;
  header["seed"] = dataset.header.seed;
  header["interpretation"] =
      dataset.header.interpretation
          ? json(interpretation_name(*dataset.header.interpretation))
          : json();
  header["generator"] = dataset.header.generator;
  header["count"] = dataset.records.size();
  out << header.dump() << "\n";
  for (const DatasetRecord& rec : dataset.records) {
    out << record_json(rec).dump() << "\n";
  }
}

namespace {

Result<DatasetRecord> parse_item(const json& j, int line_no) {
  DatasetRecord rec;
  if (!j.contains("id") || !j["id"].is_string()) {
    return schema_error("item without id", line_no);
  }
  rec.id = j["id"].get<std::string>();
  if (!j.contains("premises") || !j["premises"].is_array() ||
      j["premises"].empty()) {
    return schema_error("item without premises", line_no);
  }
  for (const auto& p : j["premises"]) {
    if (!p.is_string()) return schema_error("premise is not a string", line_no);
    rec.premise_texts.push_back(p.get<std::string>());
  }
  if (!j.contains("conclusion") || !j["conclusion"].is_string()) {
    return schema_error("item without conclusion", line_no);
  }
  rec.conclusion_text = j["conclusion"].get<std::string>();
  if (j.contains("gold") && j["gold"].is_object()) {
    const json& g = j["gold"];
    GoldAnnotation gold;
    auto config = configuration_from_json(g, line_no);
    if (!config.ok()) return config.error();
    gold.configuration = *config;
    if (g.contains("validity")) gold.validity = g["validity"].get<std::string>();
    if (g.contains("interpretation")) {
      gold.interpretation =
          interpretation_from_name(g["interpretation"].get<std::string>());
    }
    if (g.contains("phraseology")) {
      for (const auto& p : g["phraseology"])
        gold.phraseology.push_back(p.get<std::string>());
    }
    rec.gold = std::move(gold);
  }
  if (j.contains("candidates")) {
    for (const auto& c : j["candidates"]) {
      rec.candidates.push_back({c.value("text", ""), c.value("validity", "")});
    }
  }
  if (j.contains("prediction") && j["prediction"].is_string()) {
    rec.prediction = j["prediction"].get<std::string>();
  }
  rec.source = j.value("source", "");
  return rec;
}

Result<DatasetHeader> parse_header(const json& j, int line_no) {
  DatasetHeader header;
  header.schema = j.value("schema", "");
  if (header.schema != "syl-dataset/1") {
    return schema_error("unsupported schema '" + header.schema + "'", line_no);
  }
  header.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("interpretation") && j["interpretation"].is_string()) {
    header.interpretation =
        interpretation_from_name(j["interpretation"].get<std::string>());
  }
  header.generator = j.value("generator", "");
  return header;
}

}  // namespace

Result<Dataset> read_dataset(std::istream& in) {
  Dataset dataset;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  std::set<std::string> ids;
  while (std::getline(in, line)) {
    ++line_no;
    if (canonical_label(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return schema_error("line is not a JSON object", line_no);
    }
    try {
      std::string kind = j.value("record", "item");
      if (kind == "header") {
        if (saw_header) return schema_error("duplicate header record", line_no);
        saw_header = true;
        auto header = parse_header(j, line_no);
        if (!header.ok()) return header.error();
        dataset.header = std::move(header).value();
        continue;
      }
      if (kind != "item") {
        return schema_error("unknown record kind '" + kind + "'", line_no);
      }
      if (!saw_header) return schema_error("missing header record", 1);
      auto rec = parse_item(j, line_no);
      if (!rec.ok()) return rec.error();
      if (!ids.insert(rec->id).second) {
        return schema_error("duplicate id '" + rec->id + "'", line_no);
      }
      dataset.records.push_back(std::move(rec).value());
    } catch (const json::exception& e) {
      return schema_error(std::string("bad field type: ") + e.what(), line_no);
    }
  }
  if (!saw_header) return schema_error("missing header record", 1);
  return dataset;
}

Result<AnnotationMap> read_annotations(std::istream& in) {
  AnnotationMap map;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (canonical_label(line).empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("id")) {
      return schema_error("annotation line needs a JSON object with an id",
                          line_no);
    }
    try {
      ExternalAnnotation ann;
      auto config = configuration_from_json(j, line_no);
      if (!config.ok()) return config.error();
      ann.configuration = *config;
      if (j.contains("phraseology")) {
        for (const auto& p : j["phraseology"])
          ann.phraseology.push_back(p.get<std::string>());
      }
      map[j["id"].get<std::string>()] = std::move(ann);
    } catch (const json::exception& e) {
      return schema_error(std::string("bad field type: ") + e.what(), line_no);
    }
  }
  return map;
}

// ---------------------------------------------------------------------------
// Coverage
// ---------------------------------------------------------------------------

namespace {

std::optional<Configuration> analyzed_configuration(const DatasetRecord& rec,
                                                    Interpretation i) {
  std::vector<std::string> statements = rec.premise_texts;
  statements.push_back(rec.conclusion_text);
  auto arg = analysis::Argument::make(statements, statements.size() - 1);
  if (!arg.ok()) return std::nullopt;
  return analysis::analyze(*arg, i).configuration;
}

Interpretation record_interpretation(const DatasetRecord& rec,
                                     Interpretation fallback) {
  if (rec.gold && rec.gold->interpretation) return *rec.gold->interpretation;
  return fallback;
}

}  // namespace

CrossCheckOutcome cross_check(Configuration c, std::string_view gold_label,
                              Interpretation i) {
  if (normalize_validity_label(gold_label) == "valid" &&
      valid_forms(i).count(c) == 0) {
    return CrossCheckOutcome::flagged;
  }
  return CrossCheckOutcome::pass;
}

Result<CrossCheckOutcome> cross_check(const DatasetRecord& record,
                                      Interpretation fallback) {
  if (!record.gold || !record.gold->validity) {
    return make_error(Errc::missing_annotation,
                      "record '" + record.id + "' has no gold validity label");
  }
  std::optional<Configuration> config = record.gold->configuration;
  if (!config) {
    config = analyzed_configuration(record, record_interpretation(record, fallback));
  }
  if (!config) {
    return make_error(Errc::missing_annotation,
                      "record '" + record.id + "' has no determinable configuration");
  }
  return cross_check(*config, *record.gold->validity,
                     record_interpretation(record, fallback));
}

Result<CoverageReport> assess_coverage(std::span<const DatasetRecord> records,
                                       const AnnotationMap* annotations,
                                       Interpretation fallback) {
  CoverageReport rep;
  rep.records_total = records.size();
  for (const DatasetRecord& rec : records) {
    if (rec.premise_texts.empty() || rec.conclusion_text.empty()) {
      return schema_error("record '" + rec.id + "' is missing statements");
    }
    const ExternalAnnotation* ann = nullptr;
    if (annotations) {
      auto it = annotations->find(rec.id);
      if (it != annotations->end()) ann = &it->second;
    }

    std::vector<std::string> statements = rec.premise_texts;
    statements.push_back(rec.conclusion_text);
    // Classification looks through an argument-level "Therefore," on the
    // conclusion.
    if (auto stripped = analysis::strip_conclusion_cue(statements.back())) {
      statements.back() = *stripped;
    }
    for (std::size_t i = 0; i < statements.size(); ++i) {
      std::string category;
      if (ann && i < ann->phraseology.size()) {
        category = ann->phraseology[i];
      } else if (rec.gold && i < rec.gold->phraseology.size()) {
        category = rec.gold->phraseology[i];
      } else {
        auto c = lang::classify_phraseology(statements[i]);
        category = c.ok() ? lang::category_name(*c) : "Other";
      }
      ++rep.phraseology_counts[category];
      ++rep.statements_total;
    }

    Interpretation interp = record_interpretation(rec, fallback);
    std::optional<Configuration> config;
    if (ann && ann->configuration) {
      config = ann->configuration;
    } else if (rec.gold && rec.gold->configuration) {
      config = rec.gold->configuration;
    } else {
      config = analyzed_configuration(rec, interp);
    }

    bool flagged = false;
    if (config && rec.gold && rec.gold->validity) {
      flagged = cross_check(*config, *rec.gold->validity, interp) ==
                CrossCheckOutcome::flagged;
    }
    if (flagged) rep.flagged_ids.push_back(rec.id);
    if (config && !flagged) {
      ++rep.records_assessable;
      rep.configurations_covered.insert(*config);
    }
  }
  return rep;
}

double CoverageReport::phraseology_percent(const std::string& category) const {
  auto it = phraseology_counts.find(category);
  if (it == phraseology_counts.end() || statements_total == 0) return 0.0;
  return 100.0 * static_cast<double>(it->second) /
         static_cast<double>(statements_total);
}

double CoverageReport::assessable_percent() const {
  if (records_total == 0) return 0.0;
  return 100.0 * static_cast<double>(records_assessable) /
         static_cast<double>(records_total);
}

std::string CoverageReport::to_text() const {
  std::ostringstream out;
  out << "records:              " << records_total << "\n";
  out << "statements:           " << statements_total << "\n";
  out << "phraseology:\n";
  for (const auto& [category, count] : phraseology_counts) {
    out << "  " << category << ": " << count << " ("
        << format_rate(phraseology_percent(category)) << "%)\n";
  }
  out << "configurations:       " << configurations_covered.size() << "/256\n";
  out << "assessable:           " << records_assessable << " ("
      << format_rate(assessable_percent()) << "%)\n";
  out << "cross-check flags:    " << flagged_ids.size() << "\n";
  return out.str();
}

std::string CoverageReport::to_json() const {
  json j;
  json phr;
  for (const auto& [category, count] : phraseology_counts) {
    phr[category] = {{"count", count},
                     {"percent", phraseology_percent(category)}};
  }
  j["phraseology"] = phr;
  j["statements_total"] = statements_total;
  auto covered = json::array();
  for (const Configuration& c : configurations_covered) covered.push_back(c.str());
  j["configurations_covered"] = covered;
  j["configurations_covered_count"] = configurations_covered.size();
  j["records_total"] = records_total;
  j["records_assessable"] = records_assessable;
  j["assessable_percent"] = assessable_percent();
  j["cross_check_flags"] = flagged_ids;
  return j.dump();
}

std::string CoverageReport::phraseology_csv() const {
  std::ostringstream out;
  out << "category,count,percent\n";
  for (const auto& [category, count] : phraseology_counts) {
    out << category << "," << count << ","
        << format_rate(phraseology_percent(category)) << "\n";
  }
  return out.str();
}

std::string CoverageReport::configurations_csv() const {
  std::ostringstream out;
  out << "configuration,covered\n";
  for (const Configuration& c : enumerate_configurations()) {
    out << c.str() << "," << (configurations_covered.count(c) ? 1 : 0) << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Predictions and error breakdown
// ---------------------------------------------------------------------------

std::string normalize_validity_label(std::string_view label) {
  std::string low = canonical_label(label);
  if (low == "valid" || low == "entail" || low == "entails" ||
      low == "entailment" || low == "true") {
    return "valid";
  }
  if (low == "invalid" || low == "contradict" || low == "contradiction" ||
      low == "false" || low == "neutral") {
    return "invalid";
  }
  if (low == "conditionally-valid" || low == "conditionally valid") {
    return "conditionally-valid";
  }
  return low;
}

Result<PredictionMap> read_predictions(std::istream& in) {
  PredictionMap map;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = canonical_label(line);
    if (trimmed.empty()) continue;
    if (line_no == 1 && trimmed == "id,label") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      return schema_error("prediction line needs 'id,label'", line_no);
    }
    std::string id = trim(line.substr(0, comma));
    std::string label = canonical_label(line.substr(comma + 1));
    if (id.empty() || label.empty()) {
      return schema_error("prediction line needs 'id,label'", line_no);
    }
    if (!map.emplace(id, label).second) {
      return schema_error("duplicate prediction for id '" + id + "'", line_no);
    }
  }
  return map;
}

Result<ErrorBreakdown> error_breakdown(std::span<const DatasetRecord> records,
                                       const PredictionMap& predictions,
                                       Interpretation fallback) {
  std::map<std::string, const DatasetRecord*> by_id;
  for (const DatasetRecord& rec : records) by_id.emplace(rec.id, &rec);

  ErrorBreakdown out;
  out.predictions_total = predictions.size();
  for (const auto& [id, predicted] : predictions) {
    auto it = by_id.find(id);
    if (it == by_id.end()) {
      return make_error(Errc::unknown_id, "prediction for unknown id '" + id + "'");
    }
    const DatasetRecord& rec = *it->second;
    if (!rec.gold || !rec.gold->validity) {
      return make_error(Errc::missing_gold,
                        "record '" + id + "' has no gold validity label");
    }
    Interpretation interp = record_interpretation(rec, fallback);
    std::optional<Configuration> config = rec.gold->configuration;
    if (!config) config = analyzed_configuration(rec, interp);

    bool assessable =
        config && cross_check(*config, *rec.gold->validity, interp) ==
                      CrossCheckOutcome::pass;
    bool wrong = normalize_validity_label(predicted) !=
                 normalize_validity_label(*rec.gold->validity);
    CellStats& cell = assessable ? out.cells[*config] : out.unassessable;
    ++cell.trials;
    cell.errors += wrong ? 1 : 0;
    if (assessable) {
      CellStats& mood = out.by_mood[config->mood.str()];
      ++mood.trials;
      mood.errors += wrong ? 1 : 0;
      CellStats& fig = out.by_figure[figure_number(config->figure) - 1];
      ++fig.trials;
      fig.errors += wrong ? 1 : 0;
    }
  }
  return out;
}

std::string ErrorBreakdown::matrix_csv() const {
  std::ostringstream out;
  out << "mood,1,2,3,4\n";
  for (const Mood& mood : enumerate_moods()) {
    out << mood.str();
    for (Figure fig : kAllFigures) {
      out << ",";
      auto it = cells.find(Configuration{mood, fig});
      if (it != cells.end() && it->second.trials > 0) {
        out << format_rate(it->second.rate());
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string ErrorBreakdown::cells_csv() const {
  std::ostringstream out;
  out << "configuration,n,errors,rate\n";
  for (const Configuration& config : enumerate_configurations()) {
    auto it = cells.find(config);
    const CellStats stats = it == cells.end() ? CellStats{} : it->second;
    out << config.str() << "," << stats.trials << "," << stats.errors << ",";
    if (stats.trials > 0) out << format_rate(stats.rate());
    out << "\n";
  }
  out << "N/A," << unassessable.trials << "," << unassessable.errors << ",";
  if (unassessable.trials > 0) out << format_rate(unassessable.rate());
  out << "\n";
  return out.str();
}

std::string ErrorBreakdown::to_text() const {
  std::ostringstream out;
  std::size_t trials = unassessable.trials;
  std::size_t errors = unassessable.errors;
  for (const auto& [config, stats] : cells) {
    trials += stats.trials;
    errors += stats.errors;
  }
  out << "predictions:     " << predictions_total << "\n";
  out << "overall errors:  " << errors << " ("
      << format_rate(trials ? 100.0 * errors / trials : 0.0) << "%)\n";
  out << "unassessable:    " << unassessable.trials << "\n";
  out << "cells with errors:\n";
  bool any = false;
  for (const auto& [config, stats] : cells) {
    if (stats.errors == 0) continue;
    any = true;
    out << "  " << config.str() << ": " << stats.errors << "/" << stats.trials
        << " (" << format_rate(stats.rate()) << ")\n";
  }
  if (!any) out << "  none\n";
  return out.str();
}

std::string ErrorBreakdown::to_json() const {
  json j;
  auto cell_json = [](const CellStats& s) {
    return json{{"n", s.trials},
                {"errors", s.errors},
                {"rate", s.trials ? json(s.rate()) : json()}};
  };
  auto arr = json::array();
  for (const Configuration& config : enumerate_configurations()) {
    auto it = cells.find(config);
    json c = cell_json(it == cells.end() ? CellStats{} : it->second);
    c["configuration"] = config.str();
    arr.push_back(c);
  }
  j["cells"] = arr;
  j["na"] = cell_json(unassessable);
  j["predictions_total"] = predictions_total;
  json moods;
  for (const auto& [mood, stats] : by_mood) moods[mood] = cell_json(stats);
  j["by_mood"] = moods;
  json figures;
  for (int f = 0; f < 4; ++f) figures[std::to_string(f + 1)] = cell_json(by_figure[f]);
  j["by_figure"] = figures;
  return j.dump();
}

}  // namespace syl::bench
