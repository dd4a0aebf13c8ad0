#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "syl/error.hpp"
#include "syl/types.hpp"

namespace syl::bench {

// A relation triple whose terms fill the S/M/P slots of the templates.
// Labels must stay pairwise distinct after canonicalization and must not
// collapse under plural folding, or the analyzer would merge them.
struct TermTriple {
  Term subject;
  Term middle;
  Term predicate;

  static Result<TermTriple> make(std::string_view subject,
                                 std::string_view middle,
                                 std::string_view predicate);
};

struct GoldAnnotation {
  std::optional<Configuration> configuration;
  std::optional<std::string> validity;  // "valid" | "conditionally-valid" | "invalid"
  std::optional<Interpretation> interpretation;
  std::vector<std::string> phraseology;  // per statement (premises, then conclusion)
};

struct ConclusionCandidate {
  std::string text;
  std::string validity;
};

// One benchmark item. Ids are unique per dataset and sort in generation
// order.
struct DatasetRecord {
  std::string id;
  std::vector<std::string> premise_texts;
  std::string conclusion_text;
  std::optional<GoldAnnotation> gold;
  std::vector<ConclusionCandidate> candidates;
  std::optional<std::string> prediction;
  std::string source;
};

struct DatasetHeader {
  std::string schema = "syl-dataset/1";
  std::uint64_t seed = 0;
  std::optional<Interpretation> interpretation;
  std::string generator;
};

struct Dataset {
  DatasetHeader header;
  std::vector<DatasetRecord> records;
};

struct GenerateOptions {
  bool shuffle_premises = false;
  bool candidate_conclusions = false;
  std::uint64_t seed = 0;
};

// One record per triple x configuration (256 per triple), in canonical
// order. Gold carries the configuration and its validity label under `i`.
// With shuffle_premises, a seeded mt19937_64 decides one premise swap per
// record (one draw per record, in record order), so output is
// bit-reproducible for a fixed seed. With candidate_conclusions, each record
// lists all 8 conclusion variants with their validity.
// Errors: invalid_triple.
Result<std::vector<DatasetRecord>> generate(std::span<const TermTriple> triples,
                                            Interpretation i,
                                            const GenerateOptions& opts = {});

// Line-delimited JSON, one object per line, header record first
// (schema "syl-dataset/1"; see docs/formats.md).
void write_dataset(std::ostream& out, const Dataset& dataset);
Result<Dataset> read_dataset(std::istream& in);

// External annotations keyed by record id (human or model labels), used to
// override what the parser/analyzer would derive.
struct ExternalAnnotation {
  std::optional<Configuration> configuration;
  std::vector<std::string> phraseology;
};
using AnnotationMap = std::map<std::string, ExternalAnnotation>;
Result<AnnotationMap> read_annotations(std::istream& in);

struct CoverageReport {
  std::map<std::string, std::size_t> phraseology_counts;  // category -> statements
  std::size_t statements_total = 0;
  std::set<Configuration> configurations_covered;
  std::size_t records_total = 0;
  std::size_t records_assessable = 0;  // configuration determined + cross-check passed
  std::vector<std::string> flagged_ids;

  double phraseology_percent(const std::string& category) const;
  double assessable_percent() const;

  std::string to_text() const;
  std::string to_json() const;
  std::string phraseology_csv() const;
  std::string configurations_csv() const;
};

// Classifies each statement (or takes the ingested annotation), determines
// each record's configuration (annotation, then gold, then re-analysis),
// applies the validity cross-check, and tallies coverage.
// Errors: schema_error.
Result<CoverageReport> assess_coverage(std::span<const DatasetRecord> records,
                                       const AnnotationMap* annotations = nullptr,
                                       Interpretation fallback = Interpretation::modern);

enum class CrossCheckOutcome : std::uint8_t { pass, flagged };

// One-directional check: a record labeled valid whose configuration is not
// one of the valid forms must be wrong.
CrossCheckOutcome cross_check(Configuration c, std::string_view gold_label,
                              Interpretation i);

// Record-level wrapper; uses the record's gold configuration and label.
// Errors: missing_annotation.
Result<CrossCheckOutcome> cross_check(const DatasetRecord& record,
                                      Interpretation fallback = Interpretation::modern);

// Maps external label vocabularies onto ours: entail(ment) -> valid,
// contradict(ion)/false -> invalid, neutral -> invalid (as stated),
// true -> valid; ours pass through.
std::string normalize_validity_label(std::string_view label);

// Predictions file: "id,label" per line (optional "id,label" header).
using PredictionMap = std::map<std::string, std::string>;
Result<PredictionMap> read_predictions(std::istream& in);

struct CellStats {
  std::size_t trials = 0;
  std::size_t errors = 0;
  double rate() const { return trials ? static_cast<double>(errors) / trials : 0.0; }
};

struct ErrorBreakdown {
  std::map<Configuration, CellStats> cells;
  CellStats unassessable;  // the "N/A" bucket
  std::size_t predictions_total = 0;
  std::map<std::string, CellStats> by_mood;
  std::array<CellStats, 4> by_figure{};

  // 64 mood rows x 4 figure columns of error rates; cells without trials
  // stay blank.
  std::string matrix_csv() const;
  // Long form: configuration,n,errors,rate (all 256 rows plus N/A).
  std::string cells_csv() const;
  std::string to_text() const;
  std::string to_json() const;
};

// Per-configuration error rates for a prediction file. Records whose
// configuration cannot be determined or fails the cross-check land in the
// N/A bucket, so trials across cells plus N/A always equal the number of
// predictions.
// Errors: unknown_id, missing_gold.
Result<ErrorBreakdown> error_breakdown(std::span<const DatasetRecord> records,
                                       const PredictionMap& predictions,
                                       Interpretation fallback = Interpretation::modern);

}  // namespace syl::bench
