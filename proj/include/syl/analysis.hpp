#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syl/error.hpp"
#include "syl/lang.hpp"
#include "syl/syllogism.hpp"
#include "syl/validity.hpp"

namespace syl::analysis {

// An ordinary argument: surface statements in any order, optionally with the
// conclusion marked by index. Without a marker, a leading conclusion cue
// ("therefore", "so", "hence", "thus") is used, falling back to the last
// statement.
struct Argument {
  std::vector<std::string> statements;
  std::optional<std::size_t> conclusion_index;

  static Result<Argument> make(std::vector<std::string> statements,
                               std::optional<std::size_t> conclusion_index = {});
};

enum class Flag : std::uint8_t {
  too_many_terms,
  enthymeme_suspected,
  cross_check_failed,
  untranslatable,
  no_valid_chain,
};

const char* flag_name(Flag f);

// Role of a proposition within a syllogism (for enthymeme completion).
enum class PropositionRole : std::uint8_t { major, minor, conclusion };

const char* proposition_role_name(PropositionRole r);
std::optional<PropositionRole> proposition_role_from_name(std::string_view s);

struct MethodVerdicts {
  ValidityVerdict table;
  ValidityVerdict rules;
  ValidityVerdict semantics;

  bool statuses_agree() const {
    return table.status == rules.status && rules.status == semantics.status;
  }
};

// End-to-end standardization and validity report. analyze() never throws:
// failures surface as flags alongside whatever partial results exist.
struct AnalysisReport {
  std::vector<lang::TranslationResult> translations;  // per statement
  std::optional<std::size_t> conclusion_index;
  std::optional<Syllogism> standardized;
  std::vector<Syllogism> chain;  // sorites decomposition steps
  std::optional<Configuration> configuration;
  std::map<Interpretation, MethodVerdicts> verdicts;
  std::vector<CategoricalProposition> completions;  // enthymeme candidates
  std::optional<PropositionRole> missing_role;
  std::vector<Flag> flags;
  std::vector<std::string> notes;

  bool has_flag(Flag f) const;
  std::string to_json() const;  // stable key order, byte-deterministic
};

struct ReducedSet {
  std::vector<CategoricalProposition> propositions;
  // One entry per proposition: the transform ids applied ("convert",
  // "obvert", "contrapose"), empty when untouched.
  std::vector<std::vector<std::string>> trace;
};

// Reduces the distinct-term count to exactly three: first substitutes
// synonyms (label -> label, acyclic), then searches compositions of the
// legitimate immediate inferences (depth <= 3 per proposition) for a
// model-equivalent variant set over three distinct labels. Every applied
// transform is individually truth-preserving, and the reduced set is
// re-checked for model equivalence against the input (jointly up to four
// base labels, per proposition beyond that).
// Errors: irreducible_terms, degenerate_proposition (synonym collapse).
Result<ReducedSet> reduce_terms(std::span<const CategoricalProposition> props,
                                const std::map<std::string, std::string>& synonyms);

// Completes an enthymeme: given two of {major premise, minor premise,
// conclusion} (in that canonical order) and the missing role, returns every
// proposition over the two non-shared terms (4 types x 2 orders = 8
// candidates, in that enumeration order) that yields a valid syllogism
// under the interpretation.
// Errors: structure_mismatch when the givens share != 1 term.
Result<std::vector<CategoricalProposition>> complete_enthymeme(
    const CategoricalProposition& first, const CategoricalProposition& second,
    PropositionRole missing, Interpretation i);

// Decomposes a sorites into a chain of valid syllogisms whose intermediate
// conclusions feed the next step and whose final conclusion matches.
// Premise orderings and intermediate conclusions are searched in
// deterministic order; the first complete chain wins. Two premises
// degenerate to a single validity check. At most 6 premises.
// Errors: no_valid_chain, limit_exceeded.
Result<std::vector<Syllogism>> decompose_sorites(
    std::span<const CategoricalProposition> premises,
    const CategoricalProposition& conclusion, Interpretation i);

// The full pipeline: translate, identify the conclusion, reduce terms,
// arrange in standard order, determine the configuration, run all three
// validity methods under both interpretations, and cross-check them.
// Two statements trigger enthymeme completion; more than three propositions
// trigger sorites decomposition. `i` selects the interpretation used for
// completion and chain search.
AnalysisReport analyze(const Argument& arg, Interpretation i);

// Removes a leading conclusion cue ("Therefore," etc.) from a statement;
// nullopt when none leads it.
std::optional<std::string> strip_conclusion_cue(const std::string& text);

}  // namespace syl::analysis
