#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syl/error.hpp"
#include "syl/types.hpp"

namespace syl::lang {

// Phraseology of a surface statement. Classification is deterministic: the
// cue lists are tried in the fixed priority order
//   Exceptive > Exclusive > Conditional > NonstandardQuantifier > Singular >
//   Standard > NonstandardPredicate > UnexpressedQuantifier > Other
// so that longer or rarer cues ("All except") win over the standard "All".
enum class PhraseologyCategory : std::uint8_t {
  standard,
  singular,
  conditional,
  exclusive,
  exceptive,
  nonstandard_quantifier,
  unexpressed_quantifier,
  nonstandard_predicate,
  other,
};

const char* category_name(PhraseologyCategory c);  // "Standard" etc.

// Translation of one surface statement into standard form. Compound
// phraseologies (exceptives, "few") yield more than one proposition; the
// trace lists the rule ids applied in order (stable API strings: T-SING,
// T-COND, T-EXCL, T-EXCEPT, T-NSQ, T-UNEXP, T-PRED, plus the
// "low-confidence" marker for defaulted unexpressed quantifiers).
struct TranslationResult {
  PhraseologyCategory category = PhraseologyCategory::other;
  std::vector<CategoricalProposition> propositions;
  std::vector<std::string> trace;
  bool verified = false;  // every output re-parsed as standard form
};

// Classifies a statement without translating it.
// Errors: empty_input.
Result<PhraseologyCategory> classify_phraseology(std::string_view text);

// Parses exactly the controlled grammar
//   ("All" | "No" | "Some") <subject> ("are" | "is") ["not"] <predicate> "."
// with the four legal quantifier/negation combinations (A, E, I, O). Term
// phrases may span several words but may not contain a copula or "not"; one
// leading article is dropped; "non-" prefixes become term complements.
// Errors: not_standard_form, with the index of the first unmatched token.
Result<CategoricalProposition> parse_standard(std::string_view text);

// Classifies and translates a statement, then re-parses every emitted
// proposition as a second-round check (`verified` is recomputed, never
// assumed). Standard statements pass through unchanged.
// Errors: empty_input; untranslatable when no rule applies (category Other)
// or the statement falls outside the controlled fragment.
Result<TranslationResult> translate(std::string_view text);

// The unique standard-form rendering of a proposition;
// parse_standard(render(p)) == p.
std::string render(const CategoricalProposition& p);

// Small built-in suffix tables (no external lexicon).
std::string fold_plural(std::string_view word);  // "greeks" -> "greek"
std::string pluralize(std::string_view word);    // "human" -> "humans"

// True when two canonical labels name the same class up to a plural suffix
// on their final word.
bool labels_match(std::string_view a, std::string_view b);

}  // namespace syl::lang
