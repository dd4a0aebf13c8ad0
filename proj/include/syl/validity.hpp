#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "syl/region_model.hpp"
#include "syl/syllogism.hpp"
#include "syl/types.hpp"

namespace syl {

// Verdict statuses. Under the modern interpretation, a form that fails as
// stated but becomes valid once certain terms are assumed non-empty is
// conditionally valid; under the aristotelian interpretation (which already
// grants existential import to every term) forms are simply valid or
// invalid. All three checking methods return the same status for the same
// input, so they can cross-check each other.
enum class ValidityStatus : std::uint8_t { valid, conditionally_valid, invalid };

const char* status_label(ValidityStatus s);  // "valid" etc.
std::optional<ValidityStatus> status_from_label(std::string_view s);

struct ValidityVerdict {
  ValidityStatus status = ValidityStatus::invalid;
  // Term roles whose assumed non-emptiness rescues the form; non-empty iff
  // conditionally valid.
  std::set<TermRole> required_nonempty;
  // Populated by the rule method only ("R1".."R5").
  std::vector<std::string> violated_rules;
  // Populated by the semantic method when the form fails as stated: a model
  // where both premises hold and the conclusion does not.
  std::optional<RegionModel> countermodel;
};

struct ConditionalRequirement {
  enum class Kind { unconditional, requires_nonempty, invalid_regardless };
  Kind kind = Kind::invalid_regardless;
  std::set<TermRole> roles;  // set iff kind == requires_nonempty
};

// The valid configurations under an interpretation, generated once from the
// semantic checker (never hand-listed) and cached: 15 under modern, 24 under
// aristotelian.
const std::set<Configuration>& valid_forms(Interpretation i);

// The minimal set of term roles whose assumed non-emptiness makes the
// configuration valid; unconditional when none is needed, invalid_regardless
// when even all-terms-non-empty fails. Computed from the semantic checker
// and cached.
const ConditionalRequirement& conditional_requirements(Configuration c);

// Classical distribution table: a term is distributed when the proposition
// makes a claim about every member of its class. A distributes its subject,
// E both terms, I neither, O its predicate.
bool distribution(PropositionType t, TermPosition position);

// Method 1: membership lookup against the oracle-generated form lists.
ValidityVerdict validity_by_table(Configuration c, Interpretation i);

// Method 2: exact decision by enumerating all 256 region models. Under
// aristotelian, models where some term's extension is entirely empty are
// excluded.
ValidityVerdict validity_by_semantics(const Syllogism& s, Interpretation i);

// Method 3: the five-rule system.
//   R1  middle term distributed in at least one premise
//   R2  a term distributed in the conclusion is distributed in its premise
//   R3  not two negative premises
//   R4  negative conclusion iff exactly one negative premise
//   R5  two universal premises cannot yield a particular conclusion
// R5 encodes existential import: under modern an R5-only violation downgrades
// the verdict to conditionally valid; under aristotelian R5 is waived.
ValidityVerdict validity_by_rules(const Syllogism& s, Interpretation i);

inline constexpr const char* kRuleIds[] = {"R1", "R2", "R3", "R4", "R5"};

}  // namespace syl
