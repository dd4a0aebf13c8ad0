#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syl/error.hpp"

namespace syl {

// ---------------------------------------------------------------------------
// Proposition types
// ---------------------------------------------------------------------------

// The four standard-form categorical proposition types:
//   A  universal affirmative   "All S are P."
//   E  universal negative      "No S are P."
//   I  particular affirmative  "Some S are P."
//   O  particular negative     "Some S are not P."
enum class PropositionType : std::uint8_t { A = 0, E = 1, I = 2, O = 3 };

inline constexpr PropositionType kAllTypes[] = {
    PropositionType::A, PropositionType::E, PropositionType::I,
    PropositionType::O};

char letter(PropositionType t);
std::optional<PropositionType> type_from_letter(char c);

bool is_universal(PropositionType t);    // A, E
bool is_affirmative(PropositionType t);  // A, I

// Same quantity, opposite quality: A<->E, I<->O.
PropositionType quality_flipped(PropositionType t);

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

// ASCII case-fold, collapse whitespace runs to single spaces, trim.
std::string canonical_label(std::string_view text);

// A class term. `complemented` marks the complement class ("non-X").
// Labels are stored normalized; a leading "non-" prefix is folded into the
// flag at construction, so double complementation is never stored.
class Term {
 public:
  // Throws std::invalid_argument if the label is empty after normalization.
  explicit Term(std::string_view label, bool complemented = false);

  const std::string& label() const { return label_; }
  bool complemented() const { return complemented_; }

  Term complement() const;

  // Surface text: "x" or "non-x".
  std::string text() const;

  auto operator<=>(const Term&) const = default;

 private:
  std::string label_;
  bool complemented_ = false;
};

// ---------------------------------------------------------------------------
// Categorical propositions
// ---------------------------------------------------------------------------

// One standard-form categorical proposition: type + subject + predicate.
// Subject and predicate must differ (comparing both label and complement
// flag).
class CategoricalProposition {
 public:
  // Throws std::invalid_argument on subject == predicate.
  CategoricalProposition(PropositionType type, Term subject, Term predicate);

  // Non-throwing construction for user-input paths.
  static Result<CategoricalProposition> make(PropositionType type,
                                             Term subject, Term predicate);

  PropositionType type() const { return type_; }
  const Term& subject() const { return subject_; }
  const Term& predicate() const { return predicate_; }

  bool mentions(const Term& t) const;

  auto operator<=>(const CategoricalProposition&) const = default;

 private:
  PropositionType type_;
  Term subject_;
  Term predicate_;
};

// ---------------------------------------------------------------------------
// Mood, figure, configuration
// ---------------------------------------------------------------------------

// Placement of the middle term across the premises:
//   figure 1: M-P / S-M      figure 2: P-M / S-M
//   figure 3: M-P / M-S      figure 4: P-M / M-S
enum class Figure : std::uint8_t { f1 = 1, f2 = 2, f3 = 3, f4 = 4 };

inline constexpr Figure kAllFigures[] = {Figure::f1, Figure::f2, Figure::f3,
                                         Figure::f4};

int figure_number(Figure f);
std::optional<Figure> figure_from_number(int n);

// The three proposition-type letters of a syllogism, in standard order
// (major premise, minor premise, conclusion). 64 possible values.
struct Mood {
  PropositionType major;
  PropositionType minor;
  PropositionType conclusion;

  std::string str() const;  // "AAA"
  static std::optional<Mood> parse(std::string_view s);

  auto operator<=>(const Mood&) const = default;
};

// Mood + figure. 256 possible values; the total order (mood lexicographic by
// A<E<I<O, then figure ascending) is the canonical iteration order used by
// every report and fixture.
struct Configuration {
  Mood mood;
  Figure figure;

  std::string str() const;  // "AAA-1"
  static std::optional<Configuration> parse(std::string_view s);

  int index() const;  // 0..255, enumeration position
  static Configuration from_index(int index);

  auto operator<=>(const Configuration&) const = default;
};

// All 256 configurations in canonical order (first element AAA-1).
const std::vector<Configuration>& enumerate_configurations();

// All 64 moods in canonical order.
const std::vector<Mood>& enumerate_moods();

// ---------------------------------------------------------------------------
// Interpretations and term roles
// ---------------------------------------------------------------------------

// modern: no existential import (15 valid configurations).
// aristotelian: every term denotes a non-empty class (24 valid).
enum class Interpretation : std::uint8_t { modern, aristotelian };

inline constexpr Interpretation kAllInterpretations[] = {
    Interpretation::modern, Interpretation::aristotelian};

const char* interpretation_name(Interpretation i);
std::optional<Interpretation> interpretation_from_name(std::string_view s);

// Role of a term within a syllogism: minor term (S, conclusion subject),
// middle term (M), major term (P, conclusion predicate).
enum class TermRole : std::uint8_t { subject = 0, middle = 1, predicate = 2 };

const char* role_letter(TermRole r);  // "S", "M", "P"

// Position of a term within a single proposition.
enum class TermPosition : std::uint8_t { subject, predicate };

}  // namespace syl
