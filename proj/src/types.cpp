#include "syl/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace syl {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::too_many_terms: return "TooManyTerms";
    case Errc::malformed_structure: return "MalformedStructure";
    case Errc::degenerate_proposition: return "DegenerateProposition";
    case Errc::illegitimate_conversion: return "IllegitimateConversion";
    case Errc::illegitimate_contraposition: return "IllegitimateContraposition";
    case Errc::empty_input: return "EmptyInput";
    case Errc::not_standard_form: return "NotStandardForm";
    case Errc::untranslatable: return "Untranslatable";
    case Errc::irreducible_terms: return "IrreducibleTerms";
    case Errc::structure_mismatch: return "StructureMismatch";
    case Errc::no_valid_chain: return "NoValidChain";
    case Errc::limit_exceeded: return "LimitExceeded";
    case Errc::invalid_triple: return "InvalidTriple";
    case Errc::schema_error: return "SchemaError";
    case Errc::missing_annotation: return "MissingAnnotation";
    case Errc::unknown_id: return "UnknownId";
    case Errc::missing_gold: return "MissingGold";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

std::string Error::describe() const {
  std::string out = errc_name(code);
  out += ": ";
  out += message;
  if (position >= 0) {
    out += " (at token ";
    out += std::to_string(position);
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Proposition types
// ---------------------------------------------------------------------------

char letter(PropositionType t) {
  switch (t) {
    case PropositionType::A: return 'A';
    case PropositionType::E: return 'E';
    case PropositionType::I: return 'I';
    case PropositionType::O: return 'O';
  }
  return '?';
}

std::optional<PropositionType> type_from_letter(char c) {
  switch (c) {
    case 'A': case 'a': return PropositionType::A;
    case 'E': case 'e': return PropositionType::E;
    case 'I': case 'i': return PropositionType::I;
    case 'O': case 'o': return PropositionType::O;
    default: return std::nullopt;
  }
}

bool is_universal(PropositionType t) {
  return t == PropositionType::A || t == PropositionType::E;
}

bool is_affirmative(PropositionType t) {
  return t == PropositionType::A || t == PropositionType::I;
}

PropositionType quality_flipped(PropositionType t) {
  switch (t) {
    case PropositionType::A: return PropositionType::E;
    case PropositionType::E: return PropositionType::A;
    case PropositionType::I: return PropositionType::O;
    case PropositionType::O: return PropositionType::I;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

std::string canonical_label(std::string_view text) {
  // Pure ASCII folding: no locale, so canonicalization is deterministic.
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
  }
  return out;
}

Term::Term(std::string_view label, bool complemented)
    : label_(canonical_label(label)), complemented_(complemented) {
  // Fold any textual "non-" layers into the flag.
  while (label_.rfind("non-", 0) == 0) {
    label_.erase(0, 4);
    while (!label_.empty() && label_.front() == ' ') label_.erase(0, 1);
    complemented_ = !complemented_;
  }
  if (label_.empty()) {
    throw std::invalid_argument("empty term label");
  }
}

Term Term::complement() const {
  Term t = *this;
  t.complemented_ = !t.complemented_;
  return t;
}

std::string Term::text() const {
  return complemented_ ? "non-" + label_ : label_;
}

// ---------------------------------------------------------------------------
// Categorical propositions
// ---------------------------------------------------------------------------

CategoricalProposition::CategoricalProposition(PropositionType type,
                                               Term subject, Term predicate)
    : type_(type), subject_(std::move(subject)), predicate_(std::move(predicate)) {
  if (subject_ == predicate_) {
    throw std::invalid_argument("subject and predicate terms must differ");
  }
}

Result<CategoricalProposition> CategoricalProposition::make(
    PropositionType type, Term subject, Term predicate) {
  if (subject == predicate) {
    return make_error(Errc::degenerate_proposition,
                      "subject and predicate terms are identical: " +
                          subject.text());
  }
  return CategoricalProposition(type, std::move(subject), std::move(predicate));
}

bool CategoricalProposition::mentions(const Term& t) const {
  return subject_ == t || predicate_ == t;
}

// ---------------------------------------------------------------------------
// Mood, figure, configuration
// ---------------------------------------------------------------------------

int figure_number(Figure f) { return static_cast<int>(f); }

std::optional<Figure> figure_from_number(int n) {
  if (n < 1 || n > 4) return std::nullopt;
  return static_cast<Figure>(n);
}

std::string Mood::str() const {
  return {letter(major), letter(minor), letter(conclusion)};
}

std::optional<Mood> Mood::parse(std::string_view s) {
  if (s.size() != 3) return std::nullopt;
  auto a = type_from_letter(s[0]);
  auto b = type_from_letter(s[1]);
  auto c = type_from_letter(s[2]);
  if (!a || !b || !c) return std::nullopt;
  return Mood{*a, *b, *c};
}

std::string Configuration::str() const {
  return mood.str() + "-" + std::to_string(figure_number(figure));
}

std::optional<Configuration> Configuration::parse(std::string_view s) {
  if (s.size() != 5 || s[3] != '-') return std::nullopt;
  auto mood = Mood::parse(s.substr(0, 3));
  if (!mood) return std::nullopt;
  if (s[4] < '1' || s[4] > '4') return std::nullopt;
  return Configuration{*mood, static_cast<Figure>(s[4] - '0')};
}

int Configuration::index() const {
  int m = (static_cast<int>(mood.major) * 4 + static_cast<int>(mood.minor)) * 4 +
          static_cast<int>(mood.conclusion);
  return m * 4 + (figure_number(figure) - 1);
}

Configuration Configuration::from_index(int index) {
  Figure fig = static_cast<Figure>(index % 4 + 1);
  int m = index / 4;
  Mood mood{static_cast<PropositionType>((m / 16) % 4),
            static_cast<PropositionType>((m / 4) % 4),
            static_cast<PropositionType>(m % 4)};
  return Configuration{mood, fig};
}

const std::vector<Configuration>& enumerate_configurations() {
  static const std::vector<Configuration> all = [] {
    std::vector<Configuration> v;
    v.reserve(256);
    for (int i = 0; i < 256; ++i) v.push_back(Configuration::from_index(i));
    return v;
  }();
  return all;
}

const std::vector<Mood>& enumerate_moods() {
  static const std::vector<Mood> all = [] {
    std::vector<Mood> v;
    v.reserve(64);
    for (PropositionType a : kAllTypes)
      for (PropositionType b : kAllTypes)
        for (PropositionType c : kAllTypes) v.push_back(Mood{a, b, c});
    return v;
  }();
  return all;
}

// ---------------------------------------------------------------------------
// Interpretations and term roles
// ---------------------------------------------------------------------------

const char* interpretation_name(Interpretation i) {
  return i == Interpretation::modern ? "modern" : "aristotelian";
}

std::optional<Interpretation> interpretation_from_name(std::string_view s) {
  std::string low = canonical_label(s);
  if (low == "modern" || low == "boolean") return Interpretation::modern;
  if (low == "aristotelian" || low == "traditional")
    return Interpretation::aristotelian;
  return std::nullopt;
}

const char* role_letter(TermRole r) {
  switch (r) {
    case TermRole::subject: return "S";
    case TermRole::middle: return "M";
    case TermRole::predicate: return "P";
  }
  return "?";
}

}  // namespace syl
