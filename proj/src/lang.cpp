#include "syl/lang.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace syl::lang {

namespace {

// All text handling is pure ASCII by design: no locale, no Unicode, so
// identical input always yields identical output.
char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c + 32) : c;
}
bool ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

struct Tokens {
  std::vector<std::string> raw;
  std::vector<std::string> low;
  std::vector<char> comma_after;  // raw token carried a trailing comma

  std::size_t size() const { return low.size(); }
};

Tokens tokenize(std::string_view text) {
  Tokens t;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && ascii_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !ascii_space(text[i])) ++i;
    if (start == i) break;
    std::string_view piece = text.substr(start, i - start);
    while (!piece.empty() && (piece.front() == '(' || piece.front() == '"' ||
                              piece.front() == '\''))
      piece.remove_prefix(1);
    bool comma = false;
    while (!piece.empty()) {
      char back = piece.back();
      if (back == ',' || back == ';') comma = true;
      if (back == '.' || back == ',' || back == ';' || back == ':' ||
          back == '!' || back == '?' || back == ')' || back == '"' ||
          back == '\'') {
        piece.remove_suffix(1);
      } else {
        break;
      }
    }
    if (piece.empty()) {
      if (comma && !t.comma_after.empty()) t.comma_after.back() = true;
      continue;
    }
    t.raw.emplace_back(piece);
    t.low.push_back(lower_copy(piece));
    t.comma_after.push_back(comma);
  }
  return t;
}

using Words = std::vector<std::string>;

Words slice(const Words& w, std::size_t from, std::size_t to) {
  from = std::min(from, w.size());
  return Words(w.begin() + from, w.begin() + std::max(from, std::min(to, w.size())));
}

std::string join(const Words& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

bool is_article(std::string_view w) { return w == "a" || w == "an" || w == "the"; }
bool is_copula(std::string_view w) { return w == "is" || w == "are"; }
bool is_quantifier(std::string_view w) {
  return w == "all" || w == "no" || w == "some";
}

std::optional<std::size_t> find_copula(const Words& w, std::size_t from = 0) {
  for (std::size_t i = from; i < w.size(); ++i) {
    if (is_copula(w[i])) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_last_copula(const Words& w) {
  for (std::size_t i = w.size(); i > 0; --i) {
    if (is_copula(w[i - 1])) return i - 1;
  }
  return std::nullopt;
}

bool contains_reserved(const Words& w) {
  return std::any_of(w.begin(), w.end(), [](const std::string& x) {
    return is_copula(x) || x == "not";
  });
}

Error untranslatable(std::string msg) {
  return make_error(Errc::untranslatable, std::move(msg));
}

// ---------------------------------------------------------------------------
// Term phrase handling
// ---------------------------------------------------------------------------

// One leading article is dropped from every term phrase (never the whole
// phrase: "a" alone is a term, not an article).
Words strip_article(const Words& words) {
  if (words.size() >= 2 && is_article(words.front())) return slice(words, 1, words.size());
  return words;
}

Result<Term> phrase_term(const Words& words, std::string_view what) {
  Words stripped = strip_article(words);
  std::string label = join(stripped);
  if (label.empty() || label == "non-") {
    return untranslatable("missing " + std::string(what) + " term");
  }
  try {
    return Term(label);
  } catch (const std::invalid_argument&) {
    return untranslatable("empty " + std::string(what) + " term");
  }
}

bool irregular_plural(const std::string& w) {
  static const std::array<const char*, 10> plurals = {
      "people", "men",   "women", "children", "mice",
      "feet",   "teeth", "geese", "oxen",     "cattle"};
  return std::find(plurals.begin(), plurals.end(), w) != plurals.end();
}

// A predicate phrase counts as a noun phrase when it is article-led, ends in
// a recognized plural, or names a complement class. Anything else (bare
// adjectives, participles) needs the parameter noun "things". Plural
// recognition defers to fold_plural, which already refuses -us/-ss/-is
// endings ("curious" is not a plural).
bool noun_like(const Words& words) {
  if (words.empty()) return false;
  if (is_article(words.front())) return true;
  if (words.front().rfind("non-", 0) == 0) return true;
  return fold_plural(words.back()) != words.back() ||
         irregular_plural(words.back());
}

struct ClassPhrase {
  Term term;
  bool parameter_added = false;  // "things" appended (rule T-PRED)
};

// Turns a predicate phrase into a class term. A singular-article noun is
// pluralized ("a human" -> "humans") so the label names the class.
Result<ClassPhrase> noun_class(const Words& words) {
  if (words.empty()) return untranslatable("missing predicate term");
  if (contains_reserved(words)) {
    return untranslatable("predicate phrase contains a copula or negation");
  }
  bool singular_article =
      words.size() >= 2 && (words.front() == "a" || words.front() == "an");
  bool is_noun = noun_like(words);
  Words stripped = strip_article(words);
  if (stripped.empty()) return untranslatable("missing predicate term");
  if (singular_article) stripped.back() = pluralize(stripped.back());
  if (!is_noun) stripped.push_back("things");
  auto term = phrase_term(stripped, "predicate");
  if (!term.ok()) return term.error();
  return ClassPhrase{std::move(term).value(), !is_noun};
}

// ---------------------------------------------------------------------------
// The controlled standard grammar
// ---------------------------------------------------------------------------

struct ParsedStandard {
  CategoricalProposition prop;
  bool predicate_noun_like;
};

Error nsf(std::string msg, std::size_t position) {
  return make_error(Errc::not_standard_form, std::move(msg),
                    static_cast<int>(position));
}

Result<ParsedStandard> parse_standard_tokens(const Tokens& t) {
  const Words& w = t.low;
  const std::size_t n = w.size();
  if (n == 0) return nsf("empty statement", 0);
  if (!is_quantifier(w[0])) {
    return nsf("expected quantifier 'All', 'No' or 'Some', found '" + t.raw[0] + "'", 0);
  }
  std::size_t i = 1;
  Words subject;
  while (i < n && !is_copula(w[i])) {
    if (w[i] == "not") return nsf("unexpected 'not' in subject term", i);
    subject.push_back(w[i]);
    ++i;
  }
  if (i == n) return nsf("expected copula 'are' or 'is'", n);
  if (subject.empty()) return nsf("missing subject term", i);
  ++i;  // copula
  bool negated = false;
  if (i < n && w[i] == "not") {
    negated = true;
    ++i;
  }
  if (negated && w[0] != "some") {
    return nsf("'" + t.raw[0] + " ... not' is not a standard form", i - 1);
  }
  Words predicate;
  for (; i < n; ++i) {
    if (is_copula(w[i])) return nsf("unexpected second copula", i);
    if (w[i] == "not") return nsf("unexpected 'not' in predicate term", i);
    predicate.push_back(w[i]);
  }
  if (predicate.empty()) return nsf("missing predicate term", n);

  PropositionType type;
  if (w[0] == "all") type = PropositionType::A;
  else if (w[0] == "no") type = PropositionType::E;
  else type = negated ? PropositionType::O : PropositionType::I;

  auto subject_term = phrase_term(subject, "subject");
  if (!subject_term.ok()) return nsf("missing subject term", 1);
  bool pred_nounlike = noun_like(predicate);
  auto predicate_term = phrase_term(predicate, "predicate");
  if (!predicate_term.ok()) return nsf("missing predicate term", n - 1);

  auto prop = CategoricalProposition::make(type, std::move(subject_term).value(),
                                           std::move(predicate_term).value());
  if (!prop.ok()) return nsf("subject and predicate terms are identical", n - 1);
  return ParsedStandard{std::move(prop).value(), pred_nounlike};
}

// ---------------------------------------------------------------------------
// Classification cues
// ---------------------------------------------------------------------------

bool starts_with_words(const Words& w, std::initializer_list<const char*> cue) {
  std::size_t i = 0;
  for (const char* word : cue) {
    if (i >= w.size() || w[i] != word) return false;
    ++i;
  }
  return true;
}

bool exceptive_cue(const Words& w) {
  return starts_with_words(w, {"all", "except"}) ||
         starts_with_words(w, {"all", "but"}) ||
         starts_with_words(w, {"everyone", "except"}) ||
         starts_with_words(w, {"everything", "except"});
}

bool exclusive_cue(const Words& w) {
  return starts_with_words(w, {"only"}) ||
         starts_with_words(w, {"none", "but"}) ||
         starts_with_words(w, {"none", "except"});
}

bool conditional_cue(const Words& w) { return starts_with_words(w, {"if"}); }

bool nonstandard_quantifier_cue(const Words& w) {
  return starts_with_words(w, {"few"}) || starts_with_words(w, {"a", "few"}) ||
         starts_with_words(w, {"most"}) || starts_with_words(w, {"many"}) ||
         starts_with_words(w, {"several"}) ||
         starts_with_words(w, {"not", "every"}) ||
         starts_with_words(w, {"not", "all"}) ||
         starts_with_words(w, {"anyone"}) ||
         starts_with_words(w, {"anybody"}) ||
         starts_with_words(w, {"whoever"}) ||
         starts_with_words(w, {"no", "one"}) ||
         starts_with_words(w, {"nobody"}) || starts_with_words(w, {"nothing"});
}

// Words that cannot open a class-term subject (question words, expletives,
// connectives).
bool subject_stopword(const std::string& w) {
  static const std::array<const char*, 24> stop = {
      "what", "who",  "whom",  "whose", "which",     "why",  "how",  "when",
      "where", "is",  "are",   "was",   "were",      "do",   "does", "did",
      "can",  "could", "will", "would", "should",    "must", "it",   "there"};
  return std::find(stop.begin(), stop.end(), w) != stop.end();
}

bool connective_stopword(const std::string& w) {
  return w == "and" || w == "or" || w == "but" || w == "because" ||
         w == "not" || w == "therefore" || w == "so" || w == "hence" ||
         w == "thus";
}

// Singular statements: a proper name or demonstrative subject with the
// singular copula "is". Capitalization of the first word is the proper-name
// cue, so classification sees the raw text.
bool singular_cue(const Tokens& t) {
  const Words& w = t.low;
  if (w.empty() || is_quantifier(w[0])) return false;
  std::optional<std::size_t> ci;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_copula(w[i])) {
      if (w[i] != "is") return false;  // plural copula: not singular
      ci = i;
      break;
    }
  }
  if (!ci || *ci == 0) return false;
  const std::string& first = w[0];
  if (first == "this" || first == "that" || first == "he" || first == "she")
    return true;
  // An indefinite-article subject ("A dog is ...") is generic, not an
  // individual; "The X is ..." reads as a definite description.
  if (first == "a" || first == "an") return false;
  if (subject_stopword(first) || connective_stopword(first)) return false;
  return ascii_upper(t.raw[0][0]);
}

bool unexpressed_cue(const Tokens& t) {
  const Words& w = t.low;
  if (w.size() < 2) return false;
  if (subject_stopword(w[0]) || connective_stopword(w[0])) return false;
  if (is_article(w[0]) && w.size() < 3) return false;
  auto ci = find_copula(w);
  if (ci && *ci == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Translation rules
// ---------------------------------------------------------------------------

struct RuleOutput {
  std::vector<CategoricalProposition> propositions;
  std::vector<std::string> trace;
};

Result<CategoricalProposition> make_prop(PropositionType type, Term subject,
                                         Term predicate) {
  auto p = CategoricalProposition::make(type, std::move(subject),
                                        std::move(predicate));
  if (!p.ok()) {
    return untranslatable("translation collapses subject and predicate into "
                          "the same term");
  }
  return p;
}

// Splits "<subject> (is|are) [not] <predicate>" at the first copula.
struct CopulaSplit {
  Words subject;
  bool negated = false;
  Words predicate;
};

Result<CopulaSplit> split_at_copula(const Words& w) {
  auto ci = find_copula(w);
  if (!ci) return untranslatable("no copula found");
  if (*ci == 0) return untranslatable("missing subject term");
  CopulaSplit s;
  s.subject = slice(w, 0, *ci);
  std::size_t i = *ci + 1;
  if (i < w.size() && w[i] == "not") {
    s.negated = true;
    ++i;
  }
  s.predicate = slice(w, i, w.size());
  if (s.predicate.empty()) return untranslatable("missing predicate term");
  if (contains_reserved(s.subject)) {
    return untranslatable("subject phrase contains a copula or negation");
  }
  return s;
}

void add_param_trace(RuleOutput& out, const ClassPhrase& c) {
  if (c.parameter_added &&
      std::find(out.trace.begin(), out.trace.end(), "T-PRED") == out.trace.end()) {
    out.trace.emplace_back("T-PRED");
  }
}

// T-SING: singular -> universal over the parameter class "persons/things
// identical to X"; quality from the copula.
Result<RuleOutput> rule_singular(const Tokens& t) {
  auto split = split_at_copula(t.low);
  if (!split.ok()) return split.error();
  const std::string& first = t.low[0];
  const bool thing_like = first == "this" || first == "that" || first == "the";
  std::string label = (thing_like ? "things identical to " : "persons identical to ") +
                      join(split->subject);
  auto predicate = noun_class(split->predicate);
  if (!predicate.ok()) return predicate.error();
  auto prop = make_prop(split->negated ? PropositionType::E : PropositionType::A,
                        Term(label), predicate->term);
  if (!prop.ok()) return prop.error();
  RuleOutput out{{std::move(prop).value()}, {"T-SING"}};
  add_param_trace(out, *predicate);
  return out;
}

// Class named by a conditional clause. Pronoun-led copular clauses ("it is a
// dog") name the post-copula class; pronoun-led verb phrases become
// "things that <verb phrase>"; anything else is read as a class phrase.
Result<ClassPhrase> clause_class(const Words& clause) {
  if (clause.empty()) return untranslatable("empty conditional clause");
  static const std::array<const char*, 9> pronouns = {
      "it", "one", "he", "she", "this", "that", "something", "someone",
      "anything"};
  bool pronoun_led =
      std::find(pronouns.begin(), pronouns.end(), clause[0]) != pronouns.end();
  if (pronoun_led && clause.size() >= 2) {
    if (is_copula(clause[1])) {
      std::size_t i = 2;
      bool negated = false;
      if (i < clause.size() && clause[i] == "not") {
        negated = true;
        ++i;
      }
      auto cls = noun_class(slice(clause, i, clause.size()));
      if (!cls.ok()) return cls.error();
      if (negated) cls.value().term = cls->term.complement();
      return cls;
    }
    Words rest = slice(clause, 1, clause.size());
    if (contains_reserved(rest)) {
      return untranslatable("conditional clause is outside the fragment");
    }
    return ClassPhrase{Term("things that " + join(rest)), true};
  }
  return noun_class(clause);
}

// T-COND: "If A then B" -> A(A-class, B-class).
Result<RuleOutput> rule_conditional(const Tokens& t) {
  const Words& w = t.low;
  std::optional<std::size_t> split_at;
  bool drop_split_token = false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == "then") {
      split_at = i;
      drop_split_token = true;
      break;
    }
  }
  if (!split_at) {
    for (std::size_t i = 1; i + 1 < w.size(); ++i) {
      if (t.comma_after[i]) {
        split_at = i + 1;
        break;
      }
    }
  }
  if (!split_at) {
    return untranslatable("conditional without 'then' or a comma");
  }
  Words antecedent = slice(w, 1, *split_at);
  Words consequent = slice(w, *split_at + (drop_split_token ? 1 : 0), w.size());
  if (antecedent.empty() || consequent.empty()) {
    return untranslatable("conditional clause missing");
  }
  auto ante = clause_class(antecedent);
  if (!ante.ok()) return ante.error();
  auto cons = clause_class(consequent);
  if (!cons.ok()) return cons.error();
  auto prop = make_prop(PropositionType::A, ante->term, cons->term);
  if (!prop.ok()) return prop.error();
  RuleOutput out{{std::move(prop).value()}, {"T-COND"}};
  add_param_trace(out, *ante);
  add_param_trace(out, *cons);
  return out;
}

// T-EXCL: "Only A are B" / "None but A are B" -> A(B, A).
Result<RuleOutput> rule_exclusive(const Tokens& t) {
  const std::size_t cue_len = t.low[0] == "only" ? 1 : 2;
  auto split = split_at_copula(slice(t.low, cue_len, t.size()));
  if (!split.ok()) return split.error();
  if (split->negated) {
    return untranslatable("negated exclusive is outside the fragment");
  }
  auto cls_a = noun_class(split->subject);
  if (!cls_a.ok()) return cls_a.error();
  auto cls_b = noun_class(split->predicate);
  if (!cls_b.ok()) return cls_b.error();
  auto prop = make_prop(PropositionType::A, cls_b->term, cls_a->term);
  if (!prop.ok()) return prop.error();
  RuleOutput out{{std::move(prop).value()}, {"T-EXCL"}};
  add_param_trace(out, *cls_a);
  add_param_trace(out, *cls_b);
  return out;
}

// T-EXCEPT: "All except S are P" -> { E(S, P), A(non-S, P) }.
Result<RuleOutput> rule_exceptive(const Tokens& t) {
  auto split = split_at_copula(slice(t.low, 2, t.size()));
  if (!split.ok()) return split.error();
  if (split->negated) {
    return untranslatable("negated exceptive is outside the fragment");
  }
  auto excluded = phrase_term(split->subject, "subject");
  if (!excluded.ok()) return excluded.error();
  auto predicate = noun_class(split->predicate);
  if (!predicate.ok()) return predicate.error();
  auto none = make_prop(PropositionType::E, excluded.value(), predicate->term);
  if (!none.ok()) return none.error();
  auto rest = make_prop(PropositionType::A, excluded->complement(), predicate->term);
  if (!rest.ok()) return rest.error();
  RuleOutput out{{std::move(none).value(), std::move(rest).value()},
                 {"T-EXCEPT"}};
  add_param_trace(out, *predicate);
  return out;
}

// Subject + verb-phrase statements ("Some dogs bark"): the subject is the
// single token after the quantifier, the rest becomes the parameter class
// "things that <verb phrase>".
Result<RuleOutput> verb_phrase_output(PropositionType first_type,
                                      std::optional<PropositionType> second_type,
                                      const Words& rest, std::string rule_id) {
  if (rest.size() < 2) return untranslatable("statement too short");
  if (contains_reserved(slice(rest, 1, rest.size()))) {
    return untranslatable("verb phrase is outside the fragment");
  }
  auto subject = phrase_term({rest[0]}, "subject");
  if (!subject.ok()) return subject.error();
  Term predicate("things that " + join(slice(rest, 1, rest.size())));
  auto first = make_prop(first_type, subject.value(), predicate);
  if (!first.ok()) return first.error();
  RuleOutput out{{std::move(first).value()}, {std::move(rule_id)}};
  if (second_type) {
    auto second = make_prop(*second_type, subject.value(), predicate);
    if (!second.ok()) return second.error();
    out.propositions.push_back(std::move(second).value());
  }
  out.trace.emplace_back("T-PRED");
  return out;
}

Result<RuleOutput> quantified_output(PropositionType first_type,
                                     std::optional<PropositionType> second_type,
                                     const Words& rest, std::string rule_id,
                                     bool allow_negation = false) {
  auto ci = find_copula(rest);
  if (!ci) {
    return verb_phrase_output(first_type, second_type, rest, std::move(rule_id));
  }
  auto split = split_at_copula(rest);
  if (!split.ok()) return split.error();
  if (split->negated && !allow_negation) {
    return untranslatable("negation here is outside the fragment");
  }
  auto subject = phrase_term(split->subject, "subject");
  if (!subject.ok()) return subject.error();
  auto predicate = noun_class(split->predicate);
  if (!predicate.ok()) return predicate.error();
  auto first = make_prop(first_type, subject.value(), predicate->term);
  if (!first.ok()) return first.error();
  RuleOutput out{{std::move(first).value()}, {std::move(rule_id)}};
  if (second_type) {
    auto second = make_prop(*second_type, subject.value(), predicate->term);
    if (!second.ok()) return second.error();
    out.propositions.push_back(std::move(second).value());
  }
  add_param_trace(out, *predicate);
  return out;
}

// T-NSQ: the non-standard quantifier table.
Result<RuleOutput> rule_nonstandard_quantifier(const Tokens& t) {
  const Words& w = t.low;
  // "few S are P": some are and some are not.
  if (w[0] == "few") {
    return quantified_output(PropositionType::I, PropositionType::O,
                             slice(w, 1, w.size()), "T-NSQ");
  }
  if (starts_with_words(w, {"a", "few"})) {
    return quantified_output(PropositionType::I, std::nullopt,
                             slice(w, 2, w.size()), "T-NSQ");
  }
  if (w[0] == "most" || w[0] == "many" || w[0] == "several") {
    return quantified_output(PropositionType::I, std::nullopt,
                             slice(w, 1, w.size()), "T-NSQ");
  }
  if (starts_with_words(w, {"not", "every"}) || starts_with_words(w, {"not", "all"})) {
    return quantified_output(PropositionType::O, std::nullopt,
                             slice(w, 2, w.size()), "T-NSQ");
  }
  // "anyone/whoever ..." -> universal over persons; "no one/nothing" -> E.
  bool affirm_universal = w[0] == "anyone" || w[0] == "anybody" || w[0] == "whoever";
  bool negative_universal = starts_with_words(w, {"no", "one"}) ||
                            w[0] == "nobody" || w[0] == "nothing";
  if (!affirm_universal && !negative_universal) {
    return untranslatable("unrecognized non-standard quantifier");
  }
  const std::size_t cue_len = starts_with_words(w, {"no", "one"}) ? 2 : 1;
  const std::string base = w[0] == "nothing" ? "things" : "persons";
  Words rest = slice(w, cue_len, w.size());
  auto first_ci = find_copula(rest);
  auto last_ci = find_last_copula(rest);
  if (!first_ci) return untranslatable("no copula found");
  if (*first_ci != *last_ci) {
    return untranslatable("relative clause with embedded copula is outside "
                          "the fragment");
  }
  Words subject_words = slice(rest, 0, *first_ci);
  std::size_t i = *first_ci + 1;
  bool negated = i < rest.size() && rest[i] == "not";
  if (negated) ++i;
  if (negative_universal && negated) {
    return untranslatable("double negation is outside the fragment");
  }
  auto predicate = noun_class(slice(rest, i, rest.size()));
  if (!predicate.ok()) return predicate.error();
  std::string label = base;
  if (!subject_words.empty()) label += " " + join(subject_words);
  PropositionType type = (negative_universal || negated) ? PropositionType::E
                                                         : PropositionType::A;
  auto prop = make_prop(type, Term(label), predicate->term);
  if (!prop.ok()) return prop.error();
  RuleOutput out{{std::move(prop).value()}, {"T-NSQ"}};
  add_param_trace(out, *predicate);
  return out;
}

// T-PRED standalone: standard quantifier, non-noun or verb-phrase predicate.
Result<RuleOutput> rule_nonstandard_predicate(const Tokens& t) {
  const Words& w = t.low;
  Words rest = slice(w, 1, w.size());
  auto ci = find_copula(rest);
  PropositionType base_type = w[0] == "all"  ? PropositionType::A
                              : w[0] == "no" ? PropositionType::E
                                             : PropositionType::I;
  if (!ci) {
    return verb_phrase_output(base_type, std::nullopt, rest, "T-PRED");
  }
  auto split = split_at_copula(rest);
  if (!split.ok()) return split.error();
  if (split->negated && w[0] != "some") {
    return untranslatable("'" + w[0] + " ... not' is not a standard form");
  }
  PropositionType type =
      split->negated ? PropositionType::O : base_type;
  auto subject = phrase_term(split->subject, "subject");
  if (!subject.ok()) return subject.error();
  auto predicate = noun_class(split->predicate);
  if (!predicate.ok()) return predicate.error();
  auto prop = make_prop(type, subject.value(), predicate->term);
  if (!prop.ok()) return prop.error();
  return RuleOutput{{std::move(prop).value()}, {"T-PRED"}};
}

// T-UNEXP: unexpressed quantifier. Whether the intended quantity is
// universal is undecidable without world knowledge, so the translation
// defaults to particular and the trace carries a low-confidence marker.
Result<RuleOutput> rule_unexpressed(const Tokens& t) {
  const Words& w = t.low;
  auto ci = find_copula(w);
  RuleOutput out;
  if (!ci) {
    auto vp = verb_phrase_output(PropositionType::I, std::nullopt, w, "T-UNEXP");
    if (!vp.ok()) return vp.error();
    out = std::move(vp).value();
  } else {
    auto split = split_at_copula(w);
    if (!split.ok()) return split.error();
    auto subject = phrase_term(split->subject, "subject");
    if (!subject.ok()) return subject.error();
    auto predicate = noun_class(split->predicate);
    if (!predicate.ok()) return predicate.error();
    auto prop = make_prop(split->negated ? PropositionType::O : PropositionType::I,
                          subject.value(), predicate->term);
    if (!prop.ok()) return prop.error();
    out.propositions.push_back(std::move(prop).value());
    out.trace.emplace_back("T-UNEXP");
    add_param_trace(out, *predicate);
  }
  // Mark the defaulted quantity right after the rule id.
  auto it = std::find(out.trace.begin(), out.trace.end(), "T-UNEXP");
  out.trace.insert(it + 1, "low-confidence");
  return out;
}

}  // namespace

const char* category_name(PhraseologyCategory c) {
  switch (c) {
    case PhraseologyCategory::standard: return "Standard";
    case PhraseologyCategory::singular: return "Singular";
    case PhraseologyCategory::conditional: return "Conditional";
    case PhraseologyCategory::exclusive: return "Exclusive";
    case PhraseologyCategory::exceptive: return "Exceptive";
    case PhraseologyCategory::nonstandard_quantifier: return "NonstandardQuantifier";
    case PhraseologyCategory::unexpressed_quantifier: return "UnexpressedQuantifier";
    case PhraseologyCategory::nonstandard_predicate: return "NonstandardPredicate";
    case PhraseologyCategory::other: return "Other";
  }
  return "Other";
}

Result<PhraseologyCategory> classify_phraseology(std::string_view text) {
  Tokens t = tokenize(text);
  if (t.size() == 0) {
    return make_error(Errc::empty_input, "statement is empty");
  }
  const Words& w = t.low;
  if (exceptive_cue(w)) return PhraseologyCategory::exceptive;
  if (exclusive_cue(w)) return PhraseologyCategory::exclusive;
  if (conditional_cue(w)) return PhraseologyCategory::conditional;
  if (nonstandard_quantifier_cue(w)) return PhraseologyCategory::nonstandard_quantifier;
  if (singular_cue(t)) return PhraseologyCategory::singular;
  if (is_quantifier(w[0])) {
    auto parsed = parse_standard_tokens(t);
    if (parsed.ok() && parsed->predicate_noun_like) {
      return PhraseologyCategory::standard;
    }
    return PhraseologyCategory::nonstandard_predicate;
  }
  if (unexpressed_cue(t)) return PhraseologyCategory::unexpressed_quantifier;
  return PhraseologyCategory::other;
}

Result<CategoricalProposition> parse_standard(std::string_view text) {
  auto parsed = parse_standard_tokens(tokenize(text));
  if (!parsed.ok()) return parsed.error();
  return std::move(parsed).value().prop;
}

Result<TranslationResult> translate(std::string_view text) {
  auto category = classify_phraseology(text);
  if (!category.ok()) return category.error();
  Tokens t = tokenize(text);

  Result<RuleOutput> out = [&]() -> Result<RuleOutput> {
    switch (*category) {
      case PhraseologyCategory::standard: {
        auto parsed = parse_standard_tokens(t);
        if (!parsed.ok()) return parsed.error();
        return RuleOutput{{std::move(parsed).value().prop}, {}};
      }
      case PhraseologyCategory::singular: return rule_singular(t);
      case PhraseologyCategory::conditional: return rule_conditional(t);
      case PhraseologyCategory::exclusive: return rule_exclusive(t);
      case PhraseologyCategory::exceptive: return rule_exceptive(t);
      case PhraseologyCategory::nonstandard_quantifier:
        return rule_nonstandard_quantifier(t);
      case PhraseologyCategory::nonstandard_predicate:
        return rule_nonstandard_predicate(t);
      case PhraseologyCategory::unexpressed_quantifier:
        return rule_unexpressed(t);
      case PhraseologyCategory::other:
        return untranslatable("no phraseology cue matches the statement");
    }
    return untranslatable("no phraseology cue matches the statement");
  }();
  if (!out.ok()) return out.error();

  // Second-round check: every emitted proposition must read back from its
  // standard-form rendering. This is recomputed on every call.
  for (const CategoricalProposition& p : out->propositions) {
    auto back = parse_standard(render(p));
    if (!back.ok() || !(*back == p)) {
      return untranslatable("translated proposition is outside the standard "
                            "fragment: " + render(p));
    }
  }
  TranslationResult result;
  result.category = *category;
  result.propositions = std::move(out.value().propositions);
  result.trace = std::move(out.value().trace);
  result.verified = true;
  return result;
}

std::string render(const CategoricalProposition& p) {
  const std::string s = p.subject().text();
  const std::string pr = p.predicate().text();
  switch (p.type()) {
    case PropositionType::A: return "All " + s + " are " + pr + ".";
    case PropositionType::E: return "No " + s + " are " + pr + ".";
    case PropositionType::I: return "Some " + s + " are " + pr + ".";
    case PropositionType::O: return "Some " + s + " are not " + pr + ".";
  }
  return "";
}

std::string fold_plural(std::string_view word) {
  std::string w(word);
  if (w.size() > 4 && ends_with(w, "ies")) {
    w.erase(w.size() - 3);
    w.push_back('y');
    return w;
  }
  if (w.size() > 3 && ends_with(w, "es")) {
    std::string_view stem = std::string_view(w).substr(0, w.size() - 2);
    if (ends_with(stem, "s") || ends_with(stem, "x") || ends_with(stem, "z") ||
        ends_with(stem, "ch") || ends_with(stem, "sh")) {
      w.erase(w.size() - 2);
      return w;
    }
  }
  if (w.size() > 3 && ends_with(w, "s") && !ends_with(w, "ss") &&
      !ends_with(w, "us") && !ends_with(w, "is")) {
    w.pop_back();
  }
  return w;
}

std::string pluralize(std::string_view word) {
  std::string w(word);
  if (w.empty()) return w;
  if (ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") ||
      ends_with(w, "ch") || ends_with(w, "sh")) {
    return w + "es";
  }
  if (w.size() >= 2 && ends_with(w, "y") && !is_vowel(w[w.size() - 2])) {
    w.pop_back();
    return w + "ies";
  }
  return w + "s";
}

namespace {

std::string fold_label_last_word(std::string_view label) {
  auto pos = label.rfind(' ');
  if (pos == std::string_view::npos) return fold_plural(label);
  return std::string(label.substr(0, pos + 1)) +
         fold_plural(label.substr(pos + 1));
}

}  // namespace

bool labels_match(std::string_view a, std::string_view b) {
  return a == b || fold_label_last_word(a) == fold_label_last_word(b);
}

}  // namespace syl::lang
