#include "syl/analysis.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

#include "syl/immediate.hpp"
#include "serialize.hpp"

namespace syl::analysis {

namespace {

using Prop = CategoricalProposition;

std::vector<Term> distinct_terms(std::span<const Prop> props) {
  std::vector<Term> terms;
  for (const Prop& p : props) {
    for (const Term* t : {&p.subject(), &p.predicate()}) {
      if (std::find(terms.begin(), terms.end(), *t) == terms.end())
        terms.push_back(*t);
    }
  }
  return terms;
}

std::vector<std::string> distinct_labels(std::span<const Prop> props) {
  std::vector<std::string> labels;
  for (const Term& t : distinct_terms(props)) {
    if (std::find(labels.begin(), labels.end(), t.label()) == labels.end())
      labels.push_back(t.label());
  }
  return labels;
}

}  // namespace

// ---------------------------------------------------------------------------
// Argument
// ---------------------------------------------------------------------------

Result<Argument> Argument::make(std::vector<std::string> statements,
                                std::optional<std::size_t> conclusion_index) {
  if (statements.size() < 2) {
    return make_error(Errc::structure_mismatch,
                      "an argument needs at least two statements");
  }
  for (const std::string& s : statements) {
    if (canonical_label(s).empty()) {
      return make_error(Errc::empty_input, "argument contains an empty statement");
    }
  }
  if (conclusion_index && *conclusion_index >= statements.size()) {
    return make_error(Errc::structure_mismatch,
                      "conclusion index out of range");
  }
  return Argument{std::move(statements), conclusion_index};
}

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::too_many_terms: return "TooManyTerms";
    case Flag::enthymeme_suspected: return "EnthymemeSuspected";
    case Flag::cross_check_failed: return "CrossCheckFailed";
    case Flag::untranslatable: return "Untranslatable";
    case Flag::no_valid_chain: return "NoValidChain";
  }
  return "?";
}

const char* proposition_role_name(PropositionRole r) {
  switch (r) {
    case PropositionRole::major: return "major";
    case PropositionRole::minor: return "minor";
    case PropositionRole::conclusion: return "conclusion";
  }
  return "?";
}

std::optional<PropositionRole> proposition_role_from_name(std::string_view s) {
  if (s == "major") return PropositionRole::major;
  if (s == "minor") return PropositionRole::minor;
  if (s == "conclusion") return PropositionRole::conclusion;
  return std::nullopt;
}

bool AnalysisReport::has_flag(Flag f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

// ---------------------------------------------------------------------------
// Term reduction
// ---------------------------------------------------------------------------

namespace {

struct Variant {
  Prop prop;
  std::vector<std::string> applied;
};

// Closure of the legitimate immediate inferences up to the given depth,
// breadth-first so shorter derivations come first.
std::vector<Variant> variants_of(const Prop& p, int max_depth) {
  std::vector<Variant> out = {{p, {}}};
  std::size_t frontier_begin = 0;
  for (int depth = 0; depth < max_depth; ++depth) {
    std::size_t frontier_end = out.size();
    for (std::size_t k = frontier_begin; k < frontier_end; ++k) {
      const Variant base = out[k];
      const std::array<std::pair<const char*, Result<Prop> (*)(const Prop&)>, 3>
          transforms = {{{"convert", &convert},
                         {"obvert", &obvert},
                         {"contrapose", &contrapose}}};
      for (const auto& [id, fn] : transforms) {
        auto next = fn(base.prop);
        if (!next.ok()) continue;
        bool seen = std::any_of(out.begin(), out.end(), [&](const Variant& v) {
          return v.prop == *next;
        });
        if (seen) continue;
        Variant v{std::move(next).value(), base.applied};
        v.applied.emplace_back(id);
        out.push_back(std::move(v));
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

bool three_distinct_terms(std::span<const Prop> props) {
  return distinct_terms(props).size() == 3 && distinct_labels(props).size() == 3;
}

// Truth of a proposition over a k-axis region model (k <= 4).
bool holds_in(const Prop& p, const std::vector<std::string>& axes,
              std::uint32_t occupied) {
  auto ext = [&](const Term& t) {
    auto it = std::find(axes.begin(), axes.end(), t.label());
    return detail::axis_extension(static_cast<int>(axes.size()),
                                  static_cast<int>(it - axes.begin()),
                                  t.complemented());
  };
  return detail::prop_true(p.type(), ext(p.subject()), ext(p.predicate()),
                           occupied);
}

// Model equivalence of two proposition sets over the union of their base
// labels. Exact for up to four labels.
bool sets_equivalent(std::span<const Prop> a, std::span<const Prop> b) {
  std::vector<std::string> axes;
  auto add = [&](std::span<const Prop> props) {
    for (const std::string& l : distinct_labels(props)) {
      if (std::find(axes.begin(), axes.end(), l) == axes.end())
        axes.push_back(l);
    }
  };
  add(a);
  add(b);
  if (axes.size() > 4) return true;  // caller falls back to pairwise checks
  const std::uint32_t models = 1u << (1u << axes.size());
  for (std::uint32_t occ = 0; occ < models; ++occ) {
    auto all = [&](std::span<const Prop> props) {
      return std::all_of(props.begin(), props.end(), [&](const Prop& p) {
        return holds_in(p, axes, occ);
      });
    };
    if (all(a) != all(b)) return false;
  }
  return true;
}

}  // namespace

Result<ReducedSet> reduce_terms(std::span<const Prop> props,
                                const std::map<std::string, std::string>& synonyms) {
  // Synonym substitution first, following chains (the mapping is acyclic).
  auto substitute = [&](const std::string& label) -> Result<std::string> {
    std::string current = label;
    std::size_t steps = 0;
    for (auto it = synonyms.find(current); it != synonyms.end();
         it = synonyms.find(current)) {
      current = canonical_label(it->second);
      if (++steps > synonyms.size()) {
        return make_error(Errc::irreducible_terms, "synonym mapping is cyclic");
      }
    }
    return current;
  };

  std::vector<Prop> base;
  for (const Prop& p : props) {
    auto s_label = substitute(p.subject().label());
    if (!s_label.ok()) return s_label.error();
    auto p_label = substitute(p.predicate().label());
    if (!p_label.ok()) return p_label.error();
    auto replaced = Prop::make(p.type(), Term(*s_label, p.subject().complemented()),
                               Term(*p_label, p.predicate().complemented()));
    if (!replaced.ok()) {
      return make_error(Errc::degenerate_proposition,
                        "synonym substitution collapses the terms of: " +
                            lang::render(p));
    }
    base.push_back(std::move(replaced).value());
  }

  const std::size_t n = base.size();
  ReducedSet reduced{base, std::vector<std::vector<std::string>>(n)};
  if (three_distinct_terms(base)) return reduced;

  if (n > 5) {
    return make_error(Errc::irreducible_terms,
                      "transform search is limited to five propositions");
  }

  std::vector<std::vector<Variant>> options;
  options.reserve(n);
  for (const Prop& p : base) options.push_back(variants_of(p, 3));

  // Cartesian search in enumeration order; the first hit is the canonical
  // reduction.
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<Prop> candidate;
    candidate.reserve(n);
    for (std::size_t i = 0; i < n; ++i) candidate.push_back(options[i][pick[i]].prop);
    if (three_distinct_terms(candidate)) {
      ReducedSet out;
      out.propositions = candidate;
      for (std::size_t i = 0; i < n; ++i) out.trace.push_back(options[i][pick[i]].applied);
      // Re-check model equivalence: each replaced proposition against its
      // original (a pair spans at most four base labels, so this is exact),
      // and the whole sets jointly when they fit a four-label frame.
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Prop> lhs = {base[i]};
        std::vector<Prop> rhs = {candidate[i]};
        if (!sets_equivalent(lhs, rhs)) {
          return make_error(Errc::irreducible_terms,
                            "reduction failed the model-equivalence re-check");
        }
      }
      if (!sets_equivalent(base, candidate)) {
        return make_error(Errc::irreducible_terms,
                          "reduction failed the model-equivalence re-check");
      }
      return out;
    }
    std::size_t i = 0;
    while (i < n && ++pick[i] == options[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return make_error(Errc::irreducible_terms,
                    "no composition of immediate inferences reaches three "
                    "distinct terms");
}

// ---------------------------------------------------------------------------
// Enthymemes
// ---------------------------------------------------------------------------

Result<std::vector<Prop>> complete_enthymeme(const Prop& first,
                                             const Prop& second,
                                             PropositionRole missing,
                                             Interpretation i) {
  std::vector<Term> shared;
  for (const Term* t : {&first.subject(), &first.predicate()}) {
    if (second.mentions(*t)) shared.push_back(*t);
  }
  if (shared.size() != 1) {
    return make_error(Errc::structure_mismatch,
                      "the given propositions share " +
                          std::to_string(shared.size()) +
                          " terms, expected exactly 1");
  }
  const Term a = first.subject() == shared[0] ? first.predicate() : first.subject();
  const Term b = second.subject() == shared[0] ? second.predicate() : second.subject();

  std::vector<Prop> found;
  for (PropositionType type : kAllTypes) {
    for (const auto& [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      auto candidate = Prop::make(type, x, y);
      if (!candidate.ok()) continue;
      auto syllogism = [&]() -> Result<Syllogism> {
        switch (missing) {
          case PropositionRole::conclusion:
            return Syllogism::standard_order(first, second, *candidate);
          case PropositionRole::major:
          case PropositionRole::minor:
            return Syllogism::standard_order(*candidate, first, second);
        }
        return Syllogism::standard_order(first, second, *candidate);
      }();
      if (!syllogism.ok()) continue;
      if (validity_by_semantics(*syllogism, i).status == ValidityStatus::valid) {
        found.push_back(std::move(candidate).value());
      }
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Sorites
// ---------------------------------------------------------------------------

Result<std::vector<Syllogism>> decompose_sorites(std::span<const Prop> premises,
                                                 const Prop& conclusion,
                                                 Interpretation i) {
  const std::size_t n = premises.size();
  if (n < 2) {
    return make_error(Errc::no_valid_chain, "a sorites needs at least two premises");
  }
  if (n > 6) {
    return make_error(Errc::limit_exceeded,
                      "sorites search is limited to six premises");
  }
  std::vector<Prop> all(premises.begin(), premises.end());
  all.push_back(conclusion);
  if (distinct_terms(all).size() != n + 1) {
    return make_error(Errc::no_valid_chain,
                      "not in classical sorite shape: " + std::to_string(n) +
                          " premises need exactly " + std::to_string(n + 1) +
                          " distinct terms");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  std::vector<Syllogism> chain;
  std::function<bool(const Prop&, std::size_t)> search =
      [&](const Prop& current, std::size_t k) -> bool {
    const Prop& next = premises[order[k]];
    if (k == n - 1) {
      auto s = Syllogism::standard_order(current, next, conclusion);
      if (!s.ok()) return false;
      if (validity_by_semantics(*s, i).status != ValidityStatus::valid) return false;
      chain.push_back(std::move(s).value());
      return true;
    }
    auto candidates = complete_enthymeme(current, next, PropositionRole::conclusion, i);
    if (!candidates.ok()) return false;
    for (const Prop& intermediate : *candidates) {
      auto s = Syllogism::standard_order(current, next, intermediate);
      if (!s.ok()) continue;
      chain.push_back(std::move(s).value());
      if (search(intermediate, k + 1)) return true;
      chain.pop_back();
    }
    return false;
  };

  do {
    chain.clear();
    if (search(premises[order[0]], 1)) return chain;
  } while (std::next_permutation(order.begin(), order.end()));

  return make_error(Errc::no_valid_chain,
                    "no ordering and intermediate conclusions form a valid chain");
}

// ---------------------------------------------------------------------------
// The full pipeline
// ---------------------------------------------------------------------------

namespace {

const std::array<const char*, 4> kConclusionCues = {"therefore", "so", "hence",
                                                    "thus"};

}  // namespace

std::optional<std::string> strip_conclusion_cue(const std::string& text) {
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  std::size_t word_begin = i;
  while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != ',')
    ++i;
  std::string word = canonical_label(text.substr(word_begin, i - word_begin));
  bool is_cue = std::any_of(kConclusionCues.begin(), kConclusionCues.end(),
                            [&](const char* cue) { return word == cue; });
  if (!is_cue) return std::nullopt;
  if (i < text.size() && text[i] == ',') ++i;
  skip_space();
  if (i >= text.size()) return std::nullopt;
  return text.substr(i);
}

namespace {

// Rewrites plural variants of the same label to one representative (the
// shortest spelling, ties lexicographic). Fails when unification collapses a
// proposition's two terms.
std::optional<std::vector<Prop>> unify_labels(const std::vector<Prop>& props) {
  std::vector<std::string> labels;
  for (const Prop& p : props) {
    for (const Term* t : {&p.subject(), &p.predicate()}) {
      if (std::find(labels.begin(), labels.end(), t->label()) == labels.end())
        labels.push_back(t->label());
    }
  }
  std::vector<std::vector<std::string>> groups;
  for (const std::string& l : labels) {
    bool placed = false;
    for (auto& group : groups) {
      if (std::any_of(group.begin(), group.end(), [&](const std::string& g) {
            return lang::labels_match(l, g);
          })) {
        group.push_back(l);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({l});
  }
  std::map<std::string, std::string> rep;
  for (const auto& group : groups) {
    std::string best = group.front();
    for (const std::string& g : group) {
      if (g.size() < best.size() || (g.size() == best.size() && g < best))
        best = g;
    }
    for (const std::string& g : group) rep[g] = best;
  }
  std::vector<Prop> out;
  out.reserve(props.size());
  for (const Prop& p : props) {
    auto replaced = Prop::make(
        p.type(), Term(rep.at(p.subject().label()), p.subject().complemented()),
        Term(rep.at(p.predicate().label()), p.predicate().complemented()));
    if (!replaced.ok()) return std::nullopt;
    out.push_back(std::move(replaced).value());
  }
  return out;
}

void add_flag(AnalysisReport& r, Flag f) {
  if (!r.has_flag(f)) r.flags.push_back(f);
}

void run_verdicts(AnalysisReport& r, const Syllogism& s) {
  r.configuration = s.configuration();
  for (Interpretation i : kAllInterpretations) {
    MethodVerdicts mv;
    mv.table = validity_by_table(s.configuration(), i);
    mv.rules = validity_by_rules(s, i);
    mv.semantics = validity_by_semantics(s, i);
    if (!mv.statuses_agree()) {
      add_flag(r, Flag::cross_check_failed);
      r.notes.push_back(std::string("methods disagree under ") +
                        interpretation_name(i));
    }
    r.verdicts.emplace(i, std::move(mv));
  }
}

}  // namespace

AnalysisReport analyze(const Argument& arg, Interpretation interp) {
  AnalysisReport r;
  const std::size_t n = arg.statements.size();

  // Conclusion identification: explicit marker, else cue, else last.
  std::vector<std::string> texts = arg.statements;
  std::size_t conclusion_idx;
  if (arg.conclusion_index) {
    conclusion_idx = *arg.conclusion_index;
    r.notes.emplace_back("conclusion named by explicit marker");
  } else {
    std::optional<std::size_t> cued;
    for (std::size_t i = 0; i < n && !cued; ++i) {
      if (strip_conclusion_cue(texts[i])) cued = i;
    }
    conclusion_idx = cued.value_or(n - 1);
    r.notes.emplace_back(cued ? "conclusion identified by leading cue"
                              : "conclusion defaulted to last statement");
  }
  if (auto stripped = strip_conclusion_cue(texts[conclusion_idx])) {
    texts[conclusion_idx] = *stripped;
  }
  r.conclusion_index = conclusion_idx;

  // Translate every statement.
  bool translation_failed = false;
  for (std::size_t i = 0; i < n; ++i) {
    auto tr = lang::translate(texts[i]);
    if (tr.ok()) {
      r.translations.push_back(std::move(tr).value());
    } else {
      translation_failed = true;
      add_flag(r, Flag::untranslatable);
      r.notes.push_back("statement " + std::to_string(i + 1) + ": " +
                        tr.error().describe());
      lang::TranslationResult placeholder;
      if (auto cat = lang::classify_phraseology(texts[i]); cat.ok()) {
        placeholder.category = *cat;
      }
      r.translations.push_back(std::move(placeholder));
    }
  }
  if (translation_failed) return r;

  // Try each compound-translation branch in order; keep the first branch
  // that produces a well-formed syllogism (or chain).
  std::vector<std::size_t> branch(n, 0);
  bool saw_too_many_terms = false;
  std::optional<Error> last_chain_error;
  while (true) {
    std::vector<Prop> premises;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != conclusion_idx) premises.push_back(r.translations[i].propositions[branch[i]]);
    }
    Prop conclusion = r.translations[conclusion_idx].propositions[branch[conclusion_idx]];

    bool compound = false;
    for (const auto& tr : r.translations) {
      if (tr.propositions.size() > 1) compound = true;
    }
    auto note_branch = [&] {
      if (!compound) return;
      std::string out = "branch";
      for (std::size_t i = 0; i < n; ++i) {
        out += " " + std::to_string(i + 1) + ":" + std::to_string(branch[i] + 1);
      }
      r.notes.push_back(out);
    };

    if (n == 2) {
      // One premise plus a conclusion: an enthymeme.
      add_flag(r, Flag::enthymeme_suspected);
      std::vector<Term> shared;
      for (const Term* t : {&premises[0].subject(), &premises[0].predicate()}) {
        if (conclusion.mentions(*t)) shared.push_back(*t);
      }
      if (shared.size() == 1) {
        PropositionRole missing = shared[0] == conclusion.subject()
                                      ? PropositionRole::major
                                      : PropositionRole::minor;
        auto completions = complete_enthymeme(premises[0], conclusion, missing, interp);
        if (completions.ok()) {
          r.completions = std::move(completions).value();
          r.missing_role = missing;
          r.notes.push_back("completion candidates under " +
                            std::string(interpretation_name(interp)));
          note_branch();
          return r;
        }
      }
    } else {
      std::vector<Prop> all = premises;
      all.push_back(conclusion);
      if (auto unified = unify_labels(all)) {
        all = std::move(*unified);
        if (premises.size() == 2) {
          std::vector<Prop> working = all;
          bool usable = true;
          bool reduced_terms = false;
          if (distinct_terms(working).size() != 3 ||
              distinct_labels(working).size() != 3) {
            auto reduced = reduce_terms(working, {});
            if (reduced.ok()) {
              working = reduced->propositions;
              reduced_terms = true;
            } else {
              usable = false;
              saw_too_many_terms = true;
            }
          }
          if (usable) {
            auto s = Syllogism::standard_order(working[0], working[1], working[2]);
            if (s.ok()) {
              note_branch();
              if (reduced_terms) {
                r.notes.emplace_back("terms reduced via immediate inferences");
              }
              r.standardized = std::move(s).value();
              run_verdicts(r, *r.standardized);
              return r;
            }
            if (s.error().code == Errc::too_many_terms) saw_too_many_terms = true;
          }
        } else {
          // More than two premises: a sorites.
          std::vector<Prop> chain_premises(all.begin(), all.end() - 1);
          auto chain = decompose_sorites(chain_premises, all.back(), interp);
          if (chain.ok()) {
            note_branch();
            r.chain = std::move(chain).value();
            std::string configs = "chain configurations:";
            for (const Syllogism& step : r.chain) {
              configs += " " + step.configuration().str();
            }
            r.notes.push_back(configs);
            r.notes.push_back(std::string("every step valid under ") +
                              interpretation_name(interp));
            return r;
          }
          last_chain_error = chain.error();
        }
      }
    }

    // Advance to the next branch.
    std::size_t i = 0;
    while (i < n && ++branch[i] == r.translations[i].propositions.size()) {
      branch[i] = 0;
      ++i;
    }
    if (i == n) break;
  }

  if (n == 2) {
    r.notes.emplace_back("no enthymeme structure: the premise and conclusion "
                         "must share exactly one term");
  } else if (saw_too_many_terms) {
    add_flag(r, Flag::too_many_terms);
  } else {
    add_flag(r, n > 3 ? Flag::no_valid_chain : Flag::too_many_terms);
  }
  if (last_chain_error) r.notes.push_back(last_chain_error->describe());
  return r;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string AnalysisReport::to_json() const {
  nlohmann::json j;
  auto translations_json = nlohmann::json::array();
  for (const auto& tr : translations) {
    auto props = nlohmann::json::array();
    for (const auto& p : tr.propositions) props.push_back(lang::render(p));
    translations_json.push_back({{"category", lang::category_name(tr.category)},
                                 {"propositions", props},
                                 {"trace", tr.trace},
                                 {"verified", tr.verified}});
  }
  j["translations"] = translations_json;
  j["conclusion_index"] =
      conclusion_index ? nlohmann::json(*conclusion_index) : nlohmann::json();
  j["standardized"] =
      standardized ? detail::syllogism_json(*standardized) : nlohmann::json();
  auto chain_json = nlohmann::json::array();
  for (const Syllogism& s : chain) chain_json.push_back(detail::syllogism_json(s));
  j["chain"] = chain_json;
  j["configuration"] =
      configuration ? nlohmann::json(configuration->str()) : nlohmann::json();
  nlohmann::json verdicts_json;
  for (const auto& [interp, mv] : verdicts) {
    verdicts_json[interpretation_name(interp)] = {
        {"table", detail::verdict_json(mv.table)},
        {"rules", detail::verdict_json(mv.rules)},
        {"semantics", detail::verdict_json(mv.semantics)},
    };
  }
  j["verdicts"] = verdicts_json;
  auto completions_json = nlohmann::json::array();
  for (const auto& p : completions) completions_json.push_back(lang::render(p));
  j["completions"] = completions_json;
  j["missing_role"] =
      missing_role ? nlohmann::json(proposition_role_name(*missing_role))
                   : nlohmann::json();
  auto flags_json = nlohmann::json::array();
  for (Flag f : flags) flags_json.push_back(flag_name(f));
  j["flags"] = flags_json;
  j["notes"] = notes;
  return j.dump();
}

}  // namespace syl::analysis
