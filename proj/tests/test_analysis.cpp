#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/oracle.hpp"
#include "syl/analysis.hpp"

using namespace syl;
using namespace syl::analysis;

namespace {

CategoricalProposition prop(PropositionType t, const char* s, const char* p) {
  return CategoricalProposition(t, Term(s), Term(p));
}

using enum PropositionType;

}  // namespace

TEST_CASE("argument construction") {
  CHECK_FALSE(Argument::make({"one statement"}).ok());
  CHECK_FALSE(Argument::make({"a", ""}).ok());
  CHECK_FALSE(Argument::make({"a", "b"}, 5).ok());
  CHECK(Argument::make({"a", "b"}).ok());
}

TEST_CASE("reduce_terms: synonym substitution") {
  std::vector<CategoricalProposition> props = {
      prop(A, "mammals", "animals"),
      prop(A, "dogs", "mammals"),
      prop(A, "dogs", "creatures"),
  };
  auto reduced = reduce_terms(props, {{"creatures", "animals"}});
  REQUIRE(reduced.ok());
  REQUIRE(reduced->propositions.size() == 3);
  CHECK(reduced->propositions[2] == prop(A, "dogs", "animals"));
  for (const auto& trace : reduced->trace) CHECK(trace.empty());
}

TEST_CASE("reduce_terms: obversion collapses a complement") {
  // Four distinct terms: s, non-p, m, p. Obverting the E premise rewrites
  // non-p as p.
  std::vector<CategoricalProposition> props = {
      CategoricalProposition(E, Term("s"), Term("p").complement()),
      prop(A, "m", "p"),
      prop(A, "s", "m"),
  };
  auto reduced = reduce_terms(props, {});
  REQUIRE(reduced.ok());
  CHECK(reduced->propositions[0] == prop(A, "s", "p"));
  CHECK(reduced->trace[0] == std::vector<std::string>{"obvert"});
  CHECK(reduced->propositions[1] == props[1]);
  CHECK(reduced->propositions[2] == props[2]);
}

TEST_CASE("reduce_terms: four unrelated terms are irreducible") {
  std::vector<CategoricalProposition> props = {
      prop(A, "a", "b"),
      prop(A, "c", "d"),
  };
  auto reduced = reduce_terms(props, {});
  REQUIRE_FALSE(reduced.ok());
  CHECK(reduced.error().code == Errc::irreducible_terms);
}

TEST_CASE("complete_enthymeme: missing minor premise") {
  auto candidates = complete_enthymeme(
      prop(A, "greeks", "humans"), prop(A, "athenians", "humans"),
      PropositionRole::minor, Interpretation::modern);
  REQUIRE(candidates.ok());
  CHECK(std::count(candidates->begin(), candidates->end(),
                   prop(A, "athenians", "greeks")) == 1);
  // Every returned candidate re-validates.
  for (const auto& c : *candidates) {
    auto s = Syllogism::standard_order(prop(A, "greeks", "humans"), c,
                                       prop(A, "athenians", "humans"));
    REQUIRE(s.ok());
    CHECK(validity_by_semantics(*s, Interpretation::modern).status ==
          ValidityStatus::valid);
  }
}

TEST_CASE("complete_enthymeme: missing conclusion") {
  auto modern = complete_enthymeme(prop(A, "m", "p"), prop(A, "s", "m"),
                                   PropositionRole::conclusion,
                                   Interpretation::modern);
  REQUIRE(modern.ok());
  CHECK(*modern == std::vector<CategoricalProposition>{prop(A, "s", "p")});

  // Under the aristotelian interpretation the particular conclusions come in
  // as well, in both orientations (I converts).
  auto aristotelian = complete_enthymeme(prop(A, "m", "p"), prop(A, "s", "m"),
                                         PropositionRole::conclusion,
                                         Interpretation::aristotelian);
  REQUIRE(aristotelian.ok());
  CHECK(std::count(aristotelian->begin(), aristotelian->end(),
                   prop(A, "s", "p")) == 1);
  CHECK(std::count(aristotelian->begin(), aristotelian->end(),
                   prop(I, "s", "p")) == 1);
  CHECK(std::count(aristotelian->begin(), aristotelian->end(),
                   prop(I, "p", "s")) == 1);
  CHECK(aristotelian->size() == 3);
}

TEST_CASE("complete_enthymeme: two particular premises admit no conclusion") {
  auto candidates = complete_enthymeme(prop(I, "m", "p"), prop(I, "s", "m"),
                                       PropositionRole::conclusion,
                                       Interpretation::aristotelian);
  REQUIRE(candidates.ok());
  CHECK(candidates->empty());
}

TEST_CASE("complete_enthymeme: structure mismatch") {
  auto zero_shared = complete_enthymeme(prop(A, "a", "b"), prop(A, "c", "d"),
                                        PropositionRole::conclusion,
                                        Interpretation::modern);
  REQUIRE_FALSE(zero_shared.ok());
  CHECK(zero_shared.error().code == Errc::structure_mismatch);

  auto two_shared = complete_enthymeme(prop(A, "a", "b"), prop(I, "a", "b"),
                                       PropositionRole::conclusion,
                                       Interpretation::modern);
  REQUIRE_FALSE(two_shared.ok());
  CHECK(two_shared.error().code == Errc::structure_mismatch);
}

TEST_CASE("decompose_sorites: chain of two steps") {
  std::vector<CategoricalProposition> premises = {
      prop(A, "a", "b"), prop(A, "b", "c"), prop(A, "c", "d")};
  auto chain = decompose_sorites(premises, prop(A, "a", "d"),
                                 Interpretation::modern);
  REQUIRE(chain.ok());
  REQUIRE(chain->size() == 2);
  CHECK((*chain)[0].configuration().str() == "AAA-1");
  CHECK((*chain)[0].conclusion() == prop(A, "a", "c"));
  CHECK((*chain)[1].configuration().str() == "AAA-1");
  CHECK((*chain)[1].conclusion() == prop(A, "a", "d"));
  // Each step re-validates.
  for (const Syllogism& step : *chain) {
    CHECK(validity_by_semantics(step, Interpretation::modern).status ==
          ValidityStatus::valid);
  }
}

TEST_CASE("decompose_sorites: two premises degenerate to one check") {
  std::vector<CategoricalProposition> premises = {prop(A, "m", "p"),
                                                  prop(A, "s", "m")};
  auto chain = decompose_sorites(premises, prop(A, "s", "p"),
                                 Interpretation::modern);
  REQUIRE(chain.ok());
  REQUIRE(chain->size() == 1);
  CHECK((*chain)[0].configuration().str() == "AAA-1");
}

TEST_CASE("decompose_sorites: no valid chain") {
  std::vector<CategoricalProposition> premises = {
      prop(A, "a", "b"), prop(E, "c", "b"), prop(I, "a", "d")};
  auto chain = decompose_sorites(premises, prop(A, "a", "c"),
                                 Interpretation::modern);
  REQUIRE_FALSE(chain.ok());
  CHECK(chain.error().code == Errc::no_valid_chain);
}

TEST_CASE("analyze: the Greeks argument") {
  auto arg = Argument::make({"All Greeks are humans.",
                             "All Athenians are Greeks.",
                             "Therefore, all Athenians are humans."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  CHECK(report.flags.empty());
  REQUIRE(report.configuration.has_value());
  CHECK(report.configuration->str() == "AAA-1");
  REQUIRE(report.standardized.has_value());
  for (Interpretation i : kAllInterpretations) {
    const MethodVerdicts& mv = report.verdicts.at(i);
    CHECK(mv.table.status == ValidityStatus::valid);
    CHECK(mv.rules.status == ValidityStatus::valid);
    CHECK(mv.semantics.status == ValidityStatus::valid);
  }
  CHECK(report.conclusion_index == 2);
}

TEST_CASE("analyze: conclusion cue can appear anywhere") {
  auto arg = Argument::make({"Therefore, all Athenians are humans.",
                             "All Greeks are humans.",
                             "All Athenians are Greeks."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  CHECK(report.conclusion_index == 0);
  REQUIRE(report.configuration.has_value());
  CHECK(report.configuration->str() == "AAA-1");
}

TEST_CASE("analyze: plural/singular term spellings unify") {
  auto arg = Argument::make({"All Greeks are humans.",
                             "Socrates is a Greek.",
                             "Therefore, Socrates is a human."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  CHECK(report.flags.empty());
  REQUIRE(report.configuration.has_value());
  CHECK(report.configuration->str() == "AAA-1");
  CHECK(report.verdicts.at(Interpretation::modern).semantics.status ==
        ValidityStatus::valid);
}

TEST_CASE("analyze: four irreducible terms flag TooManyTerms") {
  auto arg = Argument::make({"All cats are dogs.", "All birds are fishes.",
                             "Therefore, all cats are fishes."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  CHECK(report.has_flag(Flag::too_many_terms));
  CHECK_FALSE(report.standardized.has_value());
  CHECK(report.verdicts.empty());
}

TEST_CASE("analyze: untranslatable statement flags and stops") {
  auto arg = Argument::make({"All dogs are mammals.", "Blue!",
                             "Therefore, all dogs are mammals."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  CHECK(report.has_flag(Flag::untranslatable));
  CHECK_FALSE(report.standardized.has_value());
}

TEST_CASE("analyze: two statements suggest an enthymeme") {
  auto arg = Argument::make({"All Greeks are humans.",
                             "Therefore, all Athenians are humans."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  CHECK(report.has_flag(Flag::enthymeme_suspected));
  REQUIRE(report.missing_role.has_value());
  CHECK(*report.missing_role == PropositionRole::minor);
  CHECK(std::count(report.completions.begin(), report.completions.end(),
                   prop(A, "athenians", "greeks")) == 1);
  CHECK(report.verdicts.empty());
}

TEST_CASE("analyze: exceptive premise picks a working branch") {
  // The E component of the exceptive forms a valid EAE-2.
  auto arg = Argument::make({"All except citizens are suspects.",
                             "All visitors are suspects.",
                             "Therefore, no visitors are citizens."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  REQUIRE(report.configuration.has_value());
  CHECK(report.configuration->str() == "EAE-2");
  CHECK(report.verdicts.at(Interpretation::modern).semantics.status ==
        ValidityStatus::valid);
}

TEST_CASE("analyze: sorites argument") {
  auto arg = Argument::make({"All wugs are daxes.", "All daxes are blickets.",
                             "All blickets are gorps.",
                             "Therefore, all wugs are gorps."});
  REQUIRE(arg.ok());
  AnalysisReport report = analyze(*arg, Interpretation::modern);
  CHECK(report.flags.empty());
  REQUIRE(report.chain.size() == 2);
  for (const Syllogism& step : report.chain) {
    CHECK(validity_by_semantics(step, Interpretation::modern).status ==
          ValidityStatus::valid);
  }
}

TEST_CASE("analyze is deterministic") {
  auto arg = Argument::make({"All Greeks are humans.",
                             "All Athenians are Greeks.",
                             "Therefore, all Athenians are humans."});
  REQUIRE(arg.ok());
  std::string first = analyze(*arg, Interpretation::modern).to_json();
  for (int i = 0; i < 3; ++i) {
    CHECK(analyze(*arg, Interpretation::modern).to_json() == first);
  }
  CHECK(first.find("\"configuration\":\"AAA-1\"") != std::string::npos);
}
