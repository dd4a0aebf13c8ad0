#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "support/oracle.hpp"
#include "syl/immediate.hpp"
#include "syl/validity.hpp"

using namespace syl;

namespace {

Syllogism instance(const char* config) {
  auto c = Configuration::parse(config);
  REQUIRE(c.has_value());
  return instantiate(*c, Term("s"), Term("m"), Term("p"));
}

// The traditional names, frozen from the textbook lists; the semantic
// checker must reproduce them exactly.
const char* kUnconditionallyValid[] = {
    "AAA-1", "EAE-1", "AII-1", "EIO-1",           // figure 1
    "EAE-2", "AEE-2", "EIO-2", "AOO-2",           // figure 2
    "IAI-3", "AII-3", "OAO-3", "EIO-3",           // figure 3
    "AEE-4", "IAI-4", "EIO-4",                    // figure 4
};

const std::map<std::string, TermRole> kConditionallyValid = {
    {"AAI-1", TermRole::subject},  {"EAO-1", TermRole::subject},
    {"AEO-2", TermRole::subject},  {"EAO-2", TermRole::subject},
    {"AAI-3", TermRole::middle},   {"EAO-3", TermRole::middle},
    {"AAI-4", TermRole::predicate}, {"AEO-4", TermRole::subject},
    {"EAO-4", TermRole::middle},
};

}  // namespace

TEST_CASE("valid form counts and membership") {
  const auto& modern = valid_forms(Interpretation::modern);
  const auto& aristotelian = valid_forms(Interpretation::aristotelian);
  CHECK(modern.size() == 15);
  CHECK(aristotelian.size() == 24);
  for (const Configuration& c : modern) CHECK(aristotelian.count(c) == 1);

  for (const char* name : kUnconditionallyValid) {
    CHECK(modern.count(*Configuration::parse(name)) == 1);
  }
  for (const auto& [name, role] : kConditionallyValid) {
    Configuration c = *Configuration::parse(name);
    CHECK(modern.count(c) == 0);
    CHECK(aristotelian.count(c) == 1);
  }
  CHECK(modern.count(*Configuration::parse("AAA-2")) == 0);
  CHECK(aristotelian.count(*Configuration::parse("AAA-2")) == 0);
}

TEST_CASE("valid forms agree with the independent oracle") {
  for (const Configuration& c : enumerate_configurations()) {
    CHECK(oracle::config_valid(c, Interpretation::modern) ==
          (valid_forms(Interpretation::modern).count(c) == 1));
    CHECK(oracle::config_valid(c, Interpretation::aristotelian) ==
          (valid_forms(Interpretation::aristotelian).count(c) == 1));
  }
}

TEST_CASE("conditional requirements") {
  CHECK(conditional_requirements(*Configuration::parse("AAA-1")).kind ==
        ConditionalRequirement::Kind::unconditional);
  auto aai1 = conditional_requirements(*Configuration::parse("AAI-1"));
  CHECK(aai1.kind == ConditionalRequirement::Kind::requires_nonempty);
  CHECK(aai1.roles == std::set<TermRole>{TermRole::subject});
  CHECK(conditional_requirements(*Configuration::parse("AEE-1")).kind ==
        ConditionalRequirement::Kind::invalid_regardless);

  // Each of the 9 conditional forms needs exactly its textbook critical term.
  for (const auto& [name, role] : kConditionallyValid) {
    auto req = conditional_requirements(*Configuration::parse(name));
    REQUIRE(req.kind == ConditionalRequirement::Kind::requires_nonempty);
    CHECK(req.roles == std::set<TermRole>{role});
  }
}

TEST_CASE("validity by table") {
  auto aaa1 = validity_by_table(*Configuration::parse("AAA-1"),
                                Interpretation::modern);
  CHECK(aaa1.status == ValidityStatus::valid);
  CHECK(aaa1.required_nonempty.empty());

  auto aai1 = validity_by_table(*Configuration::parse("AAI-1"),
                                Interpretation::modern);
  CHECK(aai1.status == ValidityStatus::conditionally_valid);
  CHECK(aai1.required_nonempty == std::set<TermRole>{TermRole::subject});

  for (Interpretation i : kAllInterpretations) {
    CHECK(validity_by_table(*Configuration::parse("AAA-2"), i).status ==
          ValidityStatus::invalid);
  }
  CHECK(validity_by_table(*Configuration::parse("AAI-1"),
                          Interpretation::aristotelian)
            .status == ValidityStatus::valid);
}

TEST_CASE("validity by semantics") {
  CHECK(validity_by_semantics(instance("AAA-1"), Interpretation::modern).status ==
        ValidityStatus::valid);

  // EAO-3 fails as stated under modern (empty middle term) but holds once
  // the middle term is assumed non-empty.
  auto eao3_modern = validity_by_semantics(instance("EAO-3"), Interpretation::modern);
  CHECK(eao3_modern.status == ValidityStatus::conditionally_valid);
  CHECK(eao3_modern.required_nonempty == std::set<TermRole>{TermRole::middle});
  REQUIRE(eao3_modern.countermodel.has_value());
  CHECK(validity_by_semantics(instance("EAO-3"), Interpretation::aristotelian)
            .status == ValidityStatus::valid);

  for (Interpretation i : kAllInterpretations) {
    CHECK(validity_by_semantics(instance("III-1"), i).status ==
          ValidityStatus::invalid);
  }
}

TEST_CASE("countermodels are genuine countermodels") {
  // Re-check every countermodel against the independent truth conditions.
  for (const Configuration& c : enumerate_configurations()) {
    for (Interpretation i : kAllInterpretations) {
      auto v = validity_by_semantics(instance(c.str().c_str()), i);
      if (v.status == ValidityStatus::valid) {
        CHECK_FALSE(v.countermodel.has_value());
        continue;
      }
      REQUIRE(v.countermodel.has_value());
      oracle::ConfigProps props = oracle::config_props(c);
      std::uint8_t occ = v.countermodel->occupied_mask();
      CHECK(oracle::prop_true(props.major.type, props.major.subject,
                              props.major.predicate, occ));
      CHECK(oracle::prop_true(props.minor.type, props.minor.subject,
                              props.minor.predicate, occ));
      CHECK_FALSE(oracle::prop_true(props.conclusion.type,
                                    props.conclusion.subject,
                                    props.conclusion.predicate, occ));
    }
  }
}

TEST_CASE("validity by rules") {
  auto eae1 = validity_by_rules(instance("EAE-1"), Interpretation::modern);
  CHECK(eae1.status == ValidityStatus::valid);
  CHECK(eae1.violated_rules.empty());

  auto eee1 = validity_by_rules(instance("EEE-1"), Interpretation::modern);
  CHECK(eee1.status == ValidityStatus::invalid);
  CHECK(std::find(eee1.violated_rules.begin(), eee1.violated_rules.end(),
                  "R3") != eee1.violated_rules.end());

  // An R5-only violation is the existential-import case.
  auto aai1 = validity_by_rules(instance("AAI-1"), Interpretation::modern);
  CHECK(aai1.status == ValidityStatus::conditionally_valid);
  CHECK(aai1.violated_rules == std::vector<std::string>{"R5"});
  CHECK(aai1.required_nonempty == std::set<TermRole>{TermRole::subject});
  CHECK(validity_by_rules(instance("AAI-1"), Interpretation::aristotelian)
            .status == ValidityStatus::valid);

  auto iai1 = validity_by_rules(instance("IAI-1"), Interpretation::modern);
  CHECK(iai1.status == ValidityStatus::invalid);
  CHECK(std::find(iai1.violated_rules.begin(), iai1.violated_rules.end(),
                  "R1") != iai1.violated_rules.end());
}

TEST_CASE("three methods agree everywhere") {
  for (const Configuration& c : enumerate_configurations()) {
    Syllogism s = instance(c.str().c_str());
    for (Interpretation interp : kAllInterpretations) {
      auto table = validity_by_table(c, interp);
      auto rules = validity_by_rules(s, interp);
      auto semantics = validity_by_semantics(s, interp);
      CHECK(table.status == rules.status);
      CHECK(rules.status == semantics.status);
      CHECK(table.required_nonempty == semantics.required_nonempty);
    }
  }
}

TEST_CASE("complemented terms behave as opaque classes") {
  // EAE-1 stays EAE-1 (and stays valid) with non-p as its major term.
  const Term s("s"), m("m"), non_p = Term("p").complement();
  auto syll = Syllogism::standard_order(
      CategoricalProposition(PropositionType::E, m, non_p),
      CategoricalProposition(PropositionType::A, s, m),
      CategoricalProposition(PropositionType::E, s, non_p));
  REQUIRE(syll.ok());
  CHECK(syll->configuration().str() == "EAE-1");
  for (Interpretation i : kAllInterpretations) {
    auto table = validity_by_table(syll->configuration(), i);
    auto rules = validity_by_rules(*syll, i);
    auto semantics = validity_by_semantics(*syll, i);
    CHECK(table.status == ValidityStatus::valid);
    CHECK(rules.status == ValidityStatus::valid);
    CHECK(semantics.status == ValidityStatus::valid);
  }
}

TEST_CASE("premise order invariance over all configurations") {
  for (const Configuration& c : enumerate_configurations()) {
    Syllogism s = instance(c.str().c_str());
    auto swapped = Syllogism::standard_order(s.minor_premise(), s.major_premise(),
                                             s.conclusion());
    REQUIRE(swapped.ok());
    CHECK(*swapped == s);
    CHECK(swapped->configuration() == c);
  }
}

TEST_CASE("distribution table") {
  using enum PropositionType;
  CHECK(distribution(A, TermPosition::subject));
  CHECK_FALSE(distribution(A, TermPosition::predicate));
  CHECK(distribution(E, TermPosition::subject));
  CHECK(distribution(E, TermPosition::predicate));
  CHECK_FALSE(distribution(I, TermPosition::subject));
  CHECK_FALSE(distribution(I, TermPosition::predicate));
  CHECK_FALSE(distribution(O, TermPosition::subject));
  CHECK(distribution(O, TermPosition::predicate));
}

TEST_CASE("conversion") {
  CategoricalProposition e(PropositionType::E, Term("s"), Term("p"));
  auto converted = convert(e);
  REQUIRE(converted.ok());
  CHECK(*converted ==
        CategoricalProposition(PropositionType::E, Term("p"), Term("s")));

  // Equivalent in every region model.
  ModelFrame frame({"s", "m", "p"});
  for (int mask = 0; mask < 256; ++mask) {
    RegionModel model(static_cast<std::uint8_t>(mask));
    CHECK(satisfies(model, frame, e) == satisfies(model, frame, *converted));
  }

  auto a = convert(CategoricalProposition(PropositionType::A, Term("s"), Term("p")));
  REQUIRE_FALSE(a.ok());
  CHECK(a.error().code == Errc::illegitimate_conversion);
  CHECK_FALSE(convert(CategoricalProposition(PropositionType::O, Term("s"),
                                             Term("p")))
                  .ok());
}

TEST_CASE("obversion") {
  CategoricalProposition a(PropositionType::A, Term("s"), Term("p"));
  auto obverted = obvert(a);
  REQUIRE(obverted.ok());
  CHECK(obverted->type() == PropositionType::E);
  CHECK(obverted->predicate() == Term("p").complement());

  ModelFrame frame({"s", "m", "p"});
  for (PropositionType t : kAllTypes) {
    CategoricalProposition p(t, Term("s"), Term("p"));
    auto o = obvert(p);
    REQUIRE(o.ok());
    for (int mask = 0; mask < 256; ++mask) {
      RegionModel model(static_cast<std::uint8_t>(mask));
      CHECK(satisfies(model, frame, p) == satisfies(model, frame, *o));
    }
    // Involution: obverting twice restores the proposition exactly.
    auto oo = obvert(*o);
    REQUIRE(oo.ok());
    CHECK(*oo == p);
  }

  // Degenerate corner: obverting "All s are non-s" would need E(s, s).
  auto degenerate =
      obvert(CategoricalProposition(PropositionType::A, Term("s"), Term("non-s")));
  REQUIRE_FALSE(degenerate.ok());
  CHECK(degenerate.error().code == Errc::degenerate_proposition);
}

TEST_CASE("contraposition") {
  CategoricalProposition a(PropositionType::A, Term("s"), Term("p"));
  auto contra = contrapose(a);
  REQUIRE(contra.ok());
  CHECK(*contra == CategoricalProposition(PropositionType::A,
                                          Term("p").complement(),
                                          Term("s").complement()));
  ModelFrame frame({"s", "m", "p"});
  for (PropositionType t : {PropositionType::A, PropositionType::O}) {
    CategoricalProposition p(t, Term("s"), Term("p"));
    auto c = contrapose(p);
    REQUIRE(c.ok());
    for (int mask = 0; mask < 256; ++mask) {
      RegionModel model(static_cast<std::uint8_t>(mask));
      CHECK(satisfies(model, frame, p) == satisfies(model, frame, *c));
    }
  }
  CHECK_FALSE(contrapose(CategoricalProposition(PropositionType::E, Term("s"),
                                                Term("p")))
                  .ok());
  CHECK(contrapose(CategoricalProposition(PropositionType::I, Term("s"),
                                          Term("p")))
            .error()
            .code == Errc::illegitimate_contraposition);
}
