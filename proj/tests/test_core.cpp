#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "syl/syllogism.hpp"
#include "syl/types.hpp"
#include "syl/validity.hpp"

using namespace syl;

namespace {

CategoricalProposition prop(PropositionType t, const char* s, const char* p) {
  return CategoricalProposition(t, Term(s), Term(p));
}

}  // namespace

TEST_CASE("term normalization") {
  Term t("  Greeks  and   Romans ");
  CHECK(t.label() == "greeks and romans");
  CHECK_FALSE(t.complemented());

  Term c("non-dogs");
  CHECK(c.label() == "dogs");
  CHECK(c.complemented());
  CHECK(c.text() == "non-dogs");

  // Double complementation folds away, textually and via complement().
  Term cc("non-non-dogs");
  CHECK(cc == Term("dogs"));
  CHECK(c.complement() == Term("dogs"));
  CHECK(c.complement().complement() == c);

  CHECK_THROWS_AS(Term(""), std::invalid_argument);
  CHECK_THROWS_AS(Term("   "), std::invalid_argument);
}

TEST_CASE("proposition rejects identical terms") {
  CHECK_THROWS_AS(prop(PropositionType::A, "dogs", "dogs"),
                  std::invalid_argument);
  auto r = CategoricalProposition::make(PropositionType::A, Term("dogs"),
                                        Term("dogs"));
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().code == Errc::degenerate_proposition);
  // "dogs" and "non-dogs" are distinct terms.
  CHECK_NOTHROW(prop(PropositionType::A, "dogs", "non-dogs"));
}

TEST_CASE("proposition type classification") {
  CHECK(is_universal(PropositionType::A));
  CHECK(is_universal(PropositionType::E));
  CHECK_FALSE(is_universal(PropositionType::I));
  CHECK_FALSE(is_universal(PropositionType::O));
  CHECK(is_affirmative(PropositionType::A));
  CHECK_FALSE(is_affirmative(PropositionType::E));
  CHECK(is_affirmative(PropositionType::I));
  CHECK_FALSE(is_affirmative(PropositionType::O));
}

TEST_CASE("configuration enumeration order") {
  const auto& all = enumerate_configurations();
  REQUIRE(all.size() == 256);
  CHECK(all.front().str() == "AAA-1");
  CHECK(all[1].str() == "AAA-2");
  CHECK(all[4].str() == "AAE-1");
  CHECK(all.back().str() == "OOO-4");
  CHECK(enumerate_moods().size() == 64);

  std::set<Configuration> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 256);
  for (int i = 0; i < 256; ++i) {
    CHECK(all[i].index() == i);
    CHECK(Configuration::from_index(i) == all[i]);
  }
  // The declared order is the struct order.
  for (int i = 1; i < 256; ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("configuration parse/str round trip") {
  for (const Configuration& c : enumerate_configurations()) {
    auto parsed = Configuration::parse(c.str());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == c);
  }
  CHECK_FALSE(Configuration::parse("AAA-5").has_value());
  CHECK_FALSE(Configuration::parse("AAB-1").has_value());
  CHECK_FALSE(Configuration::parse("AAA1").has_value());
}

TEST_CASE("standard order on the Greeks example") {
  auto major = prop(PropositionType::A, "greeks", "humans");
  auto minor = prop(PropositionType::A, "athenians", "greeks");
  auto conclusion = prop(PropositionType::A, "athenians", "humans");

  auto s = Syllogism::standard_order(major, minor, conclusion);
  REQUIRE(s.ok());
  CHECK(s->major_premise() == major);
  CHECK(s->minor_premise() == minor);
  CHECK(s->middle_term() == Term("greeks"));
  CHECK(s->configuration().str() == "AAA-1");

  // Premise order in the input does not matter.
  auto swapped = Syllogism::standard_order(minor, major, conclusion);
  REQUIRE(swapped.ok());
  CHECK(*swapped == *s);
}

TEST_CASE("standard order structural errors") {
  // Four distinct terms.
  auto r = Syllogism::standard_order(prop(PropositionType::A, "a", "b"),
                                     prop(PropositionType::A, "c", "d"),
                                     prop(PropositionType::A, "a", "d"));
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().code == Errc::too_many_terms);

  // Complement pair among the terms: counts as an unreduced class.
  auto comp = Syllogism::standard_order(
      prop(PropositionType::A, "a", "b"),
      prop(PropositionType::A, "non-a", "b"),
      prop(PropositionType::A, "a", "non-a"));
  REQUIRE_FALSE(comp.ok());
  CHECK(comp.error().code == Errc::too_many_terms);

  // Middle term missing from one premise.
  auto malformed = Syllogism::standard_order(
      prop(PropositionType::A, "a", "b"), prop(PropositionType::A, "a", "b"),
      prop(PropositionType::A, "a", "b"));
  REQUIRE_FALSE(malformed.ok());
  CHECK(malformed.error().code == Errc::too_many_terms);  // only 2 terms

  auto malformed2 = Syllogism::standard_order(
      prop(PropositionType::A, "s", "p"), prop(PropositionType::A, "m", "p"),
      prop(PropositionType::A, "s", "p"));
  REQUIRE_FALSE(malformed2.ok());
  CHECK(malformed2.error().code == Errc::malformed_structure);
}

TEST_CASE("figure determination matches middle-term placement") {
  const Term s("s"), m("m"), p("p");
  auto conclusion = prop(PropositionType::E, "s", "p");

  // figure 1: M-P / S-M
  auto f1 = Syllogism::standard_order(
      CategoricalProposition(PropositionType::E, m, p),
      CategoricalProposition(PropositionType::A, s, m), conclusion);
  REQUIRE(f1.ok());
  CHECK(f1->configuration().str() == "EAE-1");

  // figure 2: P-M / S-M
  auto f2 = Syllogism::standard_order(
      CategoricalProposition(PropositionType::E, p, m),
      CategoricalProposition(PropositionType::A, s, m), conclusion);
  REQUIRE(f2.ok());
  CHECK(f2->configuration().figure == Figure::f2);

  // figure 3: M-P / M-S
  auto f3 = Syllogism::standard_order(
      CategoricalProposition(PropositionType::E, m, p),
      CategoricalProposition(PropositionType::A, m, s), conclusion);
  REQUIRE(f3.ok());
  CHECK(f3->configuration().figure == Figure::f3);

  // figure 4: P-M / M-S
  auto f4 = Syllogism::standard_order(
      CategoricalProposition(PropositionType::E, p, m),
      CategoricalProposition(PropositionType::A, m, s), conclusion);
  REQUIRE(f4.ok());
  CHECK(f4->configuration().figure == Figure::f4);
}

TEST_CASE("instantiate round-trips the configuration") {
  const Term s("s"), m("m"), p("p");
  for (const Configuration& c : enumerate_configurations()) {
    Syllogism syll = instantiate(c, s, m, p);
    CHECK(syll.configuration() == c);
    CHECK(syll.minor_term() == s);
    CHECK(syll.middle_term() == m);
    CHECK(syll.major_term() == p);
  }
}

TEST_CASE("term renaming never changes configuration or verdict") {
  std::mt19937 rng(7);
  const char* pool[] = {"apples",  "bricks", "clouds", "drums",
                        "eagles",  "ferns",  "grapes", "hills"};
  const Term s("s"), m("m"), p("p");
  for (const Configuration& c : enumerate_configurations()) {
    int i = static_cast<int>(rng() % 8);
    int j = static_cast<int>((i + 1 + rng() % 7) % 8);
    int k = [&] {
      int v = static_cast<int>(rng() % 8);
      while (v == i || v == j) v = (v + 1) % 8;
      return v;
    }();
    Syllogism renamed = instantiate(c, Term(pool[i]), Term(pool[j]), Term(pool[k]));
    CHECK(renamed.configuration() == c);
    Syllogism reference = instantiate(c, s, m, p);
    for (Interpretation interp : kAllInterpretations) {
      CHECK(validity_by_semantics(renamed, interp).status ==
            validity_by_semantics(reference, interp).status);
    }
  }
}
