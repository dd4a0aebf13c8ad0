#include "syl/syllogism.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace syl {

namespace {

void collect_distinct(const CategoricalProposition& p, std::vector<Term>& out) {
  for (const Term* t : {&p.subject(), &p.predicate()}) {
    if (std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
  }
}

}  // namespace

Syllogism::Syllogism(CategoricalProposition major, CategoricalProposition minor,
                     CategoricalProposition conclusion, Term middle)
    : major_(std::move(major)),
      minor_(std::move(minor)),
      conclusion_(std::move(conclusion)),
      middle_(std::move(middle)) {}

Result<Syllogism> Syllogism::standard_order(const CategoricalProposition& p1,
                                            const CategoricalProposition& p2,
                                            const CategoricalProposition& c) {
  std::vector<Term> terms;
  collect_distinct(p1, terms);
  collect_distinct(p2, terms);
  collect_distinct(c, terms);
  if (terms.size() != 3) {
    return make_error(Errc::too_many_terms,
                      "a syllogism needs exactly 3 distinct terms, found " +
                          std::to_string(terms.size()));
  }
  // Complementary pairs (x / non-x) share a class and must be eliminated by
  // term reduction before the propositions can form a syllogism.
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (terms[i].label() == terms[j].label()) {
        return make_error(Errc::too_many_terms,
                          "terms '" + terms[i].text() + "' and '" +
                              terms[j].text() +
                              "' are complements of the same class; reduce "
                              "terms first");
      }
    }
  }

  const Term& major_term = c.predicate();
  const Term& minor_term = c.subject();
  Term middle = [&] {
    for (const Term& t : terms) {
      if (t != major_term && t != minor_term) return t;
    }
    return terms.front();  // unreachable: exactly 3 distinct terms
  }();

  auto fits = [&](const CategoricalProposition& major,
                  const CategoricalProposition& minor) {
    return major.mentions(major_term) && major.mentions(middle) &&
           minor.mentions(minor_term) && minor.mentions(middle);
  };

  if (fits(p1, p2)) return Syllogism(p1, p2, c, middle);
  if (fits(p2, p1)) return Syllogism(p2, p1, c, middle);

  if (!p1.mentions(middle) || !p2.mentions(middle)) {
    return make_error(Errc::malformed_structure,
                      "middle term '" + middle.text() +
                          "' must appear in both premises");
  }
  return make_error(Errc::malformed_structure,
                    "each conclusion term must appear in exactly one premise");
}

const Term& Syllogism::term(TermRole role) const {
  switch (role) {
    case TermRole::subject: return minor_term();
    case TermRole::middle: return middle_term();
    case TermRole::predicate: return major_term();
  }
  return middle_term();
}

Configuration Syllogism::configuration() const {
  Mood mood{major_.type(), minor_.type(), conclusion_.type()};
  bool middle_is_major_subject = major_.subject() == middle_;
  bool middle_is_minor_subject = minor_.subject() == middle_;
  Figure figure;
  if (middle_is_major_subject) {
    figure = middle_is_minor_subject ? Figure::f3 : Figure::f1;
  } else {
    figure = middle_is_minor_subject ? Figure::f4 : Figure::f2;
  }
  return Configuration{mood, figure};
}

ModelFrame Syllogism::frame() const {
  return ModelFrame(
      {minor_term().label(), middle_term().label(), major_term().label()});
}

Syllogism instantiate(Configuration config, const Term& subject,
                      const Term& middle, const Term& predicate) {
  auto prop = [&](PropositionType t, const Term& s, const Term& p) {
    return CategoricalProposition(t, s, p);
  };
  const PropositionType t1 = config.mood.major;
  const PropositionType t2 = config.mood.minor;
  CategoricalProposition major = [&] {
    switch (config.figure) {
      case Figure::f1: case Figure::f3: return prop(t1, middle, predicate);
      default: return prop(t1, predicate, middle);
    }
  }();
  CategoricalProposition minor = [&] {
    switch (config.figure) {
      case Figure::f1: case Figure::f2: return prop(t2, subject, middle);
      default: return prop(t2, middle, subject);
    }
  }();
  CategoricalProposition conclusion = prop(config.mood.conclusion, subject, predicate);

  auto result = Syllogism::standard_order(major, minor, conclusion);
  if (!result.ok()) {
    throw std::invalid_argument("cannot instantiate configuration " +
                                config.str() + ": " +
                                result.error().describe());
  }
  return std::move(result).value();
}

}  // namespace syl
