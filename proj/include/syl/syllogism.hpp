#pragma once

#include "syl/error.hpp"
#include "syl/region_model.hpp"
#include "syl/types.hpp"

namespace syl {

// A standard-form categorical syllogism: major premise, minor premise,
// conclusion, with exactly three distinct terms. The middle term appears in
// both premises and never in the conclusion; the major term (conclusion
// predicate) appears in the major premise; the minor term (conclusion
// subject) in the minor premise.
class Syllogism {
 public:
  // Arranges two premises (given in either order) and a conclusion into
  // standard order. The premise containing the conclusion's predicate
  // becomes the major premise, so the result is invariant under swapping
  // p1 and p2.
  //
  // Errors:
  //   too_many_terms       - the three propositions do not span exactly
  //                          three distinct terms (or term labels collide
  //                          through complementation; reduce terms first)
  //   malformed_structure  - middle term missing from a premise, or a
  //                          conclusion term absent from the premises
  static Result<Syllogism> standard_order(const CategoricalProposition& p1,
                                          const CategoricalProposition& p2,
                                          const CategoricalProposition& c);

  const CategoricalProposition& major_premise() const { return major_; }
  const CategoricalProposition& minor_premise() const { return minor_; }
  const CategoricalProposition& conclusion() const { return conclusion_; }

  const Term& major_term() const { return conclusion_.predicate(); }
  const Term& minor_term() const { return conclusion_.subject(); }
  const Term& middle_term() const { return middle_; }

  const Term& term(TermRole role) const;

  // Mood = the letter types of (major, minor, conclusion); figure from the
  // middle-term placement. Total on valid syllogisms.
  Configuration configuration() const;

  // Frame with axes (minor, middle, major) = (S, M, P).
  ModelFrame frame() const;

  auto operator<=>(const Syllogism&) const = default;

 private:
  Syllogism(CategoricalProposition major, CategoricalProposition minor,
            CategoricalProposition conclusion, Term middle);

  CategoricalProposition major_;
  CategoricalProposition minor_;
  CategoricalProposition conclusion_;
  Term middle_;
};

// The standard-form syllogism of `config` over three given terms. Intended
// for generators and exhaustive checks; throws std::invalid_argument when
// the terms cannot form a syllogism (label collisions).
Syllogism instantiate(Configuration config, const Term& subject,
                      const Term& middle, const Term& predicate);

}  // namespace syl
