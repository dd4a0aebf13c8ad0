#include "syl/immediate.hpp"

namespace syl {

Result<CategoricalProposition> convert(const CategoricalProposition& p) {
  if (p.type() != PropositionType::E && p.type() != PropositionType::I) {
    return make_error(Errc::illegitimate_conversion,
                      std::string("conversion is not truth-preserving for ") +
                          letter(p.type()) + " propositions");
  }
  return CategoricalProposition(p.type(), p.predicate(), p.subject());
}

Result<CategoricalProposition> obvert(const CategoricalProposition& p) {
  return CategoricalProposition::make(quality_flipped(p.type()), p.subject(),
                                      p.predicate().complement());
}

Result<CategoricalProposition> contrapose(const CategoricalProposition& p) {
  if (p.type() != PropositionType::A && p.type() != PropositionType::O) {
    return make_error(
        Errc::illegitimate_contraposition,
        std::string("contraposition is not truth-preserving for ") +
            letter(p.type()) + " propositions");
  }
  return CategoricalProposition(p.type(), p.predicate().complement(),
                                p.subject().complement());
}

}  // namespace syl
