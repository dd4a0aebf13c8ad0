#pragma once

#include "syl/error.hpp"
#include "syl/types.hpp"

namespace syl {

// Immediate inferences: single-proposition transforms returned only when
// truth-preserving in every region model.

// Swap subject and predicate. Legitimate for E and I only;
// illegitimate_conversion otherwise.
Result<CategoricalProposition> convert(const CategoricalProposition& p);

// Flip quality and complement the predicate. Legitimate for all four types.
// degenerate_proposition when the complemented predicate collides with the
// subject (obverting "All s are non-s").
Result<CategoricalProposition> obvert(const CategoricalProposition& p);

// Swap subject and predicate and complement both. Legitimate for A and O
// only; illegitimate_contraposition otherwise.
Result<CategoricalProposition> contrapose(const CategoricalProposition& p);

}  // namespace syl
