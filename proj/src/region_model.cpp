#include "syl/region_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace syl {

namespace detail {

std::uint32_t axis_extension(int axis_count, int axis, bool complemented) {
  std::uint32_t mask = 0;
  int regions = 1 << axis_count;
  for (int r = 0; r < regions; ++r) {
    bool inside = (r >> axis) & 1;
    if (inside != complemented) mask |= (1u << r);
  }
  return mask;
}

bool prop_true(PropositionType type, std::uint32_t ext_subject,
               std::uint32_t ext_predicate, std::uint32_t occupied) {
  switch (type) {
    case PropositionType::A:  // S ⊆ P: nothing occupied in S outside P
      return (occupied & ext_subject & ~ext_predicate) == 0;
    case PropositionType::E:  // S ∩ P = ∅
      return (occupied & ext_subject & ext_predicate) == 0;
    case PropositionType::I:  // S ∩ P ≠ ∅
      return (occupied & ext_subject & ext_predicate) != 0;
    case PropositionType::O:  // S − P ≠ ∅
      return (occupied & ext_subject & ~ext_predicate) != 0;
  }
  return false;
}

}  // namespace detail

ModelFrame::ModelFrame(std::array<std::string, 3> labels)
    : labels_(std::move(labels)) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (labels_[i] == labels_[j]) {
        throw std::invalid_argument("frame axis labels must be distinct");
      }
    }
  }
}

std::optional<AxisRef> ModelFrame::resolve(const Term& t) const {
  for (int i = 0; i < 3; ++i) {
    if (labels_[i] == t.label()) return AxisRef{i, t.complemented()};
  }
  return std::nullopt;
}

std::uint8_t extension_mask(const AxisRef& ref) {
  return static_cast<std::uint8_t>(
      detail::axis_extension(3, ref.axis, ref.complemented));
}

bool satisfies(const RegionModel& model, const ModelFrame& frame,
               const CategoricalProposition& p) {
  auto s = frame.resolve(p.subject());
  auto pr = frame.resolve(p.predicate());
  if (!s || !pr) {
    throw std::invalid_argument("proposition term not present in frame");
  }
  return detail::prop_true(p.type(), extension_mask(*s), extension_mask(*pr),
                           model.occupied_mask());
}

std::string region_name(const ModelFrame& frame, int region) {
  std::string out;
  for (int axis = 0; axis < 3; ++axis) {
    if (axis) out += " & ";
    if (!((region >> axis) & 1)) out += "!";
    out += frame.labels()[axis];
  }
  return out;
}

}  // namespace syl
