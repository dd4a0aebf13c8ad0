#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "syl/types.hpp"

namespace syl {

// One emptiness assignment over the 8 Venn regions of three classes.
// Region r (0..7): bit i of r is set iff the region lies inside axis i.
// Region r is non-empty iff bit r of the occupied mask is set, giving 256
// distinct models.
//
// Tracking emptiness only is lossless here: the truth conditions of all four
// proposition types (S⊆P, S∩P=∅, S∩P≠∅, S−P≠∅) depend solely on which
// regions are empty, and any emptiness pattern is realized by a concrete
// model holding one element per non-empty region. Quantifying over the 256
// models is therefore an exact decision procedure for syllogistic validity.
class RegionModel {
 public:
  static constexpr int kRegions = 8;
  static constexpr int kModels = 256;

  explicit RegionModel(std::uint8_t occupied_mask) : occupied_(occupied_mask) {}

  bool region_occupied(int region) const {
    return (occupied_ >> region) & 1u;
  }
  std::uint8_t occupied_mask() const { return occupied_; }

  auto operator<=>(const RegionModel&) const = default;

 private:
  std::uint8_t occupied_;
};

// A term resolved against a frame: which axis, and whether the term denotes
// the complement of that axis' class.
struct AxisRef {
  int axis = 0;
  bool complemented = false;
};

// Three named axes. A Term resolves to the axis whose label matches; a
// complemented term denotes the complement of that axis' extension.
class ModelFrame {
 public:
  explicit ModelFrame(std::array<std::string, 3> labels);

  const std::array<std::string, 3>& labels() const { return labels_; }

  std::optional<AxisRef> resolve(const Term& t) const;

 private:
  std::array<std::string, 3> labels_;
};

// The four regions on the term's side of its axis (or the complement side).
std::uint8_t extension_mask(const AxisRef& ref);

// Truth of p in the model. Both terms of p must resolve in the frame.
bool satisfies(const RegionModel& model, const ModelFrame& frame,
               const CategoricalProposition& p);

// Human-readable region description, e.g. "s & m & !p".
std::string region_name(const ModelFrame& frame, int region);

namespace detail {

// Truth kernel shared by every evaluator in the library, generic over the
// axis count (k axes -> 2^k regions; masks must fit the word).
bool prop_true(PropositionType type, std::uint32_t ext_subject,
               std::uint32_t ext_predicate, std::uint32_t occupied);

std::uint32_t axis_extension(int axis_count, int axis, bool complemented);

}  // namespace detail

}  // namespace syl
