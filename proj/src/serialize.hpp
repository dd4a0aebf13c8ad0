#pragma once

// Internal JSON helpers shared by the report/dataset serializers and the CLI.

#include <json.hpp>

#include "syl/lang.hpp"
#include "syl/syllogism.hpp"
#include "syl/validity.hpp"

namespace syl::detail {

inline nlohmann::json verdict_json(const ValidityVerdict& v) {
  nlohmann::json j;
  j["status"] = status_label(v.status);
  auto roles = nlohmann::json::array();
  for (TermRole r : v.required_nonempty) roles.push_back(role_letter(r));
  j["required_nonempty"] = roles;
  j["violated_rules"] = v.violated_rules;
  if (v.countermodel) {
    auto regions = nlohmann::json::array();
    for (int r = 0; r < RegionModel::kRegions; ++r) {
      if (v.countermodel->region_occupied(r)) regions.push_back(r);
    }
    j["countermodel"] = {{"occupied_regions", regions}};
  } else {
    j["countermodel"] = nullptr;
  }
  return j;
}

inline nlohmann::json syllogism_json(const Syllogism& s) {
  return nlohmann::json{
      {"major_premise", lang::render(s.major_premise())},
      {"minor_premise", lang::render(s.minor_premise())},
      {"conclusion", lang::render(s.conclusion())},
      {"configuration", s.configuration().str()},
  };
}

}  // namespace syl::detail
