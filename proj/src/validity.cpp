#include "syl/validity.hpp"

#include <array>

namespace syl {

const char* status_label(ValidityStatus s) {
  switch (s) {
    case ValidityStatus::valid: return "valid";
    case ValidityStatus::conditionally_valid: return "conditionally-valid";
    case ValidityStatus::invalid: return "invalid";
  }
  return "?";
}

std::optional<ValidityStatus> status_from_label(std::string_view s) {
  if (s == "valid") return ValidityStatus::valid;
  if (s == "conditionally-valid") return ValidityStatus::conditionally_valid;
  if (s == "invalid") return ValidityStatus::invalid;
  return std::nullopt;
}

bool distribution(PropositionType t, TermPosition position) {
  switch (t) {
    case PropositionType::A: return position == TermPosition::subject;
    case PropositionType::E: return true;
    case PropositionType::I: return false;
    case PropositionType::O: return position == TermPosition::predicate;
  }
  return false;
}

namespace {

struct ResolvedProp {
  PropositionType type;
  std::uint8_t ext_subject;
  std::uint8_t ext_predicate;
};

ResolvedProp resolve_prop(const ModelFrame& frame,
                          const CategoricalProposition& p) {
  auto s = frame.resolve(p.subject());
  auto pr = frame.resolve(p.predicate());
  return ResolvedProp{p.type(), extension_mask(*s), extension_mask(*pr)};
}

struct ResolvedSyllogism {
  std::array<ResolvedProp, 2> premises;
  ResolvedProp conclusion;
  std::array<std::uint8_t, 3> role_ext;  // S, M, P extensions
};

ResolvedSyllogism resolve_syllogism(const Syllogism& s) {
  ModelFrame frame = s.frame();
  ResolvedSyllogism r{
      {resolve_prop(frame, s.major_premise()),
       resolve_prop(frame, s.minor_premise())},
      resolve_prop(frame, s.conclusion()),
      {}};
  r.role_ext = {extension_mask(*frame.resolve(s.minor_term())),
                extension_mask(*frame.resolve(s.middle_term())),
                extension_mask(*frame.resolve(s.major_term()))};
  return r;
}

bool holds(const ResolvedProp& p, std::uint32_t occupied) {
  return detail::prop_true(p.type, p.ext_subject, p.ext_predicate, occupied);
}

// First model (in mask order) where both premises hold, the conclusion does
// not, and every extension listed in `required` is occupied.
std::optional<RegionModel> find_countermodel(
    const ResolvedSyllogism& s, std::span<const std::uint8_t> required) {
  for (int mask = 0; mask < RegionModel::kModels; ++mask) {
    auto m = static_cast<std::uint32_t>(mask);
    bool admissible = true;
    for (std::uint8_t ext : required) {
      if ((m & ext) == 0) { admissible = false; break; }
    }
    if (!admissible) continue;
    if (holds(s.premises[0], m) && holds(s.premises[1], m) &&
        !holds(s.conclusion, m)) {
      return RegionModel(static_cast<std::uint8_t>(mask));
    }
  }
  return std::nullopt;
}

// Role subsets ordered by size, then by role order, so the first hit is the
// minimal requirement.
const std::vector<std::set<TermRole>>& role_subsets() {
  static const std::vector<std::set<TermRole>> subsets = {
      {TermRole::subject},
      {TermRole::middle},
      {TermRole::predicate},
      {TermRole::subject, TermRole::middle},
      {TermRole::subject, TermRole::predicate},
      {TermRole::middle, TermRole::predicate},
      {TermRole::subject, TermRole::middle, TermRole::predicate},
  };
  return subsets;
}

std::vector<std::uint8_t> exts_for(const ResolvedSyllogism& s,
                                   const std::set<TermRole>& roles) {
  std::vector<std::uint8_t> exts;
  for (TermRole r : roles) exts.push_back(s.role_ext[static_cast<int>(r)]);
  return exts;
}

std::set<TermRole> minimal_required_roles(const ResolvedSyllogism& s) {
  for (const auto& roles : role_subsets()) {
    if (!find_countermodel(s, exts_for(s, roles))) return roles;
  }
  return {};  // unreachable when the form is aristotelian-valid
}

// Everything derived from the semantic checker for one configuration.
struct FormTables {
  std::set<Configuration> modern;
  std::set<Configuration> aristotelian;
  std::array<ConditionalRequirement, 256> requirements;
};

const FormTables& form_tables() {
  static const FormTables tables = [] {
    FormTables t;
    const Term s("s"), m("m"), p("p");
    for (const Configuration& config : enumerate_configurations()) {
      ResolvedSyllogism rs = resolve_syllogism(instantiate(config, s, m, p));
      ConditionalRequirement& req = t.requirements[config.index()];
      if (!find_countermodel(rs, {})) {
        t.modern.insert(config);
        t.aristotelian.insert(config);
        req = {ConditionalRequirement::Kind::unconditional, {}};
      } else if (!find_countermodel(rs, exts_for(rs, {TermRole::subject,
                                                      TermRole::middle,
                                                      TermRole::predicate}))) {
        t.aristotelian.insert(config);
        req = {ConditionalRequirement::Kind::requires_nonempty,
               minimal_required_roles(rs)};
      } else {
        req = {ConditionalRequirement::Kind::invalid_regardless, {}};
      }
    }
    return t;
  }();
  return tables;
}

ValidityVerdict verdict(ValidityStatus status,
                        std::set<TermRole> required = {}) {
  ValidityVerdict v;
  v.status = status;
  v.required_nonempty = std::move(required);
  return v;
}

}  // namespace

const std::set<Configuration>& valid_forms(Interpretation i) {
  const FormTables& t = form_tables();
  return i == Interpretation::modern ? t.modern : t.aristotelian;
}

const ConditionalRequirement& conditional_requirements(Configuration c) {
  return form_tables().requirements[c.index()];
}

ValidityVerdict validity_by_table(Configuration c, Interpretation i) {
  const FormTables& t = form_tables();
  if (i == Interpretation::aristotelian) {
    return verdict(t.aristotelian.count(c) ? ValidityStatus::valid
                                           : ValidityStatus::invalid);
  }
  if (t.modern.count(c)) return verdict(ValidityStatus::valid);
  if (t.aristotelian.count(c)) {
    return verdict(ValidityStatus::conditionally_valid,
                   t.requirements[c.index()].roles);
  }
  return verdict(ValidityStatus::invalid);
}

ValidityVerdict validity_by_semantics(const Syllogism& s, Interpretation i) {
  ResolvedSyllogism rs = resolve_syllogism(s);
  const std::set<TermRole> all_roles = {TermRole::subject, TermRole::middle,
                                        TermRole::predicate};
  if (i == Interpretation::aristotelian) {
    auto cm = find_countermodel(rs, exts_for(rs, all_roles));
    ValidityVerdict v =
        verdict(cm ? ValidityStatus::invalid : ValidityStatus::valid);
    v.countermodel = cm;
    return v;
  }
  auto cm = find_countermodel(rs, {});
  if (!cm) return verdict(ValidityStatus::valid);
  if (find_countermodel(rs, exts_for(rs, all_roles))) {
    ValidityVerdict v = verdict(ValidityStatus::invalid);
    v.countermodel = cm;
    return v;
  }
  ValidityVerdict v = verdict(ValidityStatus::conditionally_valid,
                              minimal_required_roles(rs));
  v.countermodel = cm;  // witnesses failure without existential import
  return v;
}

ValidityVerdict validity_by_rules(const Syllogism& s, Interpretation i) {
  const PropositionType t_major = s.major_premise().type();
  const PropositionType t_minor = s.minor_premise().type();
  const PropositionType t_conc = s.conclusion().type();

  auto distributed_in = [](const Term& t, const CategoricalProposition& p) {
    TermPosition pos = p.subject() == t ? TermPosition::subject
                                        : TermPosition::predicate;
    return distribution(p.type(), pos);
  };

  const bool r1 = distributed_in(s.middle_term(), s.major_premise()) ||
                  distributed_in(s.middle_term(), s.minor_premise());
  const bool r2 =
      (!distribution(t_conc, TermPosition::subject) ||
       distributed_in(s.minor_term(), s.minor_premise())) &&
      (!distribution(t_conc, TermPosition::predicate) ||
       distributed_in(s.major_term(), s.major_premise()));
  const int negative_premises = !is_affirmative(t_major) + !is_affirmative(t_minor);
  const bool r3 = negative_premises < 2;
  const bool r4 = !is_affirmative(t_conc) == (negative_premises == 1);
  const bool r5 = !(is_universal(t_major) && is_universal(t_minor) &&
                    !is_universal(t_conc));

  ValidityVerdict v;
  const bool hard_violation = !r1 || !r2 || !r3 || !r4;
  if (!r1) v.violated_rules.emplace_back("R1");
  if (!r2) v.violated_rules.emplace_back("R2");
  if (!r3) v.violated_rules.emplace_back("R3");
  if (!r4) v.violated_rules.emplace_back("R4");

  if (hard_violation) {
    if (!r5 && i == Interpretation::modern) v.violated_rules.emplace_back("R5");
    v.status = ValidityStatus::invalid;
    return v;
  }
  if (!r5) {
    if (i == Interpretation::aristotelian) {
      // R5 is the existential-import rule; waived under this interpretation.
      v.status = ValidityStatus::valid;
      return v;
    }
    v.violated_rules.emplace_back("R5");
    const ConditionalRequirement& req =
        conditional_requirements(s.configuration());
    if (req.kind == ConditionalRequirement::Kind::requires_nonempty) {
      v.status = ValidityStatus::conditionally_valid;
      v.required_nonempty = req.roles;
    } else {
      v.status = ValidityStatus::invalid;
    }
    return v;
  }
  v.status = ValidityStatus::valid;
  return v;
}

}  // namespace syl
