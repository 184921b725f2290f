#pragma once

#include <json.hpp>

#include "crnkit/decomposition.hpp"
#include "crnkit/kinetics.hpp"
#include "crnkit/network.hpp"
#include "crnkit/ssystem.hpp"
#include "crnkit/structure.hpp"

namespace crn {

using Json = nlohmann::json;

Json network_to_json(const Network& net);
Network network_from_json(const Json& j);

Json structural_report_to_json(const StructuralReport& rep);

/// { "blocks": [[labels-or-indices], ...] }. Labels resolve through the
/// network's reaction labels; plain integers are 0-based reaction indices.
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j, const Network& net,
                                      bool allow_overlap = false);

Json decomposition_report_to_json(const DecompositionReport& rep);

Json ssystem_to_json(const SSystemModel& model);
SSystemModel ssystem_from_json(const Json& j);

Json realization_spec_to_json(const RealizationSpec& spec);
RealizationSpec realization_spec_from_json(const Json& j);

Json kinetics_to_json(const PowerLawKinetics& kin);
PowerLawKinetics kinetics_from_json(const Json& j, const Network& net);

Json coverability_report_to_json(const CoverabilityReport& rep);
Json equilibria_verification_to_json(const EquilibriaVerification& rep);

}  // namespace crn
