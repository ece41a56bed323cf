#pragma once

#include <nlohmann/json.hpp>

#include "cyp/circulant.hpp"
#include "cyp/gamma.hpp"
#include "cyp/multigraph.hpp"
#include "cyp/verify.hpp"
#include "cyp/whitehead.hpp"

namespace cyp {

using Json = nlohmann::json;

Json graph_to_json(const MultiGraph& g);

Json circ_spec_to_json(const CirculantSpec& spec);
CirculantSpec circ_spec_from_json(const Json& j);  // raw, canonicalized on load

Json circ_verdict_to_json(const CircPlanarVerdict& verdict);
Json circ_decomposition_to_json(const CircDecomposition& d);

Json gamma_spec_to_json(const GammaSpec& spec);
GammaSpec gamma_spec_from_json(const Json& j);  // raw, strict canonicalization

Json class_matches_to_json(const std::vector<ClassMatch>& matches);
Json condition_report_to_json(const ConditionReport& report);
Json gamma_decomposition_to_json(const GammaDecomposition& d);

Json presentation_to_json(const CyclicPresentation& p);
CyclicPresentation presentation_from_json(const Json& j);

Json plan_to_json(const MultiplicityPlan& plan);

// elapsed time is intentionally not serialized so identical inputs give
// byte-identical output
Json report_to_json(const VerificationReport& report);

}  // namespace cyp
