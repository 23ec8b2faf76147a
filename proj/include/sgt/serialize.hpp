#pragma once

#include <json.hpp>

#include "sgt/containment.hpp"
#include "sgt/gadgets.hpp"
#include "sgt/graph.hpp"
#include "sgt/growths.hpp"
#include "sgt/tangles.hpp"

namespace sgt {

using json = nlohmann::json;

json to_json(const Graph& g);            // {"graph6": "..."}
Graph graph_from_json(const json& j);

json to_json(const MinorModel& m);
MinorModel minor_model_from_json(const json& j);

json to_json(const SubdivisionEmbedding& e);
SubdivisionEmbedding subdivision_from_json(const json& j);

json to_json(const GrowthStep& s);
GrowthStep growth_step_from_json(const json& j);

json to_json(const GadgetBlueprint& bp);
json to_json(const NoSubdivisionCertificate& c);

json to_json(const Graph& g, const Tangle& t);  // graph kept alongside theta/members
Tangle tangle_from_json(const json& j);

}  // namespace sgt
