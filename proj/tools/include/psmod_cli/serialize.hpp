#pragma once

#include <json.hpp>

#include "psmod/psmod.hpp"

namespace psmod::cli {

using json = nlohmann::json;

json to_json(const OIdeal& ideal);
json to_json(const Instance& inst);
json to_json(const Instance& inst, const Refinement& r);
/// Re-verifies a Found refinement; throws Internal if it does not check out.
json to_json(const Instance& inst, const Certificate& cert);
json to_json(const ClassifyReport& report, const Domain& d);

}  // namespace psmod::cli
