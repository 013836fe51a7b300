#pragma once

#include <string>

#include <json.hpp>

#include "mono/family.hpp"
#include "mono/hyperell.hpp"
#include "mono/kodaira.hpp"
#include "mono/subgroup.hpp"

namespace mono {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

Json to_json(const SL2Matrix& m);
Json to_json(const SubgroupDescriptor& d);
Json to_json(const BraidWord& w);
Json to_json(const MonodromyReport& rep);
Json to_json(const KodairaPlace& p);
Json to_json(const SurfaceBound& sb);
Json to_json(const TwistReport& rep);
Json to_json(const HyperellReport& rep);
Json to_json(const QuarticReport& rep);

Json config_json(const PipelineOptions& opts);

}  // namespace mono
