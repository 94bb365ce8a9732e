// JSON serialization for the library's report and scheme types.  Big integers
// and field elements are written as decimal strings; objects use sorted keys
// so identical inputs give byte-identical output.
#pragma once

#include <json.hpp>

#include "halphen/lemmas.hpp"
#include "halphen/planner.hpp"
#include "halphen/postulation.hpp"
#include "halphen/range_genus.hpp"

namespace halphen {

nlohmann::json to_json(const RangeClass& rc, const Int& d, const Int& m);
nlohmann::json to_json(const ConstructionPlan& plan);
nlohmann::json to_json(const LemmaReport& rep);
nlohmann::json to_json(const HoraceReport& rep);
nlohmann::json to_json(const SchemeSpec& spec);
nlohmann::json to_json(const HoraceConfig& cfg);

/* both throw std::invalid_argument on malformed documents */
SchemeSpec scheme_from_json(const nlohmann::json& j);
HoraceConfig horace_config_from_json(const nlohmann::json& j);

}  // namespace halphen
