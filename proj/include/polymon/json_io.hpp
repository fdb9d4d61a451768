// JSON forms of the library's value types.
//
//   Word        -> [1, 2, ...]                 (1-based letters)
//   PElement    -> {"kind":"zero"} | {"kind":"pair","u":[...],"v":[...]}
//   BElement    -> {"kind":"zero"} | {"kind":"unit","i":n,"j":m}
//   BasicNbhd   -> {"A":[[...],[...]]}
//   ChainSpec   -> {"preperiod":[...],"period":[...]}
//   SElement    -> {"kind":"finite","elem":...} | {"kind":"filter","a":[...],"b":[...]}
//   SuiteReport -> {"suite":...,"cases":n,"failures":[...],"seed":...}
//   CheckResult -> {"ok":...} plus "counterexample"/"detail" on failure

#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "polymon/analysis.hpp"
#include "polymon/extension.hpp"
#include "polymon/green.hpp"
#include "polymon/matrix_units.hpp"
#include "polymon/polycyclic.hpp"
#include "polymon/topology.hpp"
#include "polymon/word.hpp"

namespace polymon {

void to_json(nlohmann::json& j, const Word& w);
void to_json(nlohmann::json& j, const WordSet& s);
void to_json(nlohmann::json& j, const PElement& x);
void to_json(nlohmann::json& j, const BElement& x);
void to_json(nlohmann::json& j, const BasicNbhd& a);
void to_json(nlohmann::json& j, const ChainSpec& s);
void to_json(nlohmann::json& j, const FilterDesc& f);
void to_json(nlohmann::json& j, const SElement& x);
void to_json(nlohmann::json& j, const SuiteReport& r);
void to_json(nlohmann::json& j, const CheckResult& r);
void to_json(nlohmann::json& j, const ChainIntersection& c);

}  // namespace polymon
