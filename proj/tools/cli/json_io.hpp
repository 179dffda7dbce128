// Copyright 2026 The Parking Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// JSON encodings shared by the CLI and its tests. Keys are emitted sorted
// (nlohmann::json's default object map) so output is stable byte for byte.

#ifndef PARKING_TOOLS_CLI_JSON_IO_HPP_
#define PARKING_TOOLS_CLI_JSON_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "parking/enumeration.hpp"
#include "parking/sim.hpp"
#include "parking/verify.hpp"

namespace parking::cli {

using nlohmann::json;

// One record per line: {"filter", "rule", "x", "y"}.
std::string enumeration_to_ndjson(const EnumerationResult& result);
// Inverse of enumeration_to_ndjson. Throws ValidationError on malformed or
// inconsistent records, or on empty input.
EnumerationResult enumeration_from_ndjson(std::string_view text);

json outcome_to_json(const CarLengths& y, const PreferenceList& x, Rule rule,
                     const ParkOutcome& outcome);

json disagreement_to_json(const Disagreement& d);
Disagreement disagreement_from_json(const json& j);

// One line per check. With `timing`, a final {"wall_time_seconds"} line.
std::string sweep_to_ndjson(const SweepReport& report, bool timing);

// {"arity": n, "lo": a, "hi": b, "checks": ["MiPairVsOracle", ...]}
SweepSpec sweep_spec_from_json(const json& j);

// Either a bare entry {"check", "y", "witness_kind", "witness",
// "closed_form_value", "oracle_value"} or a sweep report line, in which
// case disagreement `index` of that line is taken.
ReplayEntry replay_entry_from_json(const json& j, std::size_t index = 0);

json trace_to_json(const ReplayTrace& trace);

}  // namespace parking::cli

#endif  // PARKING_TOOLS_CLI_JSON_IO_HPP_
