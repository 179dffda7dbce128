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


#include "json_io.hpp"

#include <sstream>

namespace parking::cli {

namespace {

// Field access with ValidationError instead of nlohmann's own exceptions, so
// bad files map onto the validation exit code.
template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

std::string enumeration_to_ndjson(const EnumerationResult& result) {
  std::string out;
  const std::string filter(to_string(result.filter));
  const std::string rule(to_string(result.rule));
  for (const auto& x : result.items) {
    const json record{{"filter", filter}, {"rule", rule}, {"x", x.vec()}, {"y", result.y.vec()}};
    out += record.dump();
    out += '\n';
  }
  return out;
}

EnumerationResult enumeration_from_ndjson(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<EnumerationResult> result;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("malformed record: ") + e.what());
    }
    const CarLengths y(field<std::vector<int>>(j, "y"));
    const Rule rule = parse_rule(field<std::string>(j, "rule"));
    const Filter filter = parse_filter(field<std::string>(j, "filter"));
    PreferenceList x(field<std::vector<int>>(j, "x"), y);
    if (!result) {
      result = EnumerationResult{y, rule, filter, {}};
    } else if (result->y != y || result->rule != rule || result->filter != filter) {
      throw ValidationError("records disagree on y, rule or filter");
    }
    result->items.push_back(std::move(x));
  }
  if (!result) throw ValidationError("no enumeration records");
  return std::move(*result);
}

json outcome_to_json(const CarLengths& y, const PreferenceList& x, Rule rule,
                     const ParkOutcome& outcome) {
  json j{{"y", y.vec()}, {"x", x.vec()}, {"rule", std::string(to_string(rule))},
         {"parked", outcome.parked()}};
  if (outcome.parked()) {
    j["starts"] = outcome.success().starts;
    j["occupancy"] = outcome.occupancy(y);
  } else {
    j["failed_car"] = outcome.failure().first_failed_car;
    j["occupancy"] = outcome.failure().occupancy_at_failure;
  }
  return j;
}

json disagreement_to_json(const Disagreement& d) {
  return json{{"y", d.y},
              {"witness_kind", d.witness_kind},
              {"witness", d.witness},
              {"closed_form_value", d.closed_form_value},
              {"oracle_value", d.oracle_value}};
}

Disagreement disagreement_from_json(const json& j) {
  Disagreement d;
  d.y = field<std::vector<int>>(j, "y");
  d.witness_kind = j.contains("witness_kind") ? field<std::string>(j, "witness_kind") : "";
  d.witness = j.contains("witness") ? field<std::vector<int>>(j, "witness") : std::vector<int>{};
  d.closed_form_value = field<std::string>(j, "closed_form_value");
  d.oracle_value = field<std::string>(j, "oracle_value");
  return d;
}

std::string sweep_to_ndjson(const SweepReport& report, bool timing) {
  const json spec{{"arity", report.spec.arity}, {"lo", report.spec.lo}, {"hi", report.spec.hi}};
  std::string out;
  for (const auto& c : report.checks) {
    json d = json::array();
    for (const auto& entry : c.disagreements) d.push_back(disagreement_to_json(entry));
    const json line{{"check", std::string(to_string(c.check))},
                    {"conjecture", c.conjecture()},
                    {"instances_checked", c.instances_checked},
                    {"agreements", c.agreements},
                    {"disagreements", std::move(d)},
                    {"spec", spec}};
    out += line.dump();
    out += '\n';
  }
  if (timing) {
    out += json{{"wall_time_seconds", report.wall_time_seconds}}.dump();
    out += '\n';
  }
  return out;
}

SweepSpec sweep_spec_from_json(const json& j) {
  SweepSpec spec;
  const int arity = field<int>(j, "arity");
  if (arity < 1) throw ValidationError("arity must be at least 1");
  spec.arity = static_cast<std::size_t>(arity);
  spec.lo = field<int>(j, "lo");
  spec.hi = field<int>(j, "hi");
  for (const auto& name : field<std::vector<std::string>>(j, "checks")) {
    spec.checks.push_back(parse_check(name));
  }
  validate(spec);
  return spec;
}

ReplayEntry replay_entry_from_json(const json& j, std::size_t index) {
  const CheckId check = parse_check(field<std::string>(j, "check"));
  if (j.contains("disagreements")) {
    const auto& list = j.at("disagreements");
    if (!list.is_array() || index >= list.size()) {
      throw NoWitness("report line has no disagreement #" + std::to_string(index));
    }
    return ReplayEntry{check, disagreement_from_json(list.at(index))};
  }
  return ReplayEntry{check, disagreement_from_json(j)};
}

json trace_to_json(const ReplayTrace& trace) {
  json blocks = json::array();
  for (const auto& b : trace.blocks) {
    json steps = json::array();
    for (const auto& s : b.steps) {
      steps.push_back(json{{"car", s.car},
                           {"preference", s.preference},
                           {"start", s.start ? json(*s.start) : json(nullptr)},
                           {"occupancy", s.occupancy}});
    }
    blocks.push_back(json{{"label", b.label},
                          {"y", b.y},
                          {"x", b.x},
                          {"rule", std::string(to_string(b.rule))},
                          {"parked", b.parked},
                          {"steps", std::move(steps)}});
  }
  return json{{"check", std::string(to_string(trace.check))},
              {"y", trace.y},
              {"closed_form_value", trace.closed_form_value},
              {"oracle_value", trace.oracle_value},
              {"blocks", std::move(blocks)}};
}

}  // namespace parking::cli
