#pragma once

#include "apud/geometry.hpp"
#include "apud/graph.hpp"
#include "apud/recognize.hpp"
#include "apud/reduction.hpp"

#include <json.hpp>

#include <string>

namespace apud {

using Json = nlohmann::ordered_json;

// Graph text form: "graph <n> <m>" then one "u v" pair per edge, 0-based.
auto graph_to_text(const Graph & g) -> std::string;
auto graph_to_json(const Graph & g) -> Json;
auto graph_from_json(const Json & j) -> Graph;
/// Accepts either the text or the JSON form. Throws ParseError.
auto parse_graph(const std::string & text) -> Graph;

auto lines_to_json(const LineConfig & lines) -> Json;
auto lines_from_json(const Json & j) -> LineConfig;

auto placement_to_json(const Placement & p) -> Json;
auto placement_from_json(const Json & j) -> Placement;

auto role_to_json(const Role & r) -> Json;
auto role_from_json(const Json & j) -> Role;

auto profile_to_json(const LayoutProfile & p) -> Json;
auto profile_from_json(const Json & j) -> LayoutProfile;

/// {"graph":…, "lines":…, "roles":[…], "params":{…}}
auto instance_to_json(const ReductionInstance & inst) -> Json;
auto instance_from_json(const Json & j) -> ReductionInstance;

auto verification_to_json(const VerificationReport & r) -> Json;
auto occurrence_to_json(const Occurrence & o) -> Json;
auto obstruction_report_to_json(const ObstructionReport & r) -> Json;
/// Includes the budget, since a NotFound answer only holds at that resolution.
auto search_outcome_to_json(const SearchOutcome & o, const SearchBudget & budget) -> Json;
auto assignment_to_json(const Assignment & a) -> Json;

/// Parses JSON text, turning library errors into ParseError.
auto parse_json(const std::string & text) -> Json;

/// 2-space indented JSON with a trailing newline.
auto dump(const Json & j) -> std::string;

}
