#pragma once

#include <string>

#include <json.hpp>

#include "relaysched/lp.hpp"
#include "relaysched/network.hpp"
#include "relaysched/solver.hpp"

namespace relaysched {

/// Parses the network document:
///   { "n": 3, "source_to_relay": [...], "relay_to_dest": [...],
///     "relay_to_relay": [[...], ...] }
/// relay_to_relay[i][j] is the capacity from relay j+1 into relay i+1.
/// Errors carry the offending field path.
Network parse_network(const std::string& text);
Network parse_network_file(const std::string& path);

std::string serialize_network(const Network& net);
nlohmann::json network_to_json(const Network& net);
Network network_from_json(const nlohmann::json& doc);

/// Report serialization. All rationals are "p/q" strings; det and minors
/// are decimal strings; schedule and sigma maps are keyed by the decimal
/// state mask in the caller's original relay labels; the permutation is
/// 1-based (entry k is the original label of canonical relay k+1).
nlohmann::json report_to_json(const OptimalityReport& report);
OptimalityReport report_from_json(const nlohmann::json& doc);

nlohmann::json schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const nlohmann::json& doc);

nlohmann::json lp_solution_to_json(const LpSolution& sol);
LpSolution lp_solution_from_json(const nlohmann::json& doc);

} // namespace relaysched
