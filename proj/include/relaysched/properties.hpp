#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "relaysched/network.hpp"

namespace relaysched {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failure description, empty on pass
};

/// Runs the per-network consistency battery: cut-value bound and equality
/// cases, submodularity in both arguments, the shifted-rank inequality on
/// interval cuts, determinant/minor consistency, schedule-path agreement,
/// dual-certificate sign checks, and (for n <= 10) the exact LP
/// cross-checks. Exhaustive over subsets for n <= 4, seeded sampling above.
std::vector<PropertyResult> run_property_battery(const Network& net,
                                                 std::uint64_t sample_seed = 1);

bool all_passed(const std::vector<PropertyResult>& results);

} // namespace relaysched
