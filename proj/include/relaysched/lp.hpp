#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "relaysched/cut_table.hpp"
#include "relaysched/rational.hpp"
#include "relaysched/solver.hpp"

namespace relaysched {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Exact optimum of a scheduling LP: the rate, a maximizing schedule over
/// all 2^n states, and the cuts whose constraints are active.
struct LpSolution {
    Rat value;
    std::map<std::uint32_t, Rat> schedule;
    std::vector<std::uint32_t> tight_cuts;
    LpStatus status = LpStatus::Optimal;
};

/// Hard cap: the full LP has 2^n + 1 constraints and 2^n + 1 variables.
inline constexpr int kLpMaxRelays = 10;

/// max t  s.t.  t <= sum_S lambda_S f(omega, S) for every cut omega,
///              sum lambda <= 1, lambda >= 0.
/// Exact rational simplex with Bland's rule; throws capacity_exceeded for
/// n > 10.
LpSolution solve_full_lp(const CutValueTable& table);

/// Same objective with only the n+1 interval cuts [i:n] retained; an upper
/// bound on the full optimum. All 2^n state variables are kept. The table's
/// network must be in canonical relay order (the intervals refer to it).
LpSolution solve_relaxed_lp(const CutValueTable& table);

struct CutSlack {
    std::uint32_t omega;
    Rat slack;  // g_omega - t
};

struct FeasibilityReport {
    bool feasible = false;  // t <= g_omega on every cut
    std::vector<CutSlack> slacks;
};

/// Evaluates the schedule's rate against every one of the 2^n cuts.
FeasibilityReport verify_schedule_feasible(const CutValueTable& table, const Schedule& sched);

} // namespace relaysched
