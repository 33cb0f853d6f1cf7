#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relaysched/network.hpp"
#include "relaysched/rational.hpp"
#include "relaysched/solver.hpp"

namespace relaysched {

/// One sweep row: the analysis outcome for a seeded random network plus the
/// exact LP cross-check. `match` is set only when the conditions hold.
struct SweepRecord {
    std::uint64_t seed = 0;
    int n = 0;
    int max_cap = 0;
    Verdict verdict = Verdict::Inconclusive;
    std::string det;                 // decimal string
    std::optional<Rat> t_star;       // null unless ConditionsHold
    Rat c_ld;
    Rat c_u;
    std::optional<bool> match;       // t_star == c_ld (and c_u == c_ld)
    Verdict dual_verdict = Verdict::Inconclusive;
    std::optional<bool> dual_match;  // mapped receive-mode rate == c_ld
};

struct SweepOptions {
    int n = 2;
    int max_cap = 8;
    int count = 100;
    std::uint64_t seed = 1;
    int threads = 0;  // 0: hardware concurrency, capped by RELAY_SCHED_THREADS
};

/// Thrown when a ConditionsHold network disagrees with the LP oracle; the
/// offending network travels along so it can be dumped for reproduction.
struct sweep_mismatch : internal_inconsistency {
    sweep_mismatch(const std::string& msg, Network offender, SweepRecord rec)
        : internal_inconsistency(msg), network(std::move(offender)), record(std::move(rec)) {}
    Network network;
    SweepRecord record;
};

/// Full analysis of one network: verdict, closed form, both LPs, the
/// receive-mode dual, and the oracle comparisons. Throws sweep_mismatch the
/// moment the closed form disagrees with the LP. seed/n/max_cap are copied
/// into the record verbatim.
SweepRecord analyze_network(const Network& net, std::uint64_t seed, int n, int max_cap);

/// Analyzes one seeded random network end to end (used by the sweep and tests).
SweepRecord sweep_one(int n, int max_cap, std::uint64_t seed);

/// Runs `count` independent jobs (job i uses seed base+i) across a worker
/// pool; records are returned in job order regardless of completion order.
/// The first closed-form/oracle mismatch aborts via sweep_mismatch.
std::vector<SweepRecord> run_sweep(const SweepOptions& opts);

std::string sweep_csv_header();
std::string sweep_record_csv(const SweepRecord& rec);
std::string sweep_record_jsonl(const SweepRecord& rec);

} // namespace relaysched
