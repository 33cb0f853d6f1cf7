#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "relaysched/cut_table.hpp"
#include "relaysched/rational.hpp"

namespace relaysched {

/// The (n+2)x(n+2) integer matrix deciding whether single-transmitter
/// scheduling is optimal, rows/columns indexed [0, n+1]:
///   entry(0,0) = 0, row 0 and column 0 otherwise 1,
///   entry(i,j) = -f([i:n], {j}) with column n+1 standing for the empty
///   state. det and the minors along row 0 are exact integers.
struct CutMatrix {
    int n = 0;
    std::vector<std::vector<long>> entries;
    Int det;
    std::vector<Int> minors;  // minors[i]: row 0 and column i removed

    long entry(int i, int j) const { return entries[i][j]; }
};

/// Time-sharing schedule: fraction of time per state (mask keyed) plus the
/// common rate t it sustains. Exact rationals throughout.
struct Schedule {
    std::map<std::uint32_t, Rat> lambdas;
    Rat t;

    Rat total() const;
};

/// KKT multipliers certifying optimality of the closed-form schedule for
/// the interval-cut relaxation: mu solves mu * P = (1, 0, ..., 0), and
/// sigma_S = mu_p - sum_i mu_i f([i:n], S).
struct DualCertificate {
    Rat mu_p;
    std::vector<Rat> mu;                    // mu[i-1] = mu_i, i in [1, n+1]
    std::map<std::uint32_t, Rat> sigma;     // keyed by state mask
    bool sigma_complete = true;             // false when only the single-tx states were enumerated
};

enum class Verdict { ConditionsHold, ConditionsFail, Inconclusive };

const char* verdict_name(Verdict v);

/// Outcome of comparing a schedule's rate against the exact LP optimum.
struct OracleCheck {
    enum class Status { Match, Mismatch, Unavailable } status;
    Rat schedule_value;
    Rat oracle_value;  // meaningless when Unavailable
};

/// Full analysis result for one network. The cut matrix and mu are in
/// canonical relay order; schedule and sigma keys are mapped back to the
/// caller's original relay labels. permutation[new] = old records the
/// canonical relabeling (0-based).
struct OptimalityReport {
    CutMatrix pmatrix;
    bool det_nonzero = false;
    bool ratio_sign_ok = false;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Schedule> schedule;
    std::optional<DualCertificate> dual;
    std::vector<int> permutation;
    bool receive_mode = false;  // true when produced by the reversed-network analysis
    std::optional<OracleCheck> oracle_check;
};

/// Masks of the n+1 states with at most one relay transmitting:
/// {1}, ..., {n}, {}.
std::vector<std::uint32_t> single_tx_states(int n);

/// Builds the decision matrix with exact det and minors. The table's
/// network must be canonical.
CutMatrix build_cut_matrix(const CutValueTable& table);

/// Schedule from the minors by Cramer's rule. Requires det != 0 and the
/// sign condition; verifies sum = 1, all lambdas >= 0, and that the rate
/// identity holds on every interval cut (else internal_inconsistency).
Schedule closed_form_schedule(const CutMatrix& pm);

/// Independent path: solves the (n+2)-equation linear system directly by
/// exact elimination. Agrees with closed_form_schedule whenever det != 0.
Schedule solve_schedule_system(const CutMatrix& pm);

/// Backward recursion for the singleton-state lambdas. Where consecutive
/// source capacities tie the step degenerates: a zero right-hand side takes
/// the value from `fallback` (required there); a nonzero one throws
/// condition_not_met, signalling an upstream bug.
Schedule schedule_via_recursion(const CutValueTable& table, const Rat& t_star,
                                const Schedule* fallback = nullptr);

/// KKT certificate for a nonsingular decision matrix. Checks sum(mu) = 1,
/// sigma = 0 on single-tx states, and non-negativity of every multiplier;
/// any violation throws internal_inconsistency. sigma is enumerated over
/// all states for n <= 12, otherwise restricted to the single-tx states.
DualCertificate dual_certificate(const CutValueTable& table, const CutMatrix& pm);

/// Decides whether the states with at most one relay transmitting achieve
/// the approximate capacity; on success attaches the closed-form schedule
/// and the dual certificate.
OptimalityReport check_single_tx(const Network& net);

/// The receive-mode counterpart: analyzes the reversed network and maps
/// each state S to its complement, yielding a schedule with at most one
/// relay receiving. The mapped rate is verified against the exact LP of
/// the original network whenever n <= 10 (never trusted blindly).
OptimalityReport check_single_rx(const Network& net);

/// Relabels schedule state masks: perm[new] = old (0-based), mapping a
/// canonical-label schedule back to original labels.
Schedule map_schedule_labels(const Schedule& sched, const std::vector<int>& perm);

} // namespace relaysched
