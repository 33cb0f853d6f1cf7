#include "relaysched/lp.hpp"

#include <cassert>

#include "relaysched/errors.hpp"

namespace relaysched {

namespace {

// Dense primal simplex over exact rationals.
//
//   max c.x  s.t.  A x <= b, x >= 0, b >= 0
//
// The all-slack basis is feasible, so no phase 1 is needed. Degeneracy is
// endemic here (many tied cut values), hence Bland's rule throughout:
// entering column = lowest index with negative reduced cost, leaving row =
// lowest basic-variable index among the ratio-test minima. That rule is
// what guarantees termination.
class Simplex {
public:
    Simplex(std::vector<std::vector<Rat>> a, std::vector<Rat> b, int nvars)
        : a_(std::move(a)), rhs_(std::move(b)), nvars_(nvars) {
        const int m = static_cast<int>(a_.size());
        ncols_ = nvars_ + m;
        for (int r = 0; r < m; ++r) {
            a_[r].resize(ncols_, Rat(0));
            a_[r][nvars_ + r] = 1;
            basis_.push_back(nvars_ + r);
        }
        // Objective: maximize x0. zrow holds z_j - c_j.
        zrow_.assign(ncols_, Rat(0));
        zrow_[0] = -1;
        zval_ = 0;
    }

    LpStatus solve() {
        const int m = static_cast<int>(a_.size());
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (sign_of(zrow_[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) break;  // optimal

            int leave = -1;
            Rat best;
            for (int r = 0; r < m; ++r) {
                if (sign_of(a_[r][enter]) <= 0) continue;
                Rat ratio = rhs_[r] / a_[r][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave < 0) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
#ifndef NDEBUG
        for (int j = 0; j < ncols_; ++j) assert(sign_of(zrow_[j]) >= 0);
#endif
        return LpStatus::Optimal;
    }

    /// Value of structural variable j at the current basis.
    Rat value_of(int j) const {
        for (std::size_t r = 0; r < basis_.size(); ++r)
            if (basis_[r] == j) return rhs_[r];
        return Rat(0);
    }

private:
    void pivot(int row, int col) {
        const int m = static_cast<int>(a_.size());
        const Rat inv = a_[row][col];
        for (int j = 0; j < ncols_; ++j) a_[row][j] /= inv;
        rhs_[row] /= inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || a_[r][col] == 0) continue;
            const Rat f = a_[r][col];
            for (int j = 0; j < ncols_; ++j)
                if (a_[row][j] != 0) a_[r][j] -= f * a_[row][j];
            rhs_[r] -= f * rhs_[row];
        }
        if (zrow_[col] != 0) {
            const Rat f = zrow_[col];
            for (int j = 0; j < ncols_; ++j)
                if (a_[row][j] != 0) zrow_[j] -= f * a_[row][j];
            zval_ -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    std::vector<std::vector<Rat>> a_;
    std::vector<Rat> rhs_;
    std::vector<Rat> zrow_;
    Rat zval_;
    std::vector<int> basis_;
    int nvars_;
    int ncols_;
};

// Shared driver: max t over the given cut constraints plus time sharing.
// Variables are x0 = t and x_{1+mask} = lambda_mask for every state mask.
// t is kept as an ordinary non-negative variable: cut values are
// non-negative, so t = 0 (with lambda = 0) is feasible and the optimum is
// never negative; no free-variable split is required.
LpSolution solve_cut_lp(const CutValueTable& table, const std::vector<std::uint32_t>& cuts) {
    const int n = table.network().n;
    if (n > kLpMaxRelays)
        throw capacity_exceeded("exact LP supports n <= 10, got n = " + std::to_string(n));
    const std::uint32_t nstates = 1u << n;
    const int nvars = 1 + static_cast<int>(nstates);
    const int m = static_cast<int>(cuts.size()) + 1;

    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(nvars, Rat(0)));
    std::vector<Rat> b(m, Rat(0));
    for (std::size_t r = 0; r < cuts.size(); ++r) {
        a[r][0] = 1;
        const RelaySet omega{cuts[r]};
        for (std::uint32_t s = 0; s < nstates; ++s)
            a[r][1 + s] = -table.cut_value(omega, RelaySet{s});
    }
    for (std::uint32_t s = 0; s < nstates; ++s) a[m - 1][1 + s] = 1;
    b[m - 1] = 1;

    Simplex simplex(std::move(a), std::move(b), nvars);
    LpSolution sol;
    sol.status = simplex.solve();
    if (sol.status != LpStatus::Optimal) return sol;

    sol.value = simplex.value_of(0);
    Rat lam_sum = 0;
    for (std::uint32_t s = 0; s < nstates; ++s) {
        Rat v = simplex.value_of(1 + s);
        if (sign_of(v) < 0) throw internal_inconsistency("simplex returned negative lambda");
        lam_sum += v;
        if (v != 0) sol.schedule[s] = v;
    }
    if (lam_sum > 1) throw internal_inconsistency("simplex schedule exceeds the time budget");

    // Re-derive every constraint from the table; the optimum must sit
    // exactly at the minimum included cut.
    bool any_tight = false;
    for (std::uint32_t cut : cuts) {
        Rat g = 0;
        for (const auto& [s, v] : sol.schedule)
            g += v * table.cut_value(RelaySet{cut}, RelaySet{s});
        if (g < sol.value) throw internal_inconsistency("simplex solution violates a cut");
        if (g == sol.value) {
            sol.tight_cuts.push_back(cut);
            any_tight = true;
        }
    }
    if (!any_tight) throw internal_inconsistency("no cut is tight at the simplex optimum");
    return sol;
}

} // namespace

LpSolution solve_full_lp(const CutValueTable& table) {
    const int n = table.network().n;
    std::vector<std::uint32_t> cuts;
    cuts.reserve(1u << n);
    for (std::uint32_t omega = 0; omega < (1u << n); ++omega) cuts.push_back(omega);
    return solve_cut_lp(table, cuts);
}

LpSolution solve_relaxed_lp(const CutValueTable& table) {
    const int n = table.network().n;
    if (n > kLpMaxRelays)
        throw capacity_exceeded("exact LP supports n <= 10, got n = " + std::to_string(n));
    // The retained cuts are the suffixes [i:n] of the canonical order; on an
    // unsorted network they would describe a different (still valid, but
    // wrong-valued) relaxation.
    if (!table.network().is_canonical())
        throw condition_not_met("relaxed LP requires canonical relay order");
    std::vector<std::uint32_t> cuts;
    cuts.reserve(n + 1);
    for (int i = 1; i <= n + 1; ++i) cuts.push_back(RelaySet::interval(i, n).mask());
    return solve_cut_lp(table, cuts);
}

FeasibilityReport verify_schedule_feasible(const CutValueTable& table, const Schedule& sched) {
    for (const auto& [mask, v] : sched.lambdas)
        if (sign_of(v) < 0) throw condition_not_met("schedule has a negative lambda");
    if (sched.total() > 1) throw condition_not_met("schedule exceeds the time budget");

    const int n = table.network().n;
    FeasibilityReport rep;
    rep.feasible = true;
    rep.slacks.reserve(1u << n);
    for (std::uint32_t omega = 0; omega < (1u << n); ++omega) {
        Rat g = 0;
        for (const auto& [s, v] : sched.lambdas)
            if (v != 0) g += v * table.cut_value(RelaySet{omega}, RelaySet{s});
        Rat slack = g - sched.t;
        if (sign_of(slack) < 0) rep.feasible = false;
        rep.slacks.push_back({omega, std::move(slack)});
    }
    return rep;
}

} // namespace relaysched
