#include "relaysched/solver.hpp"

#include <algorithm>

#include "relaysched/errors.hpp"
#include "relaysched/lp.hpp"

namespace relaysched {

namespace {

// Fraction-free (Bareiss) elimination: every division below is exact, so
// the determinant of an integer matrix stays in integers throughout. The
// verdict is a sign test, which rules out any floating-point route.
Int integer_det(std::vector<std::vector<Int>> m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int c = 0; c + 1 < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r) {
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (int r = c + 1; r < k; ++r) {
            for (int j = c + 1; j < k; ++j) {
                Int num = m[r][j] * m[c][c] - m[r][c] * m[c][j];
                mpz_divexact(m[r][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    return sign > 0 ? m[k - 1][k - 1] : Int(-m[k - 1][k - 1]);
}

// Exact Gauss-Jordan solve of a nonsingular square system.
std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const int k = static_cast<int>(a.size());
    for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r) {
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw condition_not_met("linear system is singular");
        std::swap(a[pivot], a[c]);
        std::swap(b[pivot], b[c]);
        const Rat inv = a[c][c];
        for (int j = c; j < k; ++j) a[c][j] /= inv;
        b[c] /= inv;
        for (int r = 0; r < k; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rat f = a[r][c];
            for (int j = c; j < k; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    return b;
}

int parity_sign(int i) { return (i % 2 == 0) ? 1 : -1; }

std::uint32_t map_mask(std::uint32_t mask, const std::vector<int>& perm) {
    std::uint32_t out = 0;
    for (std::size_t k = 0; k < perm.size(); ++k)
        if ((mask >> k) & 1u) out |= 1u << perm[k];
    return out;
}

} // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ConditionsHold: return "hold";
        case Verdict::ConditionsFail: return "fail";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

Rat Schedule::total() const {
    Rat sum = 0;
    for (const auto& [mask, v] : lambdas) sum += v;
    return sum;
}

std::vector<std::uint32_t> single_tx_states(int n) {
    std::vector<std::uint32_t> out;
    out.reserve(n + 1);
    for (int i = 1; i <= n; ++i) out.push_back(1u << (i - 1));
    out.push_back(0);
    return out;
}

CutMatrix build_cut_matrix(const CutValueTable& table) {
    const Network& net = table.network();
    if (!net.is_canonical())
        throw condition_not_met("cut matrix requires canonical relay order");
    const int n = net.n;
    const int k = n + 2;

    CutMatrix pm;
    pm.n = n;
    pm.entries.assign(k, std::vector<long>(k, 1));
    pm.entries[0][0] = 0;
    for (int i = 1; i <= n + 1; ++i) {
        const auto row = table.cut_value_row(i);
        for (int j = 1; j <= n + 1; ++j) pm.entries[i][j] = -row[j - 1];
    }

    auto as_int = [&](int r0, int r1, int skip_col) {
        std::vector<std::vector<Int>> m;
        m.reserve(r1 - r0);
        for (int r = r0; r < r1; ++r) {
            std::vector<Int> row;
            row.reserve(k - (skip_col >= 0 ? 1 : 0));
            for (int c = 0; c < k; ++c)
                if (c != skip_col) row.emplace_back(pm.entries[r][c]);
            m.push_back(std::move(row));
        }
        return m;
    };

    pm.det = integer_det(as_int(0, k, -1));
    pm.minors.resize(k);
    for (int i = 0; i < k; ++i) pm.minors[i] = integer_det(as_int(1, k, i));

    // Laplace expansion along row 0 ties det and minors together.
    Int lap = 0;
    for (int i = 1; i <= n + 1; ++i)
        lap += parity_sign(i) * pm.minors[i];
    if (lap != pm.det)
        throw internal_inconsistency("determinant does not match its row-0 expansion");
    return pm;
}

Schedule closed_form_schedule(const CutMatrix& pm) {
    const int n = pm.n;
    if (pm.det == 0)
        throw condition_not_met("closed form needs a nonsingular decision matrix");
    const int det_sign = sign_of(pm.det);
    if (parity_sign(n + 1) * sign_of(pm.minors[n + 1]) * det_sign < 0)
        throw condition_not_met("closed form needs the minor sign condition");

    Schedule s;
    Rat sum = 0;
    for (int i = 1; i <= n; ++i) {
        Rat v(parity_sign(i) * pm.minors[i], pm.det);
        v.canonicalize();
        if (sign_of(v) < 0)
            throw internal_inconsistency("negative closed-form lambda despite sign condition");
        s.lambdas[1u << (i - 1)] = v;
        sum += v;
    }
    Rat empty(parity_sign(n + 1) * pm.minors[n + 1], pm.det);
    empty.canonicalize();
    s.lambdas[0] = empty;
    sum += empty;
    if (sum != 1)
        throw internal_inconsistency("closed-form schedule does not sum to 1");

    // The sustained rate must come out identical on every interval cut.
    Rat t;
    for (int i = 1; i <= n + 1; ++i) {
        Rat g = 0;
        for (int j = 1; j <= n; ++j) g += s.lambdas[1u << (j - 1)] * Rat(-pm.entries[i][j]);
        g += s.lambdas[0] * Rat(-pm.entries[i][n + 1]);
        if (i == 1)
            t = g;
        else if (g != t)
            throw internal_inconsistency("rate differs across interval cuts");
    }
    s.t = t;
    return s;
}

Schedule solve_schedule_system(const CutMatrix& pm) {
    const int n = pm.n;
    const int k = n + 2;
    std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) a[r][c] = pm.entries[r][c];
    std::vector<Rat> b(k, 0);
    b[0] = 1;
    const auto x = solve_linear(std::move(a), std::move(b));
    Schedule s;
    s.t = x[0];
    for (int i = 1; i <= n; ++i) s.lambdas[1u << (i - 1)] = x[i];
    s.lambdas[0] = x[n + 1];
    return s;
}

Schedule schedule_via_recursion(const CutValueTable& table, const Rat& t_star,
                                const Schedule* fallback) {
    const Network& net = table.network();
    if (!net.is_canonical())
        throw condition_not_met("recursion requires canonical relay order");
    const int n = net.n;
    auto ls = [&](int i) { return i >= 1 ? net.from_source(i) : 0; };

    Schedule s;
    s.t = t_star;
    Rat sum = 0;
    for (int i = n; i >= 1; --i) {
        Rat rhs = Rat(ls(i)) - t_star;
        for (int j = i + 1; j <= n; ++j) {
            const int f = table.cut_value(RelaySet::interval(i + 1, n), RelaySet::singleton(j));
            rhs += s.lambdas.at(1u << (j - 1)) * Rat(f - ls(i));
        }
        const int step = ls(i) - ls(i - 1);
        Rat v;
        if (step != 0) {
            v = rhs / step;
        } else if (rhs == 0) {
            // Tied source capacities leave lambda_i free; only the Cramer
            // path can pin it down.
            if (!fallback)
                throw condition_not_met("recursion under-determined at relay " + std::to_string(i));
            v = fallback->lambdas.at(1u << (i - 1));
        } else {
            throw condition_not_met("recursion inapplicable: degenerate step with nonzero residual");
        }
        s.lambdas[1u << (i - 1)] = v;
        sum += v;
    }
    s.lambdas[0] = Rat(1) - sum;
    return s;
}

DualCertificate dual_certificate(const CutValueTable& table, const CutMatrix& pm) {
    if (pm.det == 0)
        throw condition_not_met("dual certificate needs a nonsingular decision matrix");
    const int n = pm.n;
    const int k = n + 2;

    // Row system mu * P = e0 becomes P^T mu^T = e0.
    std::vector<std::vector<Rat>> at(k, std::vector<Rat>(k));
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) at[r][c] = pm.entries[c][r];
    std::vector<Rat> b(k, 0);
    b[0] = 1;
    const auto x = solve_linear(std::move(at), std::move(b));

    DualCertificate d;
    d.mu_p = x[0];
    d.mu.assign(x.begin() + 1, x.end());

    Rat mu_sum = 0;
    for (const auto& m : d.mu) {
        if (sign_of(m) < 0) throw internal_inconsistency("negative mu entry");
        mu_sum += m;
    }
    if (mu_sum != 1) throw internal_inconsistency("mu entries do not sum to 1");
    if (sign_of(d.mu_p) < 0) throw internal_inconsistency("negative mu_p");

    const auto singles = single_tx_states(n);
    std::vector<std::uint32_t> states;
    if (n <= 12) {
        d.sigma_complete = true;
        states.reserve(1u << n);
        for (std::uint32_t m = 0; m < (1u << n); ++m) states.push_back(m);
    } else {
        d.sigma_complete = false;
        states = singles;
    }

    for (std::uint32_t mask : states) {
        Rat sigma = d.mu_p;
        for (int i = 1; i <= n + 1; ++i)
            sigma -= d.mu[i - 1] * table.cut_value(RelaySet::interval(i, n), RelaySet{mask});
        if (sign_of(sigma) < 0)
            throw internal_inconsistency("negative sigma entry");
        d.sigma[mask] = sigma;
    }
    for (std::uint32_t mask : singles) {
        if (d.sigma.at(mask) != 0)
            throw internal_inconsistency("sigma must vanish on single-transmitter states");
    }
    return d;
}

Schedule map_schedule_labels(const Schedule& sched, const std::vector<int>& perm) {
    Schedule out;
    out.t = sched.t;
    for (const auto& [mask, v] : sched.lambdas) out.lambdas[map_mask(mask, perm)] = v;
    return out;
}

OptimalityReport check_single_tx(const Network& net) {
    auto [cnet, perm] = canonicalize(net);
    CutValueTable table(std::move(cnet));
    OptimalityReport rep;
    rep.permutation = perm;
    rep.pmatrix = build_cut_matrix(table);

    const CutMatrix& pm = rep.pmatrix;
    const int n = pm.n;
    rep.det_nonzero = pm.det != 0;
    rep.ratio_sign_ok =
        parity_sign(n + 1) * sign_of(pm.minors[n + 1]) * sign_of(pm.det) >= 0;
    if (!rep.det_nonzero)
        rep.verdict = Verdict::Inconclusive;
    else if (rep.ratio_sign_ok)
        rep.verdict = Verdict::ConditionsHold;
    else
        rep.verdict = Verdict::ConditionsFail;

    if (rep.verdict == Verdict::ConditionsHold) {
        rep.schedule = map_schedule_labels(closed_form_schedule(pm), perm);
        DualCertificate dual = dual_certificate(table, pm);
        std::map<std::uint32_t, Rat> sigma;
        for (const auto& [mask, v] : dual.sigma) sigma[map_mask(mask, perm)] = v;
        dual.sigma = std::move(sigma);
        rep.dual = std::move(dual);
    }
    return rep;
}

OptimalityReport check_single_rx(const Network& net) {
    OptimalityReport rep = check_single_tx(reverse(net));
    rep.receive_mode = true;
    if (rep.verdict != Verdict::ConditionsHold) return rep;

    const std::uint32_t full = RelaySet::full(net.n).mask();
    auto complement_keys = [&](const std::map<std::uint32_t, Rat>& in) {
        std::map<std::uint32_t, Rat> out;
        for (const auto& [mask, v] : in) out[full & ~mask] = v;
        return out;
    };
    Schedule mapped;
    mapped.t = rep.schedule->t;
    mapped.lambdas = complement_keys(rep.schedule->lambdas);
    rep.schedule = mapped;
    if (rep.dual) rep.dual->sigma = complement_keys(rep.dual->sigma);

    // The mapped schedule is a conjecture until the exact LP of the original
    // network confirms it.
    if (net.n <= kLpMaxRelays) {
        CutValueTable original(net);
        const LpSolution lp = solve_full_lp(original);
        const auto feas = verify_schedule_feasible(original, mapped);
        const bool match = feas.feasible && lp.value == mapped.t;
        rep.oracle_check = OracleCheck{
            match ? OracleCheck::Status::Match : OracleCheck::Status::Mismatch,
            mapped.t, lp.value};
    } else {
        rep.oracle_check = OracleCheck{OracleCheck::Status::Unavailable, mapped.t, Rat(0)};
    }
    return rep;
}

} // namespace relaysched
