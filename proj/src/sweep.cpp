#include "relaysched/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "relaysched/json_io.hpp"
#include "relaysched/lp.hpp"

namespace relaysched {

SweepRecord analyze_network(const Network& net, std::uint64_t seed, int n, int max_cap) {
    SweepRecord rec;
    rec.seed = seed;
    rec.n = n;
    rec.max_cap = max_cap;

    // All values below are label-invariant except the relaxed LP, whose
    // interval cuts refer to the canonical order; analyze the canonical
    // relabeling throughout so one table serves everything.
    const Network cnet = canonicalize(net).first;
    const OptimalityReport rep = check_single_tx(cnet);
    rec.verdict = rep.verdict;
    rec.det = rep.pmatrix.det.get_str();

    CutValueTable table(cnet);
    rec.c_ld = solve_full_lp(table).value;
    rec.c_u = solve_relaxed_lp(table).value;
    if (rec.c_u < rec.c_ld)
        throw sweep_mismatch("relaxed optimum fell below the full optimum", net, rec);

    if (rep.verdict == Verdict::ConditionsHold) {
        rec.t_star = rep.schedule->t;
        const bool feasible = verify_schedule_feasible(table, *rep.schedule).feasible;
        rec.match = feasible && *rec.t_star == rec.c_ld && rec.c_u == rec.c_ld;
        if (!*rec.match)
            // This would falsify the closed form; it must never be averaged
            // away, so the caller gets the offending network verbatim.
            throw sweep_mismatch("closed-form schedule disagrees with the LP oracle", net, rec);
    }

    const OptimalityReport dual = check_single_rx(cnet);
    rec.dual_verdict = dual.verdict;
    if (dual.verdict == Verdict::ConditionsHold && dual.oracle_check &&
        dual.oracle_check->status != OracleCheck::Status::Unavailable) {
        rec.dual_match = dual.oracle_check->status == OracleCheck::Status::Match;
    }
    return rec;
}

SweepRecord sweep_one(int n, int max_cap, std::uint64_t seed) {
    return analyze_network(random_network(n, max_cap, seed), seed, n, max_cap);
}

namespace {

int resolve_threads(const SweepOptions& opts) {
    int threads = opts.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    if (const char* cap = std::getenv("RELAY_SCHED_THREADS")) {
        const int limit = std::atoi(cap);
        if (limit > 0 && limit < threads) threads = limit;
    }
    return std::min(threads, std::max(opts.count, 1));
}

} // namespace

std::vector<SweepRecord> run_sweep(const SweepOptions& opts) {
    std::vector<SweepRecord> records(opts.count);
    std::atomic<int> next{0};
    std::atomic<bool> stop{false};
    std::mutex failure_mutex;
    std::optional<sweep_mismatch> failure;
    int failure_index = -1;

    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= opts.count || stop.load()) return;
            try {
                records[i] = sweep_one(opts.n, opts.max_cap, opts.seed + static_cast<std::uint64_t>(i));
            } catch (const sweep_mismatch& m) {
                std::lock_guard lock(failure_mutex);
                if (failure_index < 0 || i < failure_index) {
                    failure = m;
                    failure_index = i;
                }
                stop.store(true);
                return;
            }
        }
    };

    const int nthreads = resolve_threads(opts);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (failure) throw *failure;
    return records;
}

std::string sweep_csv_header() {
    return "seed,n,max_cap,verdict,det,t_star,c_ld,c_u,match,dual_verdict,dual_match";
}

namespace {

std::string opt_bool(const std::optional<bool>& v) {
    if (!v) return "";
    return *v ? "true" : "false";
}

} // namespace

std::string sweep_record_csv(const SweepRecord& rec) {
    std::string out;
    out += std::to_string(rec.seed);
    out += ',';
    out += std::to_string(rec.n);
    out += ',';
    out += std::to_string(rec.max_cap);
    out += ',';
    out += verdict_name(rec.verdict);
    out += ',';
    out += rec.det;
    out += ',';
    out += rec.t_star ? fraction_string(*rec.t_star) : "";
    out += ',';
    out += fraction_string(rec.c_ld);
    out += ',';
    out += fraction_string(rec.c_u);
    out += ',';
    out += opt_bool(rec.match);
    out += ',';
    out += verdict_name(rec.dual_verdict);
    out += ',';
    out += opt_bool(rec.dual_match);
    return out;
}

std::string sweep_record_jsonl(const SweepRecord& rec) {
    nlohmann::json j{{"seed", rec.seed},
                     {"n", rec.n},
                     {"max_cap", rec.max_cap},
                     {"verdict", verdict_name(rec.verdict)},
                     {"det", rec.det},
                     {"c_ld", fraction_string(rec.c_ld)},
                     {"c_u", fraction_string(rec.c_u)},
                     {"dual_verdict", verdict_name(rec.dual_verdict)}};
    j["t_star"] = rec.t_star ? nlohmann::json(fraction_string(*rec.t_star)) : nlohmann::json();
    j["match"] = rec.match ? nlohmann::json(*rec.match) : nlohmann::json();
    j["dual_match"] = rec.dual_match ? nlohmann::json(*rec.dual_match) : nlohmann::json();
    return j.dump();
}

} // namespace relaysched
