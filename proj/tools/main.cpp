#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "relaysched/errors.hpp"
#include "relaysched/json_io.hpp"
#include "relaysched/lp.hpp"
#include "relaysched/properties.hpp"
#include "relaysched/solver.hpp"
#include "relaysched/sweep.hpp"

namespace rs = relaysched;

namespace {

constexpr int kExitHold = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInternal = 4;

std::string fmt_rat(const rs::Rat& q, bool with_float) {
    std::string out = rs::fraction_string(q);
    if (with_float) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), " (~%.6g)", q.get_d());
        out += buf;
    }
    return out;
}

std::string state_str(std::uint32_t mask) {
    if (mask == 0) return "{}";
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if ((mask >> i) & 1u) {
            if (!first) out += ",";
            out += std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

rs::RelaySet parse_set(const std::string& text, int n) {
    rs::RelaySet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int id = 0;
        try {
            id = std::stoi(item);
        } catch (...) {
            throw rs::input_error("bad relay id '" + item + "'");
        }
        if (id < 1 || id > n)
            throw rs::input_error("relay id " + std::to_string(id) + " outside [1, " +
                                  std::to_string(n) + "]");
        out = out | rs::RelaySet::singleton(id);
    }
    return out;
}

void print_schedule(const rs::Schedule& sched, bool with_float) {
    std::cout << "t = " << fmt_rat(sched.t, with_float) << "\n";
    std::cout << "schedule:\n";
    for (const auto& [mask, v] : sched.lambdas)
        std::cout << "  " << state_str(mask) << " -> " << fmt_rat(v, with_float) << "\n";
}

void print_report(const rs::OptimalityReport& rep, bool with_float) {
    const auto& pm = rep.pmatrix;
    std::cout << "verdict: " << rs::verdict_name(rep.verdict);
    if (rep.verdict == rs::Verdict::ConditionsHold)
        std::cout << (rep.receive_mode ? " (single-receiver states suffice)"
                                       : " (single-transmitter states suffice)");
    std::cout << "\n";
    if (rep.receive_mode) std::cout << "analysis ran on the reversed network\n";
    std::cout << "det P = " << pm.det.get_str() << "\n";
    std::cout << "minors:";
    for (const auto& m : pm.minors) std::cout << " " << m.get_str();
    std::cout << "\n";
    std::cout << "canonical order:";
    for (int p : rep.permutation) std::cout << " " << (p + 1);
    std::cout << "\n";
    if (rep.schedule) print_schedule(*rep.schedule, with_float);
    if (rep.dual) {
        std::cout << "mu_p = " << fmt_rat(rep.dual->mu_p, with_float) << "\n";
        std::cout << "mu =";
        for (const auto& v : rep.dual->mu) std::cout << " " << fmt_rat(v, with_float);
        std::cout << "\n";
        std::cout << "sigma (nonzero only):\n";
        bool any = false;
        for (const auto& [mask, v] : rep.dual->sigma) {
            if (v == 0) continue;
            std::cout << "  " << state_str(mask) << " -> " << fmt_rat(v, with_float) << "\n";
            any = true;
        }
        if (!any) std::cout << "  (all zero)\n";
    }
    if (rep.oracle_check) {
        const auto& oc = *rep.oracle_check;
        switch (oc.status) {
            case rs::OracleCheck::Status::Match:
                std::cout << "oracle check: match (rate " << fmt_rat(oc.oracle_value, with_float)
                          << ")\n";
                break;
            case rs::OracleCheck::Status::Mismatch:
                std::cout << "oracle check: MISMATCH - schedule is heuristic, suboptimal (rate "
                          << fmt_rat(oc.schedule_value, with_float) << ", optimum "
                          << fmt_rat(oc.oracle_value, with_float) << ")\n";
                break;
            case rs::OracleCheck::Status::Unavailable:
                std::cout << "oracle check: unavailable (n > " << rs::kLpMaxRelays << ")\n";
                break;
        }
    }
}

int verdict_exit(const rs::OptimalityReport& rep) {
    switch (rep.verdict) {
        case rs::Verdict::ConditionsHold:
            if (rep.oracle_check && rep.oracle_check->status == rs::OracleCheck::Status::Mismatch)
                return kExitFail;
            return kExitHold;
        case rs::Verdict::ConditionsFail: return kExitFail;
        case rs::Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitInternal;
}

int cmd_check(const std::string& path, bool json_out, bool with_float, bool dual) {
    const rs::Network net = rs::parse_network_file(path);
    const rs::OptimalityReport rep = dual ? rs::check_single_rx(net) : rs::check_single_tx(net);
    if (json_out)
        std::cout << rs::report_to_json(rep).dump(2) << "\n";
    else
        print_report(rep, with_float);
    return verdict_exit(rep);
}

int cmd_capacity(const std::string& path, bool json_out, bool with_float, bool force_oracle,
                 bool show_schedule) {
    const rs::Network net = rs::parse_network_file(path);
    rs::Rat value;
    std::optional<rs::Schedule> sched;
    std::string source;
    if (!force_oracle) {
        const rs::OptimalityReport rep = rs::check_single_tx(net);
        if (rep.verdict == rs::Verdict::ConditionsHold) {
            value = rep.schedule->t;
            sched = rep.schedule;
            source = "closed_form";
        }
    }
    if (source.empty()) {
        rs::CutValueTable table(net);
        rs::LpSolution sol = rs::solve_full_lp(table);
        value = sol.value;
        rs::Schedule s;
        s.t = sol.value;
        s.lambdas = sol.schedule;
        sched = std::move(s);
        source = "lp";
    }
    if (json_out) {
        nlohmann::json out{{"capacity", rs::fraction_string(value)}, {"source", source}};
        if (show_schedule && sched) out["schedule"] = rs::schedule_to_json(*sched);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << fmt_rat(value, with_float) << "\n";
        if (show_schedule && sched) print_schedule(*sched, with_float);
    }
    return kExitHold;
}

int cmd_schedule(const std::string& path, bool json_out, bool with_float, bool dual,
                 bool force_oracle) {
    const rs::Network net = rs::parse_network_file(path);
    if (dual) {
        const rs::OptimalityReport rep = rs::check_single_rx(net);
        if (json_out)
            std::cout << rs::report_to_json(rep).dump(2) << "\n";
        else
            print_report(rep, with_float);
        return verdict_exit(rep);
    }
    if (!force_oracle) {
        const rs::OptimalityReport rep = rs::check_single_tx(net);
        if (rep.verdict == rs::Verdict::ConditionsHold) {
            if (json_out)
                std::cout << rs::report_to_json(rep).dump(2) << "\n";
            else
                print_report(rep, with_float);
            return kExitHold;
        }
    }
    rs::CutValueTable table(net);
    const rs::LpSolution sol = rs::solve_full_lp(table);
    if (json_out) {
        std::cout << rs::lp_solution_to_json(sol).dump(2) << "\n";
    } else {
        rs::Schedule s;
        s.t = sol.value;
        s.lambdas = sol.schedule;
        std::cout << "(general LP schedule; single-transmitter conditions not established)\n";
        print_schedule(s, with_float);
    }
    return kExitHold;
}

int cmd_verify(const std::string& path) {
    const rs::Network net = rs::parse_network_file(path);
    const auto results = rs::run_property_battery(net);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << " [" << r.detail << "]";
        std::cout << "\n";
        ok = ok && r.pass;
    }
    std::cout << (ok ? "all properties hold\n" : "property failures detected\n");
    return ok ? kExitHold : kExitFail;
}

int cmd_rank(const std::string& path, const std::string& omega_text, const std::string& state_text,
             bool json_out) {
    const rs::Network net = rs::parse_network_file(path);
    const rs::RelaySet omega = parse_set(omega_text, net.n);
    const rs::RelaySet state = parse_set(state_text, net.n);
    const rs::Gf2Matrix mat = rs::transfer_matrix(net, omega, state);
    rs::CutValueTable table(net);
    const int value = table.cut_value(omega, state);
    if (json_out) {
        nlohmann::json rows = nlohmann::json::array();
        std::istringstream grid(mat.to_grid_string());
        for (std::string line; std::getline(grid, line);) rows.push_back(line);
        nlohmann::json out{{"omega", omega.elements()}, {"state", state.elements()},
                           {"rows", mat.rows()},        {"cols", mat.cols()},
                           {"rank", value},             {"matrix", rows}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "transfer matrix (" << mat.rows() << "x" << mat.cols() << ") for omega="
                  << state_str(omega.mask()) << " state=" << state_str(state.mask()) << ":\n";
        std::cout << mat.to_grid_string();
        std::cout << "rank = " << value << "\n";
    }
    return kExitHold;
}

int cmd_gen(int n, int max_cap, std::uint64_t seed, const std::string& out_path) {
    const rs::Network net = rs::random_network(n, max_cap, seed);
    const std::string doc = rs::serialize_network(net);
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(out_path);
        if (!out) throw rs::input_error("cannot write " + out_path);
        out << doc;
    }
    return kExitHold;
}

int cmd_sweep(const rs::SweepOptions& opts, const std::string& out_path, const std::string& format) {
    std::vector<rs::SweepRecord> records;
    try {
        records = rs::run_sweep(opts);
    } catch (const rs::sweep_mismatch& m) {
        const std::string dump = "sweep_mismatch_seed" + std::to_string(m.record.seed) + ".json";
        std::ofstream out(dump);
        out << rs::serialize_network(m.network);
        std::cerr << "sweep aborted: " << m.what() << "\n";
        std::cerr << "offending network (seed " << m.record.seed << ") written to " << dump << "\n";
        return kExitInternal;
    }

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw rs::input_error("cannot write " + out_path);
        os = &file;
    }
    if (format == "csv") {
        *os << rs::sweep_csv_header() << "\n";
        for (const auto& rec : records) *os << rs::sweep_record_csv(rec) << "\n";
    } else {
        for (const auto& rec : records) *os << rs::sweep_record_jsonl(rec) << "\n";
    }

    int hold = 0, fail = 0, inconclusive = 0;
    for (const auto& rec : records) {
        switch (rec.verdict) {
            case rs::Verdict::ConditionsHold: ++hold; break;
            case rs::Verdict::ConditionsFail: ++fail; break;
            case rs::Verdict::Inconclusive: ++inconclusive; break;
        }
    }
    std::cerr << "sweep done: " << records.size() << " networks, " << hold << " hold, " << fail
              << " fail, " << inconclusive << " inconclusive; all held verdicts matched the oracle\n";
    return kExitHold;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scheduling analyzer for half-duplex diamond relay networks "
                 "(linear deterministic model, exact arithmetic)"};
    app.require_subcommand(1);

    bool json_out = false, with_float = false, force_oracle = false, dual = false;
    std::string path, omega_text, state_text, out_path, format = "csv";
    int n = 2, max_cap = 8, count = 100, threads = 0;
    std::uint64_t seed = 1;

    auto* check = app.add_subcommand("check", "test whether single-transmitter states suffice");
    check->add_option("file", path, "network JSON file")->required();
    check->add_flag("--json", json_out, "machine-readable output");
    check->add_flag("--float", with_float, "append decimal renderings");
    check->add_flag("--dual", dual, "analyze the receive-mode counterpart");

    auto* capacity = app.add_subcommand("capacity", "exact approximate capacity");
    capacity->add_option("file", path)->required();
    capacity->add_flag("--json", json_out);
    capacity->add_flag("--float", with_float);
    capacity->add_flag("--oracle", force_oracle, "always solve the full LP");
    bool show_schedule = false;
    capacity->add_flag("--schedule", show_schedule, "also print the schedule");

    auto* schedule = app.add_subcommand("schedule", "optimal schedule (closed form or LP)");
    schedule->add_option("file", path)->required();
    schedule->add_flag("--json", json_out);
    schedule->add_flag("--float", with_float);
    schedule->add_flag("--dual", dual, "receive-mode schedule via the reversed network");
    schedule->add_flag("--oracle", force_oracle, "always solve the full LP");

    auto* verify = app.add_subcommand("verify", "run the property battery on one network");
    verify->add_option("file", path)->required();

    auto* sweep = app.add_subcommand("sweep", "seeded random sweep with oracle cross-checks");
    sweep->add_option("--n", n, "relay count")->required();
    sweep->add_option("--max-cap", max_cap, "capacity upper bound");
    sweep->add_option("--count", count, "number of networks");
    sweep->add_option("--seed", seed, "base seed (job i uses seed+i)");
    sweep->add_option("--out", out_path, "output file (default stdout)");
    sweep->add_option("--format", format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    sweep->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* rank = app.add_subcommand("rank", "print a transfer matrix and its rank");
    rank->add_option("file", path)->required();
    rank->add_option("--omega", omega_text, "cut relays, comma separated (empty = {})");
    rank->add_option("--state", state_text, "transmitting relays, comma separated");
    rank->add_flag("--json", json_out);

    auto* gen = app.add_subcommand("gen", "emit a seeded random network");
    gen->add_option("--n", n)->required();
    gen->add_option("--max-cap", max_cap);
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;  // 0 is --help/--version
    }

    try {
        if (check->parsed()) return cmd_check(path, json_out, with_float, dual);
        if (capacity->parsed())
            return cmd_capacity(path, json_out, with_float, force_oracle, show_schedule);
        if (schedule->parsed())
            return cmd_schedule(path, json_out, with_float, dual, force_oracle);
        if (verify->parsed()) return cmd_verify(path);
        if (sweep->parsed()) {
            rs::SweepOptions opts;
            opts.n = n;
            opts.max_cap = max_cap;
            opts.count = count;
            opts.seed = seed;
            opts.threads = threads;
            return cmd_sweep(opts, out_path, format);
        }
        if (rank->parsed()) return cmd_rank(path, omega_text, state_text, json_out);
        if (gen->parsed()) return cmd_gen(n, max_cap, seed, out_path);
    } catch (const rs::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const rs::capacity_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const rs::internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const rs::condition_not_met& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInput;
}
