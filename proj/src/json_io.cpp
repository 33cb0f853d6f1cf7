#include "relaysched/json_io.hpp"

#include <fstream>
#include <sstream>

#include "relaysched/errors.hpp"

namespace relaysched {

using nlohmann::json;

namespace {

json require(const json& doc, const char* field) {
    if (!doc.is_object() || !doc.contains(field))
        throw input_error(std::string("missing field: ") + field);
    return doc.at(field);
}

int require_int(const json& doc, const char* field) {
    const json v = require(doc, field);
    if (!v.is_number_integer())
        throw input_error(std::string(field) + ": expected an integer");
    return v.get<int>();
}

std::vector<int> require_int_array(const json& doc, const char* field) {
    const json v = require(doc, field);
    if (!v.is_array()) throw input_error(std::string(field) + ": expected an array");
    std::vector<int> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer())
            throw input_error(std::string(field) + "[" + std::to_string(i) +
                              "]: expected an integer");
        out.push_back(v[i].get<int>());
    }
    return out;
}

json fraction_map_to_json(const std::map<std::uint32_t, Rat>& m) {
    json out = json::object();
    for (const auto& [mask, v] : m) out[std::to_string(mask)] = fraction_string(v);
    return out;
}

std::map<std::uint32_t, Rat> fraction_map_from_json(const json& doc) {
    std::map<std::uint32_t, Rat> out;
    for (const auto& [key, value] : doc.items()) {
        std::uint32_t mask = 0;
        try {
            mask = static_cast<std::uint32_t>(std::stoul(key));
        } catch (const std::exception&) {
            throw input_error("bad state mask key '" + key + "'");
        }
        if (!value.is_string()) throw input_error("state " + key + ": expected a fraction string");
        out[mask] = parse_fraction(value.get<std::string>());
    }
    return out;
}

} // namespace

Network network_from_json(const json& doc) {
    const int n = require_int(doc, "n");
    auto src = require_int_array(doc, "source_to_relay");
    auto dst = require_int_array(doc, "relay_to_dest");
    const json rel = require(doc, "relay_to_relay");
    if (!rel.is_array()) throw input_error("relay_to_relay: expected an array of arrays");
    std::vector<std::vector<int>> relay;
    relay.reserve(rel.size());
    for (std::size_t i = 0; i < rel.size(); ++i) {
        if (!rel[i].is_array())
            throw input_error("relay_to_relay[" + std::to_string(i) + "]: expected an array");
        std::vector<int> row;
        for (std::size_t j = 0; j < rel[i].size(); ++j) {
            if (!rel[i][j].is_number_integer())
                throw input_error("relay_to_relay[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "]: expected an integer");
            row.push_back(rel[i][j].get<int>());
        }
        relay.push_back(std::move(row));
    }
    return Network::make(n, std::move(src), std::move(dst), std::move(relay));
}

Network parse_network(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    return network_from_json(doc);
}

Network parse_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

json network_to_json(const Network& net) {
    return json{{"n", net.n},
                {"source_to_relay", net.cap_from_source},
                {"relay_to_dest", net.cap_to_dest},
                {"relay_to_relay", net.cap_relay}};
}

std::string serialize_network(const Network& net) {
    return network_to_json(net).dump(2) + "\n";
}

json schedule_to_json(const Schedule& sched) {
    return json{{"t", fraction_string(sched.t)}, {"lambda", fraction_map_to_json(sched.lambdas)}};
}

Schedule schedule_from_json(const json& doc) {
    Schedule s;
    s.t = parse_fraction(require(doc, "t").get<std::string>());
    s.lambdas = fraction_map_from_json(require(doc, "lambda"));
    return s;
}

json report_to_json(const OptimalityReport& report) {
    const CutMatrix& pm = report.pmatrix;
    json out;
    out["verdict"] = verdict_name(report.verdict);
    out["receive_mode"] = report.receive_mode;
    out["det"] = pm.det.get_str();
    out["det_nonzero"] = report.det_nonzero;
    out["ratio_sign_ok"] = report.ratio_sign_ok;
    json minors = json::array();
    for (const auto& m : pm.minors) minors.push_back(m.get_str());
    out["minors"] = minors;
    out["p_matrix"] = pm.entries;
    json perm = json::array();
    for (int p : report.permutation) perm.push_back(p + 1);
    out["permutation"] = perm;
    out["schedule"] = report.schedule ? schedule_to_json(*report.schedule) : json();
    if (report.dual) {
        json mu = json::array();
        for (const auto& v : report.dual->mu) mu.push_back(fraction_string(v));
        out["dual"] = json{{"mu_p", fraction_string(report.dual->mu_p)},
                           {"mu", mu},
                           {"sigma", fraction_map_to_json(report.dual->sigma)},
                           {"sigma_complete", report.dual->sigma_complete}};
    } else {
        out["dual"] = json();
    }
    if (report.oracle_check) {
        const auto& oc = *report.oracle_check;
        const char* status = oc.status == OracleCheck::Status::Match        ? "match"
                             : oc.status == OracleCheck::Status::Mismatch   ? "mismatch"
                                                                            : "unavailable";
        out["oracle_check"] = json{{"status", status},
                                   {"schedule_value", fraction_string(oc.schedule_value)},
                                   {"oracle_value", fraction_string(oc.oracle_value)}};
    } else {
        out["oracle_check"] = json();
    }
    return out;
}

OptimalityReport report_from_json(const json& doc) try {
    OptimalityReport rep;
    const std::string verdict = require(doc, "verdict").get<std::string>();
    if (verdict == "hold")
        rep.verdict = Verdict::ConditionsHold;
    else if (verdict == "fail")
        rep.verdict = Verdict::ConditionsFail;
    else if (verdict == "inconclusive")
        rep.verdict = Verdict::Inconclusive;
    else
        throw input_error("verdict: unknown value '" + verdict + "'");
    rep.receive_mode = require(doc, "receive_mode").get<bool>();
    rep.det_nonzero = require(doc, "det_nonzero").get<bool>();
    rep.ratio_sign_ok = require(doc, "ratio_sign_ok").get<bool>();

    CutMatrix& pm = rep.pmatrix;
    pm.entries = require(doc, "p_matrix").get<std::vector<std::vector<long>>>();
    pm.n = static_cast<int>(pm.entries.size()) - 2;
    pm.det = Int(require(doc, "det").get<std::string>());
    for (const auto& m : require(doc, "minors")) pm.minors.emplace_back(m.get<std::string>());

    for (const auto& p : require(doc, "permutation"))
        rep.permutation.push_back(p.get<int>() - 1);

    if (const json s = require(doc, "schedule"); !s.is_null()) rep.schedule = schedule_from_json(s);
    if (const json d = require(doc, "dual"); !d.is_null()) {
        DualCertificate dual;
        dual.mu_p = parse_fraction(require(d, "mu_p").get<std::string>());
        for (const auto& v : require(d, "mu")) dual.mu.push_back(parse_fraction(v.get<std::string>()));
        dual.sigma = fraction_map_from_json(require(d, "sigma"));
        dual.sigma_complete = require(d, "sigma_complete").get<bool>();
        rep.dual = std::move(dual);
    }
    if (const json oc = require(doc, "oracle_check"); !oc.is_null()) {
        OracleCheck check;
        const std::string status = require(oc, "status").get<std::string>();
        check.status = status == "match"      ? OracleCheck::Status::Match
                       : status == "mismatch" ? OracleCheck::Status::Mismatch
                                              : OracleCheck::Status::Unavailable;
        check.schedule_value = parse_fraction(require(oc, "schedule_value").get<std::string>());
        check.oracle_value = parse_fraction(require(oc, "oracle_value").get<std::string>());
        rep.oracle_check = check;
    }
    return rep;
} catch (const json::exception& e) {
    throw input_error(std::string("malformed report: ") + e.what());
}

json lp_solution_to_json(const LpSolution& sol) {
    const char* status = sol.status == LpStatus::Optimal      ? "optimal"
                         : sol.status == LpStatus::Infeasible ? "infeasible"
                                                              : "unbounded";
    return json{{"status", status},
                {"value", fraction_string(sol.value)},
                {"schedule", fraction_map_to_json(sol.schedule)},
                {"tight_cuts", sol.tight_cuts}};
}

LpSolution lp_solution_from_json(const json& doc) try {
    LpSolution sol;
    const std::string status = require(doc, "status").get<std::string>();
    sol.status = status == "optimal"      ? LpStatus::Optimal
                 : status == "infeasible" ? LpStatus::Infeasible
                                          : LpStatus::Unbounded;
    sol.value = parse_fraction(require(doc, "value").get<std::string>());
    sol.schedule = fraction_map_from_json(require(doc, "schedule"));
    for (const auto& c : require(doc, "tight_cuts"))
        sol.tight_cuts.push_back(c.get<std::uint32_t>());
    return sol;
} catch (const json::exception& e) {
    throw input_error(std::string("malformed solution: ") + e.what());
}

} // namespace relaysched
