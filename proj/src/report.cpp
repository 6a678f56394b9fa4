#include "specex/report.hpp"

#include <sstream>

namespace specex {

namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Vacuous: return "vacuous";
    }
    return "unknown";
}

Json to_json(const SpectralResult& result) {
    Json j;
    j["lambda"] = result.lambda;
    j["residual"] = result.residual;
    j["iterations"] = result.iterations;
    j["connected"] = result.connected;
    j["perron"] = result.perron;
    Json comps = Json::array();
    for (const auto& comp : result.components) {
        Json c;
        c["vertices"] = comp.vertices;
        c["lambda"] = comp.lambda;
        c["residual"] = comp.residual;
        c["iterations"] = comp.iterations;
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j;
}

Json to_json(const ExtremalReport& report) {
    Json j;
    j["n"] = report.n;
    j["alpha"] = report.alpha;
    j["k"] = report.k;
    j["t"] = report.t;
    j["objective"] = report.objective == Objective::Min ? "min" : "max";
    j["family"] = report.family == Family::G ? "g" : "t";
    j["graphs_tested"] = report.graphs_tested;
    j["vacuous"] = report.vacuous;
    j["optimum_lambda"] = report.optimum_lambda;
    j["attainers"] = report.attainers;
    j["unique"] = report.unique;
    j["predicted_name"] = report.predicted_name;
    j["predicted_graph6"] = report.predicted_graph6;
    j["matches_prediction"] = report.matches_prediction;
    if (report.witness_counterexample)
        j["witness_counterexample"] = *report.witness_counterexample;
    else
        j["witness_counterexample"] = nullptr;
    j["cospectral_tie"] = report.cospectral_tie;
    j["outside_guaranteed_regime"] = report.outside_guaranteed_regime;
    j["note"] = report.note;
    return j;
}

Json to_json(const CheckReport& report) {
    Json j;
    j["check"] = report.name;
    Json params = Json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    j["params"] = std::move(params);
    j["graphs_tested"] = report.graphs_tested;
    Json violations = Json::array();
    for (const auto& violation : report.violations) {
        Json v;
        v["graph6"] = violation.graph6;
        v["details"] = violation.details;
        violations.push_back(std::move(v));
    }
    j["violations"] = std::move(violations);
    j["witnesses"] = report.witnesses;
    j["verdict"] = verdict_name(report.verdict);
    j["note"] = report.note;
    return j;
}

Json to_json(const WalkRatioReport& report) {
    Json j;
    j["vi"] = report.vi;
    j["vj"] = report.vj;
    j["s_max"] = report.s_max;
    Json trace = Json::array();
    for (const auto& point : report.trace)
        trace.push_back({point.s, point.walks_i.str(), point.walks_j.str()});
    j["trace"] = std::move(trace);
    j["final_ratio"] = report.final_ratio;
    j["perron_i"] = report.perron_i;
    j["perron_j"] = report.perron_j;
    j["perron_ratio_sq"] = report.perron_ratio_sq;
    j["convergence_gap"] = report.convergence_gap;
    j["direction_matches"] = report.direction_matches;
    return j;
}

std::string to_csv(const ExtremalReport& report) {
    std::ostringstream out;
    out << "n,alpha,k,t,objective,family,graphs_tested,optimum_lambda,attainers,unique,"
           "matches_prediction,predicted_name,outside_guaranteed_regime\n";
    std::string attainers;
    for (const auto& a : report.attainers) {
        if (!attainers.empty()) attainers += ';';
        attainers += a;
    }
    out << report.n << ',' << report.alpha << ',' << report.k << ',' << report.t << ','
        << (report.objective == Objective::Min ? "min" : "max") << ','
        << (report.family == Family::G ? "g" : "t") << ',' << report.graphs_tested << ',';
    out.precision(12);
    out << report.optimum_lambda << ',' << csv_escape(attainers) << ','
        << (report.unique ? "true" : "false") << ','
        << (report.matches_prediction ? "true" : "false") << ',' << report.predicted_name << ','
        << (report.outside_guaranteed_regime ? "true" : "false") << '\n';
    return out.str();
}

std::string check_csv_header() { return "check,graphs_tested,violations,verdict,witnesses\n"; }

std::string to_csv_row(const CheckReport& report) {
    std::ostringstream out;
    std::string witnesses;
    for (const auto& w : report.witnesses) {
        if (!witnesses.empty()) witnesses += ';';
        witnesses += w;
    }
    out << report.name << ',' << report.graphs_tested << ',' << report.violations.size() << ','
        << verdict_name(report.verdict) << ',' << csv_escape(witnesses) << '\n';
    return out.str();
}

std::string to_csv(const CheckReport& report) { return check_csv_header() + to_csv_row(report); }

}  // namespace specex
