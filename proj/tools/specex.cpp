#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <algorithm>

#include "specex/canonical.hpp"
#include "specex/charpoly.hpp"
#include "specex/checks.hpp"
#include "specex/combinat.hpp"
#include "specex/enumerate.hpp"
#include "specex/extremal.hpp"
#include "specex/graph6.hpp"
#include "specex/report.hpp"
#include "specex/spectral.hpp"
#include "specex/walks.hpp"

namespace {

using namespace specex;

struct RunConfig {
    std::string command;
    int n = 0;
    int alpha = 0;
    int k_min = 2, k_max = 8;
    std::string family = "g";
    std::string objective = "min";
    std::string what = "path";
    std::string check;
    std::string format = "json";
    std::string output;
    std::string input;
    int max_n = 9;
    int jobs = 0;
    bool serial = false;
    bool connected = false;
    double residual_tol = 1e-10;
    long max_iterations = 1'000'000;
    int s_max = 200;
    bool enumerate_family = false;

    void validate() const {
        if (residual_tol <= 0.0 || residual_tol >= 1e-3)
            throw CLI::ValidationError("--residual-tol must lie in (0, 1e-3)");
        if (max_iterations <= 0) throw CLI::ValidationError("--max-iterations must be positive");
        if (max_n <= 0) throw CLI::ValidationError("--max-n must be positive");
        if (jobs < 0) throw CLI::ValidationError("--jobs must be nonnegative");
    }

    EnumerationOptions enum_options() const {
        EnumerationOptions opt;
        opt.max_n = max_n;
        opt.scan.parallel = !serial;
        opt.scan.threads = jobs;
        return opt;
    }
};

Json config_json(const RunConfig& cfg) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = cfg.command;
    Json c = Json::object();
    if (cfg.n > 0) c["n"] = cfg.n;
    if (cfg.alpha > 0) c["alpha"] = cfg.alpha;
    if (cfg.command == "search") {
        c["objective"] = cfg.objective;
        c["family"] = cfg.family;
    }
    if (cfg.command == "enumerate") {
        c["family"] = cfg.family;
        c["connected"] = cfg.connected;
    }
    if (cfg.command == "verify") {
        c["check"] = cfg.check;
        c["k_range"] = std::to_string(cfg.k_min) + ":" + std::to_string(cfg.k_max);
    }
    c["max_n"] = cfg.max_n;
    c["jobs"] = cfg.jobs;
    c["serial"] = cfg.serial;
    c["residual_tol"] = cfg.residual_tol;
    c["max_iterations"] = cfg.max_iterations;
    j["config"] = std::move(c);
    return j;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
    out << text;
}

int run_construct(const RunConfig& cfg) {
    Graph g = [&] {
        if (cfg.what == "path") return clique_path(cfg.n, cfg.alpha);
        if (cfg.what == "star") return clique_star(cfg.n, cfg.alpha);
        if (cfg.what == "turan") return turan_union(cfg.n, cfg.alpha);
        if (cfg.what == "complete") return complete_graph(cfg.n);
        throw CLI::ValidationError("unknown construction: " + cfg.what);
    }();
    write_output(cfg, graph6_encode(canonical_graph(g)) + "\n");
    return 0;
}

int run_spectral(const RunConfig& cfg) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!cfg.input.empty()) {
        file.open(cfg.input);
        if (!file) throw std::runtime_error("cannot open input file: " + cfg.input);
        in = &file;
    }
    PowerIterationOptions popt{cfg.residual_tol, cfg.max_iterations};
    Json lines = Json::array();
    std::string line;
    while (std::getline(*in, line)) {
        if (line.empty()) continue;
        const Graph g = graph6_decode(line);
        const SpectralResult spec = spectral_radius(g, popt);
        Json j;
        j["graph6"] = line;
        j["n"] = g.order();
        j["m"] = g.size();
        j["spectral"] = to_json(spec);
        if (g.order() <= 16) j["char_poly"] = char_poly_exact(g).to_string();
        j["independence_number"] = independence_number(g);
        lines.push_back(std::move(j));
    }
    Json out = config_json(cfg);
    out["results"] = std::move(lines);
    write_output(cfg, out.dump(2) + "\n");
    return 0;
}

int run_enumerate(const RunConfig& cfg) {
    const EnumerationOptions opt = cfg.enum_options();
    std::vector<Graph> graphs;
    if (cfg.family == "t") {
        graphs = family_T(cfg.n, cfg.alpha);
    } else if (cfg.family == "g") {
        if (cfg.alpha > 0) {
            graphs = family_G(cfg.n, cfg.alpha, opt);
        } else {
            graphs = connected_graphs(cfg.n, opt);
        }
    } else {  // every graph, optionally restricted
        graphs = cfg.connected ? connected_graphs(cfg.n, opt) : all_graphs(cfg.n, opt);
        if (cfg.alpha > 0)
            std::erase_if(graphs,
                          [&](const Graph& g) { return independence_number(g) != cfg.alpha; });
    }
    std::ostringstream out;
    for (const Graph& g : graphs) out << graph6_encode(g) << "\n";
    write_output(cfg, out.str());
    return 0;
}

int run_search(const RunConfig& cfg) {
    const ExtremalReport report = search_extremal(
        cfg.n, cfg.alpha, cfg.objective == "max" ? Objective::Max : Objective::Min,
        cfg.family == "t" ? Family::T : Family::G, cfg.enum_options());
    if (cfg.format == "csv") {
        write_output(cfg, to_csv(report));
    } else {
        Json out = config_json(cfg);
        out["report"] = to_json(report);
        write_output(cfg, out.dump(2) + "\n");
    }
    return 0;
}

std::vector<CheckReport> run_checks(const RunConfig& cfg) {
    const EnumerationOptions opt = cfg.enum_options();
    std::vector<CheckReport> reports;
    const std::string& check = cfg.check;

    auto want = [&](const std::string& name) { return check == name || check == "all"; };

    if (want("l1")) {
        if (check == "all") {
            for (auto [n, alpha] : {std::pair{6, 3}, {6, 2}, {7, 3}, {8, 2}, {8, 4}})
                reports.push_back(check_L1(n, alpha, n <= cfg.max_n, opt));
        } else {
            reports.push_back(check_L1(cfg.n, cfg.alpha, cfg.enumerate_family, opt));
        }
    }
    if (want("limit")) {
        if (check == "all") {
            reports.push_back(limit_trend(2, 2, 12));
            reports.push_back(limit_trend(3, 2, 12));
        } else {
            reports.push_back(limit_trend(cfg.alpha, cfg.k_min, cfg.k_max));
        }
    }
    if (want("t4")) reports.push_back(check_T4(check == "all" ? 7 : cfg.max_n, opt));
    if (want("bv")) reports.push_back(check_bv(check == "all" ? 6 : cfg.max_n, {2, 3}, opt));
    if (want("innu")) reports.push_back(check_innu(check == "all" ? 6 : cfg.max_n, {2, 3}, opt));
    if (want("floor")) {
        if (check == "all") {
            for (auto [n, alpha] : {std::pair{4, 2}, {6, 2}, {6, 3}})
                reports.push_back(check_lambda_floor(n, alpha, opt));
        } else {
            reports.push_back(check_lambda_floor(cfg.n, cfg.alpha, opt));
        }
    }
    if (want("z")) {
        if (check == "all") {
            for (auto [n, alpha] : {std::pair{4, 2}, {6, 3}})
                reports.push_back(check_Z(n, alpha, opt));
        } else {
            reports.push_back(check_Z(cfg.n, cfg.alpha, opt));
        }
    }
    if (want("t1")) {
        const Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        reports.push_back(check_T1(paw, cfg.s_max, 1e-6));
        reports.push_back(check_T1(clique_path(6, 2), cfg.s_max, 1e-6));
    }
    for (const char* lemma : {"l2", "l5", "l6"})
        if (want(lemma)) reports.push_back(check_rotation_grid(lemma));

    if (reports.empty()) throw CLI::ValidationError("unknown check name: " + check);
    return reports;
}

int run_verify(const RunConfig& cfg) {
    const std::vector<CheckReport> reports = run_checks(cfg);
    bool violations = false;
    for (const auto& report : reports) violations |= !report.violations.empty();

    if (cfg.format == "csv") {
        std::ostringstream out;
        out << check_csv_header();
        for (const auto& report : reports) out << to_csv_row(report);
        write_output(cfg, out.str());
    } else {
        Json out = config_json(cfg);
        Json list = Json::array();
        for (const auto& report : reports) list.push_back(to_json(report));
        out["reports"] = std::move(list);
        write_output(cfg, out.dump(2) + "\n");
    }
    return violations ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for extremal spectral graph families"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    if (const char* env = std::getenv("SPECEX_MAX_N")) cfg.max_n = std::atoi(env);

    app.add_option("--output,-o", cfg.output, "write the report to a file instead of stdout");
    app.add_option("--format,-f", cfg.format, "output format: json|csv|graph6")
        ->check(CLI::IsMember({"json", "csv", "graph6"}));
    app.add_option("--jobs,-j", cfg.jobs, "parallelism degree (0 = all cores)");
    app.add_flag("--serial", cfg.serial, "run the serial reference scan");
    app.add_option("--max-n", cfg.max_n, "enumeration cap (env SPECEX_MAX_N)");
    app.add_option("--residual-tol", cfg.residual_tol, "power iteration residual tolerance");
    app.add_option("--max-iterations", cfg.max_iterations, "power iteration cap");

    auto* construct = app.add_subcommand("construct", "emit a named family graph as graph6");
    construct->add_option("--what", cfg.what, "path|star|turan|complete")->required();
    construct->add_option("--n", cfg.n, "vertex count")->required();
    construct->add_option("--alpha", cfg.alpha, "independence number / tree order");

    auto* spectral = app.add_subcommand("spectral", "spectral radius, Perron vector and exact "
                                                    "characteristic polynomial for graph6 input");
    spectral->add_option("--input,-i", cfg.input, "graph6 file (default: stdin)");

    auto* enumerate = app.add_subcommand("enumerate", "stream canonical graphs as graph6");
    enumerate->add_option("--n", cfg.n, "vertex count")->required();
    enumerate->add_option("--alpha", cfg.alpha, "independence number filter");
    enumerate->add_flag("--connected", cfg.connected, "connected graphs only");
    enumerate->add_option("--family", cfg.family, "g|t|all")
        ->check(CLI::IsMember({"g", "t", "all"}));

    auto* search = app.add_subcommand("search", "extremal spectral radius over a family");
    search->add_option("--n", cfg.n, "vertex count")->required();
    search->add_option("--alpha", cfg.alpha, "independence number")->required();
    search->add_option("--objective", cfg.objective, "min|max")
        ->check(CLI::IsMember({"min", "max"}));
    search->add_option("--family", cfg.family, "g|t")->check(CLI::IsMember({"g", "t"}));

    auto* verify = app.add_subcommand("verify", "run a named check battery");
    verify->add_option("check", cfg.check, "l1|limit|t4|bv|innu|floor|z|t1|l2|l5|l6|all")
        ->required();
    verify->add_option("--n", cfg.n, "vertex count");
    verify->add_option("--alpha", cfg.alpha, "independence number");
    verify->add_option("--k-range", [&cfg](const std::vector<std::string>& values) {
        const std::string& v = values.front();
        const auto colon = v.find(':');
        if (colon == std::string::npos) return false;
        cfg.k_min = std::atoi(v.substr(0, colon).c_str());
        cfg.k_max = std::atoi(v.substr(colon + 1).c_str());
        return cfg.k_min >= 2 && cfg.k_max >= cfg.k_min;
    }, "clique order range min:max for the limit check");
    verify->add_option("--s-max", cfg.s_max, "walk length horizon for the t1 check");
    verify->add_flag("--enumerate", cfg.enumerate_family, "also confirm the family minimum (l1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        cfg.validate();
        if (construct->parsed()) {
            cfg.command = "construct";
            return run_construct(cfg);
        }
        if (spectral->parsed()) {
            cfg.command = "spectral";
            return run_spectral(cfg);
        }
        if (enumerate->parsed()) {
            cfg.command = "enumerate";
            return run_enumerate(cfg);
        }
        if (search->parsed()) {
            cfg.command = "search";
            return run_search(cfg);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return run_verify(cfg);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
