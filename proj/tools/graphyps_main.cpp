// Command-line front end; everything goes through the C API in graphyps.h.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "graphyps.h"

namespace {

int exit_code(gy_status s) {
    switch (s) {
        case GY_OK: return 0;
        case GY_ERR_USAGE:
        case GY_ERR_PARSE: return 2;
        default: return 1;
    }
}

[[noreturn]] void die(gy_status s) {
    std::cerr << "graphyps: " << gy_last_error() << "\n";
    std::exit(exit_code(s));
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::cerr << "graphyps: cannot open '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

gy_graph* load_graph(const std::string& path) {
    gy_graph* g = nullptr;
    gy_status s = gy_graph_from_json(read_text(path).c_str(), &g);
    if (s != GY_OK) die(s);
    return g;
}

void print_and_free(char* json) {
    std::cout << json << "\n";
    gy_string_free(json);
}

int default_threads() {
    if (const char* env = std::getenv("GRAPHYPS_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

std::vector<uint32_t> parse_prime_list(const std::string& csv) {
    std::vector<uint32_t> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(uint32_t(std::stoul(item)));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for graph polynomials, their hypersurfaces, and parametric periods"};
    app.require_subcommand(1);
    int threads = default_threads();

    // family <name> [params...]
    auto* family = app.add_subcommand("family", "construct a named graph family member");
    std::string family_name;
    std::vector<int> family_params;
    family->add_option("name", family_name, "ws|wheel, zz|zigzag, gzz, xx5, st5")->required();
    family->add_option("params", family_params, "integer parameters");

    // betti <graph>
    auto* betti_cmd = app.add_subcommand("betti", "first Betti number of a graph");
    std::string betti_input;
    betti_cmd->add_option("graph", betti_input, "graph JSON file or '-' for stdin")->required();

    // psi <graph> [--trees|--det] [--paper-coords]
    auto* psi = app.add_subcommand("psi", "graph polynomial");
    std::string psi_input;
    bool psi_trees = false, psi_det = false, psi_paper = false;
    psi->add_option("graph", psi_input, "graph JSON file or '-'")->required();
    psi->add_flag("--trees", psi_trees, "spanning-tree route");
    psi->add_flag("--det", psi_det, "determinant route (default)");
    psi->add_flag("--paper-coords", psi_paper, "report in renamed A/B coordinates");

    // pld <graph>
    auto* pld = app.add_subcommand("pld", "primitive log divergence test");
    std::string pld_input;
    pld->add_option("graph", pld_input, "graph JSON file or '-'")->required();

    // classify --loops n
    auto* classify = app.add_subcommand("classify", "classify primitively log divergent graphs");
    int classify_loops = 0;
    bool classify_exp = false;
    classify->add_option("--loops", classify_loops, "loop order (3..5; 6 is experimental)")->required();
    classify->add_flag("--experimental", classify_exp, "allow 6 loops");
    classify->add_option("--threads", threads, "worker threads (default: GRAPHYPS_THREADS or all cores)");

    // glue <g1> <e1> <g2> <e2> [--cross]
    auto* glue_cmd = app.add_subcommand("glue", "glue two graphs along an edge of each");
    std::string glue_g1, glue_g2;
    int glue_e1 = 0, glue_e2 = 0;
    bool glue_cross = false;
    glue_cmd->add_option("graph1", glue_g1)->required();
    glue_cmd->add_option("edge1", glue_e1)->required();
    glue_cmd->add_option("graph2", glue_g2)->required();
    glue_cmd->add_option("edge2", glue_e2)->required();
    glue_cmd->add_flag("--cross", glue_cross, "identify tail with head instead");

    // identities selftest
    auto* identities = app.add_subcommand("identities", "determinant identity checks");
    identities->require_subcommand(1);
    auto* selftest = identities->add_subcommand("selftest", "run the randomized identity suite");
    std::string sizes = "2..6";
    int trials = 100;
    uint64_t id_seed = 1;
    selftest->add_option("--sizes", sizes, "matrix size range a..b")->capture_default_str();
    selftest->add_option("--trials", trials, "matrices per size")->capture_default_str();
    selftest->add_option("--seed", id_seed, "random seed")->capture_default_str();

    // count <graph> --q list [--fit] [--holdout q]
    auto* count = app.add_subcommand("count", "point counts of the graph hypersurface");
    std::string count_input, count_primes;
    bool count_fit = false, count_force = false, count_timings = false;
    uint32_t count_holdout = 0;
    count->add_option("graph", count_input, "graph JSON file or '-'")->required();
    count->add_option("--q", count_primes, "comma-separated primes")->required();
    count->add_flag("--fit", count_fit, "fit the counting polynomial");
    count->add_option("--holdout", count_holdout, "validate the fit at this prime");
    count->add_flag("--force", count_force, "lift the step budget");
    count->add_flag("--timings", count_timings, "include wall times (not byte-stable)");
    count->add_option("--threads", threads, "worker threads (default: GRAPHYPS_THREADS or all cores)");

    // period <graph> --samples N --seed S
    auto* period = app.add_subcommand("period", "Monte Carlo period estimate");
    std::string period_input;
    unsigned long long period_samples = 1000000;
    uint64_t period_seed = 1;
    int period_chart = -1;
    period->add_option("graph", period_input, "graph JSON file or '-'")->required();
    period->add_option("--samples", period_samples, "sample count")->capture_default_str();
    period->add_option("--seed", period_seed, "random seed")->capture_default_str();
    period->add_option("--chart", period_chart, "edge variable set to 1 (default: last)");
    period->add_option("--threads", threads, "worker threads (default: GRAPHYPS_THREADS or all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    if (family->parsed()) {
        gy_graph* g = nullptr;
        gy_status s = gy_graph_family(family_name.c_str(), family_params.data(),
                                      family_params.size(), &g);
        if (s != GY_OK) die(s);
        char* out = nullptr;
        s = gy_graph_to_json(g, &out);
        gy_graph_free(g);
        if (s != GY_OK) die(s);
        print_and_free(out);
    } else if (betti_cmd->parsed()) {
        gy_graph* g = load_graph(betti_input);
        int b = 0;
        gy_status s = gy_betti(g, &b);
        gy_graph_free(g);
        if (s != GY_OK) die(s);
        std::cout << "{\"betti\":" << b << "}\n";
    } else if (psi->parsed()) {
        if (psi_trees && psi_det) {
            std::cerr << "graphyps: --trees and --det are mutually exclusive\n";
            return 2;
        }
        gy_graph* g = load_graph(psi_input);
        char* out = nullptr;
        gy_status s = gy_psi_json(g, psi_trees ? 1 : 0, psi_paper ? 1 : 0, &out);
        gy_graph_free(g);
        if (s != GY_OK) die(s);
        print_and_free(out);
    } else if (pld->parsed()) {
        gy_graph* g = load_graph(pld_input);
        char* out = nullptr;
        gy_status s = gy_pld_json(g, &out);
        gy_graph_free(g);
        if (s != GY_OK) die(s);
        print_and_free(out);
    } else if (classify->parsed()) {
        char* out = nullptr;
        gy_status s = gy_classify_json(classify_loops, classify_exp ? 1 : 0, threads, &out);
        if (s != GY_OK) die(s);
        print_and_free(out);
    } else if (glue_cmd->parsed()) {
        gy_graph* g1 = load_graph(glue_g1);
        gy_graph* g2 = load_graph(glue_g2);
        gy_graph* out_g = nullptr;
        int simple = 0;
        gy_status s = gy_glue(g1, glue_e1, g2, glue_e2, glue_cross ? 1 : 0, &out_g, &simple);
        gy_graph_free(g1);
        gy_graph_free(g2);
        if (s != GY_OK) die(s);
        char* gj = nullptr;
        s = gy_graph_to_json(out_g, &gj);
        gy_graph_free(out_g);
        if (s != GY_OK) die(s);
        std::cout << "{\"graph\":" << gj << ",\"simple\":" << (simple ? "true" : "false") << "}\n";
        gy_string_free(gj);
    } else if (identities->parsed()) {
        int lo = 2, hi = 6;
        auto dots = sizes.find("..");
        if (dots == std::string::npos) {
            lo = hi = std::atoi(sizes.c_str());
        } else {
            lo = std::atoi(sizes.substr(0, dots).c_str());
            hi = std::atoi(sizes.substr(dots + 2).c_str());
        }
        char* out = nullptr;
        gy_status s = gy_identities_selftest_json(lo, hi, trials, id_seed, &out);
        if (s != GY_OK) die(s);
        std::string text(out);
        print_and_free(out);
        if (text.find("\"pass\":false") != std::string::npos) return 1;
    } else if (count->parsed()) {
        auto primes = parse_prime_list(count_primes);
        gy_graph* g = load_graph(count_input);
        char* out = nullptr;
        gy_status s = gy_count_json(g, primes.data(), primes.size(), count_fit ? 1 : 0,
                                    count_holdout, threads, count_force ? 1 : 0,
                                    count_timings ? 1 : 0, &out);
        gy_graph_free(g);
        if (s != GY_OK) die(s);
        print_and_free(out);
    } else if (period->parsed()) {
        gy_graph* g = load_graph(period_input);
        char* out = nullptr;
        gy_status s = gy_period_json(g, period_samples, period_seed, period_chart, threads, &out);
        gy_graph_free(g);
        if (s == GY_ERR_DOMAIN && out) {
            // refused integrals still print their witness document
            std::cerr << "graphyps: " << gy_last_error() << "\n";
            print_and_free(out);
            return 1;
        }
        if (s != GY_OK) die(s);
        print_and_free(out);
    }
    return 0;
}
