#include "graphyps.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "graphyps/divergence.hpp"
#include "graphyps/families.hpp"
#include "graphyps/identities.hpp"
#include "graphyps/json_io.hpp"
#include "graphyps/period.hpp"
#include "graphyps/pointcount.hpp"
#include "graphyps/polyalg.hpp"

using nlohmann::json;
namespace gy = graphyps;

struct gy_graph {
    gy::Graph g;
};

namespace {

thread_local std::string t_last_error;

gy_status status_of(gy::Error::Kind k) {
    switch (k) {
        case gy::Error::Kind::Domain: return GY_ERR_DOMAIN;
        case gy::Error::Kind::Usage: return GY_ERR_USAGE;
        case gy::Error::Kind::Parse: return GY_ERR_PARSE;
        case gy::Error::Kind::Bound: return GY_ERR_BOUND;
        case gy::Error::Kind::Overflow: return GY_ERR_OVERFLOW;
    }
    return GY_ERR_INTERNAL;
}

template <typename F>
gy_status guard(F&& f) {
    try {
        f();
        return GY_OK;
    } catch (const gy::Error& e) {
        t_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return GY_ERR_NOMEM;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GY_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// family label by isomorphism against the named graphs with the same size
std::string family_label(const gy::Graph& g) {
    int n = gy::betti(g);
    if (g.edge_count() != 2 * n) return "unknown";
    if (n >= 3 && gy::is_isomorphic(g, gy::wheel(n))) return "WS" + std::to_string(n);
    if (n >= 5 && gy::is_isomorphic(g, gy::zigzag(n))) return "ZZ" + std::to_string(n);
    if (n == 5 && gy::is_isomorphic(g, gy::xx5())) return "XX5";
    if (n == 5 && gy::is_isomorphic(g, gy::st5())) return "ST5";
    return "unknown";
}

} // namespace

extern "C" {

const char* gy_last_error(void) { return t_last_error.c_str(); }

void gy_string_free(char* s) { ::operator delete(s); }

void gy_graph_free(gy_graph* g) { delete g; }

gy_status gy_graph_from_json(const char* text, gy_graph** out) {
    return guard([&] {
        if (!text || !out) gy::fail(gy::Error::Kind::Usage, "null argument");
        *out = new gy_graph{gy::graph_from_json(text)};
    });
}

gy_status gy_graph_to_json(const gy_graph* g, char** out_json) {
    return guard([&] {
        if (!g || !out_json) gy::fail(gy::Error::Kind::Usage, "null argument");
        *out_json = dup_string(gy::graph_to_json(g->g));
    });
}

gy_status gy_graph_family(const char* name, const int* params, size_t nparams, gy_graph** out) {
    return guard([&] {
        if (!name || !out || (nparams > 0 && !params))
            gy::fail(gy::Error::Kind::Usage, "null argument");
        std::string n(name);
        gy::Graph g;
        auto need = [&](size_t k) {
            if (nparams != k)
                gy::fail(gy::Error::Kind::Usage, "family '" + n + "' takes " + std::to_string(k) +
                                                     " parameter(s)");
        };
        if (n == "ws" || n == "wheel") {
            need(1);
            g = gy::wheel(params[0]);
        } else if (n == "zz" || n == "zigzag") {
            need(1);
            g = gy::zigzag(params[0]);
        } else if (n == "gzz") {
            if (nparams == 0) gy::fail(gy::Error::Kind::Usage, "gzz needs at least one block size");
            g = gy::gzz(std::vector<int>(params, params + nparams));
        } else if (n == "xx5") {
            need(0);
            g = gy::xx5();
        } else if (n == "st5") {
            need(0);
            g = gy::st5();
        } else {
            gy::fail(gy::Error::Kind::Usage, "unknown family '" + n + "'");
        }
        *out = new gy_graph{std::move(g)};
    });
}

int gy_graph_vertices(const gy_graph* g) { return g ? g->g.vertex_count : -1; }
int gy_graph_edges(const gy_graph* g) { return g ? g->g.edge_count() : -1; }

gy_status gy_betti(const gy_graph* g, int* out) {
    return guard([&] {
        if (!g || !out) gy::fail(gy::Error::Kind::Usage, "null argument");
        *out = gy::betti(g->g);
    });
}

gy_status gy_psi_json(const gy_graph* g, int use_tree_sum, int paper_coords, char** out_json) {
    return guard([&] {
        if (!g || !out_json) gy::fail(gy::Error::Kind::Usage, "null argument");
        if (paper_coords) {
            auto renamed = gy::renamed_graph_matrix(g->g, gy::short_cycle_basis(g->g));
            gy::MPoly p = gy::det(renamed.matrix);
            *out_json = dup_string(gy::poly_to_json(p, renamed.var_names));
            return;
        }
        gy::MPoly p = use_tree_sum ? gy::psi_trees(g->g) : gy::psi_det(g->g);
        *out_json = dup_string(gy::poly_to_json(p));
    });
}

gy_status gy_pld_json(const gy_graph* g, char** out_json) {
    return guard([&] {
        if (!g || !out_json) gy::fail(gy::Error::Kind::Usage, "null argument");
        gy::PldResult r = gy::is_pld(g->g);
        json j;
        j["pld"] = r.pld;
        j["witness"] = r.witness ? json::parse(gy::graph_to_json(*r.witness)) : json(nullptr);
        *out_json = dup_string(j.dump());
    });
}

gy_status gy_classify_json(int loops, int experimental, int threads, char** out_json) {
    return guard([&] {
        if (!out_json) gy::fail(gy::Error::Kind::Usage, "null argument");
        auto classes = gy::classify_pld(loops, experimental != 0, threads);
        json arr = json::array();
        for (const auto& g : classes) {
            json item;
            item["canonical_key"] = gy::canonical_key_hex(g);
            item["family"] = family_label(g);
            item["graph"] = json::parse(gy::graph_to_json(g));
            arr.push_back(std::move(item));
        }
        *out_json = dup_string(arr.dump());
    });
}

gy_status gy_glue(const gy_graph* a, int edge_a, const gy_graph* b, int edge_b, int cross,
                  gy_graph** out, int* out_simple) {
    return guard([&] {
        if (!a || !b || !out) gy::fail(gy::Error::Kind::Usage, "null argument");
        gy::GlueResult r = gy::glue(a->g, edge_a, b->g, edge_b, cross != 0);
        if (out_simple) *out_simple = r.simple ? 1 : 0;
        *out = new gy_graph{std::move(r.graph)};
    });
}

gy_status gy_count_json(const gy_graph* g, const uint32_t* primes, size_t nprimes, int fit,
                        uint32_t holdout, int threads, int force, int with_timing,
                        char** out_json) {
    return guard([&] {
        if (!g || !out_json || (nprimes > 0 && !primes))
            gy::fail(gy::Error::Kind::Usage, "null argument");
        if (nprimes == 0) gy::fail(gy::Error::Kind::Usage, "at least one prime required");
        unsigned long long budget = force ? 1'000'000'000'000'000'000ULL : 10'000'000'000ULL;
        std::vector<gy::PointCountRecord> records;
        json rec_arr = json::array();
        for (size_t i = 0; i < nprimes; ++i) {
            records.push_back(gy::count_projective(g->g, primes[i], threads, budget));
            rec_arr.push_back(json::parse(gy::record_to_json(records.back(), with_timing != 0)));
        }
        json j;
        j["records"] = std::move(rec_arr);
        if (fit) {
            int degree = g->g.edge_count() - 2;
            gy::CountFit cf = gy::fit_count_polynomial(records, degree);
            json fj;
            fj["degree"] = cf.degree;
            json coeffs = json::array();
            for (const auto& c : cf.coefficients) coeffs.push_back(c.str());
            fj["coefficients"] = std::move(coeffs);
            fj["integral"] = cf.integral;
            if (holdout != 0) {
                gy::PointCountRecord h = gy::count_projective(g->g, holdout, threads, budget);
                json hj;
                hj["q"] = holdout;
                hj["counted"] = h.projective_count;
                hj["match"] = cf.predicts(holdout, h.projective_count);
                fj["holdout"] = std::move(hj);
            }
            j["fit"] = std::move(fj);
        }
        *out_json = dup_string(j.dump());
    });
}

gy_status gy_period_json(const gy_graph* g, unsigned long long samples, uint64_t seed,
                         int chart, int threads, char** out_json) {
    if (!g || !out_json) {
        t_last_error = "null argument";
        return GY_ERR_USAGE;
    }
    try {
        gy::PeriodEstimate est = gy::estimate_period(g->g, samples, seed, chart, threads);
        *out_json = dup_string(gy::estimate_to_json(est));
        return GY_OK;
    } catch (const gy::ConvergenceRefused& e) {
        t_last_error = e.what();
        json err;
        err["kind"] = "ConvergenceRefused";
        err["witness"] = e.witness() ? json::parse(gy::graph_to_json(*e.witness())) : json(nullptr);
        json j;
        j["error"] = std::move(err);
        *out_json = dup_string(j.dump());
        return GY_ERR_DOMAIN;
    } catch (const gy::Error& e) {
        t_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return GY_ERR_INTERNAL;
    }
}

gy_status gy_identities_selftest_json(int min_size, int max_size, int trials, uint64_t seed,
                                      char** out_json) {
    return guard([&] {
        if (!out_json) gy::fail(gy::Error::Kind::Usage, "null argument");
        auto lines = gy::identities_selftest(min_size, max_size, trials, seed);
        json checks = json::array();
        bool all = true;
        for (const auto& l : lines) {
            json c;
            c["cases"] = l.cases;
            c["name"] = l.name;
            c["pass"] = l.pass;
            all = all && l.pass;
            checks.push_back(std::move(c));
        }
        json j;
        j["checks"] = std::move(checks);
        j["pass"] = all;
        *out_json = dup_string(j.dump());
    });
}

} // extern "C"
