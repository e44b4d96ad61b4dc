#include "graphyps/json_io.hpp"

#include <json.hpp>

namespace graphyps {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(Error::Kind::Parse, "malformed JSON");
    return j;
}

std::string hex64(uint64_t x) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[x & 15];
        x >>= 4;
    }
    return s;
}

} // namespace

std::string graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [t, h] : g.edges) edges.push_back(json::array({t, h}));
    json j;
    j["edges"] = std::move(edges);
    j["vertices"] = g.vertex_count;
    return j.dump();
}

Graph graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j["vertices"].is_number_integer() || !j["edges"].is_array())
        fail(Error::Kind::Parse, "graph document needs integer \"vertices\" and array \"edges\"");
    int nv = j["vertices"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            fail(Error::Kind::Parse, "each edge must be a [tail, head] integer pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(nv, std::move(edges));
    } catch (const Error& err) {
        fail(Error::Kind::Parse, std::string("invalid graph: ") + err.what());
    }
}

std::string poly_to_json(const MPoly& p) {
    return poly_to_json(p, {});
}

std::string poly_to_json(const MPoly& p, const std::vector<std::string>& var_names) {
    json terms = json::array();
    for (std::size_t i = 0; i < p.nterms(); ++i) {
        json t;
        t["coef"] = p.coef(i);
        json e = json::array();
        for (unsigned v = 0; v < p.nvars(); ++v) e.push_back(int(p.exps(i)[v]));
        t["exps"] = std::move(e);
        terms.push_back(std::move(t));
    }
    json j;
    j["terms"] = std::move(terms);
    j["vars"] = p.nvars();
    if (!var_names.empty()) j["var_names"] = var_names;
    return j.dump();
}

MPoly poly_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms") ||
        !j["vars"].is_number_integer() || !j["terms"].is_array())
        fail(Error::Kind::Parse, "polynomial document needs \"vars\" and \"terms\"");
    unsigned nvars = j["vars"].get<unsigned>();
    std::vector<std::pair<std::vector<uint8_t>, i64>> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coef") || !t.contains("exps") ||
            !t["exps"].is_array() || t["exps"].size() != nvars)
            fail(Error::Kind::Parse, "each term needs \"coef\" and an \"exps\" list of length vars");
        std::vector<uint8_t> e;
        for (const auto& x : t["exps"]) {
            int xi = x.get<int>();
            if (xi < 0 || xi > 255) fail(Error::Kind::Parse, "exponent out of range");
            e.push_back(uint8_t(xi));
        }
        terms.push_back({std::move(e), t["coef"].get<i64>()});
    }
    return MPoly::from_terms(nvars, std::move(terms));
}

std::string record_to_json(const PointCountRecord& r, bool with_timing) {
    json j;
    j["affine_zeros"] = r.affine_zero_count;
    j["graph"] = hex64(r.graph_fingerprint);
    j["projective_points"] = r.projective_count;
    j["q"] = r.q;
    if (with_timing) j["wall_seconds"] = r.wall_seconds;
    return j.dump();
}

std::string estimate_to_json(const PeriodEstimate& e) {
    json j;
    j["chart"] = e.chart;
    j["graph"] = hex64(e.graph_fingerprint);
    j["mean"] = e.mean;
    j["rejected"] = e.rejected;
    j["samples"] = e.samples;
    j["seed"] = e.seed;
    j["standard_error"] = e.standard_error;
    return j.dump();
}

} // namespace graphyps
