#include "crithg/io.hpp"

#include "crithg/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace crithg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json hypergraph_json(const Hypergraph& h) {
    ordered_json j;
    j["n"] = h.n();
    if (h.uniformity())
        j["r"] = *h.uniformity();
    else
        j["r"] = nullptr;
    j["edges"] = ordered_json::array();
    for (const Edge& e : h.edges()) j["edges"].push_back(e);
    return j;
}

} // namespace

std::string to_json_text(const Hypergraph& h) { return hypergraph_json(h).dump(); }

Hypergraph from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("hypergraph JSON needs object keys \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
    std::optional<int> r;
    if (j.contains("r") && !j["r"].is_null()) {
        if (!j["r"].is_number_integer()) throw ParseError("\"r\" must be an integer or null");
        r = j["r"].get<int>();
    }
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<Edge> edges;
    edges.reserve(j["edges"].size());
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& je = j["edges"][i];
        if (!je.is_array()) throw ParseError("edge " + std::to_string(i) + " must be an array");
        Edge e;
        e.reserve(je.size());
        for (const auto& v : je) {
            if (!v.is_number_integer())
                throw ParseError("edge " + std::to_string(i) + " has a non-integer vertex");
            e.push_back(v.get<int>());
        }
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(j["n"].get<int>(), std::move(edges), r);
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string to_plain_text(const Hypergraph& h) {
    std::ostringstream out;
    out << h.n() << ' ' << h.uniformity().value_or(0) << ' ' << h.edge_count() << '\n';
    for (const Edge& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

Hypergraph from_plain_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, r = 0;
    std::size_t m = 0;
    if (!(in >> n >> r >> m)) throw ParseError("plain text header must be \"n r m\"");
    std::string line;
    std::getline(in, line); // rest of header line
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                             std::to_string(i));
        std::istringstream ls(line);
        Edge e;
        int v = 0;
        while (ls >> v) e.push_back(v);
        if (!ls.eof()) throw ParseError("edge " + std::to_string(i) + " has a non-integer vertex");
        edges.push_back(std::move(e));
    }
    try {
        return Hypergraph(n, std::move(edges), r == 0 ? std::nullopt : std::optional<int>(r));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << content;
    if (!out) throw ParseError("write failed for " + path.string());
}

Hypergraph load_hypergraph(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    if (path.extension() == ".json") return from_json_text(text);
    return from_plain_text(text);
}

void save_hypergraph(const Hypergraph& h, const std::filesystem::path& path) {
    if (path.extension() == ".json")
        write_text_file(path, to_json_text(h) + "\n");
    else
        write_text_file(path, to_plain_text(h));
}

std::string to_json_text(const HypergraphStats& s) {
    ordered_json j;
    j["n"] = s.n;
    if (s.r)
        j["r"] = *s.r;
    else
        j["r"] = nullptr;
    j["edge_count"] = s.edge_count;
    j["isolated_vertices"] = s.isolated_vertex_count;
    j["intersecting"] = s.intersecting;
    if (s.tau)
        j["tau"] = *s.tau;
    else
        j["tau"] = nullptr;
    return j.dump();
}

std::string to_json_text(const CoverCertificate& c) {
    ordered_json j;
    j["tau"] = c.tau;
    j["cover"] = c.cover;
    j["optimal"] = c.optimal;
    j["lower_bound"] = c.lower_bound;
    j["budget_exhausted"] = c.budget_exhausted;
    j["nodes_explored"] = c.nodes_explored;
    return j.dump();
}

std::string to_json_text(const CriticalityReport& r) {
    ordered_json j;
    j["critical"] = r.critical;
    j["intersecting"] = r.intersecting;
    j["decided"] = r.decided;
    j["detail"] = r.detail;
    j["cover"] = ordered_json::parse(to_json_text(r.cover));
    return j.dump();
}

std::string to_json_text(const BaseChoice& b) {
    ordered_json j;
    j["kind"] = to_string(b.kind);
    j["q"] = b.q;
    j["augment_steps"] = b.augment_steps;
    j["uniformity"] = b.uniformity;
    j["vertices"] = b.vertices;
    j["predicted_edges"] = b.predicted_edges.str();
    return j.dump();
}

std::string to_json_text(const ConstructionPlan& p) {
    ordered_json j;
    j["case"] = to_string(p.plan_case);
    j["n"] = p.n;
    j["r"] = p.r;
    j["r1"] = p.r1;
    j["r2"] = p.r2;
    j["t"] = p.t;
    j["base1"] = p.base1 ? ordered_json::parse(to_json_text(*p.base1)) : ordered_json(nullptr);
    j["base2"] = p.base2 ? ordered_json::parse(to_json_text(*p.base2)) : ordered_json(nullptr);
    j["vertices_before_padding"] = p.vertices_before_padding;
    j["predicted_edges"] = p.predicted_edges.str();
    j["anchor_r2_small"] = p.anchor_r2_small;
    j["anchor_r1_large"] = p.anchor_r1_large;
    return j.dump();
}

std::string to_json_text(const BoundsReport& b) {
    ordered_json j;
    j["n"] = b.n;
    j["r"] = b.r;
    j["de_caen"] = to_string(b.de_caen);
    j["de_caen_ceil"] = b.de_caen_ceil.str();
    j["prop_lower"] = b.prop_lower ? ordered_json(to_string(*b.prop_lower)) : ordered_json(nullptr);
    j["greedy_upper_U"] = b.greedy_upper_U.str();
    j["sidorenko_U"] = b.sidorenko_U ? ordered_json(b.sidorenko_U->str()) : ordered_json(nullptr);
    j["trivial_upper_complete"] =
        b.trivial_upper_complete ? ordered_json(b.trivial_upper_complete->str()) : ordered_json(nullptr);
    return j.dump();
}

std::string to_json_text(const OracleResult& o) {
    ordered_json j;
    j["quantity"] = to_string(o.quantity);
    j["n"] = o.n;
    j["r"] = o.r;
    j["value"] = o.value ? ordered_json(*o.value) : ordered_json(nullptr);
    j["exhaustive"] = o.exhaustive;
    j["lower_bound"] = o.lower_bound;
    j["upper_bound"] = o.upper_bound;
    j["nodes"] = o.nodes;
    j["witness"] = o.witness ? ordered_json::parse(to_json_text(*o.witness)) : ordered_json(nullptr);
    return j.dump();
}

std::string greedy_log_json(const GreedyCoverResult& g) {
    ordered_json rounds = ordered_json::array();
    for (const GreedyRound& r : g.rounds) {
        ordered_json jr;
        jr["edge"] = r.edge;
        jr["gain"] = r.gain;
        jr["uncovered_remaining"] = r.uncovered_remaining;
        rounds.push_back(std::move(jr));
    }
    ordered_json j;
    j["n"] = g.hypergraph.n();
    j["r"] = g.hypergraph.uniformity() ? ordered_json(*g.hypergraph.uniformity()) : ordered_json(nullptr);
    j["edges_chosen"] = g.hypergraph.edge_count();
    j["rounds"] = std::move(rounds);
    return j.dump();
}

} // namespace crithg
