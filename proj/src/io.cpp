#include "pm/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace pm {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["vertices"] = g.labels();
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.label_edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

ordered_json simplex_json(const Simplex& s) {
    ordered_json j = ordered_json::array();
    for (const auto& v : s.vertices) j.push_back(v);
    return j;
}

ordered_json chromatic_json(const ChromaticResult& r) {
    if (r.exact()) return r.upper;
    ordered_json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["timed_out"] = r.timed_out;
    return j;
}

}  // namespace

std::string to_canonical_json(const Graph& g) { return graph_json(g).dump(); }

Graph graph_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw input_error("graph JSON needs \"vertices\" and \"edges\" arrays");
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw input_error("graph JSON vertices must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw input_error("graph JSON edges must be pairs of vertex labels");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_graph(std::move(labels), edges);
}

Graph graph_from_edge_list_text(const std::string& text) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() == 1) {
            labels.push_back(tokens[0]);
        } else if (tokens.size() == 2) {
            labels.push_back(tokens[0]);
            labels.push_back(tokens[1]);
            edges.emplace_back(tokens[0], tokens[1]);
        } else {
            throw input_error("edge list line has more than two tokens: " + line);
        }
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return build_graph(std::move(labels), edges);
}

Graph read_graph(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw input_error("empty graph input");
    if (text[first] == '{') return graph_from_json_text(text);
    return graph_from_edge_list_text(text);
}

std::string json_string(const PmCertificate& c) {
    ordered_json j;
    j["dimension"] = c.dimension;
    j["verdict"] = c.accepted ? "accept" : "reject";
    if (c.witness) {
        ordered_json w;
        w["path"] = c.witness->path;
        w["reason"] = std::string(reason_string(c.witness->reason));
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j.dump();
}

std::string json_string(const Coloring& c) {
    ordered_json j;
    j["palette_size"] = c.palette_size;
    ordered_json a = ordered_json::object();
    for (const auto& [v, col] : c.assignment) a[v] = col;
    j["assignment"] = std::move(a);
    return j.dump();
}

std::string json_string(const ChromaticResult& r) { return chromatic_json(r).dump(); }

std::string json_string(const CodualClassification& c) {
    ordered_json j;
    j["class"] = std::string(codual_class_string(c.cls));
    j["dual"] = graph_json(c.dual);
    j["dual_dimension"] = c.dual_dimension ? ordered_json(*c.dual_dimension) : ordered_json(nullptr);
    j["apex"] = c.apex ? ordered_json(*c.apex) : ordered_json(nullptr);
    return j.dump();
}

std::string json_string(const FiskRecord& r) {
    ordered_json j;
    auto odd = ordered_json::array();
    for (const auto& s : r.odd_simplices) odd.push_back(simplex_json(s));
    j["odd_simplices"] = std::move(odd);
    j["subgraph"] = graph_json(r.subgraph);
    return j.dump();
}

std::string json_string(const FiskJoinCheck& c) {
    ordered_json j;
    j["join"] = graph_json(c.joined);
    j["left"] = graph_json(c.left);
    j["right"] = graph_json(c.right);
    j["equal"] = c.equal;
    return j.dump();
}

std::string json_string(const SpherePrediction& p) {
    ordered_json j;
    switch (p.parity) {
        case SphereParity::Even: j["parity"] = "even"; break;
        case SphereParity::Odd: j["parity"] = "odd"; break;
        case SphereParity::Mixed: j["parity"] = "mixed"; break;
    }
    j["dimension"] = p.dimension;
    j["printed"] = p.printed ? ordered_json(*p.printed) : ordered_json(nullptr);
    j["additive"] = p.additive ? ordered_json(*p.additive) : ordered_json(nullptr);
    j["divergent"] = p.divergent;
    return j.dump();
}

std::string json_string(const ProductClosureReport& r) {
    ordered_json j;
    j["left_dimension"] = r.left_dimension;
    j["right_dimension"] = r.right_dimension;
    j["join_rule_dimension"] = r.join_rule_dimension;
    j["certified_dimension"] =
        r.certified_dimension ? ordered_json(*r.certified_dimension) : ordered_json(nullptr);
    j["product_vertices"] = r.product_vertices;
    j["matches_join_rule"] = r.matches_join_rule;
    return j.dump();
}

std::string json_string(const BoundsReport& r) {
    ordered_json j;
    j["dimension"] = r.dimension;
    j["chromatic"] = chromatic_json(r.chromatic);
    auto bounds = ordered_json::array();
    for (const auto& b : r.bounds) {
        ordered_json e;
        e["name"] = b.name;
        if (b.lower) e["lower"] = *b.lower;
        if (b.upper) e["upper"] = *b.upper;
        e["holds"] = b.holds ? ordered_json(*b.holds) : ordered_json(nullptr);
        bounds.push_back(std::move(e));
    }
    j["bounds"] = std::move(bounds);
    if (r.decomposition) {
        ordered_json dec;
        dec["sphere_cycles"] = r.decomposition->spec.cycle_lengths;
        dec["sphere_suspensions"] = r.decomposition->spec.suspension_count;
        dec["sphere_dimension"] = r.sphere_dimension ? ordered_json(*r.sphere_dimension)
                                                     : ordered_json(nullptr);
        dec["remainder_dimension"] = r.remainder_dimension
                                         ? ordered_json(*r.remainder_dimension)
                                         : ordered_json(nullptr);
        j["decomposition"] = std::move(dec);
    } else {
        j["decomposition"] = nullptr;
    }
    return j.dump();
}

std::string json_string(const Table1Report& r) {
    ordered_json j;
    auto rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json e;
        e["d"] = row.d;
        e["k"] = row.k;
        e["sphere"] = row.sphere;
        e["dim_kprime"] = row.dim_kprime;
        e["x_sphere"] = row.x_sphere;
        e["x_kprime_max"] = row.x_kprime_max;
        e["x_k_max"] = row.x_k_max;
        e["x_k"] = row.x_k;
        e["caption_x_kprime_max"] = row.caption_x_kprime_max;
        e["recomputed_x_sphere"] = row.recomputed_x_sphere
                                       ? ordered_json(*row.recomputed_x_sphere)
                                       : ordered_json(nullptr);
        rows.push_back(std::move(e));
    }
    j["rows"] = std::move(rows);
    j["caption_mismatch"] = r.caption_mismatch;
    j["recomputed_match"] = r.recomputed_match;
    j["caption_note"] = r.caption_note;
    return j.dump();
}

std::string table1_text(const Table1Report& r) {
    std::ostringstream out;
    out << "  d  k  S^k          dim K'  X(S^k)  X(K')_max  X(K)_max  X(K)\n";
    for (const auto& row : r.rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%3d%3d  %-12s%7d%8d%11d%10d%6d\n", row.d, row.k,
                      row.sphere.c_str(), row.dim_kprime, row.x_sphere, row.x_kprime_max,
                      row.x_k_max, row.x_k);
        out << line;
    }
    if (r.caption_mismatch) out << "note: " << r.caption_note << "\n";
    out << "recomputed X(S^k) by exact search: ";
    bool first = true;
    for (const auto& row : r.rows) {
        if (!first) out << ", ";
        first = false;
        out << row.sphere << " = "
            << (row.recomputed_x_sphere ? std::to_string(*row.recomputed_x_sphere) : "?");
    }
    out << (r.recomputed_match ? " (all match the printed column)\n"
                               : " (MISMATCH with the printed column)\n");
    return out.str();
}

}  // namespace pm
