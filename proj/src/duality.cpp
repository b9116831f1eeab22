#include "pm/duality.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pm/arithmetic.hpp"

namespace pm {

namespace {

std::vector<int> sorted_indices(const Graph& g, const std::vector<std::string>& labels) {
    std::vector<int> idx;
    idx.reserve(labels.size());
    for (const auto& l : labels) {
        int i = g.index_of(l);
        if (i < 0) throw input_error("unknown vertex label: " + l);
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

Graph codual_by_indices(const Graph& g, const std::vector<int>& idx) {
    if (idx.empty()) return g;
    std::vector<int> common = g.neighbors(idx[0]);
    for (size_t i = 1; i < idx.size() && !common.empty(); ++i) {
        const auto& nb = g.neighbors(idx[i]);
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    return induced_by_indices(g, std::move(common));
}

}  // namespace

Graph DualGraph::as_graph() const {
    std::vector<std::string> labels;
    labels.reserve(facets.size());
    for (const auto& f : facets) labels.push_back(f.label());
    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(adjacency.size());
    for (const auto& e : adjacency) edges.emplace_back(labels[e.a], labels[e.b]);
    return build_graph(std::move(labels), edges);
}

DualGraph dual_graph(const Graph& g) {
    DualGraph d;
    d.facets = maximal_simplices(g);
    if (d.facets.empty()) {
        d.source_dimension = -1;
        return d;
    }
    size_t size = d.facets[0].vertices.size();
    for (const auto& f : d.facets)
        if (f.vertices.size() != size)
            throw input_error("not pure: facet " + d.facets[0].label() + " has " +
                              std::to_string(size) + " vertices but facet " + f.label() +
                              " has " + std::to_string(f.vertices.size()));
    d.source_dimension = static_cast<int>(size) - 1;

    int n = static_cast<int>(d.facets.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<std::string> shared;
            std::set_intersection(d.facets[i].vertices.begin(), d.facets[i].vertices.end(),
                                  d.facets[j].vertices.begin(), d.facets[j].vertices.end(),
                                  std::back_inserter(shared));
            if (static_cast<int>(shared.size()) == d.source_dimension)
                d.adjacency.push_back({i, j, Simplex{std::move(shared)}});
        }
    return d;
}

ForestPeel forest_peel(const DualGraph& d) {
    int n = static_cast<int>(d.facets.size());
    std::set<std::pair<int, int>> remaining;
    for (const auto& e : d.adjacency) remaining.emplace(e.a, e.b);

    ForestPeel peel;
    do {
        std::vector<std::vector<int>> adj(n);
        for (auto [a, b] : remaining) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& a : adj) std::sort(a.begin(), a.end());

        // Depth-first spanning forest from the smallest facet of each
        // component. Depth-first keeps the co-tree of the cube acyclic,
        // which a breadth-first tree does not.
        std::vector<std::pair<int, int>> forest;
        std::vector<char> seen(n, 0);
        auto dfs = [&](auto&& self, int v) -> void {
            for (int u : adj[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    forest.emplace_back(std::min(u, v), std::max(u, v));
                    self(self, u);
                }
        };
        for (int root = 0; root < n; ++root) {
            if (seen[root]) continue;
            seen[root] = 1;
            dfs(dfs, root);
        }
        std::sort(forest.begin(), forest.end());
        for (const auto& e : forest) remaining.erase(e);
        peel.forests.push_back(std::move(forest));
    } while (!remaining.empty());
    return peel;
}

Graph complementary_dual(const Graph& g, const std::vector<std::string>& subgraph_vertices) {
    return codual_by_indices(g, sorted_indices(g, subgraph_vertices));
}

std::string_view codual_class_string(CodualClass c) {
    switch (c) {
        case CodualClass::Empty: return "empty";
        case CodualClass::Subpseudomanifold: return "subpseudomanifold";
        case CodualClass::Complete: return "complete";
        case CodualClass::Pyramid: return "pyramid";
        case CodualClass::Whole: return "whole";
        case CodualClass::Unclassified: return "unclassified";
    }
    return "?";
}

CodualClassification classify_complementary_dual(const Graph& g,
                                                 const std::vector<std::string>& subgraph_vertices) {
    if (!pseudomanifold_dimension(g))
        throw input_error("classification needs a certified pseudomanifold");

    CodualClassification out;
    out.dual = complementary_dual(g, subgraph_vertices);
    const Graph& d = out.dual;
    int n = d.vertex_count();

    if (n == 0) {
        out.cls = CodualClass::Empty;
        return out;
    }
    if (d.labels() == g.labels()) {  // induced subgraph equal iff same vertex set
        out.cls = CodualClass::Whole;
        return out;
    }
    if (d.edge_count() == n * (n - 1) / 2) {
        out.cls = CodualClass::Complete;
        return out;
    }
    for (int v = 0; v < n; ++v) {
        if (d.degree(v) != n - 1) continue;
        std::vector<int> base;
        for (int u = 0; u < n; ++u)
            if (u != v) base.push_back(u);
        auto base_dim = pseudomanifold_dimension(induced_by_indices(d, base));
        if (base_dim) {
            out.cls = CodualClass::Pyramid;
            out.apex = d.label(v);
            out.dual_dimension = base_dim;
            return out;
        }
    }
    if (auto dim = pseudomanifold_dimension(d)) {
        out.cls = CodualClass::Subpseudomanifold;
        out.dual_dimension = dim;
        return out;
    }
    out.cls = CodualClass::Unclassified;
    return out;
}

Graph dual_link(const Graph& g, const Simplex& x) {
    auto d = pseudomanifold_dimension(g);
    if (!d) throw input_error("dual link needs a certified pseudomanifold");
    if (*d < 2) throw input_error("dual link needs dimension >= 2");
    if (x.dimension() != *d - 2)
        throw input_error("dual link takes a (d-2)-simplex; got dimension " +
                          std::to_string(x.dimension()) + " in a " + std::to_string(*d) +
                          "-pseudomanifold");
    auto idx = sorted_indices(g, x.vertices);
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j)
            if (!g.adjacent(idx[i], idx[j]))
                throw input_error("dual link argument is not a simplex: " + x.label());
    return codual_by_indices(g, idx);
}

FiskRecord fisk_variety(const Graph& g) {
    auto dim_opt = pseudomanifold_dimension(g);
    if (!dim_opt) throw input_error("odd part needs a certified pseudomanifold");
    int d = *dim_opt;
    if (d < 1) throw input_error("odd part needs dimension >= 1");

    FiskRecord rec;
    if (d == 1) {
        int n = *cycle_length(g);
        rec.subgraph = (n % 2 == 1) ? g : Graph{};
        return rec;
    }
    std::set<std::string> odd_vertices;
    for (const auto& x : simplices_of_dimension(g, d - 2)) {
        Graph link = codual_by_indices(g, sorted_indices(g, x.vertices));
        auto len = cycle_length(link);
        if (len && *len % 2 == 1) {
            for (const auto& v : x.vertices) odd_vertices.insert(v);
            rec.odd_simplices.push_back(x);
        }
    }
    rec.subgraph = induced_subgraph(
        g, std::vector<std::string>(odd_vertices.begin(), odd_vertices.end()));
    return rec;
}

FiskJoinCheck fisk_join_check(const Graph& g, const Graph& h) {
    FiskJoinCheck out;
    out.joined = zykov_join(g, h);
    out.left = fisk_variety(out.joined).subgraph;

    bool ns = join_needs_namespacing(g, h);
    auto joined_vertices = [&](const Graph& src, int side) {
        std::vector<std::string> out_labels;
        out_labels.reserve(src.vertex_count());
        for (const auto& l : src.labels()) out_labels.push_back(join_label(ns, side, l));
        return out_labels;
    };

    Graph og = fisk_variety(g).subgraph;
    Graph oh = fisk_variety(h).subgraph;

    // K + O(K'): all of g joined with the odd part of h, as a subgraph of
    // the join; likewise O(K) + K'. Join subgraphs on these vertex sets are
    // induced, since all cross edges exist.
    std::vector<std::string> left_side = joined_vertices(g, 0);
    for (const auto& l : oh.labels()) left_side.push_back(join_label(ns, 1, l));
    std::vector<std::string> right_side = joined_vertices(h, 1);
    for (const auto& l : og.labels()) right_side.push_back(join_label(ns, 0, l));

    out.right = graph_union(induced_subgraph(out.joined, left_side),
                            induced_subgraph(out.joined, right_side));
    out.equal = out.left == out.right;
    return out;
}

}  // namespace pm
