#include "pm/arithmetic.hpp"

#include <algorithm>

#include "pm/recognition.hpp"

namespace pm {

namespace {

Graph relabel(const Graph& g, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(g.vertex_count());
    for (const auto& l : g.labels()) labels.push_back(prefix + l);
    // Prefixing preserves lexicographic order, so indices carry over.
    return Graph::from_sorted(std::move(labels), g.index_edges());
}

std::string clique_label(const Graph& g, const std::vector<int>& clique) {
    std::string out;
    for (size_t i = 0; i < clique.size(); ++i) {
        if (i) out += '-';
        out += g.label(clique[i]);
    }
    return out;
}

bool contains(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Graph s0_with_index(int i, int count) {
    return build_graph({indexed_label("p", i, count), indexed_label("q", i, count)}, {});
}

}  // namespace

bool join_needs_namespacing(const Graph& g, const Graph& h) {
    const auto& a = g.labels();
    const auto& b = h.labels();
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return false;
}

std::string join_label(bool namespaced, int side, const std::string& label) {
    if (!namespaced) return label;
    return (side == 0 ? "0:" : "1:") + label;
}

Graph zykov_join(const Graph& g, const Graph& h) {
    bool ns = join_needs_namespacing(g, h);
    Graph left = ns ? relabel(g, "0:") : g;
    Graph right = ns ? relabel(h, "1:") : h;

    std::vector<std::string> labels;
    labels.reserve(left.vertex_count() + right.vertex_count());
    std::merge(left.labels().begin(), left.labels().end(), right.labels().begin(),
               right.labels().end(), std::back_inserter(labels));

    Graph lookup = Graph::from_sorted(labels, {});
    std::vector<std::pair<int, int>> edges;
    edges.reserve(left.edge_count() + right.edge_count() +
                  left.vertex_count() * right.vertex_count());
    auto add = [&](const std::string& a, const std::string& b) {
        int u = lookup.index_of(a), v = lookup.index_of(b);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    };
    for (const auto& [a, b] : left.label_edges()) add(a, b);
    for (const auto& [a, b] : right.label_edges()) add(a, b);
    for (const auto& a : left.labels())
        for (const auto& b : right.labels()) add(a, b);
    return Graph::from_sorted(std::move(labels), std::move(edges));
}

Graph suspension(const Graph& g) {
    int k = 0;
    while (g.has_vertex("p" + std::to_string(k)) || g.has_vertex("q" + std::to_string(k)))
        ++k;
    Graph poles = build_graph({"p" + std::to_string(k), "q" + std::to_string(k)}, {});
    return zykov_join(g, poles);
}

SphereParity SphereSpec::parity() const {
    bool any_even = false, any_odd = false;
    for (int n : cycle_lengths) (n % 2 == 0 ? any_even : any_odd) = true;
    if (any_even && any_odd) return SphereParity::Mixed;
    if (any_odd) return SphereParity::Odd;
    return SphereParity::Even;  // all even, or pure suspensions
}

void SphereSpec::validate() const {
    for (int n : cycle_lengths)
        if (n < 4) throw input_error("sphere cycle length must be >= 4, got " + std::to_string(n));
    if (suspension_count < 0) throw input_error("suspension count must be >= 0");
}

std::string SphereSpec::text() const {
    std::string out;
    for (size_t i = 0; i < cycle_lengths.size(); ++i) {
        if (i) out += '+';
        out += "C" + std::to_string(cycle_lengths[i]);
    }
    for (int i = 0; i < suspension_count; ++i) {
        if (!out.empty()) out += '+';
        out += "S0";
    }
    return out.empty() ? "S-1" : out;
}

Graph sphere_from_spec(const SphereSpec& spec) {
    spec.validate();
    int factors = static_cast<int>(spec.cycle_lengths.size()) + spec.suspension_count;
    Graph result;  // empty graph is the join identity
    int fi = 0;
    for (int n : spec.cycle_lengths)
        result = zykov_join(result, make_cycle(n, indexed_label("s", fi++, factors) + "x"));
    for (int i = 0; i < spec.suspension_count; ++i)
        result = zykov_join(result, s0_with_index(fi++, factors));
    return result;
}

Graph cross_polytope(int k) {
    if (k < 0) throw input_error("cross polytope index must be >= 0");
    Graph result;
    for (int i = 0; i <= k; ++i) result = zykov_join(result, s0_with_index(i, k + 1));
    return result;
}

Graph cartesian_simplex_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw input_error("simplex product needs nonempty factors");
    auto cg = all_cliques(g);
    auto ch = all_cliques(h);

    int ng = static_cast<int>(cg.size()), nh = static_cast<int>(ch.size());
    std::vector<std::string> labels;
    labels.reserve(ng * nh);
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j)
            labels.push_back("(" + clique_label(g, cg[i]) + "|" + clique_label(h, ch[j]) + ")");

    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j)
            for (int i2 = 0; i2 < ng; ++i2)
                for (int j2 = 0; j2 < nh; ++j2) {
                    if (i == i2 && j == j2) continue;
                    if (std::make_pair(i, j) > std::make_pair(i2, j2)) continue;
                    bool fwd = contains(cg[i2], cg[i]) && contains(ch[j2], ch[j]);
                    bool bwd = contains(cg[i], cg[i2]) && contains(ch[j], ch[j2]);
                    if (fwd || bwd)
                        edges.emplace_back(labels[i * nh + j], labels[i2 * nh + j2]);
                }
    return build_graph(std::move(labels), edges);
}

Graph barycentric_refinement(const Graph& g) {
    if (g.vertex_count() == 0) throw input_error("refinement needs a nonempty graph");
    auto cliques = all_cliques(g);
    int n = static_cast<int>(cliques.size());
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& c : cliques) labels.push_back(clique_label(g, c));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (cliques[i].size() == cliques[j].size()) continue;
            bool sub = cliques[i].size() < cliques[j].size()
                           ? contains(cliques[j], cliques[i])
                           : contains(cliques[i], cliques[j]);
            if (sub) edges.emplace_back(labels[i], labels[j]);
        }
    return build_graph(std::move(labels), edges);
}

SpherePrediction sphere_chromatic_prediction(const SphereSpec& spec) {
    spec.validate();
    SpherePrediction out;
    out.parity = spec.parity();
    out.dimension = spec.dimension();
    if (out.parity == SphereParity::Mixed) return out;

    int k = out.dimension;
    int half_up = (k + 2) / 2;  // ceil((k+1)/2)
    int cycles = static_cast<int>(spec.cycle_lengths.size());
    if (out.parity == SphereParity::Even) {
        out.printed = 2 * half_up;
        out.additive = 2 * cycles + spec.suspension_count;
    } else {
        out.printed = 3 * half_up;
        out.additive = 3 * cycles + spec.suspension_count;
    }
    out.divergent = *out.printed != *out.additive;
    return out;
}

ProductClosureReport product_closure_report(const Graph& g, const Graph& h) {
    ProductClosureReport rep;
    auto dl = pseudomanifold_dimension(g);
    auto dr = pseudomanifold_dimension(h);
    if (!dl || !dr) throw input_error("product closure report needs certified pseudomanifold factors");
    rep.left_dimension = *dl;
    rep.right_dimension = *dr;
    rep.join_rule_dimension = *dl + *dr + 1;
    Graph prod = cartesian_simplex_product(g, h);
    rep.product_vertices = prod.vertex_count();
    rep.certified_dimension = pseudomanifold_dimension(prod);
    rep.matches_join_rule =
        rep.certified_dimension && *rep.certified_dimension == rep.join_rule_dimension;
    return rep;
}

}  // namespace pm
