#include "pm/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>

namespace pm {

namespace {

// Dense adjacency rows for the clique routines.
struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::vector<std::uint64_t>> row;

    explicit BitRows(const Graph& g)
        : n(g.vertex_count()), words((n + 63) / 64),
          row(n, std::vector<std::uint64_t>(words, 0)) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v)) row[v][u >> 6] |= std::uint64_t{1} << (u & 63);
    }
};

using Words = std::vector<std::uint64_t>;

bool bit_get(const Words& a, int i) { return (a[i >> 6] >> (i & 63)) & 1; }
void bit_set(Words& a, int i) { a[i >> 6] |= std::uint64_t{1} << (i & 63); }
void bit_clear(Words& a, int i) { a[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

bool bits_empty(const Words& a) {
    for (auto w : a)
        if (w) return false;
    return true;
}

int bits_count(const Words& a) {
    int c = 0;
    for (auto w : a) c += std::popcount(w);
    return c;
}

Words bits_and(const Words& a, const Words& b) {
    Words r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}

int bits_and_count(const Words& a, const Words& b) {
    int c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

template <typename F>
void bits_foreach(const Words& a, F f) {
    for (size_t i = 0; i < a.size(); ++i) {
        std::uint64_t w = a[i];
        while (w) {
            int b = std::countr_zero(w);
            f(static_cast<int>(i * 64 + b));
            w &= w - 1;
        }
    }
}

void bron_kerbosch(const BitRows& bits, std::vector<int>& r, Words p, Words x,
                   std::vector<std::vector<int>>& out) {
    if (bits_empty(p) && bits_empty(x)) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P|X covering the most of P.
    int pivot = -1, best = -1;
    for (size_t i = 0; i < p.size(); ++i) {
        std::uint64_t w = p[i] | x[i];
        while (w) {
            int u = static_cast<int>(i * 64 + std::countr_zero(w));
            w &= w - 1;
            int c = bits_and_count(p, bits.row[u]);
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
    }
    Words cand = p;
    for (size_t i = 0; i < cand.size(); ++i) cand[i] &= ~bits.row[pivot][i];
    std::vector<int> order;
    bits_foreach(cand, [&](int v) { order.push_back(v); });
    for (int v : order) {
        r.push_back(v);
        bron_kerbosch(bits, r, bits_and(p, bits.row[v]), bits_and(x, bits.row[v]), out);
        r.pop_back();
        bit_clear(p, v);
        bit_set(x, v);
    }
}

void max_clique_expand(const BitRows& bits, int size, const Words& p, int& best) {
    if (size + bits_count(p) <= best) return;
    if (bits_empty(p)) {
        best = std::max(best, size);
        return;
    }
    Words rest = p;
    bits_foreach(p, [&](int v) {
        if (size + bits_count(rest) <= best) return;
        max_clique_expand(bits, size + 1, bits_and(rest, bits.row[v]), best);
        bit_clear(rest, v);
    });
}

void grow_cliques(const Graph& g, std::vector<int>& cur, int from,
                  std::vector<std::vector<int>>& out, int exact_size) {
    if (exact_size < 0 || static_cast<int>(cur.size()) == exact_size) {
        if (!cur.empty()) out.push_back(cur);
        if (exact_size >= 0) return;
    }
    for (int v = from; v < g.vertex_count(); ++v) {
        bool ok = true;
        for (int u : cur)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        cur.push_back(v);
        grow_cliques(g, cur, v + 1, out, exact_size);
        cur.pop_back();
    }
}

std::vector<Simplex> to_simplices(const Graph& g, std::vector<std::vector<int>> cliques) {
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    std::sort(cliques.begin(), cliques.end());
    std::vector<Simplex> out;
    out.reserve(cliques.size());
    for (const auto& c : cliques) {
        Simplex s;
        s.vertices.reserve(c.size());
        for (int v : c) s.vertices.push_back(g.label(v));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::string Simplex::label() const {
    std::string out;
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += '-';
        out += vertices[i];
    }
    return out;
}

int Graph::index_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return -1;
    return static_cast<int>(it - labels_.begin());
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::adjacent_labels(const std::string& u, const std::string& v) const {
    int iu = index_of(u), iv = index_of(v);
    if (iu < 0 || iv < 0) return false;
    return adjacent(iu, iv);
}

std::vector<std::pair<int, int>> Graph::index_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int v = 0; v < vertex_count(); ++v)
        for (int u : adj_[v])
            if (v < u) out.emplace_back(v, u);
    return out;
}

std::vector<std::pair<std::string, std::string>> Graph::label_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edge_count_);
    for (auto [u, v] : index_edges()) out.emplace_back(labels_[u], labels_[v]);
    return out;
}

bool Graph::connected() const {
    if (vertex_count() <= 1) return true;
    std::vector<char> seen(vertex_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(u);
            }
    }
    return reached == vertex_count();
}

std::string Graph::canonical_key() const {
    std::string key;
    for (const auto& l : labels_) {
        key += std::to_string(l.size());
        key += ':';
        key += l;
    }
    key += '|';
    for (int v = 0; v < vertex_count(); ++v)
        for (int u : adj_[v])
            if (v < u) {
                key += std::to_string(v);
                key += ',';
                key += std::to_string(u);
                key += ';';
            }
    return key;
}

Graph Graph::from_sorted(std::vector<std::string> sorted_labels,
                         std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.labels_ = std::move(sorted_labels);
    g.adj_.assign(g.labels_.size(), {});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) std::sort(a.begin(), a.end());
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

Graph build_graph(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw input_error("duplicate vertex label");
    Graph lookup = Graph::from_sorted(labels, {});
    std::vector<std::pair<int, int>> idx_edges;
    idx_edges.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        int u = lookup.index_of(a), v = lookup.index_of(b);
        if (u < 0) throw input_error("unknown vertex label: " + a);
        if (v < 0) throw input_error("unknown vertex label: " + b);
        if (u == v) throw input_error("self-loop on vertex: " + a);
        idx_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return Graph::from_sorted(std::move(labels), std::move(idx_edges));
}

Graph unit_link_by_index(const Graph& g, int v) {
    return induced_by_indices(g, g.neighbors(v));
}

Graph unit_link(const Graph& g, const std::string& v) {
    int i = g.index_of(v);
    if (i < 0) throw input_error("unknown vertex label: " + v);
    return unit_link_by_index(g, i);
}

Graph induced_by_indices(const Graph& g, std::vector<int> keep) {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<int> new_index(g.vertex_count(), -1);
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (size_t i = 0; i < keep.size(); ++i) {
        new_index[keep[i]] = static_cast<int>(i);
        labels.push_back(g.label(keep[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (int v : keep)
        for (int u : g.neighbors(v))
            if (v < u && new_index[u] >= 0)
                edges.emplace_back(new_index[v], new_index[u]);
    return Graph::from_sorted(std::move(labels), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep) {
    std::vector<int> idx;
    idx.reserve(keep.size());
    for (const auto& l : keep) {
        int i = g.index_of(l);
        if (i < 0) throw input_error("unknown vertex label: " + l);
        idx.push_back(i);
    }
    return induced_by_indices(g, std::move(idx));
}

std::vector<Simplex> maximal_simplices(const Graph& g) {
    if (g.vertex_count() == 0) return {};
    BitRows bits(g);
    Words p(bits.words, 0), x(bits.words, 0);
    for (int v = 0; v < bits.n; ++v) bit_set(p, v);
    std::vector<int> r;
    std::vector<std::vector<int>> found;
    bron_kerbosch(bits, r, std::move(p), std::move(x), found);
    return to_simplices(g, std::move(found));
}

std::vector<Simplex> simplices_of_dimension(const Graph& g, int dim) {
    if (dim < 0 || g.vertex_count() == 0) return {};
    std::vector<std::vector<int>> found;
    std::vector<int> cur;
    grow_cliques(g, cur, 0, found, dim + 1);
    return to_simplices(g, std::move(found));
}

std::vector<std::vector<int>> all_cliques(const Graph& g) {
    std::vector<std::vector<int>> found;
    std::vector<int> cur;
    grow_cliques(g, cur, 0, found, -1);
    std::sort(found.begin(), found.end());
    return found;
}

int clique_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    BitRows bits(g);
    Words p(bits.words, 0);
    for (int v = 0; v < bits.n; ++v) bit_set(p, v);
    int best = 0;
    max_clique_expand(bits, 0, p, best);
    return best;
}

int dimension(const Graph& g) { return clique_number(g) - 1; }

std::optional<int> cycle_length(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    if (!g.connected()) return std::nullopt;
    return n;
}

std::string indexed_label(const std::string& prefix, int i, int count) {
    int width = 1;
    for (int top = count - 1; top >= 10; top /= 10) ++width;
    std::string digits = std::to_string(i);
    return prefix + std::string(width - digits.size(), '0') + digits;
}

Graph make_cycle(int n, const std::string& prefix) {
    if (n < 3) throw input_error("cycle needs at least 3 vertices");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back(indexed_label(prefix, i, n));
    for (int i = 0; i < n; ++i) edges.emplace_back(labels[i], labels[(i + 1) % n]);
    return build_graph(std::move(labels), edges);
}

Graph make_complete(int n, const std::string& prefix) {
    if (n < 0) throw input_error("negative vertex count");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back(indexed_label(prefix, i, n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(labels[i], labels[j]);
    return build_graph(std::move(labels), edges);
}

Graph make_path(int n, const std::string& prefix) {
    if (n < 0) throw input_error("negative vertex count");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back(indexed_label(prefix, i, n));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
    return build_graph(std::move(labels), edges);
}

Graph make_s0() { return build_graph({"p0", "q0"}, {}); }

Graph graph_union(const Graph& a, const Graph& b) {
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto& e : a.label_edges()) edges.push_back(e);
    for (auto& e : b.label_edges()) edges.push_back(e);
    return build_graph(std::move(labels), edges);
}

}  // namespace pm
