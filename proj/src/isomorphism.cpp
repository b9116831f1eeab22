#include "pm/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace pm {

namespace {

// One round of neighborhood refinement over both graphs at once, so color
// ids stay comparable across them. Returns false when the color histograms
// diverge (no isomorphism possible).
bool refine(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
    int na = a.vertex_count();
    for (int round = 0; round < na + 1; ++round) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> nb;
            nb.reserve(g.degree(v));
            for (int u : g.neighbors(v)) nb.push_back(c[u]);
            std::sort(nb.begin(), nb.end());
            return Sig{c[v], std::move(nb)};
        };
        std::map<Sig, int> dict;
        std::vector<Sig> sa(na), sb(na);
        for (int v = 0; v < na; ++v) {
            sa[v] = signature(a, ca, v);
            sb[v] = signature(b, cb, v);
            dict.emplace(sa[v], 0);
            dict.emplace(sb[v], 0);
        }
        int next = 0;
        for (auto& [sig, id] : dict) id = next++;
        std::vector<int> na_hist(next, 0), nb_hist(next, 0);
        bool changed = false;
        for (int v = 0; v < na; ++v) {
            int ia = dict[sa[v]], ib = dict[sb[v]];
            if (ia != ca[v] || ib != cb[v]) changed = true;
            ca[v] = ia;
            cb[v] = ib;
            ++na_hist[ia];
            ++nb_hist[ib];
        }
        if (na_hist != nb_hist) return false;
        if (!changed) break;
    }
    return true;
}

bool extend(const Graph& a, const Graph& b, const std::vector<int>& order, size_t pos,
            const std::vector<int>& ca, const std::vector<int>& cb,
            std::vector<int>& map_ab, std::vector<char>& used_b) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w = 0; w < b.vertex_count(); ++w) {
        if (used_b[w] || cb[w] != ca[v]) continue;
        bool ok = true;
        for (size_t i = 0; i < pos && ok; ++i) {
            int u = order[i];
            if (a.adjacent(u, v) != b.adjacent(map_ab[u], w)) ok = false;
        }
        if (!ok) continue;
        map_ab[v] = w;
        used_b[w] = 1;
        if (extend(a, b, order, pos + 1, ca, cb, map_ab, used_b)) return true;
        used_b[w] = 0;
        map_ab[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n == 0) return std::vector<int>{};

    std::vector<int> ca(n), cb(n);
    for (int v = 0; v < n; ++v) {
        ca[v] = a.degree(v);
        cb[v] = b.degree(v);
    }
    if (!refine(a, b, ca, cb)) return std::nullopt;

    // Most-constrained classes first; within a class, prefer vertices with
    // many already-placed neighbors by simply following a BFS-ish static
    // order (class size, then color, then index).
    std::vector<int> class_size(n + 1, 0);
    {
        std::map<int, int> count;
        for (int v = 0; v < n; ++v) ++count[ca[v]];
        for (int v = 0; v < n; ++v) class_size[v] = count[ca[v]];
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[x] != class_size[y]) return class_size[x] < class_size[y];
        if (ca[x] != ca[y]) return ca[x] < ca[y];
        return x < y;
    });

    std::vector<int> map_ab(n, -1);
    std::vector<char> used(n, 0);
    if (extend(a, b, order, 0, ca, cb, map_ab, used)) return map_ab;
    return std::nullopt;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace pm
