#pragma once

// Exhaustive and random small-graph generation for the property and
// acceptance suites. Graphs on n <= 8 vertices are adjacency bitmasks with
// pair (i, j), i < j, at bit j*(j-1)/2 + i; that bit order makes prefix
// comparison line up with choosing vertices one at a time.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pm/graph.hpp"

namespace graphgen {

inline int pair_bit(int i, int j) {  // i < j
    return j * (j - 1) / 2 + i;
}

inline bool mask_adjacent(std::uint32_t mask, int i, int j) {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return (mask >> pair_bit(i, j)) & 1;
}

inline bool mask_connected(std::uint32_t mask, int n) {
    if (n <= 1) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (!((frontier >> v) & 1)) continue;
            for (int u = 0; u < n; ++u)
                if (!((seen >> u) & 1) && mask_adjacent(mask, v, u)) next |= 1u << u;
        }
        seen |= next;
        frontier = next;
    }
    return seen == (1u << n) - 1;
}

// True when no vertex relabeling yields a lexicographically smaller mask.
// Depth-first over partial permutations with prefix pruning; the row of
// bits a newly placed vertex contributes is compared against the identity
// placement's row before descending.
namespace detail {

inline bool canonical_dfs(std::uint32_t mask, int n, std::vector<int>& perm,
                          std::vector<char>& used, int depth) {
    if (depth == n) return true;  // an automorphism, not smaller
    for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        // Compare bits (perm[0], cand), ..., (perm[depth-1], cand) against
        // the original row (0, depth), ..., (depth-1, depth).
        int cmp = 0;
        for (int i = 0; i < depth; ++i) {
            bool orig = mask_adjacent(mask, i, depth);
            bool cand_bit = mask_adjacent(mask, perm[i], cand);
            if (cand_bit != orig) {
                cmp = cand_bit ? -1 : 1;  // edge beats non-edge? lower bit value is 0
                break;
            }
        }
        // A 0 where the original has 1 makes the permuted mask smaller.
        if (cmp == -1) continue;  // permuted row larger here; this branch can't go lower
        if (cmp == 1) return false;  // permuted mask strictly smaller: not canonical
        used[cand] = 1;
        perm.push_back(cand);
        if (!canonical_dfs(mask, n, perm, used, depth + 1)) return false;
        perm.pop_back();
        used[cand] = 0;
    }
    return true;
}

}  // namespace detail

inline bool mask_canonical(std::uint32_t mask, int n) {
    std::vector<int> perm;
    std::vector<char> used(n, 0);
    return detail::canonical_dfs(mask, n, perm, used, 0);
}

inline pm::Graph mask_to_graph(std::uint32_t mask, int n) {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back(pm::indexed_label("v", i, n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask_adjacent(mask, i, j)) edges.emplace_back(labels[i], labels[j]);
    return pm::build_graph(labels, edges);
}

// Every connected graph on exactly n vertices, one representative per
// isomorphism class.
inline std::vector<std::uint32_t> connected_canonical_masks(int n) {
    std::vector<std::uint32_t> out;
    std::uint32_t total = n < 2 ? 1 : (1u << (n * (n - 1) / 2));
    for (std::uint32_t mask = 0; mask < total; ++mask)
        if (mask_connected(mask, n) && mask_canonical(mask, n)) out.push_back(mask);
    return out;
}

// Literal pseudomanifold recursion on (mask, vertex subset) pairs; pure bit
// arithmetic, independent of the library's certifier.
inline bool mask_is_pm(std::uint32_t mask, std::uint32_t subset, int n, int level) {
    auto subset_degree = [&](int v) {
        int d = 0;
        for (int u = 0; u < n; ++u)
            if (((subset >> u) & 1) && mask_adjacent(mask, v, u)) ++d;
        return d;
    };
    if (level == -1) return subset == 0;
    if (subset == 0) return false;
    int count = 0;
    for (int v = 0; v < n; ++v) count += (subset >> v) & 1;
    if (level == 0) {
        for (int v = 0; v < n; ++v)
            if (((subset >> v) & 1) && subset_degree(v) != 0) return false;
        return true;
    }
    if (level == 1) {
        if (count < 4) return false;
        for (int v = 0; v < n; ++v)
            if (((subset >> v) & 1) && subset_degree(v) != 2) return false;
        // connectivity within the subset
        int start = 0;
        while (!((subset >> start) & 1)) ++start;
        std::uint32_t seen = 1u << start, frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v) {
                if (!((frontier >> v) & 1)) continue;
                for (int u = 0; u < n; ++u)
                    if (((subset >> u) & 1) && !((seen >> u) & 1) && mask_adjacent(mask, v, u))
                        next |= 1u << u;
            }
            seen |= next;
            frontier = next;
        }
        return seen == subset;
    }
    for (int v = 0; v < n; ++v) {
        if (!((subset >> v) & 1)) continue;
        std::uint32_t link = 0;
        for (int u = 0; u < n; ++u)
            if (((subset >> u) & 1) && mask_adjacent(mask, v, u)) link |= 1u << u;
        if (!mask_is_pm(mask, link, n, level - 1)) return false;
    }
    return true;
}

// Seeded random graph, possibly disconnected.
inline pm::Graph random_graph(std::mt19937& rng, int max_vertices,
                              const std::string& prefix = "v") {
    std::uniform_int_distribution<int> nv(1, max_vertices);
    int n = nv(rng);
    std::bernoulli_distribution edge(0.5);
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) labels.push_back(pm::indexed_label(prefix, i, n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) edges.emplace_back(labels[i], labels[j]);
    return pm::build_graph(labels, edges);
}

}  // namespace graphgen
