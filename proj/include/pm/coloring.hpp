#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pm/arithmetic.hpp"
#include "pm/graph.hpp"
#include "pm/recognition.hpp"

namespace pm {

// Total vertex -> color map. Proper means no monochromatic edge; colors
// must lie in [0, palette_size).
struct Coloring {
    std::map<std::string, int> assignment;
    int palette_size = 0;

    bool operator==(const Coloring&) const = default;
};

bool verify_coloring(const Graph& g, const Coloring& c);

// First-fit along the given order, which must be a permutation of the
// vertex labels. Proper by construction.
Coloring greedy_coloring(const Graph& g, const std::vector<std::string>& order);

using Budget = std::optional<std::chrono::milliseconds>;

// Exact result when lower == upper; otherwise the tightest interval proved
// before the budget ran out. The witness realizes `upper`.
struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    std::optional<Coloring> witness;
    bool timed_out = false;

    bool exact() const { return lower == upper; }
};

// Branch and bound between the clique lower bound and a saturation-greedy
// upper bound. Deterministic: vertices explored in descending-degree then
// label order, colors in ascending index. Components solve independently.
// A timeout yields an interval, never a wrong exact claim.
ChromaticResult chromatic_number_exact(const Graph& g, Budget budget = {});

// Disjoint-palette union: h's colors shift by cg.palette_size. Labels
// follow the same namespacing rule as zykov_join. Inputs must be proper.
Coloring join_coloring(const Graph& g, const Coloring& cg, const Graph& h, const Coloring& ch);

// Dual-forest coloring: build the dual, peel spanning forests, then walk
// the forests facet by facet handing each new vertex the first free color,
// preferring the first batch of d+1 colors on the first forest and the
// second batch after that. A final repair pass keeps the result proper.
// The palette is reported, not capped: it stays within 2d+2 on the graphs
// this is meant for, and the tests pin that down.
Coloring forest_coloring(const Graph& g, const PmCertificate& cert);

// A sphere-join decomposition of a pseudomanifold: the graph must be
// isomorphic to sphere_from_spec(spec) + remainder.
struct SphereDecomposition {
    SphereSpec spec;
    Graph remainder;
};

struct BoundEntry {
    std::string name;           // "general", "join-sphere", "even-cycle-close-k"
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<bool> holds;  // unset when the exact value is unknown in range
};

struct BoundsReport {
    int dimension = -1;
    ChromaticResult chromatic;
    std::vector<BoundEntry> bounds;
    std::optional<SphereDecomposition> decomposition;
    std::optional<int> sphere_dimension;     // k
    std::optional<int> remainder_dimension;  // d - k - 1

    bool any_failed() const;
};

// Always evaluates d+1 <= X <= 2d+2. With a decomposition: X <= 2d+1, and
// X <= ceil(3(d+1)/2) when the sphere factor is even-cycle and k sits at
// the close-to-d threshold (d/2 - 1 for even d, (d+1)/2 - 1 for odd d).
BoundsReport check_bounds(const Graph& g, const std::optional<SphereDecomposition>& decomposition,
                          Budget budget = {});

// One row of the odd-cycle sphere table, printed values plus the
// recomputed sphere chromatic number and the caption's formula value.
struct Table1Row {
    int d = 0;
    int k = 0;
    std::string sphere;
    int dim_kprime = 0;
    int x_sphere = 0;        // printed X(S^k)
    int x_kprime_max = 0;    // printed column
    int x_k_max = 0;         // printed X(S^k) + printed X(K')_max
    int x_k = 0;             // printed ceil(3(d+1)/2)
    int caption_x_kprime_max = 0;           // 2(d-k), what the caption says
    std::optional<int> recomputed_x_sphere;  // exact solver on the sphere
};

struct Table1Report {
    std::vector<Table1Row> rows;
    bool caption_mismatch = false;   // printed column != 2(d-k) somewhere
    bool recomputed_match = false;   // solver agrees with every printed X(S^k)
    std::string caption_note;
};

Table1Report table1_report(Budget budget = {});

}  // namespace pm
