#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pm/graph.hpp"

namespace pm {

// Disjoint union plus all cross edges. Overlapping label spaces are
// namespaced with "0:" / "1:" prefixes (see join_label); disjoint inputs
// keep their labels.
Graph zykov_join(const Graph& g, const Graph& h);

// True when zykov_join(g, h) has to namespace the labels.
bool join_needs_namespacing(const Graph& g, const Graph& h);

// The label a vertex of side 0 (g) or 1 (h) carries inside the join.
std::string join_label(bool namespaced, int side, const std::string& label);

// Join with two fresh isolated vertices ("p<k>"/"q<k>", smallest k that
// avoids a collision).
Graph suspension(const Graph& g);

enum class SphereParity { Even, Odd, Mixed };

// A sphere built as an iterated Zykov join of cycles, then suspended
// suspension_count times. Dimension k = 2 * #cycles - 1 + suspensions.
// The parity class looks at the cycles only; a pure-suspension sphere
// (cross polytope) counts as even-cycle.
struct SphereSpec {
    std::vector<int> cycle_lengths;
    int suspension_count = 0;

    int dimension() const {
        return 2 * static_cast<int>(cycle_lengths.size()) - 1 + suspension_count;
    }
    SphereParity parity() const;
    void validate() const;  // every cycle length >= 4, suspensions >= 0
    std::string text() const;  // "C5+C5+S0"

    bool operator==(const SphereSpec&) const = default;
};

Graph sphere_from_spec(const SphereSpec& spec);

// Join of k+1 copies of S^0: the minimal k-sphere, 2(k+1) vertices.
Graph cross_polytope(int k);

// Vertices are pairs (g, h) of nonempty cliques; (g,h) ~ (u,v) when they
// differ and contain each other componentwise in one direction. Labels are
// pair encodings "(g|h)" of the canonical clique labels.
Graph cartesian_simplex_product(const Graph& g, const Graph& h);

// Vertices are the nonempty cliques of g, adjacent under strict
// containment either way; same graph as the product with the one-point
// graph up to the pair labels.
Graph barycentric_refinement(const Graph& g);

// The two chromatic values the sphere construction offers: the closed
// formula (2 or 3 times ceil((k+1)/2) for the even/odd class) and the
// join-additivity count (2 or 3 per cycle plus 1 per suspension). They
// disagree for even-cycle spheres of even dimension; `divergent` flags it.
struct SpherePrediction {
    SphereParity parity = SphereParity::Mixed;
    int dimension = -1;
    std::optional<int> printed;
    std::optional<int> additive;
    bool divergent = false;

    bool has_prediction() const { return printed.has_value(); }
};

SpherePrediction sphere_chromatic_prediction(const SphereSpec& spec);

// Builds (g x h)_1 for two certified pseudomanifolds and records the level
// the product actually certifies at, next to the m + n + 1 the join rule
// would give. No assertion either way; the measurement is the point.
struct ProductClosureReport {
    int left_dimension = -1;
    int right_dimension = -1;
    int join_rule_dimension = -1;        // m + n + 1
    std::optional<int> certified_dimension;
    int product_vertices = 0;
    bool matches_join_rule = false;
};

ProductClosureReport product_closure_report(const Graph& g, const Graph& h);

}  // namespace pm
