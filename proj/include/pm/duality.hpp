#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pm/graph.hpp"
#include "pm/recognition.hpp"

namespace pm {

// Facet adjacency: the two facets share the recorded (d-1)-face.
struct DualEdge {
    int a = 0;
    int b = 0;
    Simplex shared_face;
};

// Graph on the maximal d-simplices of a pure graph, adjacent when they
// intersect in a (d-1)-simplex. (d+1)-regular and triangle-free when the
// source is a certified d-pseudomanifold.
struct DualGraph {
    std::vector<Simplex> facets;
    std::vector<DualEdge> adjacency;
    int source_dimension = -1;

    // Serialization form: vertex labels are the canonical facet strings.
    Graph as_graph() const;
};

// Errors with the two offending facet labels when the input is not pure.
DualGraph dual_graph(const Graph& g);

// Greedy arboricity-style peeling: repeatedly extract a depth-first
// spanning forest of the remaining dual edges until none are left. Forests
// are disjoint, acyclic, and cover every dual edge; always at least one
// (possibly empty) forest.
struct ForestPeel {
    std::vector<std::vector<std::pair<int, int>>> forests;  // facet index pairs, a < b
};

ForestPeel forest_peel(const DualGraph& d);

// Induced subgraph on the common neighborhood of the given vertices; the
// empty set yields g itself.
Graph complementary_dual(const Graph& g, const std::vector<std::string>& subgraph_vertices);

enum class CodualClass { Empty, Subpseudomanifold, Complete, Pyramid, Whole, Unclassified };

std::string_view codual_class_string(CodualClass c);

struct CodualClassification {
    CodualClass cls = CodualClass::Unclassified;
    Graph dual;
    std::optional<int> dual_dimension;  // when the dual certifies (Sub case, pyramid base)
    std::optional<std::string> apex;    // Pyramid cone vertex
};

// Tests the cases in the fixed order Empty, Whole, Complete, Pyramid,
// Subpseudomanifold; first match wins, Unclassified when none verifies.
// Requires the ambient graph to certify as a pseudomanifold.
CodualClassification classify_complementary_dual(const Graph& g,
                                                 const std::vector<std::string>& subgraph_vertices);

// Complementary dual of a (d-2)-simplex of a certified d-pseudomanifold,
// d >= 2; a cycle of length >= 4 on certified inputs.
Graph dual_link(const Graph& g, const Simplex& x);

// The odd part of a pseudomanifold: the (d-2)-simplices whose dual link is
// an odd cycle, plus the subgraph their vertices generate. For d = 1 the
// base convention applies: the whole cycle when its length is odd, the
// empty graph otherwise (no positive-dimensional odd simplices recorded).
struct FiskRecord {
    std::vector<Simplex> odd_simplices;
    Graph subgraph;
};

FiskRecord fisk_variety(const Graph& g);

// Both sides of the join identity for the odd part, emitted for
// inspection: left is the odd part of the join, right is the union
// K + O(K') u O(K) + K' read as generated subgraphs of the join.
struct FiskJoinCheck {
    Graph joined;
    Graph left;
    Graph right;
    bool equal = false;
};

FiskJoinCheck fisk_join_check(const Graph& g, const Graph& h);

}  // namespace pm
