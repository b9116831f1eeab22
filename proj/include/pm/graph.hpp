#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pm {

// Malformed input: unknown labels, self-loops, bad file formats, broken
// preconditions. The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A complete subgraph, stored as a sorted duplicate-free vertex list.
struct Simplex {
    std::vector<std::string> vertices;

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }

    // Canonical facet string "v1-v2-...-vk".
    std::string label() const;

    auto operator<=>(const Simplex&) const = default;
};

// Immutable finite simple graph with opaque string labels.
// Labels are kept sorted, so vertex indices follow lexicographic label
// order and serialization is deterministic.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }

    // -1 when absent.
    int index_of(const std::string& label) const;
    bool has_vertex(const std::string& label) const { return index_of(label) >= 0; }

    bool adjacent(int u, int v) const;
    bool adjacent_labels(const std::string& u, const std::string& v) const;

    // Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Pairs (u, v) with u < v, sorted; identical to label-lexicographic
    // order since labels are sorted.
    std::vector<std::pair<int, int>> index_edges() const;
    std::vector<std::pair<std::string, std::string>> label_edges() const;

    bool connected() const;

    bool operator==(const Graph&) const = default;

    // Exact, collision-free key for memo maps (length-prefixed labels plus
    // the edge list).
    std::string canonical_key() const;

    // Internal constructor: labels must be sorted and unique, edges given
    // as index pairs (deduplicated here). Most callers want build_graph.
    static Graph from_sorted(std::vector<std::string> sorted_labels,
                             std::vector<std::pair<int, int>> edges);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Canonical construction from labels and label pairs.
// Errors: duplicate label, unknown endpoint, self-loop. Duplicate edges
// collapse.
Graph build_graph(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges);

// Induced subgraph on the neighbor set of v; never contains v itself.
Graph unit_link(const Graph& g, const std::string& v);
Graph unit_link_by_index(const Graph& g, int v);

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& keep);
Graph induced_by_indices(const Graph& g, std::vector<int> keep);

// All inclusion-maximal cliques, sorted lexicographically by vertex list.
// Pivoted recursive expansion; exponential worst case, fine at desk scale
// (a few hundred vertices).
std::vector<Simplex> maximal_simplices(const Graph& g);

// All cliques with exactly dim + 1 vertices, sorted.
std::vector<Simplex> simplices_of_dimension(const Graph& g, int dim);

// Every nonempty clique as a sorted index list, in lexicographic order.
std::vector<std::vector<int>> all_cliques(const Graph& g);

int clique_number(const Graph& g);

// Largest simplex dimension: clique number - 1, and -1 for the empty graph.
int dimension(const Graph& g);

// n when g is exactly one cycle C_n (connected, 2-regular, n >= 3),
// otherwise nothing.
std::optional<int> cycle_length(const Graph& g);

// Small constructors. Numeric suffixes are zero-padded so label order
// matches index order.
Graph make_cycle(int n, const std::string& prefix = "v");
Graph make_complete(int n, const std::string& prefix = "v");
Graph make_path(int n, const std::string& prefix = "v");
Graph make_s0();

// Vertex/edge union of two graphs over a shared label space.
Graph graph_union(const Graph& a, const Graph& b);

// Zero-padded index label, width chosen from the largest index.
std::string indexed_label(const std::string& prefix, int i, int count);

}  // namespace pm
