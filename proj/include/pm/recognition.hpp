#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pm/graph.hpp"

namespace pm {

enum class RejectReason {
    NotACycle,              // level 1: not exactly one cycle
    CycleTooShort,          // level 1: C_3
    LinkDimensionMismatch,  // level >= 0 reached an empty graph
    EmptyExpected,          // level -1 reached a nonempty graph
};

std::string_view reason_string(RejectReason r);
std::optional<RejectReason> reason_from_string(std::string_view s);

// Reject witness: following `path` through unit_link calls, starting from
// the certified graph, reproduces the offending subgraph, which fails the
// base check named by `reason`.
struct PmWitness {
    std::vector<std::string> path;
    RejectReason reason;

    bool operator==(const PmWitness&) const = default;
};

struct PmCertificate {
    int dimension = -1;
    bool accepted = false;
    std::optional<PmWitness> witness;

    bool operator==(const PmCertificate&) const = default;
};

// Recursive certification at level d:
//   d = -1  accepts exactly the empty graph;
//   d =  0  accepts nonempty graphs with no edges;
//   d =  1  accepts a single cycle C_n, n >= 4 (disjoint unions rejected);
//   d >= 2  accepts nonempty graphs whose every unit link certifies at d-1.
// Ambient connectivity is not required for d >= 2. Sub-certificates are
// memoized within one call; witnesses pick the canonically smallest failing
// vertex, so the result is independent of scheduling. `jobs` > 1 certifies
// top-level links in parallel.
PmCertificate is_pseudomanifold(const Graph& g, int d, int jobs = 1);

// The unique level at which g certifies, when one exists. An accepting
// level forces d = dimension(g), so only that candidate is tried.
std::optional<int> pseudomanifold_dimension(const Graph& g);

// sub is itself a pseudomanifold (at some level) and its vertex and edge
// sets are subsets of host's.
bool is_subpseudomanifold(const Graph& sub, const Graph& host);

// Iterated unit links along a witness path.
Graph replay_witness_path(const Graph& g, const std::vector<std::string>& path);

}  // namespace pm
