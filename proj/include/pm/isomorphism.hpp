#pragma once

#include <optional>
#include <vector>

#include "pm/graph.hpp"

namespace pm {

// Label bijection preserving adjacency, as a map from indices of a to
// indices of b, when one exists. Degree/neighborhood refinement prunes the
// backtracking; intended for graphs up to ~32 vertices (works above that,
// just slower).
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace pm
