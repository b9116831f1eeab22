#pragma once

#include <iosfwd>
#include <string>

#include "pm/arithmetic.hpp"
#include "pm/coloring.hpp"
#include "pm/duality.hpp"
#include "pm/graph.hpp"
#include "pm/recognition.hpp"

namespace pm {

// Canonical one-line form: {"vertices":["a","b"],"edges":[["a","b"]]} with
// vertices sorted, each edge sorted, edges sorted lexicographically.
// Identical graphs serialize to identical bytes.
std::string to_canonical_json(const Graph& g);

Graph graph_from_json_text(const std::string& text);

// Whitespace-separated edge list: "u v" per line, an isolated vertex on its
// own line; blank lines and lines starting with '#' are skipped.
Graph graph_from_edge_list_text(const std::string& text);

// Sniffs the format: a leading '{' means JSON, anything else edge list.
Graph read_graph(std::istream& in);

std::string json_string(const PmCertificate& c);
std::string json_string(const Coloring& c);
// Exact results render as a bare number; intervals as {"lower","upper"}.
std::string json_string(const ChromaticResult& r);
std::string json_string(const CodualClassification& c);
std::string json_string(const FiskRecord& r);
std::string json_string(const FiskJoinCheck& c);
std::string json_string(const SpherePrediction& p);
std::string json_string(const ProductClosureReport& r);
std::string json_string(const BoundsReport& r);
std::string json_string(const Table1Report& r);

// Aligned text rendering of the table report.
std::string table1_text(const Table1Report& r);

}  // namespace pm
