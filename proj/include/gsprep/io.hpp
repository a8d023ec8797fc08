#pragma once

#include <string>

#include "gsprep/graph.hpp"
#include "gsprep/orbit.hpp"
#include "gsprep/planner.hpp"
#include "gsprep/split_tree.hpp"

namespace gsprep {

/// Graph JSON: {"num_vertices": n, "edges": [[u,v], ...]} with u < v and
/// edges sorted lexicographically. Readers reject duplicate edges and
/// self-loops.
std::string graph_to_json(const Graph& g, int indent = 2);
Graph graph_from_json(const std::string& text);

/// Plain-text edge list: first line "n m", then one "u v" line per edge.
std::string graph_to_edgelist(const Graph& g);
Graph graph_from_edgelist(const std::string& text);

std::string qasst_to_json(const Qasst& q, int indent = 2);
Qasst qasst_from_json(const std::string& text);

std::string plan_to_json(const PreparationPlan& p, int indent = 2);
PreparationPlan plan_from_json(const std::string& text);

std::string orbit_report_to_json(const OrbitReport& r, int indent = 2);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gsprep
