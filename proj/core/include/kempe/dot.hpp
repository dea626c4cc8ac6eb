#pragma once

#include "kempe/coloring.hpp"
#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

#include <cstddef>
#include <string>

namespace kempe {

// plain undirected drawing; every vertex listed, edges labeled by id
std::string graph_dot(const graph& g);

// the difference subgraph of the top classes of f and h, one cluster per
// component, edges labeled "e<id> <f color>/<h color>"
std::string difference_dot(const graph& g, const edge_coloring& f, const edge_coloring& h);

// proper colorings as nodes, joined when they differ in at most n classes
std::string adjacency_dot(const graph& g, int n, budget& b, std::size_t cap);

} // namespace kempe
