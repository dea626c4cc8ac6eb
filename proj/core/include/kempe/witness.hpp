#pragma once

#include "kempe/enumerate.hpp"
#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace kempe {

struct witness_result {
    graph g;
    index_report report;
    std::size_t candidates_tried = 0;
};

inline constexpr std::uint64_t default_candidate_node_limit = 5'000'000;
inline constexpr std::size_t default_candidate_coloring_cap = 20'000;

// first candidate in stream order accepted by the predicate. every candidate
// runs under a fresh sub-budget whose usage is charged back to b; candidates
// that outgrow the sub-budget or the coloring cap are skipped, never accepted
// silently. a drained stream throws hypothesis_refuted
witness_result witness_search(
    const std::function<std::optional<graph>()>& next_candidate,
    const std::function<bool(const graph& candidate, budget& sub, index_report& out)>& accept,
    budget& b, std::uint64_t candidate_node_limit = default_candidate_node_limit,
    std::size_t candidate_coloring_cap = default_candidate_coloring_cap);

// candidate streams, smallest first, deterministic:
//   halin: plane trees listed by vertex count then lexicographic preorder
//     child-count sequence; root takes 3 or 4 children, other internal
//     vertices 2 or 3, so the leaf cycle keeps the maximum degree at 4
//   polygon dissections: cycle length ascending, then diagonal set size, then
//     lexicographic order on the sorted diagonal list; only pairwise
//     non-crossing sets, so every candidate stays outerplanar
//   theta graphs: two poles joined by three or more internally disjoint
//     paths, lengths nondecreasing and of one parity so every cycle closes
//     even; listed by vertex count, then path count, then lexicographic
//     length tuple. Every candidate stays bipartite and planar.

// smallest Halin graph with maximum degree 4 whose colorings need width 4
witness_result find_halin_index4(int max_vertices, budget& b);

// smallest dissected polygon with maximum degree 4 whose colorings need width 4
witness_result find_outerplanar_index4(int max_vertices, budget& b);

// smallest theta graph with at least two classes of colorings under width 2
// that all merge at width 3
witness_result find_planar_bipartite_kempe3(int max_vertices, budget& b);

// whenever two of the colorings agree on one whole color class, the remaining
// classes must agree as an unordered family; this is what pins every width
// t-1 move of a rigid witness down to a relabeling
bool rigid_under_triples(const graph& g, const std::vector<edge_coloring>& colorings);

} // namespace kempe
