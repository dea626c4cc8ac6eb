#pragma once

#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace kempe {

inline constexpr std::size_t default_partition_cap = 200'000;

// proper vertex coloring taken up to relabeling: just the family of color
// classes. classes are ordered by least member, members ascending
struct vertex_partition {
    std::vector<std::vector<int>> classes;

    bool operator==(const vertex_partition&) const = default;

    std::string to_json() const; // {"classes":[[0,5],[1,2],...]}
};

struct vertex_chromatic_result {
    int chi = 0;
    vertex_partition witness;
};

// least k admitting a partition into k independent sets, with one such
// partition attached
vertex_chromatic_result chromatic_number(const graph& g, budget& b);

// every partition of the vertices into at most k independent sets, no two
// equal, ordered by first-appearance labeling over ascending vertices
std::vector<vertex_partition> enumerate_partitions(const graph& g, int k, budget& b,
                                                   std::size_t cap = default_partition_cap);

// with exactly two partitions into k independent sets, true iff they share no
// class, so moving between them rewrites all k classes at once
bool global_transformation_required(const graph& g, int k, budget& b);

} // namespace kempe
