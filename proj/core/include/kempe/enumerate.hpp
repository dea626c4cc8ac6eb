#pragma once

#include <kempe/coloring.hpp>
#include <kempe/graph.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace kempe {

inline constexpr std::size_t default_coloring_cap = 200'000;

// every proper t-coloring of g in lexicographic order over edge indices.
// Throws cap_exceeded once the list would outgrow the cap.
std::vector<edge_coloring> enumerate_colorings(const graph& g, int t, budget& b,
                                               std::size_t cap = default_coloring_cap);

struct index_report {
    int chi_prime = 0;
    std::size_t coloring_count = 0;
    int chi_trans = 2;
    std::size_t kempe_class_count = 0;
    std::vector<std::pair<int, bool>> connectivity; // n -> space connected at width n

    std::string to_json() const;
};

// exact transformation index over the full coloring space: the least n >= 2
// for which the graph on colorings, joined when they differ in at most n
// color classes, is connected
index_report chi_trans_exact(const graph& g, budget& b,
                             std::size_t cap = default_coloring_cap);

// partition of coloring indices (into the enumerate_colorings order) under
// repeated differences of at most two color classes
std::vector<std::vector<std::size_t>> kempe_classes(const graph& g, int t, budget& b,
                                                    std::size_t cap = default_coloring_cap);

} // namespace kempe
