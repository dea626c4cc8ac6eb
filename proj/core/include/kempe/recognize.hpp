#pragma once

#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kempe {

struct bipartite_result {
    bool bipartite = false;
    std::vector<int> side0;     // one side of the 2-coloring when bipartite
    std::vector<int> odd_cycle; // simple odd cycle edge ids otherwise
};

bipartite_result is_bipartite(const graph& g);

// true iff no edge closes two internally disjoint paths between its ends
bool is_chordless(const graph& g);

struct sp_step {
    enum kind_t { drop_leaf, suppress, merge_parallel } kind;
    int vertex; // acting vertex, or -1 for merges
};

struct sp_result {
    bool series_parallel = false;
    std::vector<sp_step> log;
};

sp_result is_series_parallel(const graph& g);

// hub id when g is a rim cycle plus an all-adjacent hub; lowest id wins ties
std::optional<int> is_wheel(const graph& g);

bool is_planar(const graph& g);

bool is_class1(const graph& g, budget& b);

struct class_certificate {
    std::string tag;    // bipartite, chordless, series_parallel, wheel,
                        // planar_girth_ge7, planar, halin_constructed,
                        // line_perfect_block, K4, K_1_1_n, brute_force
    std::vector<int> a; // bipartite: side-0 vertices; wheel: {hub};
                        // halin_constructed: tree edge ids
    std::vector<int> b; // halin_constructed: outer cycle edge ids
};

bool recheck_certificate(const graph& g, const class_certificate& cert);

enum class aq_verdict { certified_by_class, verified_by_brute_force, refuted_with_witness };

struct block_certificate {
    std::vector<int> block_edges;
    class_certificate cert;
};

struct aq_membership {
    int q = 0;
    aq_verdict verdict = aq_verdict::certified_by_class;
    std::vector<block_certificate> blocks;
    std::optional<graph> witness; // refuting subgraph, max degree <= q, unsolvable with q colors
};

// exhaustive check over maximal connected low-degree edge subsets
aq_membership aq_brute_force(const graph& g, int q, budget& b);

aq_membership in_A_q(const graph& g, int q, budget& b,
                     const std::vector<class_certificate>& supplied = {});

bool line_perfect_blocks(const graph& g);

} // namespace kempe
