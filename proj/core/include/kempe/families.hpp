#pragma once

#include <kempe/coloring.hpp>
#include <kempe/graph.hpp>
#include <kempe/recognize.hpp>

#include <string>
#include <vector>

namespace kempe {

// hub is vertex 0, rim vertices 1..n; rim edge i joins v_{1+i} and v_{1+(i+1) mod n}
// with ids 0..n-1, spoke n+i joins the hub to v_{1+i}
graph wheel(int n);

// proper 3-coloring of the subgraph of wheel(n) on the given edge ids.
// The result indexes induced_subgraph(wheel(n), h_edge_ids), which keeps all
// vertices. Closed-form patterns are used when they apply and pass a propriety
// check, the search fallback otherwise.
edge_coloring wheel_subgraph_3coloring(int n, const std::vector<int>& h_edge_ids, budget& b);

// rooted ordered tree, vertices 0..children.size()-1
struct plane_tree {
    int root = 0;
    std::vector<std::vector<int>> children;
};

struct halin_result {
    graph g;
    std::vector<int> tree_edges;
    std::vector<int> cycle_edges;
    class_certificate cert;
};

// tree plus a cycle through its leaves in depth-first order. Rejects trees on
// fewer than four vertices and trees with a degree-2 vertex.
halin_result halin(const plane_tree& t);

struct gadget_block {
    int g_edge_id = 0;
    int u = 0;
    int v = 0;
    int u_base = 0; // u-side interior vertex s has id u_base + s
    int v_base = 0;
    int u_pendant = 0; // edge id of u -- v_side(0)
    int v_pendant = 0; // edge id of v -- u_side(0)

    int u_vertex(int s) const { return u_base + s; }
    int v_vertex(int l) const { return v_base + l; }
};

struct gadget_map {
    int t = 0;
    std::vector<gadget_block> blocks; // one per source edge, ascending edge id

    const gadget_block& block_for(int g_edge_id) const;
    std::string to_json() const;
};

struct gadget_result {
    graph expanded;
    gadget_map map;
};

// replaces every edge uv by a bipartite gadget on 2t fresh vertices whose two
// pendant edges at u and v are forced to share a color in any proper
// t-coloring. The result is simple with max degree t even when g is a
// multigraph or needs t = max_degree + 1 colors.
gadget_result build_pendant_gadget(const graph& g, int t);
gadget_result build_pendant_gadget(const graph& g, budget& b); // t = chromatic_index(g)

// proper t-coloring of the expanded graph matching f on the pendant pairs
edge_coloring lift_coloring(const graph& g, const edge_coloring& f, const graph& expanded,
                            const gadget_map& m);

// reads the pendant pair of every gadget back into a coloring of g. Throws
// hypothesis_refuted if some pair disagrees, which no proper coloring of the
// expanded graph can do.
edge_coloring project_coloring(const graph& expanded, const edge_coloring& fp, const graph& g,
                               const gadget_map& m);

// 2n groups of p vertices on contiguous ids, group i occupying
// (i-1)p..ip-1. Two vertices are adjacent iff they share a group pair
// (1,2n) or (i,i+1). Regular of degree 3p-1.
graph clique_ring(int p, int n);

// row-major grid, vertex r*cols + c
graph grid(int rows, int cols);

// identify the lowest-id degree-2 vertex of a with the lowest-id degree-2
// vertex of b; b's other vertices and edges get fresh ids after a's
graph glue_at_degree2(const graph& a, const graph& b);

// grid block plus witness block sharing one cutvertex
graph glued_family(int rows, int cols, const graph& witness);

} // namespace kempe
