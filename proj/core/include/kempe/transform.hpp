#pragma once

#include "kempe/coloring.hpp"
#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

#include <string>
#include <vector>

namespace kempe {

struct trace_step {
    edge_coloring coloring;
    std::vector<int> changed; // colors whose classes moved since the previous step; empty on step 0
};

// a walk through proper colorings where consecutive entries differ in at most
// `width` color classes
struct transformation_trace {
    int width = 0;
    std::vector<trace_step> steps;

    const edge_coloring& first() const { return steps.front().coloring; }
    const edge_coloring& last() const { return steps.back().coloring; }
};

std::string trace_to_json(const graph& g, const transformation_trace& tr);
transformation_trace trace_from_json(const graph& g, const std::string& text);

// two coupled traces: `lead` starts at the first coloring of the pair being
// reconciled, `chase` at the second; reconciliation may move either side
struct trace_pair {
    transformation_trace lead;
    transformation_trace chase;
};

// each of these rewrites the top class t of f along one component of the
// difference graph of (f, goal), emitting proper colorings that differ by at
// most q+1 classes per step. component layouts come from difference_graph.

transformation_trace transform_even_path(const graph& g, const edge_coloring& f,
                                         const edge_coloring& goal,
                                         const difference_component& comp, int q, budget& b);

// odd components pin down which side carries the non-t end edges; the other
// side is left untouched, so a pair of traces comes back
trace_pair transform_odd_path(const graph& g, const edge_coloring& f, const edge_coloring& goal,
                              const difference_component& comp, int q, budget& b);

// cycles carrying at most q+1 colors fall to a single corrected exchange;
// otherwise a cycle vertex of degree below t anchors the rewrite
transformation_trace transform_cycle_simple(const graph& g, const edge_coloring& f,
                                            const edge_coloring& goal,
                                            const difference_component& comp, int q, budget& b);

// cycle plus an attached t-alternating tail, processed as one closed trail;
// tail runs origin -> terminus, terminus being the single vertex shared with
// the cycle. tail edges keep their t-membership when the dust settles
transformation_trace transform_cycle_with_tail(const graph& g, const edge_coloring& f,
                                               const edge_coloring& goal,
                                               const difference_component& comp,
                                               const std::vector<int>& tail_vertices,
                                               const std::vector<int>& tail_edges, int q,
                                               budget& b);

// tail discovered behind a cutvertex sitting on the cycle
transformation_trace transform_cycle_cutvertex(const graph& g, const edge_coloring& f,
                                               const edge_coloring& goal,
                                               const difference_component& comp, int q,
                                               budget& b);

// one proper step, at most 3 classes wide, strictly growing the overlap of the
// top classes of f and goal; meant for regular bipartite graphs
transformation_trace improve_toward(const graph& g, const edge_coloring& f,
                                    const edge_coloring& goal, int q, budget& b);

// full rewrite of f into goal via steps of width at most q+1
transformation_trace transform(const graph& g, const edge_coloring& f, const edge_coloring& goal,
                               int q, budget& b);

// t-alternating path inside an ear decomposition; vertices in walk order
struct ear_path {
    std::vector<int> vertices;
    std::vector<int> edge_ids;
    int color = 0; // the non-t color of the ear
};

// edge-maximal union of a t-alternating cycle and two-colored ears inside one
// block; exactly one of the two outcomes is reported:
//   a vertex of the subgraph with block degree below t, or
//   an escape path leaving the subgraph and ending at such a vertex
struct ear_subgraph {
    std::vector<int> cycle_vertices; // closed walk, front()==back()
    std::vector<int> cycle_edges;
    std::vector<ear_path> ears;
    bool has_internal_low_vertex = false;
    int low_vertex = -1;
    ear_path exit_path;
};

ear_subgraph find_ear_subgraph(const graph& g, const edge_coloring& f,
                               const std::vector<int>& cycle_vertices,
                               const std::vector<int>& cycle_edges,
                               const std::vector<int>& block_edges, budget& b);

// t-alternating path from a cycle vertex to v through the ear subgraph,
// finishing with the t-edge at v; trivial single-vertex path when v lies on
// the cycle
ear_path find_alternating_cv_path(const graph& g, const edge_coloring& f, const ear_subgraph& h,
                                  int v);

} // namespace kempe
