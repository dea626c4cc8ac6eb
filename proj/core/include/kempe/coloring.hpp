#pragma once

#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kempe {

// palette {1..t}; colors indexed by edge position in the companion graph.
// improper assignments are legal values, propriety is a checked predicate
struct edge_coloring {
    int t = 0;
    std::vector<int> colors;

    int color_of(const graph& g, int edge_id) const { return colors[g.edge_index(edge_id)]; }
    void set_color(const graph& g, int edge_id, int c) { colors[g.edge_index(edge_id)] = c; }

    bool operator==(const edge_coloring&) const = default;
};

struct propriety_report {
    bool proper = true;
    int vertex = -1; // lowest violating vertex when improper
    int color = -1;
};

propriety_report check_proper(const graph& g, const edge_coloring& f);
bool is_proper(const graph& g, const edge_coloring& f);

// strict reader for {"t":3,"colors":{"0":1,...}}; keys are edge ids, totality enforced
edge_coloring coloring_from_json(const graph& g, const std::string& text);
std::string coloring_to_json(const graph& g, const edge_coloring& f);

std::vector<int> color_class(const graph& g, const edge_coloring& f, int color); // edge ids
std::vector<int> colors_at(const graph& g, const edge_coloring& f, int v);
std::vector<int> missing_colors(const graph& g, const edge_coloring& f, int v);
std::vector<int> class_difference(const graph& g, const edge_coloring& f, const edge_coloring& h);

// backtracking solver; deterministic; nullopt means proven impossible
std::optional<edge_coloring> find_proper_coloring(const graph& g, int t, budget& b);

// plain ascending edge-id / ascending color search; first hit is the
// lexicographically least proper coloring
std::optional<edge_coloring> find_proper_coloring_lex(const graph& g, int t, budget& b);

struct chromatic_result {
    int chi_prime = 0;
    edge_coloring witness;
};

chromatic_result chromatic_index(const graph& g, budget& b);

struct kempe_chain_t {
    int c = 0;
    int d = 0;
    std::vector<int> vertices; // front()==back() on cycles
    std::vector<int> edge_ids;
    bool is_cycle = false;
};

// maximal 2-colored path or cycle through start; single vertex when both colors missing
kempe_chain_t kempe_chain(const graph& g, const edge_coloring& f, int start, int c, int d);
edge_coloring kempe_interchange(const graph& g, const edge_coloring& f, const kempe_chain_t& chain);

enum class component_shape { path_even, path_odd, cycle };

struct difference_component {
    component_shape shape = component_shape::path_even;
    std::vector<int> vertices; // walk order; front()==back() on cycles
    std::vector<int> edge_ids; // walk order
};

struct difference_graph_t {
    int t = 0;
    std::vector<int> edge_ids; // symmetric difference of the two t-classes, ascending
    std::vector<difference_component> components; // ordered by least contained edge id
};

// edges where exactly one of f,h uses the top color t; degree ≤ 2 everywhere
difference_graph_t difference_graph(const graph& g, const edge_coloring& f, const edge_coloring& h);

// recolor the edges whose h-color lies in Q so that they are proper among
// themselves, colors from Q only, everything else untouched; returns h when
// already proper on that subgraph; lexicographically least choice otherwise
edge_coloring correction(const graph& g, const edge_coloring& h, const std::vector<int>& Q,
                         budget& b);

} // namespace kempe
