#pragma once

#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace kempe {

struct edge {
    int id;
    int u;
    int v;

    bool operator==(const edge&) const = default;
};

struct incidence {
    int edge_id;
    int other;
};

// immutable undirected graph, loop-free, optional parallel edges
class graph {
public:
    graph() = default;
    graph(std::vector<int> vertices, std::vector<edge> edges, bool multigraph = false);

    // strict reader for {"vertices":[...],"edges":[{"id":..,"u":..,"v":..},...],"multigraph":bool};
    // unknown fields rejected
    static graph from_json(const std::string& text);
    std::string to_json() const;

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<edge>& edges() const { return edges_; } // ascending id
    bool multigraph() const { return multigraph_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const { return vindex_.count(v) != 0; }
    bool has_edge_id(int id) const { return eindex_.count(id) != 0; }
    const edge& edge_by_id(int id) const;
    int edge_index(int id) const; // dense position in edges()
    int vertex_index(int v) const;

    const std::vector<incidence>& incident(int v) const; // ascending edge id
    int degree(int v) const { return static_cast<int>(incident(v).size()); }
    int max_degree() const;
    int max_multiplicity() const; // 0 when edgeless
    bool adjacent(int u, int v) const;
    std::vector<int> edges_between(int u, int v) const; // ascending ids

private:
    std::vector<int> vertices_;
    std::vector<edge> edges_;
    bool multigraph_ = false;
    std::unordered_map<int, int> vindex_;
    std::unordered_map<int, int> eindex_;
    std::vector<std::vector<incidence>> adj_; // by vertex index
};

struct block_decomposition {
    std::vector<std::vector<int>> blocks; // edge-id sets, each ascending, ordered by least id
    std::vector<int> cutvertices;
    std::vector<int> isolated_vertices;
};

block_decomposition decompose_blocks(const graph& g);

inline constexpr int girth_infinity = std::numeric_limits<int>::max();

// shortest cycle length; a parallel pair counts as a 2-cycle; girth_infinity on forests
int girth(const graph& g);

int degeneracy(const graph& g);

graph complement(const graph& g); // simple graphs only

// subgraph on the given edge ids, keeping every vertex of g
graph induced_subgraph(const graph& g, const std::vector<int>& edge_ids);

// subgraph on the given edge ids, keeping only their endpoints
graph subgraph_on_edges(const graph& g, const std::vector<int>& edge_ids);

// subgraph on the given vertices with all edges among them
graph vertex_induced(const graph& g, const std::vector<int>& vertex_ids);

std::vector<std::vector<int>> connected_components(const graph& g); // vertex sets
bool is_connected(const graph& g);

} // namespace kempe
