#include "kempe/graph.hpp"

#include "kempe/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace kempe {

graph::graph(std::vector<int> vertices, std::vector<edge> edges, bool multigraph)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), multigraph_(multigraph) {
    std::sort(vertices_.begin(), vertices_.end());
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
        if (vertices_[i] == vertices_[i + 1])
            throw parse_error("duplicate vertex id " + std::to_string(vertices_[i]));
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0)
            throw parse_error("negative vertex id " + std::to_string(vertices_[i]));
        vindex_[vertices_[i]] = static_cast<int>(i);
    }

    for (edge& e : edges_) {
        if (e.id < 0)
            throw parse_error("negative edge id " + std::to_string(e.id));
        if (e.u == e.v)
            throw parse_error("loop at vertex " + std::to_string(e.u));
        if (!has_vertex(e.u) || !has_vertex(e.v))
            throw parse_error("edge " + std::to_string(e.id) + " uses an undeclared vertex");
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const edge& a, const edge& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
        if (edges_[i].id == edges_[i + 1].id)
            throw parse_error("duplicate edge id " + std::to_string(edges_[i].id));

    if (!multigraph_) {
        std::set<std::pair<int, int>> seen;
        for (const edge& e : edges_)
            if (!seen.insert({e.u, e.v}).second)
                throw parse_error("parallel edge between " + std::to_string(e.u) + " and " +
                                  std::to_string(e.v) + " in a simple graph");
    }

    adj_.resize(vertices_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const edge& e = edges_[i];
        eindex_[e.id] = static_cast<int>(i);
        adj_[vindex_[e.u]].push_back({e.id, e.v});
        adj_[vindex_[e.v]].push_back({e.id, e.u});
    }
    // edges_ is id-sorted, so each incidence list already came out ascending
}

const edge& graph::edge_by_id(int id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end())
        throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return edges_[it->second];
}

int graph::edge_index(int id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end())
        throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return it->second;
}

int graph::vertex_index(int v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end())
        throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    return it->second;
}

const std::vector<incidence>& graph::incident(int v) const {
    return adj_[vertex_index(v)];
}

int graph::max_degree() const {
    int d = 0;
    for (const auto& list : adj_)
        d = std::max(d, static_cast<int>(list.size()));
    return d;
}

int graph::max_multiplicity() const {
    if (edges_.empty())
        return 0;
    std::map<std::pair<int, int>, int> count;
    int best = 1;
    for (const edge& e : edges_)
        best = std::max(best, ++count[{e.u, e.v}]);
    return best;
}

bool graph::adjacent(int u, int v) const {
    for (const incidence& inc : incident(u))
        if (inc.other == v)
            return true;
    return false;
}

std::vector<int> graph::edges_between(int u, int v) const {
    std::vector<int> out;
    for (const incidence& inc : incident(u))
        if (inc.other == v)
            out.push_back(inc.edge_id);
    return out;
}

graph graph::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("bad json: ") + e.what());
    }
    if (!j.is_object())
        throw parse_error("graph json must be an object");
    for (const auto& item : j.items())
        if (item.key() != "vertices" && item.key() != "edges" && item.key() != "multigraph")
            throw parse_error("unknown field \"" + item.key() + "\"");
    if (!j.contains("vertices") || !j.contains("edges") || !j.contains("multigraph"))
        throw parse_error("graph json needs vertices, edges and multigraph");

    if (!j["vertices"].is_array())
        throw parse_error("vertices must be an array");
    std::vector<int> vs;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer())
            throw parse_error("vertex ids must be integers");
        vs.push_back(v.get<int>());
    }

    if (!j["edges"].is_array())
        throw parse_error("edges must be an array");
    std::vector<edge> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_object())
            throw parse_error("each edge must be an object");
        for (const auto& item : e.items())
            if (item.key() != "id" && item.key() != "u" && item.key() != "v")
                throw parse_error("unknown edge field \"" + item.key() + "\"");
        if (!e.contains("id") || !e.contains("u") || !e.contains("v"))
            throw parse_error("each edge needs id, u and v");
        if (!e["id"].is_number_integer() || !e["u"].is_number_integer() ||
            !e["v"].is_number_integer())
            throw parse_error("edge fields must be integers");
        es.push_back({e["id"].get<int>(), e["u"].get<int>(), e["v"].get<int>()});
    }

    if (!j["multigraph"].is_boolean())
        throw parse_error("multigraph must be a boolean");
    return graph(std::move(vs), std::move(es), j["multigraph"].get<bool>());
}

std::string graph::to_json() const {
    nlohmann::ordered_json j;
    j["vertices"] = vertices_;
    j["edges"] = nlohmann::ordered_json::array();
    for (const edge& e : edges_) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["u"] = e.u;
        je["v"] = e.v;
        j["edges"].push_back(std::move(je));
    }
    j["multigraph"] = multigraph_;
    return j.dump();
}

block_decomposition decompose_blocks(const graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<int> edge_stack; // edge ids in dfs order
    block_decomposition out;

    struct frame {
        int v;           // vertex index
        int parent_edge; // edge id used to enter, -1 at roots
        std::size_t next_inc = 0;
        int children = 0;
    };

    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        if (g.incident(g.vertices()[root]).empty()) {
            disc[root] = timer++;
            out.isolated_vertices.push_back(g.vertices()[root]);
            continue;
        }
        std::vector<frame> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            frame& f = stack.back();
            const int v_id = g.vertices()[f.v];
            const auto& inc = g.incident(v_id);
            if (f.next_inc < inc.size()) {
                const incidence& step = inc[f.next_inc++];
                if (step.edge_id == f.parent_edge)
                    continue;
                const int w = g.vertex_index(step.other);
                if (disc[w] == -1) {
                    edge_stack.push_back(step.edge_id);
                    disc[w] = low[w] = timer++;
                    ++f.children;
                    stack.push_back({w, step.edge_id});
                } else if (disc[w] < disc[f.v]) {
                    // genuine back edge; deeper-endpoint scans would double-count
                    edge_stack.push_back(step.edge_id);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                frame done = f;
                stack.pop_back();
                if (stack.empty()) {
                    if (done.children >= 2)
                        is_cut[done.v] = true;
                    continue;
                }
                frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (low[done.v] >= disc[p.v]) {
                    if (p.parent_edge != -1)
                        is_cut[p.v] = true;
                    std::vector<int> block;
                    while (!edge_stack.empty()) {
                        int eid = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(eid);
                        if (eid == done.parent_edge)
                            break;
                    }
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            }
        }
    }

    for (int i = 0; i < n; ++i)
        if (is_cut[i])
            out.cutvertices.push_back(g.vertices()[i]);
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    return out;
}

int girth(const graph& g) {
    // a parallel pair is already a 2-cycle
    {
        std::set<std::pair<int, int>> seen;
        for (const edge& e : g.edges())
            if (!seen.insert({e.u, e.v}).second)
                return 2;
    }

    int best = girth_infinity;
    const int n = g.vertex_count();
    std::vector<int> dist(n), via(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> queue;
        dist[root] = 0;
        via[root] = -1;
        queue.push_back(root);
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            if (2 * dist[v] >= best)
                break;
            for (const incidence& inc : g.incident(g.vertices()[v])) {
                if (inc.edge_id == via[v])
                    continue;
                const int w = g.vertex_index(inc.other);
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    via[w] = inc.edge_id;
                    queue.push_back(w);
                } else {
                    // closed walk through the root, so a cycle no longer than it
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

int degeneracy(const graph& g) {
    std::vector<int> order(g.vertices());
    std::unordered_map<int, int> deg;
    for (int v : order)
        deg[v] = g.degree(v);
    std::set<std::pair<int, int>> live; // (degree, vertex)
    for (int v : order)
        live.insert({deg[v], v});

    std::unordered_map<int, bool> gone;
    int k = 0;
    while (!live.empty()) {
        auto [d, v] = *live.begin();
        live.erase(live.begin());
        gone[v] = true;
        k = std::max(k, d);
        for (const incidence& inc : g.incident(v)) {
            if (gone[inc.other])
                continue;
            live.erase({deg[inc.other], inc.other});
            --deg[inc.other];
            live.insert({deg[inc.other], inc.other});
        }
    }
    return k;
}

graph complement(const graph& g) {
    if (g.multigraph())
        throw std::invalid_argument("complement needs a simple graph");
    std::vector<edge> edges;
    int next = 0;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                edges.push_back({next++, vs[i], vs[j]});
    return graph(vs, std::move(edges), false);
}

graph induced_subgraph(const graph& g, const std::vector<int>& edge_ids) {
    std::vector<edge> edges;
    for (int id : edge_ids)
        edges.push_back(g.edge_by_id(id));
    return graph(g.vertices(), std::move(edges), g.multigraph());
}

graph subgraph_on_edges(const graph& g, const std::vector<int>& edge_ids) {
    std::set<int> touched;
    std::vector<edge> edges;
    for (int id : edge_ids) {
        const edge& e = g.edge_by_id(id);
        touched.insert(e.u);
        touched.insert(e.v);
        edges.push_back(e);
    }
    return graph(std::vector<int>(touched.begin(), touched.end()), std::move(edges),
                 g.multigraph());
}

graph vertex_induced(const graph& g, const std::vector<int>& vertex_ids) {
    std::set<int> keep;
    for (int v : vertex_ids) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("unknown vertex id " + std::to_string(v));
        keep.insert(v);
    }
    std::vector<edge> edges;
    for (const edge& e : g.edges())
        if (keep.count(e.u) && keep.count(e.v))
            edges.push_back(e);
    return graph(std::vector<int>(keep.begin(), keep.end()), std::move(edges), g.multigraph());
}

std::vector<std::vector<int>> connected_components(const graph& g) {
    std::vector<std::vector<int>> out;
    std::unordered_map<int, bool> seen;
    for (int v : g.vertices()) {
        if (seen[v])
            continue;
        std::vector<int> comp;
        std::deque<int> queue{v};
        seen[v] = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            comp.push_back(x);
            for (const incidence& inc : g.incident(x))
                if (!seen[inc.other]) {
                    seen[inc.other] = true;
                    queue.push_back(inc.other);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const graph& g) {
    return connected_components(g).size() <= 1;
}

} // namespace kempe
