#include <kempe/families.hpp>

#include <kempe/errors.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kempe {

graph wheel(int n) {
    if (n < 3)
        throw std::invalid_argument("wheel needs at least 3 rim vertices");
    std::vector<int> vs(n + 1);
    for (int i = 0; i <= n; ++i)
        vs[i] = i;
    std::vector<edge> es;
    es.reserve(2 * n);
    for (int i = 0; i < n; ++i)
        es.push_back({i, 1 + i, 1 + (i + 1) % n});
    for (int i = 0; i < n; ++i)
        es.push_back({n + i, 0, 1 + i});
    return graph(vs, es);
}

namespace {

// rim edge id of v_a v_{a+1} is a-1; the closing edge v_n v_1 has id n-1
int rim_id(int a) { return a - 1; }

// hub patterns for a wheel subgraph made of the full rim plus spokes to
// v1, v2 and v_s. Only the layouts that come out proper are kept.
std::optional<edge_coloring> pattern_coloring(int n, int s, const graph& h) {
    std::map<int, int> want; // edge id -> color
    want[n] = 1;             // spoke to v1
    want[n + 1] = 2;         // spoke to v2
    want[n + s - 1] = 3;     // spoke to v_s
    want[rim_id(1)] = 3;     // v1 v2
    if (n % 2 == 1) {
        int k = (n - 1) / 2;
        if (s != 3)
            return std::nullopt; // the non-consecutive odd layout clashes at v1
        want[n - 1] = 2; // v_n v_1
        for (int i = 1; i <= k; ++i)
            want[rim_id(2 * i)] = 1;
        for (int i = 1; i <= k - 1; ++i)
            want[rim_id(2 * i + 1)] = 2;
    } else {
        int k = n / 2;
        if (s == n - 1)
            return std::nullopt; // spoke and the color-3 rim edge meet at v_{n-1}
        want[n - 1] = 2;     // v1 v_{2k}
        want[n - 2] = 3;     // v_{2k-1} v_{2k}
        for (int i = 1; i <= k - 1; ++i)
            want[rim_id(2 * i)] = 1;
        for (int i = 2; i <= k - 1; ++i)
            want[rim_id(2 * i - 1)] = 2;
    }

    edge_coloring f;
    f.t = 3;
    f.colors.assign(h.edge_count(), 0);
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
        auto it = want.find(h.edges()[i].id);
        if (it == want.end())
            return std::nullopt;
        f.colors[i] = it->second;
    }
    if (!is_proper(h, f))
        return std::nullopt;
    return f;
}

} // namespace

edge_coloring wheel_subgraph_3coloring(int n, const std::vector<int>& h_edge_ids, budget& b) {
    graph w = wheel(n);
    std::set<int> ids(h_edge_ids.begin(), h_edge_ids.end());
    std::vector<int> sorted(ids.begin(), ids.end());
    graph h = induced_subgraph(w, sorted);
    if (h.max_degree() > 3)
        throw std::invalid_argument("subgraph exceeds degree 3");

    bool full_rim = true;
    for (int i = 0; i < n; ++i)
        full_rim = full_rim && ids.count(i);
    std::vector<int> spokes;
    for (int i = n; i < 2 * n; ++i)
        if (ids.count(i))
            spokes.push_back(i - n + 1); // rim index of the spoke end

    if (full_rim && spokes.size() == 3 && spokes[0] == 1 && spokes[1] == 2 && spokes[2] >= 3 &&
        spokes[2] < n) {
        if (auto f = pattern_coloring(n, spokes[2], h))
            return *f;
    }

    auto f = find_proper_coloring_lex(h, 3, b);
    if (!f)
        throw hypothesis_refuted("wheel subgraph of degree at most 3 refused a 3-coloring");
    return *f;
}

halin_result halin(const plane_tree& t) {
    int n = static_cast<int>(t.children.size());
    if (n < 4)
        throw std::invalid_argument("tree needs at least four vertices");
    if (t.root < 0 || t.root >= n)
        throw std::invalid_argument("root out of range");

    std::vector<int> deg(n, 0);
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        deg[v] += static_cast<int>(t.children[v].size());
        for (int c : t.children[v]) {
            if (c < 0 || c >= n || c == t.root)
                throw std::invalid_argument("bad child entry");
            if (seen[c])
                throw std::invalid_argument("vertex appears as child twice");
            seen[c] = 1;
            deg[c] += 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (v != t.root && !seen[v])
            throw std::invalid_argument("vertex unreachable from root");
        if (deg[v] == 2)
            throw std::invalid_argument("tree has a degree-2 vertex");
        if (deg[v] == 0)
            throw std::invalid_argument("isolated vertex");
    }

    std::vector<edge> es;
    std::vector<int> tree_edges, cycle_edges, leaves;
    int next_id = 0;
    int reached = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        ++reached;
        if (t.children[v].empty() && v != t.root)
            leaves.push_back(v);
        for (int c : t.children[v]) {
            es.push_back({next_id, v, c});
            tree_edges.push_back(next_id);
            ++next_id;
            self(self, c);
        }
    };
    dfs(dfs, t.root);
    if (reached != n)
        throw std::invalid_argument("children lists do not form a tree");
    if (deg[t.root] == 1)
        leaves.push_back(t.root); // a pendant root sits between the last and first leaf

    int k = static_cast<int>(leaves.size());
    for (int i = 0; i < k; ++i) {
        es.push_back({next_id, leaves[i], leaves[(i + 1) % k]});
        cycle_edges.push_back(next_id);
        ++next_id;
    }

    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i)
        vs[i] = i;
    halin_result r{graph(vs, es), tree_edges, cycle_edges,
                   class_certificate{"halin_constructed", tree_edges, cycle_edges}};
    return r;
}

const gadget_block& gadget_map::block_for(int g_edge_id) const {
    for (const auto& blk : blocks)
        if (blk.g_edge_id == g_edge_id)
            return blk;
    throw std::invalid_argument("no gadget for that edge");
}

std::string gadget_map::to_json() const {
    nlohmann::ordered_json j;
    j["t"] = t;
    j["blocks"] = nlohmann::ordered_json::array();
    for (const auto& blk : blocks) {
        nlohmann::ordered_json b;
        b["edge"] = blk.g_edge_id;
        b["u"] = blk.u;
        b["v"] = blk.v;
        b["u_base"] = blk.u_base;
        b["v_base"] = blk.v_base;
        b["u_pendant"] = blk.u_pendant;
        b["v_pendant"] = blk.v_pendant;
        j["blocks"].push_back(b);
    }
    return j.dump();
}

gadget_result build_pendant_gadget(const graph& g, int t) {
    if (t < 2)
        throw std::invalid_argument("gadget needs at least two colors");
    if (g.edge_count() == 0)
        throw std::invalid_argument("no edges to expand");

    int vmax = g.vertices().back();
    int emax = 0;
    for (const auto& e : g.edges())
        emax = std::max(emax, e.id);

    std::vector<int> vs(g.vertices());
    std::vector<edge> es;
    gadget_map map;
    map.t = t;

    int per = t * t + 1;
    for (std::size_t j = 0; j < g.edges().size(); ++j) {
        const edge& e = g.edges()[j];
        gadget_block blk;
        blk.g_edge_id = e.id;
        blk.u = e.u;
        blk.v = e.v;
        blk.u_base = vmax + 1 + static_cast<int>(j) * 2 * t;
        blk.v_base = blk.u_base + t;
        for (int s = 0; s < 2 * t; ++s)
            vs.push_back(blk.u_base + s);

        int base_e = emax + 1 + static_cast<int>(j) * per;
        blk.u_pendant = base_e;
        blk.v_pendant = base_e + 1;
        es.push_back({blk.u_pendant, e.u, blk.v_vertex(0)});
        es.push_back({blk.v_pendant, e.v, blk.u_vertex(0)});
        int id = base_e + 2;
        for (int s = 0; s < t; ++s)
            for (int l = 0; l < t; ++l) {
                if (s == 0 && l == 0)
                    continue;
                es.push_back({id++, blk.u_vertex(s), blk.v_vertex(l)});
            }
        map.blocks.push_back(blk);
    }
    return {graph(vs, es), map};
}

gadget_result build_pendant_gadget(const graph& g, budget& b) {
    return build_pendant_gadget(g, chromatic_index(g, b).chi_prime);
}

edge_coloring lift_coloring(const graph& g, const edge_coloring& f, const graph& expanded,
                            const gadget_map& m) {
    auto rep = check_proper(g, f);
    if (!rep.proper)
        throw std::invalid_argument("source coloring is not proper");
    int t = m.t;
    if (f.t != t)
        throw std::invalid_argument("palette size mismatch");

    edge_coloring fp;
    fp.t = t;
    fp.colors.assign(expanded.edge_count(), 0);
    for (const auto& blk : m.blocks) {
        int c = f.color_of(g, blk.g_edge_id);
        fp.set_color(expanded, blk.u_pendant, c);
        fp.set_color(expanded, blk.v_pendant, c);
        // interior colors rotate so that color c is exactly the one absent
        // at both interior-0 vertices
        for (int s = 0; s < t; ++s)
            for (int l = 0; l < t; ++l) {
                if (s == 0 && l == 0)
                    continue;
                int col = 1 + (s + l + c - 1) % t;
                auto between = expanded.edges_between(blk.u_vertex(s), blk.v_vertex(l));
                fp.set_color(expanded, between.at(0), col);
            }
    }
    auto rep2 = check_proper(expanded, fp);
    if (!rep2.proper)
        throw engine_invariant_error("lifted coloring came out improper");
    return fp;
}

edge_coloring project_coloring(const graph& expanded, const edge_coloring& fp, const graph& g,
                               const gadget_map& m) {
    auto rep = check_proper(expanded, fp);
    if (!rep.proper)
        throw std::invalid_argument("expanded coloring is not proper");

    edge_coloring f;
    f.t = m.t;
    f.colors.assign(g.edge_count(), 0);
    for (const auto& blk : m.blocks) {
        int cu = fp.color_of(expanded, blk.u_pendant);
        int cv = fp.color_of(expanded, blk.v_pendant);
        if (cu != cv)
            throw hypothesis_refuted("pendant pair colored differently in a proper coloring");
        f.set_color(g, blk.g_edge_id, cu);
    }
    auto rep2 = check_proper(g, f);
    if (!rep2.proper)
        throw engine_invariant_error("projected coloring came out improper");
    return f;
}

graph clique_ring(int p, int n) {
    if (p < 1 || n < 3)
        throw std::invalid_argument("clique_ring needs p >= 1 and n >= 3");
    int total = 2 * p * n;
    std::vector<int> vs(total);
    for (int i = 0; i < total; ++i)
        vs[i] = i;
    auto group = [&](int v) { return v / p; }; // 0-based group index

    std::vector<edge> es;
    int id = 0;
    for (int u = 0; u < total; ++u)
        for (int v = u + 1; v < total; ++v) {
            int a = group(u), c = group(v);
            bool adj = (a == c) || (c == a + 1) || (a == 0 && c == 2 * n - 1);
            if (adj)
                es.push_back({id++, u, v});
        }
    return graph(vs, es);
}

graph grid(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("empty grid");
    std::vector<int> vs(rows * cols);
    for (int i = 0; i < rows * cols; ++i)
        vs[i] = i;
    std::vector<edge> es;
    int id = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            int v = r * cols + c;
            if (c + 1 < cols)
                es.push_back({id++, v, v + 1});
            if (r + 1 < rows)
                es.push_back({id++, v, v + cols});
        }
    return graph(vs, es);
}

graph glue_at_degree2(const graph& a, const graph& b) {
    auto lowest_deg2 = [](const graph& g) {
        for (int v : g.vertices())
            if (g.degree(v) == 2)
                return v;
        throw std::invalid_argument("no degree-2 vertex to glue at");
    };
    int va = lowest_deg2(a);
    int vb = lowest_deg2(b);

    int vmax = a.vertices().back();
    int emax = 0;
    for (const auto& e : a.edges())
        emax = std::max(emax, e.id);

    std::map<int, int> remap;
    remap[vb] = va;
    int next = vmax + 1;
    for (int v : b.vertices())
        if (v != vb)
            remap[v] = next++;

    std::vector<int> vs(a.vertices());
    for (int v : b.vertices())
        if (v != vb)
            vs.push_back(remap[v]);
    std::vector<edge> es(a.edges());
    int id = emax + 1;
    for (const auto& e : b.edges())
        es.push_back({id++, remap[e.u], remap[e.v]});
    return graph(vs, es, a.multigraph() || b.multigraph());
}

graph glued_family(int rows, int cols, const graph& witness) {
    if (rows < 3 || cols < 3)
        throw std::invalid_argument("grid block needs at least 3x3");
    return glue_at_degree2(grid(rows, cols), witness);
}

} // namespace kempe
