#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace oracles {

using kempe::edge;
using kempe::graph;
using kempe::incidence;

std::vector<std::set<int>> all_cycles(const graph& g) {
    std::set<std::set<int>> found;
    for (int s : g.vertices()) {
        std::set<int> used_edges;
        std::set<int> on_path{s};
        std::function<void(int)> dfs = [&](int cur) {
            for (const incidence& inc : g.incident(cur)) {
                if (used_edges.count(inc.edge_id))
                    continue;
                if (inc.other == s) {
                    if (used_edges.size() >= 1) {
                        std::set<int> cyc = used_edges;
                        cyc.insert(inc.edge_id);
                        found.insert(cyc);
                    }
                    continue;
                }
                if (inc.other < s || on_path.count(inc.other))
                    continue;
                used_edges.insert(inc.edge_id);
                on_path.insert(inc.other);
                dfs(inc.other);
                used_edges.erase(inc.edge_id);
                on_path.erase(inc.other);
            }
        };
        dfs(s);
    }
    return {found.begin(), found.end()};
}

int slow_girth(const graph& g) {
    int best = kempe::girth_infinity;
    for (const auto& cyc : all_cycles(g))
        best = std::min(best, static_cast<int>(cyc.size()));
    return best;
}

kempe::block_decomposition slow_blocks(const graph& g) {
    const int m = g.edge_count();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& cyc : all_cycles(g)) {
        const int first = g.edge_index(*cyc.begin());
        for (int eid : cyc)
            parent[find(g.edge_index(eid))] = find(first);
    }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < m; ++i)
        groups[find(i)].push_back(g.edges()[i].id);
    kempe::block_decomposition out;
    for (auto& [root, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        out.blocks.push_back(ids);
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });

    for (int v : g.vertices()) {
        if (g.degree(v) == 0) {
            out.isolated_vertices.push_back(v);
            continue;
        }
        std::vector<int> comp_v;
        for (const auto& comp : kempe::connected_components(g))
            if (std::find(comp.begin(), comp.end(), v) != comp.end())
                comp_v = comp;
        std::vector<int> rest;
        for (int w : comp_v)
            if (w != v)
                rest.push_back(w);
        if (rest.empty())
            continue;
        if (kempe::connected_components(kempe::vertex_induced(g, rest)).size() > 1)
            out.cutvertices.push_back(v);
    }
    return out;
}

bool slow_proper(const graph& g, const kempe::edge_coloring& f) {
    for (const edge& a : g.edges())
        for (const edge& b : g.edges()) {
            if (a.id >= b.id)
                continue;
            bool touch = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
            if (touch && f.colors[g.edge_index(a.id)] == f.colors[g.edge_index(b.id)])
                return false;
        }
    return true;
}

bool slow_exists_coloring(const graph& g, int t) {
    std::vector<int> colors(g.edge_count(), 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == g.edge_count())
            return true;
        const edge& e = g.edges()[i];
        for (int c = 1; c <= t; ++c) {
            bool ok = true;
            for (int end : {e.u, e.v})
                for (const incidence& inc : g.incident(end))
                    if (inc.edge_id != e.id && colors[g.edge_index(inc.edge_id)] == c)
                        ok = false;
            if (!ok)
                continue;
            colors[i] = c;
            if (rec(i + 1))
                return true;
            colors[i] = 0;
        }
        return false;
    };
    return rec(0);
}

namespace {

// enumerate simple x-y paths avoiding `blocked`, calling sink on each
bool paths_between(const graph& g, int x, int y, std::set<int>& blocked,
                   const std::function<bool(const std::vector<int>&)>& sink) {
    std::vector<int> path;
    std::set<int> visited{x};
    std::function<bool(int)> dfs = [&](int cur) -> bool {
        for (const incidence& inc : g.incident(cur)) {
            if (inc.other == y) {
                path.push_back(cur);
                bool done = sink(path);
                path.pop_back();
                if (done)
                    return true;
                continue;
            }
            if (visited.count(inc.other) || blocked.count(inc.other))
                continue;
            visited.insert(inc.other);
            path.push_back(cur);
            if (dfs(inc.other))
                return true;
            path.pop_back();
            visited.erase(inc.other);
        }
        return false;
    };
    return dfs(x);
}

} // namespace

bool has_k4_subdivision(const graph& g) {
    std::vector<int> hubs;
    for (int v : g.vertices())
        if (g.degree(v) >= 3)
            hubs.push_back(v);
    const int h = static_cast<int>(hubs.size());
    for (int a = 0; a < h; ++a)
        for (int b = a + 1; b < h; ++b)
            for (int c = b + 1; c < h; ++c)
                for (int d = c + 1; d < h; ++d) {
                    std::vector<int> branch{hubs[a], hubs[b], hubs[c], hubs[d]};
                    std::vector<std::pair<int, int>> pairs;
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            pairs.push_back({branch[i], branch[j]});

                    std::set<int> used; // internal vertices committed so far
                    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
                        if (k == pairs.size())
                            return true;
                        auto [x, y] = pairs[k];
                        std::set<int> blocked = used;
                        for (int bv : branch)
                            if (bv != x && bv != y)
                                blocked.insert(bv);
                        return paths_between(g, x, y, blocked,
                                             [&](const std::vector<int>& path) {
                                                 std::vector<int> added(path.begin() + 1,
                                                                        path.end());
                                                 for (int v : added)
                                                     used.insert(v);
                                                 bool ok = place(k + 1);
                                                 for (int v : added)
                                                     used.erase(v);
                                                 return ok;
                                             });
                    };
                    if (place(0))
                        return true;
                }
    return false;
}

bool slow_chordless(const graph& g) {
    for (const auto& cyc : all_cycles(g)) {
        // rebuild the cyclic vertex order from the edge set
        std::vector<int> ids(cyc.begin(), cyc.end());
        std::vector<int> order;
        const edge& first = g.edge_by_id(ids[0]);
        order.push_back(first.u);
        order.push_back(first.v);
        std::set<int> left(ids.begin() + 1, ids.end());
        while (!left.empty()) {
            bool moved = false;
            for (int id : std::vector<int>(left.begin(), left.end())) {
                const edge& e = g.edge_by_id(id);
                if (e.u == order.back() || e.v == order.back()) {
                    int nxt = (e.u == order.back()) ? e.v : e.u;
                    left.erase(id);
                    if (nxt != order.front())
                        order.push_back(nxt);
                    moved = true;
                    break;
                }
            }
            if (!moved)
                break;
        }
        const int n = static_cast<int>(order.size());
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1)
                    continue; // consecutive around the wrap
                if (g.adjacent(order[i], order[j]))
                    return false;
            }
    }
    return true;
}

bool isomorphic(const graph& a, const graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    auto degs = [](const graph& g) {
        std::vector<int> d;
        for (int v : g.vertices())
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b))
        return false;

    std::vector<int> va = a.vertices();
    std::vector<int> vb = b.vertices();
    std::sort(vb.begin(), vb.end());
    auto multiplicity = [](const graph& g, int u, int v) {
        return static_cast<int>(g.edges_between(u, v).size());
    };
    do {
        bool ok = true;
        for (std::size_t i = 0; i < va.size() && ok; ++i)
            for (std::size_t j = i + 1; j < va.size() && ok; ++j)
                if (multiplicity(a, va[i], va[j]) != multiplicity(b, vb[i], vb[j]))
                    ok = false;
        if (ok)
            return true;
    } while (std::next_permutation(vb.begin(), vb.end()));
    return false;
}

int max_clique(const graph& g) {
    const auto& vs = g.vertices();
    int best = 0;
    std::vector<int> cur;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (cur.size() + (vs.size() - i) <= static_cast<std::size_t>(best))
            return;
        if (i == vs.size()) {
            best = std::max(best, static_cast<int>(cur.size()));
            return;
        }
        bool fits = true;
        for (int u : cur)
            fits = fits && g.adjacent(u, vs[i]);
        if (fits) {
            cur.push_back(vs[i]);
            best = std::max(best, static_cast<int>(cur.size()));
            go(i + 1);
            cur.pop_back();
        }
        go(i + 1);
    };
    go(0);
    return best;
}

} // namespace oracles
