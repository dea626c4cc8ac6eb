#include "kempe/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace kempe {

namespace {

void require_total(const graph& g, const edge_coloring& f) {
    if (static_cast<int>(f.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring covers " + std::to_string(f.colors.size()) +
                                    " edges, graph has " + std::to_string(g.edge_count()));
    for (int c : f.colors)
        if (c < 1 || c > f.t)
            throw std::invalid_argument("color " + std::to_string(c) + " outside palette 1.." +
                                        std::to_string(f.t));
}

} // namespace

propriety_report check_proper(const graph& g, const edge_coloring& f) {
    require_total(g, f);
    for (int v : g.vertices()) {
        std::vector<int> seen;
        for (const incidence& inc : g.incident(v)) {
            int c = f.colors[g.edge_index(inc.edge_id)];
            if (std::find(seen.begin(), seen.end(), c) != seen.end())
                return {false, v, c};
            seen.push_back(c);
        }
    }
    return {};
}

bool is_proper(const graph& g, const edge_coloring& f) {
    return check_proper(g, f).proper;
}

edge_coloring coloring_from_json(const graph& g, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("bad json: ") + e.what());
    }
    if (!j.is_object())
        throw parse_error("coloring json must be an object");
    for (const auto& item : j.items())
        if (item.key() != "t" && item.key() != "colors")
            throw parse_error("unknown field \"" + item.key() + "\"");
    if (!j.contains("t") || !j.contains("colors"))
        throw parse_error("coloring json needs t and colors");
    if (!j["t"].is_number_integer() || j["t"].get<int>() < 0)
        throw parse_error("t must be a nonnegative integer");
    if (!j["colors"].is_object())
        throw parse_error("colors must be an object keyed by edge id");

    edge_coloring f;
    f.t = j["t"].get<int>();
    f.colors.assign(g.edge_count(), 0);
    std::vector<bool> covered(g.edge_count(), false);
    for (const auto& item : j["colors"].items()) {
        const std::string& key = item.key();
        int id = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
        if (ec != std::errc() || ptr != key.data() + key.size())
            throw parse_error("edge key \"" + key + "\" is not a decimal id");
        if (!g.has_edge_id(id))
            throw parse_error("coloring mentions unknown edge " + key);
        if (!item.value().is_number_integer())
            throw parse_error("color of edge " + key + " must be an integer");
        int c = item.value().get<int>();
        if (c < 1 || c > f.t)
            throw parse_error("color of edge " + key + " outside palette");
        int idx = g.edge_index(id);
        if (covered[idx])
            throw parse_error("edge " + key + " colored twice");
        covered[idx] = true;
        f.colors[idx] = c;
    }
    for (int i = 0; i < g.edge_count(); ++i)
        if (!covered[i])
            throw parse_error("edge " + std::to_string(g.edges()[i].id) + " left uncolored");
    return f;
}

std::string coloring_to_json(const graph& g, const edge_coloring& f) {
    require_total(g, f);
    nlohmann::ordered_json j;
    j["t"] = f.t;
    j["colors"] = nlohmann::ordered_json::object();
    for (int i = 0; i < g.edge_count(); ++i)
        j["colors"][std::to_string(g.edges()[i].id)] = f.colors[i];
    return j.dump();
}

std::vector<int> color_class(const graph& g, const edge_coloring& f, int color) {
    std::vector<int> out;
    for (int i = 0; i < g.edge_count(); ++i)
        if (f.colors[i] == color)
            out.push_back(g.edges()[i].id);
    return out;
}

std::vector<int> colors_at(const graph& g, const edge_coloring& f, int v) {
    std::set<int> seen;
    for (const incidence& inc : g.incident(v))
        seen.insert(f.colors[g.edge_index(inc.edge_id)]);
    return {seen.begin(), seen.end()};
}

std::vector<int> missing_colors(const graph& g, const edge_coloring& f, int v) {
    std::set<int> present;
    for (const incidence& inc : g.incident(v))
        present.insert(f.colors[g.edge_index(inc.edge_id)]);
    std::vector<int> out;
    for (int c = 1; c <= f.t; ++c)
        if (!present.count(c))
            out.push_back(c);
    return out;
}

std::vector<int> class_difference(const graph& g, const edge_coloring& f, const edge_coloring& h) {
    if (f.t != h.t)
        throw std::invalid_argument("palette mismatch");
    std::vector<int> out;
    for (int c = 1; c <= f.t; ++c)
        if (color_class(g, f, c) != color_class(g, h, c))
            out.push_back(c);
    return out;
}

namespace {

// shared backtracking core; `order` maps search depth to edge index,
// `palette` is the ascending list of colors to try
std::optional<edge_coloring> solve(const graph& g, const std::vector<int>& order,
                                   const std::vector<int>& palette, int t, bool least_constraining,
                                   budget& b) {
    const int m = g.edge_count();
    std::vector<int> colors(m, 0);
    // used[vertex_index] holds the colors currently present there
    std::vector<std::vector<char>> used(g.vertex_count(), std::vector<char>(t + 1, 0));

    auto feasible = [&](int ei, int c) {
        const edge& e = g.edges()[ei];
        return !used[g.vertex_index(e.u)][c] && !used[g.vertex_index(e.v)][c];
    };

    std::function<bool(int)> rec = [&](int k) -> bool {
        if (k == m)
            return true;
        const int ei = order[k];
        const edge& e = g.edges()[ei];

        std::vector<int> candidates;
        for (int c : palette)
            if (feasible(ei, c))
                candidates.push_back(c);

        if (least_constraining) {
            // prefer the color that blocks the fewest uncolored neighbours
            std::vector<std::pair<int, int>> scored;
            for (int c : candidates) {
                int blocked = 0;
                for (int end : {e.u, e.v})
                    for (const incidence& inc : g.incident(end)) {
                        int oi = g.edge_index(inc.edge_id);
                        if (oi != ei && colors[oi] == 0 && feasible(oi, c))
                            ++blocked;
                    }
                scored.push_back({blocked, c});
            }
            std::sort(scored.begin(), scored.end());
            candidates.clear();
            for (auto& [blocked, c] : scored)
                candidates.push_back(c);
        }

        for (int c : candidates) {
            b.tick();
            colors[ei] = c;
            used[g.vertex_index(e.u)][c] = 1;
            used[g.vertex_index(e.v)][c] = 1;
            if (rec(k + 1))
                return true;
            colors[ei] = 0;
            used[g.vertex_index(e.u)][c] = 0;
            used[g.vertex_index(e.v)][c] = 0;
        }
        return false;
    };

    if (!rec(0))
        return std::nullopt;
    return edge_coloring{t, std::move(colors)};
}

} // namespace

std::optional<edge_coloring> find_proper_coloring(const graph& g, int t, budget& b) {
    if (g.edge_count() == 0)
        return edge_coloring{std::max(t, 0), {}};
    if (t <= 0)
        return std::nullopt;

    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b2) {
        const edge& ea = g.edges()[a];
        const edge& eb = g.edges()[b2];
        int da = g.degree(ea.u) + g.degree(ea.v);
        int db = g.degree(eb.u) + g.degree(eb.v);
        if (da != db)
            return da > db;
        return ea.id < eb.id;
    });

    std::vector<int> palette(t);
    for (int c = 1; c <= t; ++c)
        palette[c - 1] = c;
    return solve(g, order, palette, t, true, b);
}

std::optional<edge_coloring> find_proper_coloring_lex(const graph& g, int t, budget& b) {
    if (g.edge_count() == 0)
        return edge_coloring{std::max(t, 0), {}};
    if (t <= 0)
        return std::nullopt;
    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i)
        order[i] = i;
    std::vector<int> palette(t);
    for (int c = 1; c <= t; ++c)
        palette[c - 1] = c;
    return solve(g, order, palette, t, false, b);
}

chromatic_result chromatic_index(const graph& g, budget& b) {
    if (g.edge_count() == 0)
        return {0, edge_coloring{0, {}}};
    const int delta = g.max_degree();
    const int ceiling = g.multigraph() ? delta + g.max_multiplicity() : delta + 1;
    for (int t = delta; t <= ceiling; ++t)
        if (auto f = find_proper_coloring(g, t, b))
            return {t, std::move(*f)};
    throw hypothesis_refuted("no coloring within the degree ceiling, which cannot happen");
}

namespace {

// unique incident edge of the given color at v, or -1
int edge_of_color_at(const graph& g, const edge_coloring& f, int v, int color) {
    for (const incidence& inc : g.incident(v))
        if (f.colors[g.edge_index(inc.edge_id)] == color)
            return inc.edge_id;
    return -1;
}

} // namespace

kempe_chain_t kempe_chain(const graph& g, const edge_coloring& f, int start, int c, int d) {
    if (c == d)
        throw std::invalid_argument("chain colors must differ");
    kempe_chain_t chain;
    chain.c = c;
    chain.d = d;

    auto walk = [&](int first_edge) {
        std::vector<int> vs{start};
        std::vector<int> es;
        int cur = start;
        int eid = first_edge;
        while (eid != -1) {
            es.push_back(eid);
            const edge& e = g.edge_by_id(eid);
            cur = (e.u == cur) ? e.v : e.u;
            vs.push_back(cur);
            if (cur == start)
                break; // closed up into a cycle
            int want = (f.colors[g.edge_index(eid)] == c) ? d : c;
            eid = edge_of_color_at(g, f, cur, want);
            if (eid == es.back())
                eid = -1;
        }
        return std::pair{vs, es};
    };

    const int ec = edge_of_color_at(g, f, start, c);
    const int ed = edge_of_color_at(g, f, start, d);

    if (ec == -1 && ed == -1) {
        chain.vertices = {start};
        return chain;
    }
    if (ec == -1 || ed == -1) {
        auto [vs, es] = walk(ec != -1 ? ec : ed);
        chain.vertices = vs;
        chain.edge_ids = es;
        return chain;
    }

    auto [vs1, es1] = walk(ec);
    if (vs1.back() == start) {
        chain.is_cycle = true;
        chain.vertices = vs1;
        chain.edge_ids = es1;
    } else {
        auto [vs2, es2] = walk(ed);
        std::reverse(vs2.begin(), vs2.end());
        std::reverse(es2.begin(), es2.end());
        vs2.pop_back(); // drop the duplicated start
        chain.vertices = vs2;
        chain.vertices.insert(chain.vertices.end(), vs1.begin(), vs1.end());
        chain.edge_ids = es2;
        chain.edge_ids.insert(chain.edge_ids.end(), es1.begin(), es1.end());
    }

    // canonical orientation so equal chains compare equal
    if (chain.is_cycle) {
        std::vector<int> vs(chain.vertices.begin(), chain.vertices.end() - 1);
        std::vector<int> es = chain.edge_ids; // es[i] joins vs[i] and vs[(i+1)%k]
        const int k = static_cast<int>(vs.size());
        const int r = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
        std::vector<int> vs2(k), es2(k);
        for (int i = 0; i < k; ++i) {
            vs2[i] = vs[(r + i) % k];
            es2[i] = es[(r + i) % k];
        }
        if (es2[k - 1] < es2[0]) {
            std::vector<int> vs3(k), es3(k);
            vs3[0] = vs2[0];
            for (int i = 1; i < k; ++i)
                vs3[i] = vs2[k - i];
            for (int i = 0; i < k; ++i)
                es3[i] = es2[k - 1 - i];
            vs2 = vs3;
            es2 = es3;
        }
        vs2.push_back(vs2[0]);
        chain.vertices = std::move(vs2);
        chain.edge_ids = std::move(es2);
    } else if (chain.vertices.front() > chain.vertices.back()) {
        std::reverse(chain.vertices.begin(), chain.vertices.end());
        std::reverse(chain.edge_ids.begin(), chain.edge_ids.end());
    }
    return chain;
}

edge_coloring kempe_interchange(const graph& g, const edge_coloring& f, const kempe_chain_t& chain) {
    if (chain.vertices.empty())
        throw std::invalid_argument("empty chain");
    kempe_chain_t fresh = kempe_chain(g, f, chain.vertices.front(), chain.c, chain.d);
    std::set<int> a(fresh.edge_ids.begin(), fresh.edge_ids.end());
    std::set<int> b(chain.edge_ids.begin(), chain.edge_ids.end());
    if (a != b)
        throw std::invalid_argument("chain is not maximal under this coloring");

    edge_coloring out = f;
    for (int eid : chain.edge_ids) {
        int idx = g.edge_index(eid);
        out.colors[idx] = (out.colors[idx] == chain.c) ? chain.d : chain.c;
    }
    return out;
}

difference_graph_t difference_graph(const graph& g, const edge_coloring& f, const edge_coloring& h) {
    if (f.t != h.t)
        throw std::invalid_argument("palette mismatch");
    if (!is_proper(g, f) || !is_proper(g, h))
        throw std::invalid_argument("difference graph needs proper colorings");

    difference_graph_t out;
    out.t = f.t;
    const int t = f.t;
    for (int i = 0; i < g.edge_count(); ++i)
        if ((f.colors[i] == t) != (h.colors[i] == t))
            out.edge_ids.push_back(g.edges()[i].id);

    std::map<int, std::vector<int>> at; // vertex -> incident difference edges
    for (int eid : out.edge_ids) {
        const edge& e = g.edge_by_id(eid);
        at[e.u].push_back(eid);
        at[e.v].push_back(eid);
    }
    for (auto& [v, es] : at) {
        if (es.size() > 2)
            throw engine_invariant_error("difference graph has degree above 2");
        std::sort(es.begin(), es.end());
    }

    std::set<int> remaining(out.edge_ids.begin(), out.edge_ids.end());
    auto walk_from = [&](int v0, int first) {
        difference_component comp;
        comp.vertices.push_back(v0);
        int cur = v0;
        int eid = first;
        while (eid != -1) {
            remaining.erase(eid);
            comp.edge_ids.push_back(eid);
            const edge& e = g.edge_by_id(eid);
            cur = (e.u == cur) ? e.v : e.u;
            comp.vertices.push_back(cur);
            if (cur == v0)
                break;
            int next = -1;
            for (int cand : at[cur])
                if (cand != eid && remaining.count(cand)) {
                    next = cand;
                    break;
                }
            eid = next;
        }
        return comp;
    };

    // paths first; `at` is vertex-ascending, so each path starts at its
    // smaller endpoint
    for (auto& [v, es] : at) {
        if (es.size() != 1 || !remaining.count(es[0]))
            continue;
        difference_component comp = walk_from(v, es[0]);
        comp.shape = (comp.edge_ids.size() % 2 == 0) ? component_shape::path_even
                                                     : component_shape::path_odd;
        out.components.push_back(std::move(comp));
    }
    while (!remaining.empty()) {
        int v0 = std::numeric_limits<int>::max();
        for (int eid : remaining)
            v0 = std::min(v0, g.edge_by_id(eid).u); // endpoints stored low-high
        int first = -1;
        for (int cand : at[v0])
            if (remaining.count(cand)) {
                first = cand;
                break;
            }
        difference_component comp = walk_from(v0, first);
        comp.shape = component_shape::cycle;
        out.components.push_back(std::move(comp));
    }

    std::sort(out.components.begin(), out.components.end(),
              [](const difference_component& a, const difference_component& b2) {
                  return *std::min_element(a.edge_ids.begin(), a.edge_ids.end()) <
                         *std::min_element(b2.edge_ids.begin(), b2.edge_ids.end());
              });
    return out;
}

edge_coloring correction(const graph& g, const edge_coloring& h, const std::vector<int>& Q,
                         budget& b) {
    std::vector<int> q(Q);
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    for (int c : q)
        if (c < 1 || c > h.t)
            throw std::invalid_argument("correction color outside palette");

    std::vector<int> D;
    for (int i = 0; i < g.edge_count(); ++i)
        if (std::find(q.begin(), q.end(), h.colors[i]) != q.end())
            D.push_back(g.edges()[i].id);

    graph sub = induced_subgraph(g, D);
    if (sub.max_degree() > static_cast<int>(q.size()))
        throw engine_invariant_error("correction subgraph degree exceeds the color set size");

    // nothing to fix: the targeted edges are already proper among themselves
    bool clean = true;
    for (int v : g.vertices()) {
        std::set<int> seen;
        for (const incidence& inc : sub.incident(v))
            if (!seen.insert(h.colors[g.edge_index(inc.edge_id)]).second) {
                clean = false;
                break;
            }
        if (!clean)
            break;
    }
    if (clean)
        return h;

    std::vector<int> order(sub.edge_count());
    for (int i = 0; i < sub.edge_count(); ++i)
        order[i] = i;
    auto solved = solve(sub, order, q, h.t, false, b);
    if (!solved)
        throw certificate_refuted("correction on " + std::to_string(q.size()) +
                                  " colors has no proper recoloring");

    edge_coloring out = h;
    for (int i = 0; i < sub.edge_count(); ++i)
        out.set_color(g, sub.edges()[i].id, solved->colors[i]);
    return out;
}

} // namespace kempe
