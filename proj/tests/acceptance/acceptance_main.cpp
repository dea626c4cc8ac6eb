// whole-library acceptance run. Prints one verdict line per criterion and
// exits nonzero when any of them fails. Every check is exact; the only
// tolerances are the stated enumeration caps and node budgets.

#include <kempe/coloring.hpp>
#include <kempe/enumerate.hpp>
#include <kempe/errors.hpp>
#include <kempe/families.hpp>
#include <kempe/graph.hpp>
#include <kempe/recognize.hpp>
#include <kempe/trace_check.hpp>
#include <kempe/transform.hpp>
#include <kempe/vertex.hpp>
#include <kempe/witness.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace kempe;

namespace {

struct entry {
    graph g;
    std::string family;
};

graph fan_graph(int m, int chords) {
    std::vector<int> vs(m);
    for (int i = 0; i < m; ++i)
        vs[i] = i;
    std::vector<edge> es;
    for (int i = 0; i < m; ++i)
        es.push_back({i, i, (i + 1) % m});
    for (int c = 0; c < chords; ++c)
        es.push_back({m + c, 0, 2 + c});
    return graph(vs, es);
}

graph chorded_cycle(int m, int a) {
    graph base = fan_graph(m, 0);
    std::vector<edge> es = base.edges();
    es.push_back({m, 0, a});
    return graph(base.vertices(), es);
}

// path 0..spine-1 with one extra leaf on every interior spine vertex
graph caterpillar(int spine) {
    std::vector<int> vs(spine);
    for (int i = 0; i < spine; ++i)
        vs[i] = i;
    std::vector<edge> es;
    for (int i = 0; i + 1 < spine; ++i)
        es.push_back({i, i, i + 1});
    int next_v = spine;
    int next_e = spine - 1;
    for (int i = 1; i + 1 < spine; ++i) {
        vs.push_back(next_v);
        es.push_back({next_e++, i, next_v++});
    }
    return graph(vs, es);
}

graph parallel_k(int k) {
    std::vector<edge> es;
    for (int i = 0; i < k; ++i)
        es.push_back({i, 0, 1});
    return graph({0, 1}, es, true);
}

graph doubled_cycle(int n) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i)
        vs[i] = i;
    std::vector<edge> es;
    for (int i = 0; i < n; ++i)
        es.push_back({i, i, (i + 1) % n});
    es.push_back({n, 0, 1});
    return graph(vs, es, true);
}

graph fat_cycle(int n) {
    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i)
        vs[i] = i;
    std::vector<edge> es;
    for (int i = 0; i < n; ++i) {
        es.push_back({2 * i, i, (i + 1) % n});
        es.push_back({2 * i + 1, i, (i + 1) % n});
    }
    return graph(vs, es, true);
}

std::vector<entry> build_corpus() {
    std::vector<entry> out;
    for (int n = 5; n <= 9; ++n)
        out.push_back({wheel(n), "wheel"});
    for (int m = 4; m <= 12; ++m)
        for (int c = 0; c <= m - 3; ++c)
            out.push_back({fan_graph(m, c), "dissection"});
    for (int m = 5; m <= 12; ++m)
        for (int a = 3; a <= m - 2; ++a)
            out.push_back({chorded_cycle(m, a), "dissection"});
    for (int n = 2; n <= 20; ++n)
        out.push_back({corpus::path_n(n), "chordless"});
    for (int n = 3; n <= 20; ++n)
        out.push_back({corpus::cycle_n(n), "chordless"});
    for (int k = 2; k <= 15; ++k)
        out.push_back({corpus::star_n(k), "chordless"});
    for (int k = 3; k <= 14; ++k)
        out.push_back({caterpillar(k), "chordless"});
    for (auto [r, c] : {std::pair{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
                        {3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 4}, {4, 5}})
        out.push_back({grid(r, c), "grid"});
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4},
                        {3, 3}, {3, 4}, {4, 4}})
        out.push_back({corpus::complete_bipartite(a, b), "bipartite"});
    for (int k = 2; k <= 9; ++k)
        out.push_back({parallel_k(k), "bipartite_multi"});
    for (int n = 4; n <= 12; n += 2)
        out.push_back({doubled_cycle(n), "bipartite_multi"});
    out.push_back({fat_cycle(4), "bipartite_multi"});
    out.push_back({fat_cycle(6), "bipartite_multi"});
    out.push_back({corpus::two_triangles_shared_vertex(), "glued"});
    for (auto [a, b] : {std::pair{4, 5}, {5, 6}, {6, 7}, {4, 7}, {5, 7}, {6, 6}})
        out.push_back({glue_at_degree2(corpus::cycle_n(a), corpus::cycle_n(b)), "glued"});
    out.push_back({glued_family(3, 3, wheel(5)), "glued"});
    out.push_back({glued_family(3, 4, wheel(6)), "glued"});
    return out;
}

edge_coloring rotated(const edge_coloring& f, int shift) {
    edge_coloring out = f;
    for (int& c : out.colors)
        c = (c - 1 + shift) % f.t + 1;
    return out;
}

edge_coloring reversed(const edge_coloring& f) {
    edge_coloring out = f;
    for (int& c : out.colors)
        c = f.t + 1 - c;
    return out;
}

long top_overlap(const graph& g, const edge_coloring& a, const edge_coloring& b) {
    long n = 0;
    for (int i = 0; i < g.edge_count(); ++i)
        if (a.colors[i] == a.t && b.colors[i] == b.t)
            ++n;
    return n;
}

// classes that gained or lost an edge between a and b, recomputed from raw
// color vectors so the check shares nothing with the engine or the verifier
std::vector<int> moved_classes(const graph& g, const edge_coloring& a, const edge_coloring& b) {
    std::set<int> out;
    for (int i = 0; i < g.edge_count(); ++i)
        if (a.colors[i] != b.colors[i]) {
            out.insert(a.colors[i]);
            out.insert(b.colors[i]);
        }
    return {out.begin(), out.end()};
}

struct verdict {
    bool pass = true;
    std::string detail;
};

void fail(verdict& v, const std::string& why) {
    if (v.pass) {
        v.pass = false;
        v.detail = why;
    }
}

// ---------------------------------------------------------------------------
// criteria 1 and 6: rewrite soundness over the corpus, with the per-step
// properties re-derived independently while the traces stream past
// ---------------------------------------------------------------------------

struct soundness_outcome {
    verdict traces;     // criterion 1
    verdict step_props; // criterion 6
    std::size_t graphs = 0;
    std::size_t pairs = 0;
    std::size_t steps = 0;
    std::size_t oracle_steps = 0;
};

void check_trace_properties(const graph& g, const transformation_trace& tr,
                            soundness_outcome& out) {
    for (std::size_t i = 1; i < tr.steps.size(); ++i) {
        const edge_coloring& prev = tr.steps[i - 1].coloring;
        const edge_coloring& cur = tr.steps[i].coloring;
        std::vector<int> moved = moved_classes(g, prev, cur);
        if (moved != tr.steps[i].changed)
            fail(out.step_props, "recorded class changes drift from the recomputed ones");
        if (static_cast<int>(moved.size()) > 4)
            fail(out.step_props, "a step moved more than four classes");
        if (g.edge_count() <= 12) {
            if (!oracles::slow_proper(g, cur))
                fail(out.step_props, "oracle caught an improper step");
            ++out.oracle_steps;
        }
    }
    out.steps += tr.steps.size() - 1;
}

soundness_outcome run_soundness(const std::vector<entry>& corpus) {
    soundness_outcome out;
    for (const entry& e : corpus) {
        const graph& g = e.g;
        budget b(200'000'000);
        edge_coloring f = chromatic_index(g, b).witness;
        int t = f.t;

        std::vector<edge_coloring> goals;
        for (int k = 1; k <= 3; ++k)
            goals.push_back(rotated(f, k));
        goals.push_back(reversed(f));
        if (t >= 2) {
            kempe_chain_t ch = kempe_chain(g, f, g.vertices().front(), 1, 2);
            goals.push_back(kempe_interchange(g, f, ch));
        } else {
            goals.push_back(f);
        }

        for (const edge_coloring& goal : goals) {
            try {
                transformation_trace tr = transform(g, f, goal, 3, b);
                trace_check_report rep = check_trace(g, tr);
                if (!rep.ok)
                    fail(out.traces, e.family + ": verifier rejected a trace: " + rep.reason);
                if (tr.width > 4)
                    fail(out.traces, e.family + ": declared width above four");
                if (!(tr.first() == f) || !(tr.last() == goal))
                    fail(out.traces, e.family + ": trace endpoints drifted");
                check_trace_properties(g, tr, out);
            } catch (const std::exception& ex) {
                fail(out.traces, e.family + ": " + ex.what());
            }
            ++out.pairs;
        }
        ++out.graphs;
    }
    return out;
}

// strict growth of the shared top class under the bounded-width improvement
// step, checked on a cubic bipartite fixture until the tops agree
void check_improvement(soundness_outcome& out) {
    graph g = corpus::cube_q3();
    budget b(50'000'000);
    edge_coloring f = chromatic_index(g, b).witness;
    edge_coloring goal = rotated(f, 1);

    int rounds = 0;
    while (moved_classes(g, f, goal).size() > 0 &&
           color_class(g, f, f.t) != color_class(g, goal, goal.t)) {
        long before = top_overlap(g, f, goal);
        transformation_trace tr = improve_toward(g, f, goal, 3, b);
        if (!check_trace(g, tr).ok)
            fail(out.step_props, "improvement step produced an invalid trace");
        f = tr.last();
        if (top_overlap(g, f, goal) <= before)
            fail(out.step_props, "improvement step failed to grow the top overlap");
        if (++rounds > 100) {
            fail(out.step_props, "improvement loop failed to converge");
            break;
        }
    }
    bool threw = false;
    try {
        improve_toward(g, goal, goal, 3, b);
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    if (!threw)
        fail(out.step_props, "improvement step accepted already-agreeing top classes");
}

// the two-ear fixture: a ten-cycle alternating with the top color, one ear
// off the cycle and a second ear off the first
void check_ears(soundness_outcome& out) {
    graph g({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
            {{0, 0, 1},
             {1, 1, 2},
             {2, 2, 3},
             {3, 3, 4},
             {4, 4, 5},
             {5, 5, 6},
             {6, 6, 7},
             {7, 7, 8},
             {8, 8, 9},
             {9, 0, 9},
             {10, 1, 10},
             {11, 10, 11},
             {12, 6, 11},
             {13, 10, 12},
             {14, 12, 13},
             {15, 11, 13}});
    edge_coloring f{5, {5, 1, 5, 2, 5, 3, 5, 4, 5, 1, 2, 5, 2, 3, 5, 3}};
    const int t = f.t;
    budget b(10'000'000);

    std::vector<int> cyc_verts{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 0};
    std::vector<int> cyc_edges{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<int> blk;
    for (const edge& e : g.edges())
        blk.push_back(e.id);

    ear_subgraph h = find_ear_subgraph(g, f, cyc_verts, cyc_edges, blk, b);

    for (std::size_t i = 0; i < cyc_edges.size(); ++i) {
        bool want_top = i % 2 == 0;
        if ((f.color_of(g, cyc_edges[i]) == t) != want_top)
            fail(out.step_props, "ear fixture cycle does not alternate with the top color");
    }

    std::set<int> known(cyc_verts.begin(), cyc_verts.end());
    for (const ear_path& ear : h.ears) {
        if (ear.edge_ids.size() % 2 == 0 || ear.vertices.size() != ear.edge_ids.size() + 1)
            fail(out.step_props, "ear has the wrong shape");
        for (std::size_t i = 0; i < ear.edge_ids.size(); ++i) {
            int want = i % 2 == 0 ? ear.color : t;
            if (f.color_of(g, ear.edge_ids[i]) != want)
                fail(out.step_props, "ear edges do not alternate its color with the top");
        }
        std::set<int> uniq(ear.vertices.begin(), ear.vertices.end());
        if (uniq.size() != ear.vertices.size())
            fail(out.step_props, "ear revisits a vertex");
        if (!known.count(ear.vertices.front()) || !known.count(ear.vertices.back()))
            fail(out.step_props, "ear endpoints leave the grown subgraph");
        for (std::size_t i = 1; i + 1 < ear.vertices.size(); ++i)
            if (known.count(ear.vertices[i]))
                fail(out.step_props, "ear interior touches the grown subgraph");
        known.insert(uniq.begin(), uniq.end());
    }

    if (!h.has_internal_low_vertex)
        fail(out.step_props, "ear fixture lost its low-degree cycle vertex");
    else if (g.degree(h.low_vertex) >= t)
        fail(out.step_props, "reported low vertex is not low");

    std::set<int> on_cycle(cyc_verts.begin(), cyc_verts.end());
    for (int v : known) {
        ear_path p = find_alternating_cv_path(g, f, h, v);
        if (p.vertices.empty() || p.vertices.back() != v)
            fail(out.step_props, "alternating route misses its target");
        std::set<int> uniq(p.vertices.begin(), p.vertices.end());
        if (uniq.size() != p.vertices.size())
            fail(out.step_props, "alternating route revisits a vertex");
        int cycle_hits = 0;
        for (int w : p.vertices)
            cycle_hits += on_cycle.count(w) ? 1 : 0;
        if (on_cycle.count(v) ? p.edge_ids.size() != 0 : cycle_hits != 1)
            fail(out.step_props, "alternating route meets the cycle more than once");
        for (std::size_t i = 0; i < p.edge_ids.size(); ++i) {
            bool want_top = i % 2 == 1;
            if ((f.color_of(g, p.edge_ids[i]) == t) != want_top)
                fail(out.step_props, "alternating route breaks its color pattern");
        }
        if (!p.edge_ids.empty() && f.color_of(g, p.edge_ids.back()) != t)
            fail(out.step_props, "alternating route does not finish on a top edge");
    }
}

// ---------------------------------------------------------------------------
// criterion 2: exact indices against the family bounds
// ---------------------------------------------------------------------------

struct bounds_outcome {
    verdict v;
    std::size_t enumerated = 0;
    std::size_t skipped = 0;
};

bounds_outcome run_bounds(const std::vector<entry>& corpus) {
    bounds_outcome out;
    for (const entry& e : corpus) {
        budget b(4'000'000'000);
        index_report r;
        try {
            r = chi_trans_exact(e.g, b, 200'000);
        } catch (const cap_exceeded&) {
            ++out.skipped;
            continue;
        }
        int bound = is_bipartite(e.g).bipartite ? 3 : 4;
        if (r.chi_trans > bound)
            fail(out.v, e.family + ": exact index " + std::to_string(r.chi_trans)
                            + " above the family bound " + std::to_string(bound));
        ++out.enumerated;
    }

    // regular planar bipartite fixtures sit at exactly two
    for (const graph& g : {corpus::cycle_n(4), corpus::cycle_n(6), corpus::cube_q3(),
                           parallel_k(3)}) {
        budget b(1'000'000'000);
        index_report r = chi_trans_exact(g, b, 200'000);
        if (r.chi_trans != 2)
            fail(out.v, "a regular planar bipartite fixture missed the exact value 2");
    }
    return out;
}

// ---------------------------------------------------------------------------
// criterion 3: the three sharpness witnesses plus their rigidity
// ---------------------------------------------------------------------------

struct witness_outcome {
    verdict v;
    std::size_t tried_a = 0, tried_b = 0, tried_c = 0;
};

witness_outcome run_witnesses() {
    witness_outcome out;

    budget ba(200'000'000);
    witness_result wa = find_halin_index4(12, ba);
    out.tried_a = wa.candidates_tried;
    if (wa.g.max_degree() != 4 || wa.report.chi_trans != 4)
        fail(out.v, "tree-plus-leaf-cycle witness out of shape");

    budget bb(200'000'000);
    witness_result wb = find_outerplanar_index4(12, bb);
    out.tried_b = wb.candidates_tried;
    if (wb.g.max_degree() != 4 || wb.report.chi_trans != 4)
        fail(out.v, "dissected polygon witness out of shape");
    if (!is_series_parallel(wb.g).series_parallel)
        fail(out.v, "dissected polygon witness is not series parallel");

    budget bc(200'000'000);
    witness_result wc = find_planar_bipartite_kempe3(12, bc);
    out.tried_c = wc.candidates_tried;
    if (wc.report.chi_trans != 3 || wc.report.kempe_class_count < 2)
        fail(out.v, "two-pole witness out of shape");
    if (!is_bipartite(wc.g).bipartite || !is_planar(wc.g))
        fail(out.v, "two-pole witness left its class");

    for (const witness_result* w : {&wa, &wb, &wc}) {
        budget b(200'000'000);
        auto cols = enumerate_colorings(w->g, w->report.chi_prime, b, 20'000);
        if (!rigid_under_triples(w->g, cols))
            fail(out.v, "a witness coloring space is not rigid up to relabeling");
    }
    return out;
}

// ---------------------------------------------------------------------------
// criterion 4: pendant-forcing expansion
// ---------------------------------------------------------------------------

struct gadget_outcome {
    verdict v;
    std::size_t graphs = 0;
    std::size_t sweeps = 0; // full enumerations of an expansion that fit the cap
};

gadget_outcome run_gadgets() {
    gadget_outcome out;
    std::vector<graph> inputs{corpus::complete_n(3),
                              corpus::cycle_n(4),
                              corpus::cycle_n(5),
                              corpus::path_n(4),
                              corpus::star_n(3),
                              corpus::complete_n(4),
                              corpus::cube_q3(),
                              corpus::prism(),
                              corpus::parallel_pair(),
                              corpus::triangle_with_doubled_edge()};

    {
        budget b(10'000'000);
        if (chromatic_index(corpus::triangle_with_doubled_edge(), b).chi_prime
            <= corpus::triangle_with_doubled_edge().max_degree())
            fail(out.v, "the doubled-edge triangle stopped being a second-class fixture");
    }

    for (const graph& g : inputs) {
        budget b(500'000'000);
        int t = chromatic_index(g, b).chi_prime;
        gadget_result gr = build_pendant_gadget(g, b);
        const graph& fg = gr.expanded;
        const gadget_map& m = gr.map;

        if (m.t != t || fg.max_degree() != t || fg.multigraph())
            fail(out.v, "expansion shape off");
        if (chromatic_index(fg, b).chi_prime != t)
            fail(out.v, "expansion needs more colors than its own maximum degree");

        std::vector<edge_coloring> gcols;
        try {
            gcols = enumerate_colorings(g, t, b, 2'000);
        } catch (const cap_exceeded&) {
            budget b2(10'000'000);
            gcols = {chromatic_index(g, b2).witness};
        }
        for (const edge_coloring& f : gcols) {
            edge_coloring lifted = lift_coloring(g, f, fg, m);
            if (!is_proper(fg, lifted))
                fail(out.v, "lift broke propriety");
            if (!(project_coloring(fg, lifted, g, m) == f))
                fail(out.v, "project does not undo lift");
        }

        try {
            auto fcols = enumerate_colorings(fg, t, b, 20'000);
            for (const edge_coloring& fp : fcols) {
                for (const gadget_block& blk : m.blocks)
                    if (fp.color_of(fg, blk.u_pendant) != fp.color_of(fg, blk.v_pendant))
                        fail(out.v, "a proper expansion coloring split a pendant pair");
                if (!is_proper(g, project_coloring(fg, fp, g, m)))
                    fail(out.v, "projection of a proper coloring came back improper");
            }
            ++out.sweeps;
        } catch (const cap_exceeded&) {
        }
        ++out.graphs;
    }
    if (out.sweeps == 0)
        fail(out.v, "no expansion was small enough for a full enumeration sweep");
    return out;
}

// ---------------------------------------------------------------------------
// criterion 5: the two-partition complement family
// ---------------------------------------------------------------------------

struct family_outcome {
    verdict v;
    std::size_t cases = 0;
};

family_outcome run_family() {
    family_outcome out;
    for (auto [p, n] : {std::pair{1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}}) {
        budget b(2'000'000'000);
        graph hb = complement(clique_ring(p, n));
        if (chromatic_number(hb, b).chi != n)
            fail(out.v, "complement family misses its chromatic number");
        auto ps = enumerate_partitions(hb, n, b);
        if (ps.size() != 2) {
            fail(out.v, "complement family does not have exactly two partitions");
            continue;
        }
        std::set<std::vector<int>> first(ps[0].classes.begin(), ps[0].classes.end());
        for (const std::vector<int>& cls : ps[1].classes)
            if (first.count(cls))
                fail(out.v, "the two partitions share a class");
        if (!global_transformation_required(hb, n, b))
            fail(out.v, "partition pair reported as locally connected");
        ++out.cases;
    }
    if (!oracles::isomorphic(complement(clique_ring(1, 3)), corpus::prism()))
        fail(out.v, "smallest complement is not the triangular prism");
    return out;
}

// ---------------------------------------------------------------------------
// criterion 7: recognizers against brute force on every 6-vertex graph
// ---------------------------------------------------------------------------

struct recognizer_outcome {
    verdict v;
    std::size_t graphs = 0;
};

recognizer_outcome run_recognizers() {
    recognizer_outcome out;
    const int n = 6;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pairs.push_back({i, j});

    std::vector<int> vs(n);
    for (int i = 0; i < n; ++i)
        vs[i] = i;

    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<edge> es;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1)
                es.push_back({static_cast<int>(es.size()), pairs[k].first, pairs[k].second});
        graph g(vs, es);

        if (is_series_parallel(g).series_parallel != !oracles::has_k4_subdivision(g)) {
            fail(out.v, "series-parallel verdict disagrees with the subdivision search on mask "
                            + std::to_string(mask));
            break;
        }
        if (is_chordless(g) != oracles::slow_chordless(g)) {
            fail(out.v, "chordless verdict disagrees with cycle enumeration on mask "
                            + std::to_string(mask));
            break;
        }
        if (girth(g) != oracles::slow_girth(g)) {
            fail(out.v, "girth disagrees with exhaustive cycle search on mask "
                            + std::to_string(mask));
            break;
        }
        ++out.graphs;
    }
    return out;
}

void report(int number, const char* name, const verdict& v, const std::string& stats) {
    std::printf("[%s] %d. %s: %s\n", v.pass ? "PASS" : "FAIL", number, name,
                v.pass ? stats.c_str() : v.detail.c_str());
}

} // namespace

int main() {
    int failures = 0;
    auto tally = [&](const verdict& v) {
        if (!v.pass)
            ++failures;
    };

    std::vector<entry> corpus = build_corpus();

    soundness_outcome c1;
    try {
        c1 = run_soundness(corpus);
        check_improvement(c1);
        check_ears(c1);
    } catch (const std::exception& e) {
        fail(c1.traces, e.what());
    }
    {
        std::ostringstream s;
        s << corpus.size() << " graphs, " << c1.pairs << " coloring pairs, " << c1.steps
          << " steps verified at width <= 4 (exact)";
        report(1, "rewrite soundness", c1.traces, s.str());
        tally(c1.traces);
    }

    bounds_outcome c2;
    try {
        c2 = run_bounds(corpus);
    } catch (const std::exception& e) {
        fail(c2.v, e.what());
    }
    {
        std::ostringstream s;
        s << c2.enumerated << " coloring spaces enumerated in full (cap 200000, " << c2.skipped
          << " above it), bipartite <= 3, block families <= 4, four regular fixtures == 2 (exact)";
        report(2, "exact index bounds", c2.v, s.str());
        tally(c2.v);
    }

    witness_outcome c3;
    try {
        c3 = run_witnesses();
    } catch (const std::exception& e) {
        fail(c3.v, e.what());
    }
    {
        std::ostringstream s;
        s << "width-4 witnesses after " << c3.tried_a << " and " << c3.tried_b
          << " candidates, width-3 bipartite witness after " << c3.tried_c
          << ", all rigid up to relabeling (exact)";
        report(3, "sharpness witnesses", c3.v, s.str());
        tally(c3.v);
    }

    gadget_outcome c4;
    try {
        c4 = run_gadgets();
    } catch (const std::exception& e) {
        fail(c4.v, e.what());
    }
    {
        std::ostringstream s;
        s << c4.graphs << " expansions first-class, pendant pairs forced across " << c4.sweeps
          << " full sweeps (cap 20000), lift/project round trips identical (exact)";
        report(4, "pendant-forcing expansion", c4.v, s.str());
        tally(c4.v);
    }

    family_outcome c5;
    try {
        c5 = run_family();
    } catch (const std::exception& e) {
        fail(c5.v, e.what());
    }
    {
        std::ostringstream s;
        s << c5.cases
          << " parameter pairs: chromatic number hit, exactly two disjoint partitions, smallest "
             "case is the prism (exact)";
        report(5, "two-partition complements", c5.v, s.str());
        tally(c5.v);
    }

    {
        std::ostringstream s;
        s << c1.steps << " trace steps re-derived independently (" << c1.oracle_steps
          << " against the slow oracle), improvement strictly monotone, ear and "
             "alternating-route invariants hold (exact)";
        report(6, "step-level invariants", c1.step_props, s.str());
        tally(c1.step_props);
    }

    recognizer_outcome c7;
    try {
        c7 = run_recognizers();
    } catch (const std::exception& e) {
        fail(c7.v, e.what());
    }
    {
        std::ostringstream s;
        s << c7.graphs
          << " labeled six-vertex graphs, series-parallel/chordless/girth all match brute force "
             "(exact)";
        report(7, "recognizer cross-validation", c7.v, s.str());
        tally(c7.v);
    }

    return failures == 0 ? 0 : 1;
}
