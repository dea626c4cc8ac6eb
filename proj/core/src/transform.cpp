#include "kempe/transform.hpp"

#include "kempe/recognize.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace kempe {

namespace {

bool contains(const std::vector<int>& xs, int x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::vector<int> sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

// lexicographically least k-subset of {1..t-1} containing `need`
std::vector<int> pad_colors(std::vector<int> need, int k, int t) {
    need = sorted_unique(std::move(need));
    for (int c : need)
        if (c < 1 || c >= t)
            throw engine_invariant_error("working color outside the low palette");
    if (static_cast<int>(need.size()) > k || k > t - 1)
        throw engine_invariant_error("working color set cannot reach the requested size");
    for (int c = 1; static_cast<int>(need.size()) < k; ++c)
        if (!contains(need, c))
            need.push_back(c);
    return sorted_unique(std::move(need));
}

int smallest_missing_low(const graph& g, const edge_coloring& f, int v) {
    std::set<int> present;
    for (const incidence& inc : g.incident(v))
        present.insert(f.color_of(g, inc.edge_id));
    for (int c = 1; c < f.t; ++c)
        if (!present.count(c))
            return c;
    return -1;
}

int colored_edge_at(const graph& g, const edge_coloring& f, int v, int c, int skip) {
    for (const incidence& inc : g.incident(v))
        if (inc.edge_id != skip && f.color_of(g, inc.edge_id) == c)
            return inc.edge_id;
    return -1;
}

void push_step(const graph& g, transformation_trace& tr, const edge_coloring& next, int limit) {
    if (tr.steps.empty()) {
        tr.steps.push_back({next, {}});
        return;
    }
    if (tr.steps.back().coloring == next)
        return;
    std::vector<int> moved = class_difference(g, tr.steps.back().coloring, next);
    if (limit > 0 && static_cast<int>(moved.size()) > limit)
        throw engine_invariant_error("transformation step exceeds the declared width");
    tr.steps.push_back({next, std::move(moved)});
}

void require_pair(const graph& g, const edge_coloring& f, const edge_coloring& goal, int q) {
    if (q < 2)
        throw std::invalid_argument("width parameter must be at least 2");
    if (f.t != goal.t)
        throw std::invalid_argument("palette mismatch between the two colorings");
    if (static_cast<int>(f.colors.size()) != g.edge_count() ||
        static_cast<int>(goal.colors.size()) != g.edge_count())
        throw std::invalid_argument("coloring size disagrees with the graph");
    if (!is_proper(g, f) || !is_proper(g, goal))
        throw std::invalid_argument("both colorings must be proper");
}

void check_component_walk(const graph& g, const std::vector<int>& verts,
                          const std::vector<int>& eids) {
    if (eids.empty() || verts.size() != eids.size() + 1)
        throw std::invalid_argument("component walk is malformed");
    for (std::size_t i = 0; i < eids.size(); ++i) {
        const edge& e = g.edge_by_id(eids[i]);
        int a = verts[i];
        int b2 = verts[i + 1];
        if (!((e.u == a && e.v == b2) || (e.u == b2 && e.v == a)))
            throw std::invalid_argument("component edges disagree with its vertex walk");
    }
}

// rotate a closed walk so it starts at v0 and opens with a t-colored edge
void rotate_cycle_walk(const graph& g, const edge_coloring& f, std::vector<int>& verts,
                       std::vector<int>& eids, int v0, int t) {
    const std::size_t n = eids.size();
    if (verts.front() != verts.back())
        throw std::invalid_argument("cycle walk must close");
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i)
        if (verts[i] == v0) {
            k = i;
            break;
        }
    if (k == n)
        throw std::invalid_argument("anchor vertex is not on the cycle");
    std::vector<int> nv(n + 1), ne(n);
    for (std::size_t i = 0; i <= n; ++i)
        nv[i] = verts[(k + i) % n];
    for (std::size_t i = 0; i < n; ++i)
        ne[i] = eids[(k + i) % n];
    if (f.color_of(g, ne[0]) != t) {
        std::reverse(nv.begin(), nv.end());
        std::reverse(ne.begin(), ne.end());
        if (f.color_of(g, ne[0]) != t)
            throw std::invalid_argument("anchor vertex has no top colored cycle edge");
    }
    verts = std::move(nv);
    eids = std::move(ne);
}

std::vector<int> class_edge_set(const graph& g, const edge_coloring& f, int c) {
    return color_class(g, f, c);
}

long top_overlap(const graph& g, const edge_coloring& f, const edge_coloring& h) {
    long n = 0;
    for (int i = 0; i < g.edge_count(); ++i)
        if (f.colors[i] == f.t && h.colors[i] == h.t)
            ++n;
    return n;
}

// ---------------------------------------------------------------------------
// the walk rewriter
//
// processes an even closed-or-open walk whose odd positions carry the top
// color, flipping the top class along the walk through a sequence of proper
// checkpoints. positions are 1-based for edges; vertex positions 0..N. an
// entry position may be designated so that a run starting exactly there is
// capped after one full lap of the cycle part.
// ---------------------------------------------------------------------------

struct walk_t {
    std::vector<int> verts;
    std::vector<int> eids;
};

class walk_rewriter {
public:
    walk_rewriter(const graph& g, const edge_coloring& start, walk_t w, int q, int c0,
                  int cap_entry, int cap_len, budget& b)
        : g_(g), q_(q), t_(start.t), walk_(std::move(w)), cap_entry_(cap_entry),
          cap_len_(cap_len), bud_(b), base_(start), cur_(start), scratch_(start) {
        n_ = static_cast<int>(walk_.eids.size());
        if (n_ < 2 || n_ % 2 != 0)
            throw engine_invariant_error("walk rewriter needs an even walk");
        if (walk_.verts.size() != walk_.eids.size() + 1)
            throw engine_invariant_error("walk shape mismatch");
        c0_ = c0;
    }

    // one off-walk edge forced onto the top color before the rewrite starts;
    // used when an odd component contributes its leading edge
    void preload(int edge_id, int color) {
        scratch_.set_color(g_, edge_id, color);
        base_ = scratch_;
    }

    std::vector<edge_coloring> run();

private:
    int color_at(int pos) const { return scratch_.color_of(g_, walk_.eids[pos - 1]); }

    struct run_result {
        int end = 0;
        bool capped = false;
    };

    run_result measure_run(int start, int s) {
        if (color_at(start + 1) != t_)
            throw engine_invariant_error("walk run must open on the top color");
        if (color_at(start + 2) != s)
            throw engine_invariant_error("walk run opens on the wrong companion color");
        const bool capping = cap_entry_ >= 0 && start == cap_entry_;
        int end = start + 2;
        while (end + 2 <= n_) {
            if (capping && end - start >= cap_len_)
                break;
            if (color_at(end + 1) != t_ || color_at(end + 2) != s)
                break;
            end += 2;
        }
        return {end, capping && end - start == cap_len_ && end < n_};
    }

    void flip_range(int lo, int hi, int a, int b2) {
        std::set<int> seen;
        for (int p = lo; p <= hi; ++p) {
            int eid = walk_.eids[p - 1];
            if (!seen.insert(eid).second)
                throw engine_invariant_error("swap range repeats a physical edge");
            int c = scratch_.color_of(g_, eid);
            if (c != a && c != b2)
                throw engine_invariant_error("swap range is not two-colored");
            scratch_.set_color(g_, eid, c == a ? b2 : a);
        }
    }

    // maximal two-colored path from v, first edge colored `first`; flips it
    void swap_chain_from(int v, int first, int second) {
        std::vector<int> path;
        int cur = v;
        int want = first;
        int prev = -1;
        while (true) {
            bud_.tick();
            int eid = colored_edge_at(g_, scratch_, cur, want, prev);
            if (eid == -1)
                break;
            path.push_back(eid);
            const edge& e = g_.edge_by_id(eid);
            cur = (e.u == cur) ? e.v : e.u;
            prev = eid;
            want = (want == first) ? second : first;
        }
        for (int eid : path) {
            int c = scratch_.color_of(g_, eid);
            scratch_.set_color(g_, eid, c == first ? second : first);
        }
    }

    void check_frontier(int pos, int banned, bool allow_one) const {
        int v = walk_.verts[pos];
        std::map<int, int> cnt;
        for (const incidence& inc : g_.incident(v))
            ++cnt[scratch_.color_of(g_, inc.edge_id)];
        if (cnt[t_] != 2)
            throw engine_invariant_error("frontier vertex must meet exactly two top edges");
        for (const auto& [c, k] : cnt) {
            if (c == t_)
                continue;
            int lim = (c == banned && !allow_one) ? 0 : 1;
            if (k > lim)
                throw engine_invariant_error("frontier vertex breaks its color budget");
        }
    }

    void check_proper_except(int pos) const {
        int allowed = pos >= 0 ? walk_.verts[pos] : -1;
        for (int v : g_.vertices()) {
            if (v == allowed)
                continue;
            std::set<int> seen;
            for (const incidence& inc : g_.incident(v))
                if (!seen.insert(scratch_.color_of(g_, inc.edge_id)).second)
                    throw engine_invariant_error("scratch coloring broke away from the frontier");
        }
    }

    void check_top_schedule(int prefix) const {
        std::map<int, int> flips;
        for (int p = 1; p <= prefix; ++p)
            ++flips[walk_.eids[p - 1]];
        for (const edge& e : g_.edges()) {
            bool base_top = base_.color_of(g_, e.id) == t_;
            auto it = flips.find(e.id);
            bool flip = it != flips.end() && it->second % 2 == 1;
            bool now_top = scratch_.color_of(g_, e.id) == t_;
            if (now_top != (base_top != flip))
                throw engine_invariant_error("top class drifted from the walk schedule");
        }
    }

    void check_anchored_classes() const {
        for (int c = 1; c <= t_; ++c) {
            if (c == t_ || contains(R_, c))
                continue;
            if (class_edge_set(g_, scratch_, c) != class_edge_set(g_, cur_, c))
                throw engine_invariant_error("scratch leaked outside the working colors");
        }
    }

    void emit(const edge_coloring& next) {
        propriety_report pr = check_proper(g_, next);
        if (!pr.proper)
            throw engine_invariant_error("attempted to emit an improper coloring");
        std::vector<int> moved = class_difference(g_, cur_, next);
        if (static_cast<int>(moved.size()) > q_ + 1)
            throw engine_invariant_error("emitted step exceeds the width bound");
        out_.push_back(next);
        cur_ = next;
    }

    const graph& g_;
    int q_;
    int t_;
    walk_t walk_;
    int cap_entry_;
    int cap_len_;
    budget& bud_;
    edge_coloring base_;
    edge_coloring cur_;
    edge_coloring scratch_;
    std::vector<edge_coloring> out_;
    std::vector<int> R_;
    int n_ = 0;
    int c0_ = -1;
};

std::vector<edge_coloring> walk_rewriter::run() {
    if (color_at(1) != t_)
        throw engine_invariant_error("walk must open on a top colored edge");
    if (c0_ < 1 || c0_ >= t_)
        throw engine_invariant_error("anchor color must sit below the top color");
    if (colored_edge_at(g_, scratch_, walk_.verts[0], c0_, -1) != -1)
        throw engine_invariant_error("anchor color is not missing at the walk origin");

    const int m = n_ / 2;

    // opening double run
    const int s0 = color_at(2);
    if (s0 == t_)
        throw engine_invariant_error("second walk edge carries the top color");
    int m0 = 1;
    while (m0 + 1 <= m && color_at(2 * m0 + 1) == t_ && color_at(2 * m0 + 2) == s0)
        ++m0;
    if (m0 == m)
        throw engine_invariant_error("two-colored walks take the direct exchange route");
    flip_range(1, 2 * m0, t_, s0);

    const int s1_first = color_at(2 * m0 + 2);
    if (s1_first == t_ || s1_first == s0)
        throw engine_invariant_error("walk colors collapsed at the opening");
    run_result first = measure_run(2 * m0, s1_first);
    flip_range(2 * m0 + 1, first.end, t_, s1_first);

    R_ = pad_colors({s0, s1_first, c0_}, q_, t_);

    if (first.end == n_) {
        edge_coloring fin = correction(g_, scratch_, R_, bud_);
        scratch_ = fin;
        emit(fin);
        return out_;
    }

    scratch_ = correction(g_, scratch_, R_, bud_);
    {
        std::set<int> present;
        for (const incidence& inc : g_.incident(walk_.verts[first.end]))
            present.insert(scratch_.color_of(g_, inc.edge_id));
        int beta = -1;
        for (int c : R_)
            if (!present.count(c)) {
                beta = c;
                break;
            }
        if (beta == -1)
            throw engine_invariant_error("no spare working color at the frontier");
        if (beta != s1_first)
            swap_chain_from(walk_.verts[first.end], s1_first, beta);
    }

    int s_cur = s0;
    int s_next = s1_first;
    int frontier = first.end;

    while (true) {
        bud_.tick();
        check_anchored_classes();
        check_frontier(frontier, s_next, false);
        check_proper_except(frontier);
        check_top_schedule(frontier);

        // proper checkpoint
        std::vector<int> emit_set;
        for (int c : R_)
            if (c != s_cur)
                emit_set.push_back(c);
        emit_set.push_back(t_);
        emit(correction(g_, scratch_, emit_set, bud_));

        // continue from the retained scratch state
        int mp = frontier;
        bool capped_l = false;
        if (color_at(frontier + 2) == s_next) {
            run_result lr = measure_run(frontier, s_next);
            flip_range(frontier + 1, lr.end, t_, s_next);
            if (lr.end == n_) {
                emit(scratch_);
                return out_;
            }
            mp = lr.end;
            capped_l = lr.capped;
        }
        check_frontier(mp, s_next, capped_l);
        check_proper_except(mp);

        const int s2 = color_at(mp + 2);
        if (s2 == t_)
            throw engine_invariant_error("companion color for the next run is the top color");
        run_result pr = measure_run(mp, s2);
        flip_range(mp + 1, pr.end, t_, s2);

        if (pr.end == n_) {
            propriety_report rep = check_proper(g_, scratch_);
            if (rep.proper) {
                emit(scratch_);
                return out_;
            }
            if (rep.vertex != walk_.verts[mp] || rep.color != s2)
                throw engine_invariant_error("terminal violation sits at the wrong place");
            std::vector<int> base;
            for (int c : R_)
                if (c != s_cur)
                    base.push_back(c);
            base.push_back(s2);
            edge_coloring fin = correction(g_, scratch_, pad_colors(base, q_, t_), bud_);
            scratch_ = fin;
            emit(fin);
            return out_;
        }

        check_frontier(pr.end, s2, pr.capped);
        check_proper_except(pr.end);

        std::vector<int> r_new;
        if (contains(R_, s2)) {
            r_new = R_;
        } else {
            for (int c : R_)
                if (c != s_cur)
                    r_new.push_back(c);
            r_new.push_back(s2);
            r_new = sorted_unique(std::move(r_new));
        }
        scratch_ = correction(g_, scratch_, r_new, bud_);

        {
            std::set<int> present;
            for (const incidence& inc : g_.incident(walk_.verts[pr.end]))
                present.insert(scratch_.color_of(g_, inc.edge_id));
            int beta = -1;
            for (int c : r_new)
                if (!present.count(c)) {
                    beta = c;
                    break;
                }
            if (beta == -1)
                throw engine_invariant_error("no spare working color at the frontier");
            if (beta != s2)
                swap_chain_from(walk_.verts[pr.end], s2, beta);
        }

        if (pr.end <= frontier)
            throw engine_invariant_error("walk frontier failed to advance");
        R_ = std::move(r_new);
        s_cur = s_next;
        s_next = s2;
        frontier = pr.end;
    }
}

// expected top class after flipping the walk: symmetric difference with the
// physical edge multiset of the walk
void check_frame(const graph& g, const edge_coloring& before, const edge_coloring& after,
                 const std::vector<int>& flipped_edges) {
    std::map<int, int> times;
    for (int eid : flipped_edges)
        ++times[eid];
    for (const edge& e : g.edges()) {
        bool was = before.color_of(g, e.id) == before.t;
        auto it = times.find(e.id);
        bool flip = it != times.end() && it->second % 2 == 1;
        bool now = after.color_of(g, e.id) == after.t;
        if (now != (was != flip))
            throw engine_invariant_error("rewrite moved the top class off its component");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// even path components
// ---------------------------------------------------------------------------

transformation_trace transform_even_path(const graph& g, const edge_coloring& f,
                                         const edge_coloring& goal,
                                         const difference_component& comp, int q, budget& b) {
    require_pair(g, f, goal, q);
    if (comp.shape != component_shape::path_even)
        throw std::invalid_argument("component is not an even path");
    const int t = f.t;
    if (t < q + 2)
        throw std::invalid_argument("palette too small for the staged rewrite");
    check_component_walk(g, comp.vertices, comp.edge_ids);

    std::vector<int> verts = comp.vertices;
    std::vector<int> eids = comp.edge_ids;
    if (f.color_of(g, eids[0]) != t) {
        std::reverse(verts.begin(), verts.end());
        std::reverse(eids.begin(), eids.end());
    }
    if (f.color_of(g, eids[0]) != t || f.color_of(g, eids.back()) == t)
        throw std::invalid_argument("path edges do not alternate against the top color");

    const int v0 = verts.front();
    const int c0 = smallest_missing_low(g, f, v0);
    if (c0 == -1)
        throw std::invalid_argument("path origin has no free low color");

    transformation_trace tr;
    tr.width = q + 1;
    push_step(g, tr, f, 0);

    const int s0 = f.color_of(g, eids[1]);
    bool two_colored = true;
    for (std::size_t i = 1; i < eids.size(); i += 2)
        if (f.color_of(g, eids[i]) != s0)
            two_colored = false;

    if (two_colored) {
        edge_coloring h = f;
        for (int eid : eids) {
            int c = h.color_of(g, eid);
            h.set_color(g, eid, c == t ? s0 : t);
        }
        if (colored_edge_at(g, f, v0, s0, -1) == -1) {
            if (!is_proper(g, h))
                throw engine_invariant_error("plain exchange left an improper coloring");
            push_step(g, tr, h, q + 1);
        } else {
            edge_coloring fin = correction(g, h, pad_colors({s0, c0}, q, t), b);
            if (!is_proper(g, fin))
                throw engine_invariant_error("corrected exchange left an improper coloring");
            push_step(g, tr, fin, q + 1);
        }
    } else {
        walk_rewriter rw(g, f, walk_t{verts, eids}, q, c0, -1, 0, b);
        for (const edge_coloring& step : rw.run())
            push_step(g, tr, step, q + 1);
    }

    check_frame(g, f, tr.last(), eids);
    return tr;
}

// ---------------------------------------------------------------------------
// odd path components
// ---------------------------------------------------------------------------

namespace {

transformation_trace odd_side(const graph& g, const edge_coloring& a,
                              const difference_component& comp, int q, budget& b) {
    const int t = a.t;
    const std::vector<int>& verts = comp.vertices;
    const std::vector<int>& eids = comp.edge_ids;

    transformation_trace tr;
    tr.width = q + 1;
    push_step(g, tr, a, 0);

    const int e0 = eids[0];
    const int c0 = a.color_of(g, e0);
    if (c0 == t)
        throw engine_invariant_error("odd rewrite started from the wrong side");

    if (eids.size() == 1) {
        if (colored_edge_at(g, a, verts[0], t, -1) != -1 ||
            colored_edge_at(g, a, verts[1], t, -1) != -1)
            throw std::invalid_argument("single edge rewrite needs the top color free at both ends");
        edge_coloring h = a;
        h.set_color(g, e0, t);
        push_step(g, tr, h, q + 1);
        return tr;
    }

    if (a.color_of(g, eids[1]) != t)
        throw std::invalid_argument("path edges do not alternate against the top color");

    const int s0 = a.color_of(g, eids[2]);
    bool two_colored = true;
    for (std::size_t i = 2; i < eids.size(); i += 2)
        if (a.color_of(g, eids[i]) != s0)
            two_colored = false;

    if (two_colored) {
        edge_coloring h = a;
        for (std::size_t i = 0; i + 1 < eids.size(); i += 2) {
            int ca = h.color_of(g, eids[i]);
            int cb = h.color_of(g, eids[i + 1]);
            h.set_color(g, eids[i], cb);
            h.set_color(g, eids[i + 1], ca);
        }
        h.set_color(g, eids.back(), t);
        if (is_proper(g, h)) {
            push_step(g, tr, h, q + 1);
        } else {
            edge_coloring fin = correction(g, h, pad_colors({c0, s0}, q, t), b);
            if (!is_proper(g, fin))
                throw engine_invariant_error("corrected exchange left an improper coloring");
            push_step(g, tr, fin, q + 1);
        }
    } else {
        walk_t w;
        w.verts.assign(verts.begin() + 1, verts.end());
        w.eids.assign(eids.begin() + 1, eids.end());
        walk_rewriter rw(g, a, w, q, c0, -1, 0, b);
        rw.preload(e0, t);
        for (const edge_coloring& step : rw.run())
            push_step(g, tr, step, q + 1);
    }

    check_frame(g, a, tr.last(), eids);
    return tr;
}

} // namespace

trace_pair transform_odd_path(const graph& g, const edge_coloring& f, const edge_coloring& goal,
                              const difference_component& comp, int q, budget& b) {
    require_pair(g, f, goal, q);
    if (comp.shape != component_shape::path_odd)
        throw std::invalid_argument("component is not an odd path");
    const int t = f.t;
    if (t < q + 2)
        throw std::invalid_argument("palette too small for the staged rewrite");
    check_component_walk(g, comp.vertices, comp.edge_ids);

    const bool f_leads = f.color_of(g, comp.edge_ids.front()) != t;
    if (f_leads != (f.color_of(g, comp.edge_ids.back()) != t))
        throw std::invalid_argument("odd component ends disagree about the top color");

    trace_pair out;
    if (f_leads) {
        out.lead = odd_side(g, f, comp, q, b);
        out.chase.width = q + 1;
        push_step(g, out.chase, goal, 0);
    } else {
        out.lead.width = q + 1;
        push_step(g, out.lead, f, 0);
        out.chase = odd_side(g, goal, comp, q, b);
    }

    for (int eid : comp.edge_ids) {
        bool a_top = out.lead.last().color_of(g, eid) == t;
        bool b_top = out.chase.last().color_of(g, eid) == t;
        if (a_top != b_top)
            throw engine_invariant_error("odd rewrite failed to reconcile the component");
    }
    return out;
}

// ---------------------------------------------------------------------------
// cycle components
// ---------------------------------------------------------------------------

transformation_trace transform_cycle_simple(const graph& g, const edge_coloring& f,
                                            const edge_coloring& goal,
                                            const difference_component& comp, int q, budget& b) {
    require_pair(g, f, goal, q);
    if (comp.shape != component_shape::cycle)
        throw std::invalid_argument("component is not a cycle");
    const int t = f.t;
    if (t < q + 2)
        throw std::invalid_argument("palette too small for the staged rewrite");
    check_component_walk(g, comp.vertices, comp.edge_ids);
    if (comp.vertices.front() != comp.vertices.back())
        throw std::invalid_argument("cycle walk must close");

    std::vector<int> verts = comp.vertices;
    std::vector<int> eids = comp.edge_ids;

    std::set<int> palette;
    for (int eid : eids)
        palette.insert(f.color_of(g, eid));

    transformation_trace tr;
    tr.width = q + 1;
    push_step(g, tr, f, 0);

    if (static_cast<int>(palette.size()) <= q + 1) {
        rotate_cycle_walk(g, f, verts, eids, verts.front(), t);
        edge_coloring h = f;
        for (std::size_t i = 0; i + 1 < eids.size(); i += 2) {
            int ca = h.color_of(g, eids[i]);
            int cb = h.color_of(g, eids[i + 1]);
            h.set_color(g, eids[i], cb);
            h.set_color(g, eids[i + 1], ca);
        }
        std::vector<int> low;
        for (int c : palette)
            if (c != t)
                low.push_back(c);
        edge_coloring fin = correction(g, h, pad_colors(low, q, t), b);
        if (!is_proper(g, fin))
            throw engine_invariant_error("corrected cycle exchange left an improper coloring");
        push_step(g, tr, fin, q + 1);
    } else {
        int v0 = -1;
        for (std::size_t i = 0; i + 1 < verts.size(); ++i)
            if (g.degree(verts[i]) < t && (v0 == -1 || verts[i] < v0))
                v0 = verts[i];
        if (v0 == -1)
            throw std::invalid_argument("cycle rewrite needs few colors or a low degree vertex");
        rotate_cycle_walk(g, f, verts, eids, v0, t);
        const int c0 = smallest_missing_low(g, f, v0);
        if (c0 == -1)
            throw engine_invariant_error("low degree cycle vertex has no free color");
        walk_rewriter rw(g, f, walk_t{verts, eids}, q, c0, -1, 0, b);
        for (const edge_coloring& step : rw.run())
            push_step(g, tr, step, q + 1);
    }

    check_frame(g, f, tr.last(), eids);
    return tr;
}

// ---------------------------------------------------------------------------
// cycle with a tail
// ---------------------------------------------------------------------------

transformation_trace transform_cycle_with_tail(const graph& g, const edge_coloring& f,
                                               const edge_coloring& goal,
                                               const difference_component& comp,
                                               const std::vector<int>& tail_vertices,
                                               const std::vector<int>& tail_edges, int q,
                                               budget& b) {
    require_pair(g, f, goal, q);
    if (comp.shape != component_shape::cycle)
        throw std::invalid_argument("component is not a cycle");
    const int t = f.t;
    if (t < q + 2)
        throw std::invalid_argument("palette too small for the staged rewrite");
    check_component_walk(g, comp.vertices, comp.edge_ids);
    if (comp.vertices.front() != comp.vertices.back())
        throw std::invalid_argument("cycle walk must close");
    check_component_walk(g, tail_vertices, tail_edges);

    std::set<int> cyc_edge_set(comp.edge_ids.begin(), comp.edge_ids.end());
    std::set<int> cyc_vert_set(comp.vertices.begin(), comp.vertices.end() - 1);
    {
        std::set<int> seen;
        for (int v : tail_vertices)
            if (!seen.insert(v).second)
                throw std::invalid_argument("tail revisits a vertex");
        for (std::size_t i = 0; i + 1 < tail_vertices.size(); ++i)
            if (cyc_vert_set.count(tail_vertices[i]))
                throw std::invalid_argument("tail touches the cycle before its terminus");
        if (!cyc_vert_set.count(tail_vertices.back()))
            throw std::invalid_argument("tail terminus must sit on the cycle");
        for (int eid : tail_edges)
            if (cyc_edge_set.count(eid))
                throw std::invalid_argument("tail reuses a cycle edge");
    }
    for (std::size_t i = 0; i + 1 < tail_edges.size(); ++i) {
        bool a_top = f.color_of(g, tail_edges[i]) == t;
        bool b_top = f.color_of(g, tail_edges[i + 1]) == t;
        if (a_top == b_top)
            throw std::invalid_argument("tail does not alternate against the top color");
    }
    {
        std::set<int> palette;
        for (int eid : comp.edge_ids)
            palette.insert(f.color_of(g, eid));
        if (static_cast<int>(palette.size()) < q + 2)
            throw std::invalid_argument("short palettes take the plain cycle route");
    }

    const int x = tail_vertices.front();
    const int v0 = tail_vertices.back();
    if (g.degree(x) >= t)
        throw std::invalid_argument("tail origin must have degree below the palette size");
    if (f.color_of(g, tail_edges.back()) == t)
        throw std::invalid_argument("tail must reach the cycle on a low color");

    std::vector<int> cyc_verts = comp.vertices;
    std::vector<int> cyc_eids = comp.edge_ids;
    rotate_cycle_walk(g, f, cyc_verts, cyc_eids, v0, t);

    const int l = static_cast<int>(tail_edges.size());
    const int cyc_len = static_cast<int>(cyc_eids.size());

    transformation_trace tr;
    tr.width = q + 1;
    push_step(g, tr, f, 0);

    std::vector<int> flipped(cyc_eids);

    if (f.color_of(g, tail_edges.front()) == t) {
        if (l % 2 != 0)
            throw std::invalid_argument("a top colored tail start forces an even tail");
        walk_t w;
        w.verts = tail_vertices;
        w.verts.insert(w.verts.end(), cyc_verts.begin() + 1, cyc_verts.end());
        for (int i = l - 1; i >= 0; --i)
            w.verts.push_back(tail_vertices[i]);
        w.eids = tail_edges;
        w.eids.insert(w.eids.end(), cyc_eids.begin(), cyc_eids.end());
        for (int i = l - 1; i >= 0; --i)
            w.eids.push_back(tail_edges[i]);

        const int c0 = smallest_missing_low(g, f, x);
        if (c0 == -1)
            throw engine_invariant_error("tail origin has no free low color");
        walk_rewriter rw(g, f, w, q, c0, l, cyc_len, b);
        for (const edge_coloring& step : rw.run())
            push_step(g, tr, step, q + 1);
    } else {
        if (l % 2 != 1)
            throw std::invalid_argument("a low colored tail start forces an odd tail");
        if (colored_edge_at(g, f, x, t, -1) != -1)
            throw std::invalid_argument("tail origin must miss the top color");

        // helper vertex so the trail opens and closes on the top color
        int a0 = g.vertices().empty() ? 0 : g.vertices().back() + 1;
        for (int v : g.vertices())
            a0 = std::max(a0, v + 1);
        int pend = 0;
        for (const edge& e : g.edges())
            pend = std::max(pend, e.id + 1);
        std::vector<int> vs = g.vertices();
        vs.push_back(a0);
        std::vector<edge> es = g.edges();
        es.push_back(edge{pend, x, a0});
        graph aug(vs, es, g.multigraph());

        edge_coloring fa;
        fa.t = t;
        fa.colors.resize(aug.edge_count());
        for (const edge& e : g.edges())
            fa.colors[aug.edge_index(e.id)] = f.color_of(g, e.id);
        fa.colors[aug.edge_index(pend)] = t;
        if (!is_proper(aug, fa))
            throw engine_invariant_error("helper edge broke propriety");

        walk_t w;
        w.verts.push_back(a0);
        w.verts.insert(w.verts.end(), tail_vertices.begin(), tail_vertices.end());
        w.verts.insert(w.verts.end(), cyc_verts.begin() + 1, cyc_verts.end());
        for (int i = l - 1; i >= 0; --i)
            w.verts.push_back(tail_vertices[i]);
        w.verts.push_back(a0);
        w.eids.push_back(pend);
        w.eids.insert(w.eids.end(), tail_edges.begin(), tail_edges.end());
        w.eids.insert(w.eids.end(), cyc_eids.begin(), cyc_eids.end());
        for (int i = l - 1; i >= 0; --i)
            w.eids.push_back(tail_edges[i]);
        w.eids.push_back(pend);

        walk_rewriter rw(aug, fa, w, q, 1, l + 1, cyc_len, b);
        for (const edge_coloring& step : rw.run()) {
            edge_coloring restricted;
            restricted.t = t;
            restricted.colors.resize(g.edge_count());
            for (const edge& e : g.edges())
                restricted.colors[g.edge_index(e.id)] = step.color_of(aug, e.id);
            push_step(g, tr, restricted, q + 1);
        }
    }

    check_frame(g, f, tr.last(), flipped);
    for (int eid : tail_edges) {
        bool was = f.color_of(g, eid) == t;
        bool now = tr.last().color_of(g, eid) == t;
        if (was != now)
            throw engine_invariant_error("tail edge lost its top class membership");
    }
    return tr;
}

// ---------------------------------------------------------------------------
// cycle behind a cutvertex
// ---------------------------------------------------------------------------

transformation_trace transform_cycle_cutvertex(const graph& g, const edge_coloring& f,
                                               const edge_coloring& goal,
                                               const difference_component& comp, int q,
                                               budget& b) {
    require_pair(g, f, goal, q);
    if (comp.shape != component_shape::cycle)
        throw std::invalid_argument("component is not a cycle");
    const int t = f.t;
    check_component_walk(g, comp.vertices, comp.edge_ids);

    block_decomposition bd = decompose_blocks(g);
    std::set<int> cuts(bd.cutvertices.begin(), bd.cutvertices.end());
    int v0 = -1;
    for (std::size_t i = 0; i + 1 < comp.vertices.size(); ++i)
        if (cuts.count(comp.vertices[i]) && (v0 == -1 || comp.vertices[i] < v0))
            v0 = comp.vertices[i];
    if (v0 == -1)
        throw std::invalid_argument("no cutvertex sits on the cycle");

    const std::vector<int>* blk = nullptr;
    for (const std::vector<int>& cand : bd.blocks)
        if (std::binary_search(cand.begin(), cand.end(), comp.edge_ids[0])) {
            blk = &cand;
            break;
        }
    if (!blk)
        throw engine_invariant_error("cycle edge missing from the block decomposition");
    for (int eid : comp.edge_ids)
        if (!std::binary_search(blk->begin(), blk->end(), eid))
            throw engine_invariant_error("cycle straddles blocks");

    std::set<int> present_in_block;
    for (const incidence& inc : g.incident(v0))
        if (std::binary_search(blk->begin(), blk->end(), inc.edge_id))
            present_in_block.insert(f.color_of(g, inc.edge_id));
    int c0 = -1;
    for (int c = 1; c < t; ++c)
        if (!present_in_block.count(c)) {
            c0 = c;
            break;
        }
    if (c0 == -1)
        throw engine_invariant_error("cutvertex sees every low color inside the block");

    int e_start = colored_edge_at(g, f, v0, c0, -1);
    if (e_start == -1)
        throw std::invalid_argument("cutvertex misses the escape color entirely");
    if (std::binary_search(blk->begin(), blk->end(), e_start))
        throw engine_invariant_error("escape edge landed inside the cycle block");

    std::set<int> on_cycle(comp.vertices.begin(), comp.vertices.end());
    std::vector<int> chain_verts{v0};
    std::vector<int> chain_eids;
    int cur = v0;
    int prev = -1;
    int want = c0;
    int eid = e_start;
    while (eid != -1) {
        b.tick();
        chain_eids.push_back(eid);
        const edge& e = g.edge_by_id(eid);
        cur = (e.u == cur) ? e.v : e.u;
        if (on_cycle.count(cur))
            throw engine_invariant_error("escape chain returned to the cycle");
        if (contains(chain_verts, cur))
            throw engine_invariant_error("escape chain revisited a vertex");
        chain_verts.push_back(cur);
        prev = eid;
        want = (want == c0) ? t : c0;
        eid = colored_edge_at(g, f, cur, want, prev);
    }

    std::vector<int> pv(chain_verts.rbegin(), chain_verts.rend());
    std::vector<int> pe(chain_eids.rbegin(), chain_eids.rend());
    return transform_cycle_with_tail(g, f, goal, comp, pv, pe, q, b);
}

// ---------------------------------------------------------------------------
// ear machinery
// ---------------------------------------------------------------------------

ear_subgraph find_ear_subgraph(const graph& g, const edge_coloring& f,
                               const std::vector<int>& cycle_vertices,
                               const std::vector<int>& cycle_edges,
                               const std::vector<int>& block_edges, budget& b) {
    const int t = f.t;
    check_component_walk(g, cycle_vertices, cycle_edges);
    if (cycle_vertices.front() != cycle_vertices.back())
        throw std::invalid_argument("ear search starts from a closed cycle");

    std::set<int> blk(block_edges.begin(), block_edges.end());
    for (int eid : cycle_edges)
        if (!blk.count(eid))
            throw std::invalid_argument("cycle edge outside the block");

    ear_subgraph out;
    out.cycle_vertices = cycle_vertices;
    out.cycle_edges = cycle_edges;

    std::set<int> hv(cycle_vertices.begin(), cycle_vertices.end());
    std::set<int> he(cycle_edges.begin(), cycle_edges.end());

    auto walk_out = [&](int v, int first_eid, ear_path& ear, bool& reentered) {
        ear.vertices = {v};
        ear.edge_ids.clear();
        ear.color = f.color_of(g, first_eid);
        int cur = v;
        int prev = -1;
        int want2 = ear.color;
        int eid = first_eid;
        std::set<int> seen{v};
        reentered = false;
        while (eid != -1) {
            b.tick();
            ear.edge_ids.push_back(eid);
            const edge& e = g.edge_by_id(eid);
            cur = (e.u == cur) ? e.v : e.u;
            ear.vertices.push_back(cur);
            if (hv.count(cur)) {
                reentered = true;
                return;
            }
            if (!seen.insert(cur).second)
                throw engine_invariant_error("ear walk revisited a vertex");
            prev = eid;
            want2 = (want2 == ear.color) ? t : ear.color;
            eid = -1;
            for (const incidence& inc : g.incident(cur))
                if (inc.edge_id != prev && blk.count(inc.edge_id) &&
                    f.color_of(g, inc.edge_id) == want2) {
                    eid = inc.edge_id;
                    break;
                }
        }
    };

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> hvs(hv.begin(), hv.end());
        for (int v : hvs) {
            for (const incidence& inc : g.incident(v)) {
                if (he.count(inc.edge_id) || !blk.count(inc.edge_id))
                    continue;
                if (f.color_of(g, inc.edge_id) == t)
                    throw engine_invariant_error("top colored edge escaped the ear subgraph");
                ear_path ear;
                bool back = false;
                walk_out(v, inc.edge_id, ear, back);
                if (!back)
                    continue;
                if (f.color_of(g, ear.edge_ids.back()) != ear.color)
                    throw engine_invariant_error("ear closed on the top color");
                for (std::size_t i = 1; i + 1 < ear.vertices.size(); ++i)
                    hv.insert(ear.vertices[i]);
                for (int eid : ear.edge_ids)
                    he.insert(eid);
                out.ears.push_back(std::move(ear));
                grew = true;
                break;
            }
            if (grew)
                break;
        }
    }

    // block degree restricted to the supplied edge set
    auto block_degree = [&](int v) {
        int d = 0;
        for (const incidence& inc : g.incident(v))
            if (blk.count(inc.edge_id))
                ++d;
        return d;
    };

    for (int v : hv)
        if (block_degree(v) < t && (!out.has_internal_low_vertex || v < out.low_vertex)) {
            out.has_internal_low_vertex = true;
            out.low_vertex = v;
        }
    if (out.has_internal_low_vertex)
        return out;

    for (int v : hv) {
        for (const incidence& inc : g.incident(v)) {
            if (he.count(inc.edge_id) || !blk.count(inc.edge_id))
                continue;
            ear_path ear;
            bool back = false;
            walk_out(v, inc.edge_id, ear, back);
            if (back)
                throw engine_invariant_error("ear growth stopped early");
            if (block_degree(ear.vertices.back()) >= t)
                throw engine_invariant_error("escape path ended at a saturated vertex");
            out.exit_path = std::move(ear);
            return out;
        }
    }
    throw std::invalid_argument("block is regular against the palette");
}

ear_path find_alternating_cv_path(const graph& g, const edge_coloring& f, const ear_subgraph& h,
                                  int v) {
    const int t = f.t;
    if (contains(h.cycle_vertices, v))
        return ear_path{{v}, {}, 0};

    std::size_t j = h.ears.size();
    for (std::size_t i = 0; i < h.ears.size(); ++i)
        if (contains(h.ears[i].vertices, v)) {
            j = i;
            break;
        }
    if (j == h.ears.size())
        throw std::invalid_argument("vertex is outside the ear subgraph");

    const ear_path& ear = h.ears[j];
    std::size_t k = 0;
    while (ear.vertices[k] != v)
        ++k;
    if (k == 0 || k + 1 == ear.vertices.size())
        throw engine_invariant_error("vertex should have appeared in an earlier ear");

    bool left_top = f.color_of(g, ear.edge_ids[k - 1]) == t;
    bool right_top = f.color_of(g, ear.edge_ids[k]) == t;
    if (left_top == right_top)
        throw engine_invariant_error("ear lost its alternation at an interior vertex");

    ear_path d1;
    d1.color = ear.color;
    if (left_top) {
        d1.vertices.assign(ear.vertices.begin(), ear.vertices.begin() + k + 1);
        d1.edge_ids.assign(ear.edge_ids.begin(), ear.edge_ids.begin() + k);
    } else {
        d1.vertices.assign(ear.vertices.begin() + k, ear.vertices.end());
        d1.edge_ids.assign(ear.edge_ids.begin() + k, ear.edge_ids.end());
        std::reverse(d1.vertices.begin(), d1.vertices.end());
        std::reverse(d1.edge_ids.begin(), d1.edge_ids.end());
    }

    const int z1 = d1.vertices.front();
    ear_path q = find_alternating_cv_path(g, f, h, z1);

    ear_path fpath;
    fpath.color = d1.color;
    fpath.vertices = q.vertices;
    fpath.vertices.insert(fpath.vertices.end(), d1.vertices.begin() + 1, d1.vertices.end());
    fpath.edge_ids = q.edge_ids;
    fpath.edge_ids.insert(fpath.edge_ids.end(), d1.edge_ids.begin(), d1.edge_ids.end());

    std::set<int> seen;
    for (int w : fpath.vertices)
        if (!seen.insert(w).second)
            throw engine_invariant_error("alternating path to the cycle self-intersects");
    for (std::size_t i = 0; i + 1 < fpath.edge_ids.size(); ++i) {
        bool a_top = f.color_of(g, fpath.edge_ids[i]) == t;
        bool b_top = f.color_of(g, fpath.edge_ids[i + 1]) == t;
        if (a_top == b_top)
            throw engine_invariant_error("alternating path to the cycle broke its alternation");
    }
    if (!fpath.edge_ids.empty() && f.color_of(g, fpath.edge_ids.back()) != t)
        throw engine_invariant_error("path to the vertex must close on its top edge");
    return fpath;
}

// ---------------------------------------------------------------------------
// regular bipartite step
// ---------------------------------------------------------------------------

namespace {

struct subset_component {
    std::vector<int> eids; // ascending
    std::vector<int> verts;
};

std::vector<subset_component> split_components(const graph& g, const std::vector<int>& eids) {
    std::map<int, int> root;
    for (int eid : eids) {
        const edge& e = g.edge_by_id(eid);
        root.emplace(e.u, e.u);
        root.emplace(e.v, e.v);
    }
    std::function<int(int)> find = [&](int v) {
        while (root[v] != v) {
            root[v] = root[root[v]];
            v = root[v];
        }
        return v;
    };
    for (int eid : eids) {
        const edge& e = g.edge_by_id(eid);
        root[find(e.u)] = find(e.v);
    }
    std::map<int, subset_component> comps;
    for (int eid : eids)
        comps[find(g.edge_by_id(eid).u)].eids.push_back(eid);
    std::vector<subset_component> out;
    for (auto& [r, c] : comps) {
        std::set<int> vs;
        for (int eid : c.eids) {
            vs.insert(g.edge_by_id(eid).u);
            vs.insert(g.edge_by_id(eid).v);
        }
        c.verts.assign(vs.begin(), vs.end());
        out.push_back(std::move(c));
    }
    return out;
}

// best proper recoloring of one component over the colors in S, maximizing the
// number of goal-top edges put on top; first maximum in lex order wins
struct component_choice {
    long gain = -1;
    std::vector<int> colors;
};

void best_recoloring(const graph& g, const std::vector<int>& S, int t,
                     const std::vector<char>& goal_top, const subset_component& comp,
                     budget& b, component_choice& best) {
    std::vector<int> chosen(comp.eids.size(), 0);
    std::map<int, std::set<int>> used;
    std::function<void(std::size_t, long)> rec = [&](std::size_t k, long gain) {
        b.tick();
        if (k == comp.eids.size()) {
            if (gain > best.gain) {
                best.gain = gain;
                best.colors = chosen;
            }
            return;
        }
        const edge& e = g.edge_by_id(comp.eids[k]);
        for (int c : S) {
            if (used[e.u].count(c) || used[e.v].count(c))
                continue;
            used[e.u].insert(c);
            used[e.v].insert(c);
            chosen[k] = c;
            long extra = (c == t && goal_top[g.edge_index(comp.eids[k])]) ? 1 : 0;
            rec(k + 1, gain + extra);
            used[e.u].erase(c);
            used[e.v].erase(c);
        }
    };
    rec(0, 0);
}

} // namespace

transformation_trace improve_toward(const graph& g, const edge_coloring& f,
                                    const edge_coloring& goal, int q, budget& b) {
    require_pair(g, f, goal, q);
    const int t = f.t;
    if (class_edge_set(g, f, t) == class_edge_set(g, goal, t))
        throw std::invalid_argument("top classes already agree");

    std::vector<char> goal_top(g.edge_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i)
        goal_top[i] = goal.colors[i] == t ? 1 : 0;
    const long current = top_overlap(g, f, goal);

    std::vector<std::vector<int>> subsets;
    if (t == 2) {
        subsets.push_back({1, 2});
    } else {
        for (int a = 1; a < t; ++a)
            for (int c = a + 1; c < t; ++c)
                subsets.push_back({a, c, t});
    }

    for (const std::vector<int>& S : subsets) {
        std::vector<int> eids;
        for (int i = 0; i < g.edge_count(); ++i)
            if (contains(S, f.colors[i]))
                eids.push_back(g.edges()[i].id);
        if (eids.empty())
            continue;

        long total = 0;
        std::vector<std::pair<const subset_component*, component_choice>> picks;
        std::vector<subset_component> comps = split_components(g, eids);
        bool feasible = true;
        for (const subset_component& comp : comps) {
            component_choice best;
            best_recoloring(g, S, t, goal_top, comp, b, best);
            if (best.gain < 0) {
                feasible = false;
                break;
            }
            total += best.gain;
            picks.emplace_back(&comp, std::move(best));
        }
        if (!feasible || total <= current)
            continue;

        edge_coloring h = f;
        for (auto& [comp, choice] : picks)
            for (std::size_t k = 0; k < comp->eids.size(); ++k)
                h.set_color(g, comp->eids[k], choice.colors[k]);
        if (!is_proper(g, h))
            throw engine_invariant_error("subset recoloring lost propriety");
        if (static_cast<int>(class_difference(g, f, h).size()) > 3)
            throw engine_invariant_error("subset recoloring is wider than three classes");

        transformation_trace tr;
        tr.width = q + 1;
        push_step(g, tr, f, 0);
        push_step(g, tr, h, q + 1);
        return tr;
    }
    throw hypothesis_refuted("no recoloring across three classes grows the top overlap");
}

// ---------------------------------------------------------------------------
// full rewrite
// ---------------------------------------------------------------------------

namespace {

// deterministic scan for a tail usable by the trail rewrite: a two-colored
// chain leaving the cycle at one vertex and never returning
bool find_direct_tail(const graph& g, const edge_coloring& f,
                      const difference_component& comp, std::vector<int>& pv,
                      std::vector<int>& pe, budget& b) {
    const int t = f.t;
    std::set<int> on_cycle(comp.vertices.begin(), comp.vertices.end());
    std::set<int> cyc_edges(comp.edge_ids.begin(), comp.edge_ids.end());
    std::vector<int> anchors(comp.vertices.begin(), comp.vertices.end() - 1);
    std::sort(anchors.begin(), anchors.end());
    for (int v : anchors) {
        for (const incidence& inc : g.incident(v)) {
            if (cyc_edges.count(inc.edge_id))
                continue;
            int c = f.color_of(g, inc.edge_id);
            if (c == t)
                continue;
            std::vector<int> verts{v};
            std::vector<int> eids;
            int cur = v;
            int prev = -1;
            int want = c;
            int eid = inc.edge_id;
            bool ok = true;
            while (eid != -1) {
                b.tick();
                eids.push_back(eid);
                const edge& e = g.edge_by_id(eid);
                cur = (e.u == cur) ? e.v : e.u;
                if (on_cycle.count(cur)) {
                    ok = false;
                    break;
                }
                verts.push_back(cur);
                prev = eid;
                want = (want == c) ? t : c;
                eid = colored_edge_at(g, f, cur, want, prev);
            }
            if (!ok)
                continue;
            pv.assign(verts.rbegin(), verts.rend());
            pe.assign(eids.rbegin(), eids.rend());
            return true;
        }
    }
    return false;
}

transformation_trace rewrite_cycle_component(const graph& g, const edge_coloring& f,
                                             const edge_coloring& goal,
                                             const difference_component& comp, int q,
                                             budget& b) {
    const int t = f.t;
    std::set<int> palette;
    for (int eid : comp.edge_ids)
        palette.insert(f.color_of(g, eid));
    bool low_vertex = false;
    for (std::size_t i = 0; i + 1 < comp.vertices.size(); ++i)
        if (g.degree(comp.vertices[i]) < t)
            low_vertex = true;

    if (static_cast<int>(palette.size()) <= q + 1 || low_vertex)
        return transform_cycle_simple(g, f, goal, comp, q, b);

    block_decomposition bd = decompose_blocks(g);
    std::set<int> cuts(bd.cutvertices.begin(), bd.cutvertices.end());
    for (std::size_t i = 0; i + 1 < comp.vertices.size(); ++i)
        if (cuts.count(comp.vertices[i]))
            return transform_cycle_cutvertex(g, f, goal, comp, q, b);

    const std::vector<int>* blk = nullptr;
    for (const std::vector<int>& cand : bd.blocks)
        if (std::binary_search(cand.begin(), cand.end(), comp.edge_ids[0])) {
            blk = &cand;
            break;
        }
    if (!blk)
        throw engine_invariant_error("cycle edge missing from the block decomposition");

    std::set<int> bverts;
    for (int eid : *blk) {
        bverts.insert(g.edge_by_id(eid).u);
        bverts.insert(g.edge_by_id(eid).v);
    }
    auto block_degree = [&](int v) {
        int d = 0;
        for (const incidence& inc : g.incident(v))
            if (std::binary_search(blk->begin(), blk->end(), inc.edge_id))
                ++d;
        return d;
    };
    bool regular = true;
    for (int v : bverts)
        if (block_degree(v) != t)
            regular = false;

    if (regular) {
        graph bsub = subgraph_on_edges(g, *blk);
        if (!is_bipartite(bsub).bipartite)
            throw hypothesis_refuted("stuck on a regular non-bipartite block");
        return improve_toward(g, f, goal, q, b);
    }

    // ear route
    ear_subgraph h = find_ear_subgraph(g, f, comp.vertices, comp.edge_ids, *blk, b);
    ear_path fpath;
    int x;
    if (h.has_internal_low_vertex) {
        x = h.low_vertex;
        fpath = find_alternating_cv_path(g, f, h, x);
    } else {
        ear_path head = find_alternating_cv_path(g, f, h, h.exit_path.vertices.front());
        fpath.vertices = head.vertices;
        fpath.vertices.insert(fpath.vertices.end(), h.exit_path.vertices.begin() + 1,
                              h.exit_path.vertices.end());
        fpath.edge_ids = head.edge_ids;
        fpath.edge_ids.insert(fpath.edge_ids.end(), h.exit_path.edge_ids.begin(),
                              h.exit_path.edge_ids.end());
        x = h.exit_path.vertices.back();
    }

    bool usable = g.degree(x) < t && !fpath.edge_ids.empty();
    if (usable && f.color_of(g, fpath.edge_ids.back()) != t)
        usable = colored_edge_at(g, f, x, t, -1) == -1;
    if (usable) {
        std::vector<int> pv(fpath.vertices.rbegin(), fpath.vertices.rend());
        std::vector<int> pe(fpath.edge_ids.rbegin(), fpath.edge_ids.rend());
        return transform_cycle_with_tail(g, f, goal, comp, pv, pe, q, b);
    }

    std::vector<int> pv, pe;
    if (find_direct_tail(g, f, comp, pv, pe, b))
        return transform_cycle_with_tail(g, f, goal, comp, pv, pe, q, b);

    try {
        return improve_toward(g, f, goal, q, b);
    } catch (const hypothesis_refuted&) {
        throw budget_exceeded("no improving step found within the searched move family");
    }
}

} // namespace

transformation_trace transform(const graph& g, const edge_coloring& f, const edge_coloring& goal,
                               int q, budget& b) {
    if (q < 3)
        throw std::invalid_argument("full rewrite needs a width parameter of at least 3");
    require_pair(g, f, goal, q);
    const int t = f.t;

    transformation_trace tr;
    tr.width = q + 1;
    push_step(g, tr, f, 0);
    if (f == goal)
        return tr;

    if (t <= q + 1) {
        push_step(g, tr, goal, q + 1);
        return tr;
    }

    transformation_trace tail;
    tail.width = q + 1;
    push_step(g, tail, goal, 0);

    edge_coloring cur_f = f;
    edge_coloring cur_g = goal;
    long guard = static_cast<long>(g.edge_count()) + 2;

    while (class_edge_set(g, cur_f, t) != class_edge_set(g, cur_g, t)) {
        if (--guard < 0)
            throw engine_invariant_error("top class reconciliation failed to progress");
        b.tick();
        long before = top_overlap(g, cur_f, cur_g);

        difference_graph_t dg = difference_graph(g, cur_f, cur_g);
        const difference_component* pick = nullptr;
        for (const difference_component& c : dg.components)
            if (c.shape != component_shape::cycle) {
                pick = &c;
                break;
            }
        if (!pick)
            pick = &dg.components.front();

        if (pick->shape == component_shape::path_even) {
            transformation_trace sub = transform_even_path(g, cur_f, cur_g, *pick, q, b);
            for (std::size_t i = 1; i < sub.steps.size(); ++i)
                push_step(g, tr, sub.steps[i].coloring, q + 1);
            cur_f = tr.last();
        } else if (pick->shape == component_shape::path_odd) {
            trace_pair pr = transform_odd_path(g, cur_f, cur_g, *pick, q, b);
            for (std::size_t i = 1; i < pr.lead.steps.size(); ++i)
                push_step(g, tr, pr.lead.steps[i].coloring, q + 1);
            for (std::size_t i = 1; i < pr.chase.steps.size(); ++i)
                push_step(g, tail, pr.chase.steps[i].coloring, q + 1);
            cur_f = tr.last();
            cur_g = tail.last();
        } else {
            transformation_trace sub = rewrite_cycle_component(g, cur_f, cur_g, *pick, q, b);
            for (std::size_t i = 1; i < sub.steps.size(); ++i)
                push_step(g, tr, sub.steps[i].coloring, q + 1);
            cur_f = tr.last();
        }

        if (top_overlap(g, cur_f, cur_g) <= before)
            throw engine_invariant_error("component rewrite failed to grow the top overlap");
    }

    // strip the aligned top class and reconcile the rest one palette down
    std::vector<int> rest;
    for (int i = 0; i < g.edge_count(); ++i)
        if (cur_f.colors[i] != t)
            rest.push_back(g.edges()[i].id);
    graph g2 = induced_subgraph(g, rest);

    edge_coloring f2, g2c;
    f2.t = t - 1;
    g2c.t = t - 1;
    f2.colors.resize(g2.edge_count());
    g2c.colors.resize(g2.edge_count());
    for (int i = 0; i < g2.edge_count(); ++i) {
        int eid = g2.edges()[i].id;
        f2.colors[i] = cur_f.color_of(g, eid);
        g2c.colors[i] = cur_g.color_of(g, eid);
    }

    transformation_trace sub = transform(g2, f2, g2c, q, b);
    for (std::size_t i = 1; i < sub.steps.size(); ++i) {
        edge_coloring lifted = cur_f;
        for (int k = 0; k < g2.edge_count(); ++k)
            lifted.set_color(g, g2.edges()[k].id, sub.steps[i].coloring.colors[k]);
        push_step(g, tr, lifted, q + 1);
    }

    for (std::size_t i = tail.steps.size(); i-- > 1;)
        push_step(g, tr, tail.steps[i - 1].coloring, q + 1);

    if (tr.last() != goal)
        throw engine_invariant_error("rewrite missed its goal coloring");
    return tr;
}

// ---------------------------------------------------------------------------
// trace serialization
// ---------------------------------------------------------------------------

std::string trace_to_json(const graph& g, const transformation_trace& tr) {
    nlohmann::ordered_json j;
    j["n"] = tr.width;
    j["steps"] = nlohmann::ordered_json::array();
    for (const trace_step& st : tr.steps) {
        nlohmann::ordered_json s;
        s["coloring"] = nlohmann::ordered_json::parse(coloring_to_json(g, st.coloring));
        s["changed"] = st.changed;
        j["steps"].push_back(std::move(s));
    }
    return j.dump();
}

transformation_trace trace_from_json(const graph& g, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("trace is not valid json: ") + e.what());
    }
    if (!j.is_object())
        throw parse_error("trace must be a json object");
    for (const auto& [key, val] : j.items())
        if (key != "n" && key != "steps")
            throw parse_error("unknown trace field: " + key);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw parse_error("trace needs an integer width field n");
    if (!j.contains("steps") || !j["steps"].is_array() || j["steps"].empty())
        throw parse_error("trace needs a nonempty steps array");

    transformation_trace tr;
    tr.width = j["n"].get<int>();
    for (const auto& s : j["steps"]) {
        if (!s.is_object())
            throw parse_error("trace step must be an object");
        for (const auto& [key, val] : s.items())
            if (key != "coloring" && key != "changed")
                throw parse_error("unknown trace step field: " + key);
        if (!s.contains("coloring") || !s.contains("changed") || !s["changed"].is_array())
            throw parse_error("trace step needs coloring and changed fields");
        trace_step st;
        st.coloring = coloring_from_json(g, s["coloring"].dump());
        for (const auto& c : s["changed"]) {
            if (!c.is_number_integer())
                throw parse_error("changed entries must be integers");
            st.changed.push_back(c.get<int>());
        }
        tr.steps.push_back(std::move(st));
    }
    return tr;
}

} // namespace kempe
