#include "kempe/trace_check.hpp"

#include <map>
#include <set>
#include <string>

namespace kempe {

namespace {

trace_check_report fail(std::string reason) {
    return {false, std::move(reason)};
}

} // namespace

trace_check_report check_trace(const graph& g, const transformation_trace& tr) {
    if (tr.steps.empty())
        return fail("trace has no steps");
    if (tr.width < 0)
        return fail("declared width is negative");
    if (!tr.steps.front().changed.empty())
        return fail("first step already declares changed classes");

    const int t = tr.steps.front().coloring.t;
    const std::size_t m = g.edges().size();

    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
        const std::string at = " at step " + std::to_string(i);
        const edge_coloring& c = tr.steps[i].coloring;
        if (c.t != t)
            return fail("palette size drifts" + at);
        if (c.colors.size() != m)
            return fail("color list length mismatch" + at);
        for (std::size_t k = 0; k < m; ++k)
            if (c.colors[k] < 1 || c.colors[k] > t)
                return fail("color out of range" + at);

        std::map<int, std::set<int>> seen;
        for (std::size_t k = 0; k < m; ++k) {
            const edge& e = g.edges()[k];
            if (!seen[e.u].insert(c.colors[k]).second)
                return fail("improper coloring" + at + " near vertex " + std::to_string(e.u));
            if (!seen[e.v].insert(c.colors[k]).second)
                return fail("improper coloring" + at + " near vertex " + std::to_string(e.v));
        }

        if (i == 0)
            continue;

        std::set<int> moved;
        for (std::size_t k = 0; k < m; ++k) {
            int a = tr.steps[i - 1].coloring.colors[k];
            int b = c.colors[k];
            if (a != b) {
                moved.insert(a);
                moved.insert(b);
            }
        }
        std::set<int> declared(tr.steps[i].changed.begin(), tr.steps[i].changed.end());
        if (declared.size() != tr.steps[i].changed.size())
            return fail("changed classes repeat" + at);
        if (declared != moved)
            return fail("recorded class changes disagree with the colorings" + at);
        if (static_cast<int>(moved.size()) > tr.width)
            return fail("step wider than the declared bound" + at);
    }
    return {true, ""};
}

} // namespace kempe
