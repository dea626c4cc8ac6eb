#include "kempe/vertex.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace kempe {

std::string vertex_partition::to_json() const {
    nlohmann::ordered_json j;
    j["classes"] = nlohmann::ordered_json::array();
    for (const auto& cls : classes)
        j["classes"].push_back(cls);
    return j.dump();
}

namespace {

// assigns class indices over vertices in ascending order; a vertex may only
// open class max_used+1, so each partition shows up exactly once
void scan_partitions(const graph& g, int k, budget& b, std::size_t cap, bool stop_at_first,
                     std::vector<vertex_partition>& out) {
    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    std::vector<int> assign(n, -1);

    auto independent = [&](int vi, int cls) {
        for (const incidence& inc : g.incident(vs[vi])) {
            int oi = g.vertex_index(inc.other);
            if (oi < vi && assign[oi] == cls)
                return false;
        }
        return true;
    };

    std::function<void(int, int)> place = [&](int vi, int used) {
        if (!out.empty() && stop_at_first)
            return;
        b.tick();
        if (vi == n) {
            vertex_partition p;
            p.classes.resize(used);
            for (int i = 0; i < n; ++i)
                p.classes[assign[i]].push_back(vs[i]);
            if (out.size() >= cap)
                throw cap_exceeded("more than " + std::to_string(cap) + " partitions");
            out.push_back(std::move(p));
            return;
        }
        int top = std::min(used, k - 1);
        for (int cls = 0; cls <= top; ++cls) {
            if (!independent(vi, cls))
                continue;
            assign[vi] = cls;
            place(vi + 1, std::max(used, cls + 1));
            assign[vi] = -1;
        }
    };
    place(0, 0);
}

} // namespace

vertex_chromatic_result chromatic_number(const graph& g, budget& b) {
    if (g.vertices().empty())
        return {0, {}};
    for (int k = 1; k <= g.vertex_count(); ++k) {
        std::vector<vertex_partition> found;
        scan_partitions(g, k, b, 1, true, found);
        if (!found.empty())
            return {k, std::move(found.front())};
    }
    throw engine_invariant_error("vertex count many classes always suffice");
}

std::vector<vertex_partition> enumerate_partitions(const graph& g, int k, budget& b,
                                                   std::size_t cap) {
    if (k < 1)
        throw std::invalid_argument("partition class count must be positive");
    std::vector<vertex_partition> out;
    scan_partitions(g, k, b, cap, false, out);
    return out;
}

bool global_transformation_required(const graph& g, int k, budget& b) {
    auto parts = enumerate_partitions(g, k, b);
    if (parts.size() != 2)
        throw std::invalid_argument("rigidity is defined for exactly two partitions, found " +
                                    std::to_string(parts.size()));
    std::set<std::vector<int>> first(parts[0].classes.begin(), parts[0].classes.end());
    for (const auto& cls : parts[1].classes)
        if (first.count(cls))
            return false;
    return true;
}

} // namespace kempe
