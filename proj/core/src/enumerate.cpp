#include <kempe/enumerate.hpp>

#include <kempe/errors.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace kempe {

std::vector<edge_coloring> enumerate_colorings(const graph& g, int t, budget& b,
                                               std::size_t cap) {
    if (t < 0)
        throw std::invalid_argument("negative palette");
    std::size_t m = g.edges().size();
    std::vector<edge_coloring> out;

    // used[vi * (t+1) + c] counts edges of color c at vertex index vi
    std::vector<int> used(g.vertices().size() * (t + 1), 0);
    std::vector<int> assign(m, 0);

    auto vi = [&](int v) { return static_cast<std::size_t>(g.vertex_index(v)); };

    auto emit = [&]() {
        if (out.size() >= cap)
            throw cap_exceeded("more than " + std::to_string(cap) + " colorings");
        edge_coloring f;
        f.t = t;
        f.colors = assign;
        out.push_back(std::move(f));
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            emit();
            return;
        }
        const edge& e = g.edges()[i];
        std::size_t u = vi(e.u), v = vi(e.v);
        for (int c = 1; c <= t; ++c) {
            b.tick();
            if (used[u * (t + 1) + c] || used[v * (t + 1) + c])
                continue;
            used[u * (t + 1) + c] = 1;
            used[v * (t + 1) + c] = 1;
            assign[i] = c;
            self(self, i + 1);
            used[u * (t + 1) + c] = 0;
            used[v * (t + 1) + c] = 0;
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

struct union_find {
    std::vector<std::size_t> parent;

    explicit union_find(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t component_count() {
        std::size_t c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i)
            if (find(i) == i)
                ++c;
        return c;
    }
};

// colorings joined when they agree outside some n-subset of the palette.
// One palette subset is processed at a time: colorings sharing the masked
// assignment (subset colors wiped to 0) differ only inside the subset.
union_find components_at_width(const std::vector<edge_coloring>& cols, int t, int n,
                               budget& b) {
    union_find uf(cols.size());
    if (cols.empty() || t <= 0)
        return uf;
    std::size_t m = cols[0].colors.size();
    for (unsigned mask = 0; mask < (1u << t); ++mask) {
        if (__builtin_popcount(mask) != n)
            continue;
        std::unordered_map<std::string, std::size_t> first_with_key;
        first_with_key.reserve(cols.size() * 2);
        for (std::size_t i = 0; i < cols.size(); ++i) {
            b.tick();
            std::string key(m, '\0');
            for (std::size_t e = 0; e < m; ++e) {
                int c = cols[i].colors[e];
                key[e] = (mask >> (c - 1)) & 1 ? '\0' : static_cast<char>(c);
            }
            auto [it, inserted] = first_with_key.try_emplace(std::move(key), i);
            if (!inserted)
                uf.unite(i, it->second);
        }
    }
    return uf;
}

} // namespace

index_report chi_trans_exact(const graph& g, budget& b, std::size_t cap) {
    auto ci = chromatic_index(g, b);
    int t = ci.chi_prime;
    auto cols = enumerate_colorings(g, t, b, cap);

    index_report r;
    r.chi_prime = t;
    r.coloring_count = cols.size();

    if (cols.size() <= 1) {
        r.chi_trans = 2;
        r.kempe_class_count = cols.empty() ? 0 : 1;
        for (int n = 2; n <= t; ++n)
            r.connectivity.push_back({n, true});
        return r;
    }

    int first_connected = 0;
    for (int n = 2; n <= t; ++n) {
        auto uf = components_at_width(cols, t, n, b);
        std::size_t parts = uf.component_count();
        r.connectivity.push_back({n, parts == 1});
        if (n == 2)
            r.kempe_class_count = parts;
        if (parts == 1 && first_connected == 0)
            first_connected = n;
    }
    if (first_connected == 0)
        throw engine_invariant_error("coloring space disconnected at full width");
    r.chi_trans = first_connected;
    return r;
}

std::vector<std::vector<std::size_t>> kempe_classes(const graph& g, int t, budget& b,
                                                    std::size_t cap) {
    auto cols = enumerate_colorings(g, t, b, cap);
    auto uf = components_at_width(cols, t, 2, b);
    std::unordered_map<std::size_t, std::size_t> root_to_slot;
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        std::size_t root = uf.find(i);
        auto [it, inserted] = root_to_slot.try_emplace(root, classes.size());
        if (inserted)
            classes.push_back({});
        classes[it->second].push_back(i);
    }
    return classes;
}

std::string index_report::to_json() const {
    nlohmann::ordered_json j;
    j["chi_prime"] = chi_prime;
    j["coloring_count"] = coloring_count;
    j["chi_trans"] = chi_trans;
    j["kempe_classes"] = kempe_class_count;
    j["connectivity"] = nlohmann::ordered_json::array();
    for (auto [n, conn] : connectivity) {
        nlohmann::ordered_json row;
        row["n"] = n;
        row["connected"] = conn;
        j["connectivity"].push_back(row);
    }
    return j.dump();
}

} // namespace kempe
