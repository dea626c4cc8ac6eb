#include "kempe/witness.hpp"

#include "kempe/families.hpp"
#include "kempe/recognize.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace kempe {

witness_result witness_search(
    const std::function<std::optional<graph>()>& next_candidate,
    const std::function<bool(const graph&, budget&, index_report&)>& accept, budget& b,
    std::uint64_t candidate_node_limit, std::size_t candidate_coloring_cap) {
    std::size_t tried = 0;
    while (auto cand = next_candidate()) {
        ++tried;
        b.tick();
        budget sub(candidate_node_limit);
        index_report report;
        bool ok = false;
        try {
            ok = accept(*cand, sub, report);
        } catch (const budget_exceeded&) {
            ok = false;
        } catch (const cap_exceeded&) {
            ok = false;
        }
        b.tick(sub.used());
        if (ok)
            return witness_result{std::move(*cand), std::move(report), tried};
    }
    throw hypothesis_refuted("candidate stream drained after " + std::to_string(tried) +
                             " graphs without a witness");
}

namespace {

// preorder child-count sequences of plane trees on n vertices; root degree 3
// or 4, every other internal vertex 2 or 3 children. lex ascending
std::vector<std::vector<int>> bounded_plane_trees(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> seq;
    // pending = subtrees promised but not yet placed
    std::function<void(int, int)> grow = [&](int placed, int pending) {
        if (placed == n) {
            if (pending == 0)
                out.push_back(seq);
            return;
        }
        if (pending == 0 || pending > n - placed)
            return;
        const bool at_root = placed == 0;
        for (int c : at_root ? std::vector<int>{3, 4} : std::vector<int>{0, 2, 3}) {
            seq.push_back(c);
            grow(placed + 1, pending - 1 + c);
            seq.pop_back();
        }
    };
    grow(0, 1);
    return out;
}

plane_tree tree_from_preorder(const std::vector<int>& seq) {
    plane_tree t;
    t.children.resize(seq.size());
    std::vector<std::pair<int, int>> stack{{0, seq[0]}};
    for (int id = 1; id < static_cast<int>(seq.size()); ++id) {
        while (stack.back().second == 0)
            stack.pop_back();
        --stack.back().second;
        t.children[stack.back().first].push_back(id);
        stack.emplace_back(id, seq[id]);
    }
    return t;
}

bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> c) {
    return (a.first < c.first && c.first < a.second && a.second < c.second) ||
           (c.first < a.first && a.first < c.second && c.second < a.second);
}

// pairwise non-crossing s-subsets of diags, lex ascending over sorted indices
std::vector<std::vector<int>> noncrossing_subsets(const std::vector<std::pair<int, int>>& diags,
                                                  int s, budget& b) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    std::function<void(int)> grow = [&](int from) {
        if (static_cast<int>(pick.size()) == s) {
            b.tick();
            out.push_back(pick);
            return;
        }
        for (int i = from; i < static_cast<int>(diags.size()); ++i) {
            bool clean = true;
            for (int j : pick)
                if (diagonals_cross(diags[j], diags[i])) {
                    clean = false;
                    break;
                }
            if (!clean)
                continue;
            pick.push_back(i);
            grow(i + 1);
            pick.pop_back();
        }
    };
    grow(0);
    return out;
}

graph polygon_with_chords(int m, const std::vector<std::pair<int, int>>& chords) {
    std::vector<int> vs(m);
    for (int i = 0; i < m; ++i)
        vs[i] = i;
    std::vector<edge> es;
    for (int i = 0; i < m; ++i)
        es.push_back({i, i, (i + 1) % m});
    int id = m;
    for (auto [u, v] : chords)
        es.push_back({id++, u, v});
    return graph(vs, es);
}

// walks (m, chord subset) pairs in the documented order and hands out graphs
class dissection_stream {
public:
    dissection_stream(int min_m, int max_m, int m_step, bool odd_span_only, budget& b)
        : m_(min_m - m_step), max_m_(max_m), step_(m_step), odd_only_(odd_span_only), b_(b) {}

    std::optional<graph> next() {
        while (true) {
            if (at_ < static_cast<int>(subsets_.size())) {
                std::vector<std::pair<int, int>> chosen;
                for (int i : subsets_[at_])
                    chosen.push_back(diags_[i]);
                ++at_;
                return polygon_with_chords(m_, chosen);
            }
            if (size_ < static_cast<int>(diags_.size())) {
                ++size_;
                subsets_ = noncrossing_subsets(diags_, size_, b_);
                at_ = 0;
                continue;
            }
            if (m_ + step_ > max_m_)
                return std::nullopt;
            m_ += step_;
            diags_.clear();
            for (int i = 0; i < m_; ++i)
                for (int j = i + 2; j < m_; ++j) {
                    if (i == 0 && j == m_ - 1)
                        continue;
                    if (odd_only_ && (j - i) % 2 == 0)
                        continue;
                    diags_.emplace_back(i, j);
                }
            size_ = 0;
            subsets_ = {{}};
            at_ = 0;
        }
    }

private:
    int m_;
    int max_m_;
    int step_;
    bool odd_only_;
    budget& b_;
    std::vector<std::pair<int, int>> diags_;
    std::vector<std::vector<int>> subsets_;
    int size_ = 0;
    int at_ = 0;
};

// nondecreasing path lengths, every length of the same parity so all cycles
// close even, at most one unit path (a second would double the pole edge),
// at least three paths. Grouped by path count, then lexicographic.
std::vector<std::vector<int>> theta_tuples(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> grow = [&](int min_l, int left) {
        if (left == 0 && cur.size() >= 3)
            out.push_back(cur);
        for (int l = min_l; l - 1 <= left; l += 2) {
            if (l == 1 && !cur.empty())
                continue;
            cur.push_back(l);
            grow(l, left - (l - 1));
            cur.pop_back();
        }
    };
    grow(1, n - 2);
    grow(2, n - 2);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

// poles 0 and 1 joined by internally disjoint paths; internal vertices and
// edge ids run consecutively path by path
graph theta_graph(const std::vector<int>& lens) {
    std::vector<int> vs = {0, 1};
    std::vector<edge> es;
    int next_v = 2;
    int id = 0;
    for (int l : lens) {
        int prev = 0;
        for (int k = 1; k < l; ++k) {
            vs.push_back(next_v);
            es.push_back({id++, prev, next_v});
            prev = next_v++;
        }
        es.push_back({id++, prev, 1});
    }
    return graph(vs, es);
}

} // namespace

witness_result find_halin_index4(int max_vertices, budget& b) {
    int n = 3;
    std::vector<std::vector<int>> trees;
    std::size_t at = 0;
    auto stream = [&]() -> std::optional<graph> {
        while (true) {
            if (at < trees.size())
                return halin(tree_from_preorder(trees[at++])).g;
            if (++n > max_vertices)
                return std::nullopt;
            trees = bounded_plane_trees(n);
            at = 0;
        }
    };
    auto accept = [](const graph& g, budget& sub, index_report& out) {
        if (g.max_degree() != 4)
            return false;
        out = chi_trans_exact(g, sub, default_candidate_coloring_cap);
        return out.chi_trans == 4;
    };
    return witness_search(stream, accept, b);
}

witness_result find_outerplanar_index4(int max_vertices, budget& b) {
    dissection_stream ds(3, max_vertices, 1, false, b);
    auto accept = [](const graph& g, budget& sub, index_report& out) {
        if (g.max_degree() != 4)
            return false;
        out = chi_trans_exact(g, sub, default_candidate_coloring_cap);
        return out.chi_trans == 4;
    };
    return witness_search([&ds] { return ds.next(); }, accept, b);
}

witness_result find_planar_bipartite_kempe3(int max_vertices, budget& b) {
    int n = 4;
    std::vector<std::vector<int>> tuples;
    std::size_t at = 0;
    auto stream = [&]() -> std::optional<graph> {
        while (at >= tuples.size()) {
            if (++n > max_vertices)
                return std::nullopt;
            tuples = theta_tuples(n);
            at = 0;
        }
        b.tick();
        return theta_graph(tuples[at++]);
    };
    auto accept = [](const graph& g, budget& sub, index_report& out) {
        out = chi_trans_exact(g, sub, default_candidate_coloring_cap);
        return out.chi_trans == 3;
    };
    return witness_search(stream, accept, b);
}

bool rigid_under_triples(const graph& g, const std::vector<edge_coloring>& colorings) {
    if (colorings.empty())
        return true;
    const int t = colorings.front().t;

    auto classes_of = [&](const edge_coloring& f) {
        std::vector<std::vector<int>> by_color(t + 1);
        for (const edge& e : g.edges())
            by_color[f.color_of(g, e.id)].push_back(e.id);
        return by_color;
    };

    std::vector<std::vector<std::vector<int>>> split;
    split.reserve(colorings.size());
    for (const edge_coloring& f : colorings)
        split.push_back(classes_of(f));

    for (std::size_t i = 0; i < colorings.size(); ++i)
        for (std::size_t j = i + 1; j < colorings.size(); ++j)
            for (int c = 1; c <= t; ++c) {
                if (split[i][c] != split[j][c])
                    continue;
                std::set<std::vector<int>> rest_i, rest_j;
                for (int d = 1; d <= t; ++d)
                    if (d != c) {
                        rest_i.insert(split[i][d]);
                        rest_j.insert(split[j][d]);
                    }
                if (rest_i != rest_j)
                    return false;
            }
    return true;
}

} // namespace kempe
