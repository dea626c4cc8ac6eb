#include <benchmark/benchmark.h>

#include <kempe/coloring.hpp>
#include <kempe/enumerate.hpp>
#include <kempe/families.hpp>
#include <kempe/graph.hpp>
#include <kempe/transform.hpp>

namespace {

void BM_wheel_lex_coloring(benchmark::State& state) {
    kempe::graph g = kempe::wheel(static_cast<int>(state.range(0)));
    int t = g.max_degree();
    for (auto _ : state) {
        kempe::budget b;
        auto f = kempe::find_proper_coloring_lex(g, t, b);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_wheel_lex_coloring)->Arg(6)->Arg(8);

void BM_exact_index_six_cycle(benchmark::State& state) {
    kempe::graph g = kempe::clique_ring(1, 3);
    for (auto _ : state) {
        kempe::budget b;
        auto r = kempe::chi_trans_exact(g, b);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_exact_index_six_cycle);

void BM_transform_wheel(benchmark::State& state) {
    kempe::graph g = kempe::wheel(6);
    int t = g.max_degree();
    kempe::budget setup;
    kempe::edge_coloring f = *kempe::find_proper_coloring_lex(g, t, setup);
    kempe::edge_coloring h = f;
    for (const kempe::edge& e : g.edges()) {
        int c = h.color_of(g, e.id);
        if (c == 1)
            h.set_color(g, e.id, t);
        else if (c == t)
            h.set_color(g, e.id, 1);
    }
    for (auto _ : state) {
        kempe::budget b;
        auto tr = kempe::transform(g, f, h, 3, b);
        benchmark::DoNotOptimize(tr);
    }
}
BENCHMARK(BM_transform_wheel);

void BM_blocks_of_glued_family(benchmark::State& state) {
    kempe::graph g = kempe::glued_family(3, 4, kempe::clique_ring(1, 4));
    for (auto _ : state) {
        auto bd = kempe::decompose_blocks(g);
        benchmark::DoNotOptimize(bd);
    }
}
BENCHMARK(BM_blocks_of_glued_family);

} // namespace

BENCHMARK_MAIN();
