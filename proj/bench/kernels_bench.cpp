// Serial vs OpenMP-parallel reference kernels on the two hot paths: the
// 2^E even-subset scan and batched minimum Reid-Shepherd-Barron-Tai sums
// over a group closure.

#include <benchmark/benchmark.h>

#include "spinstrata/automorphism.hpp"
#include "spinstrata/kernels.hpp"

using namespace spinstrata;

namespace {

// two vertices of genus 2 joined by `edges` parallel edges
DualGraph parallel_graph(int edges) {
    std::vector<Vertex> vs(2);
    vs[0].id = 0;
    vs[0].genus = 2;
    vs[1].id = 1;
    vs[1].genus = 2;
    std::vector<Edge> es(static_cast<std::size_t>(edges));
    for (int i = 0; i < edges; ++i) {
        es[static_cast<std::size_t>(i)].id = i;
        es[static_cast<std::size_t>(i)].u = 0;
        es[static_cast<std::size_t>(i)].v = 1;
    }
    return make_graph(vs, es);
}

// genus-0 center carrying `tails` elliptic tails; every tail edge is a tail
// node of the full support, so the quasireflection closure has 4^tails
// elements
std::vector<MonomialAction> tail_closure(int tails) {
    std::vector<Vertex> vs(static_cast<std::size_t>(tails) + 1);
    vs[0].id = 0;
    vs[0].genus = 0;
    for (int i = 1; i <= tails; ++i) {
        vs[static_cast<std::size_t>(i)].id = i;
        vs[static_cast<std::size_t>(i)].genus = 1;
        vs[static_cast<std::size_t>(i)].dec.j_class = JClass::Generic;
    }
    std::vector<Edge> es(static_cast<std::size_t>(tails));
    for (int i = 0; i < tails; ++i) {
        es[static_cast<std::size_t>(i)].id = i;
        es[static_cast<std::size_t>(i)].u = 0;
        es[static_cast<std::size_t>(i)].v = i + 1;
    }
    DualGraph g = make_graph(vs, es);
    SpinSupport s = make_support(g, g.full_mask());
    return group_closure(quasireflection_generators(s), 1 << 20);
}

void BM_EvenCount(benchmark::State& state, Exec exec) {
    DualGraph g = parallel_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_even_subset_count(g, exec));
    state.SetComplexityN(state.range(0));
}

void BM_EvenList(benchmark::State& state, Exec exec) {
    DualGraph g = parallel_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto masks = brute_even_subsets(g, exec);
        benchmark::DoNotOptimize(masks.data());
    }
}

void BM_MinSums(benchmark::State& state, Exec exec) {
    auto group = tail_closure(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto mins = batch_min_sums(group, exec);
        benchmark::DoNotOptimize(mins.data());
    }
    state.counters["group"] = static_cast<double>(group.size());
}

} // namespace

BENCHMARK_CAPTURE(BM_EvenCount, serial, Exec::Serial)->DenseRange(14, 20, 2);
BENCHMARK_CAPTURE(BM_EvenCount, parallel, Exec::Parallel)->DenseRange(14, 20, 2);
BENCHMARK_CAPTURE(BM_EvenList, serial, Exec::Serial)->Arg(16)->Arg(18);
BENCHMARK_CAPTURE(BM_EvenList, parallel, Exec::Parallel)->Arg(16)->Arg(18);
BENCHMARK_CAPTURE(BM_MinSums, serial, Exec::Serial)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK_CAPTURE(BM_MinSums, parallel, Exec::Parallel)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
