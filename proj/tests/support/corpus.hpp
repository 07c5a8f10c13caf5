#pragma once

// Deterministic corpus of small stable dual graphs shared by the unit tests,
// the acceptance checks and the benchmarks. Seeded generation, never random
// across runs.

#include "spinstrata/dual_graph.hpp"

#include <optional>
#include <random>

namespace corpus {

using namespace spinstrata;

inline std::optional<DualGraph> random_graph(std::mt19937& rng) {
    int V = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Vertex> vs;
    for (int i = 0; i < V; ++i) {
        Vertex v;
        v.id = i;
        v.genus = std::uniform_int_distribution<int>(0, 3)(rng);
        if (v.genus == 1) v.dec.j_class = JClass::Generic;
        vs.push_back(v);
    }
    std::vector<Edge> es;
    int eid = 0;
    for (int i = 1; i < V; ++i) {
        Edge e;
        e.id = eid++;
        e.u = std::uniform_int_distribution<int>(0, i - 1)(rng);
        e.v = i;
        es.push_back(e);
    }
    int extra = std::uniform_int_distribution<int>(0, 12 - (V - 1))(rng);
    for (int k = 0; k < extra; ++k) {
        Edge e;
        e.id = eid++;
        e.u = std::uniform_int_distribution<int>(0, V - 1)(rng);
        e.v = std::uniform_int_distribution<int>(0, V - 1)(rng);
        es.push_back(e); // loops allowed
    }
    try {
        return make_graph(std::move(vs), std::move(es));
    } catch (const SpinError&) {
        return std::nullopt; // unstable or disconnected draw, caller retries
    }
}

// 200 connected stable graphs, each with at most 12 edges
inline const std::vector<DualGraph>& graphs() {
    static const std::vector<DualGraph> gs = [] {
        std::vector<DualGraph> out;
        std::mt19937 rng(91657u);
        while (out.size() < 200)
            if (auto g = random_graph(rng)) out.push_back(std::move(*g));
        return out;
    }();
    return gs;
}

} // namespace corpus
