#include "spinstrata/kernels.hpp"

#include <algorithm>

#ifdef SPINSTRATA_HAVE_OPENMP
#include <omp.h>
#endif

namespace spinstrata {

bool is_even_subset(const DualGraph& g, EdgeMask subset) {
    std::vector<char> odd(g.vertices().size(), 0);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        if (!(subset >> i & 1) || g.edges()[i].is_loop()) continue;
        odd[static_cast<std::size_t>(g.vertex_index(g.edges()[i].u))] ^= 1;
        odd[static_cast<std::size_t>(g.vertex_index(g.edges()[i].v))] ^= 1;
    }
    return std::none_of(odd.begin(), odd.end(), [](char c) { return c != 0; });
}

long long brute_even_subset_count(const DualGraph& g, Exec exec) {
    const long long total = 1LL << g.edges().size();
    long long count = 0;
    if (exec == Exec::Parallel) {
#ifdef SPINSTRATA_HAVE_OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
        for (long long m = 0; m < total; ++m)
            if (is_even_subset(g, static_cast<EdgeMask>(m))) ++count;
        return count;
#endif
    }
    for (long long m = 0; m < total; ++m)
        if (is_even_subset(g, static_cast<EdgeMask>(m))) ++count;
    return count;
}

std::vector<EdgeMask> brute_even_subsets(const DualGraph& g, Exec exec) {
    const long long total = 1LL << g.edges().size();
    std::vector<EdgeMask> out;
    if (exec == Exec::Parallel) {
#ifdef SPINSTRATA_HAVE_OPENMP
        std::vector<char> flag(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
        for (long long m = 0; m < total; ++m)
            flag[static_cast<std::size_t>(m)] = is_even_subset(g, static_cast<EdgeMask>(m)) ? 1 : 0;
        for (long long m = 0; m < total; ++m)
            if (flag[static_cast<std::size_t>(m)]) out.push_back(static_cast<EdgeMask>(m));
        return out;
#endif
    }
    for (long long m = 0; m < total; ++m)
        if (is_even_subset(g, static_cast<EdgeMask>(m))) out.push_back(static_cast<EdgeMask>(m));
    return out;
}

std::vector<Rational> batch_min_sums(const std::vector<MonomialAction>& elements, Exec exec) {
    std::vector<Rational> out(elements.size(), Rational(0));
    if (exec == Exec::Parallel) {
#ifdef SPINSTRATA_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (!elements[i].is_identity()) out[i] = rst_min(elements[i]).min_sum;
        return out;
#endif
    }
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (!elements[i].is_identity()) out[i] = rst_min(elements[i]).min_sum;
    return out;
}

} // namespace spinstrata
