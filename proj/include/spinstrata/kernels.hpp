#pragma once

#include <vector>

#include "spinstrata/monomial_action.hpp"
#include "spinstrata/rst.hpp"

namespace spinstrata {

// Brute-force scans exist in two interchangeable flavours; the serial one is
// the reference implementation the parallel one is tested against.
enum class Exec { Serial, Parallel };

// True when every vertex meets an even number of non-loop edges of the subset.
bool is_even_subset(const DualGraph& g, EdgeMask subset);

// Count/list even subsets by scanning all 2^|E| subsets (the cycle-space
// enumeration in DualGraph::even_subsets is the fast path this checks).
long long brute_even_subset_count(const DualGraph& g, Exec exec);
std::vector<EdgeMask> brute_even_subsets(const DualGraph& g, Exec exec);

// rst_min over a batch of group elements (identities yield 0).
std::vector<Rational> batch_min_sums(const std::vector<MonomialAction>& elements, Exec exec);

} // namespace spinstrata
