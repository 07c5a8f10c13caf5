#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spinstrata/monomial_action.hpp"

namespace spinstrata {

// Reid–Shepherd-Barron–Tai data of one group element.  Writing the element's
// eigenvalues as powers zeta^{a_j} of a primitive n-th root zeta = zeta_n^k,
// the sum with respect to zeta is (1/n) * sum a_j; the criterion minimizes
// over all primitive roots.
struct RstReport {
    std::int64_t n = 1; // order of the element
    std::vector<Rational> eigen;
    std::vector<std::pair<std::int64_t, Rational>> sums_by_k; // ascending k, gcd(k,n)=1
    Rational min_sum;
    std::int64_t witness_k = 1; // smallest k attaining the minimum
    bool quasireflection = false;
};

// Sum for one primitive index: a_j = k^{-1} (n e_j) mod n.  Throws
// BadPrimitiveIndex when gcd(k, n) != 1 or some denominator does not divide n.
Rational rst_sum(const std::vector<Rational>& exponents, std::int64_t n, std::int64_t k);

// Full report over all primitive indices; ties resolved by smallest k.
// Throws TrivialElement on the identity.
RstReport rst_min(const MonomialAction& a);

// Minimum over primitive roots for a bare diagonal exponent multiset (n = lcm
// of denominators); 0 for the all-zero multiset.  Used for per-component
// weight checks.
Rational min_rst_of_exponents(const std::vector<Rational>& exponents);

// The Reid–Shepherd-Barron–Tai criterion over a group without
// quasireflections: canonical iff every nontrivial element has min_sum >= 1.
// Returns the first offending element's report (in the group's order)
// otherwise.  Throws QuasireflectionPresent if the precondition fails.
std::pair<bool, std::optional<RstReport>> canonical_oracle(const std::vector<MonomialAction>& group);

} // namespace spinstrata
