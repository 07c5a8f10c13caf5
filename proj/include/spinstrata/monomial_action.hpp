#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "spinstrata/coordinates.hpp"
#include "spinstrata/rational.hpp"

namespace spinstrata {

// A monomial map on a coordinate system: coordinate x_i is sent to
// scalar_i * x_{perm(i)}.  Composition follows substitution, so
// (b after a)(x_i) = scalar_a(i) * scalar_b(perm_a(i)) * x_{perm_b(perm_a(i))}.
// The permutation always respects slot kinds, node classes and block
// boundaries; scalars are exact roots of unity.
struct MonomialAction {
    std::shared_ptr<const CoordinateSystem> system;
    std::vector<int> perm;
    std::vector<RootOfUnity> scalar;

    static MonomialAction identity(std::shared_ptr<const CoordinateSystem> sys);

    bool is_identity() const;
    std::int64_t order() const;

    bool operator==(const MonomialAction& o) const { return perm == o.perm && scalar == o.scalar; }
    bool operator<(const MonomialAction& o) const;
};

MonomialAction compose(const MonomialAction& outer, const MonomialAction& inner);
MonomialAction inverse(const MonomialAction& a);

// Eigenvalue exponents as a sorted multiset: a permutation cycle of length m
// whose scalars multiply to exponent R contributes (R + j)/m mod 1 for
// j = 0..m-1.
std::vector<Rational> eigen_exponents(const MonomialAction& a);

// eigenvalue 1 with multiplicity exactly dim-1
bool is_quasireflection(const MonomialAction& a);

// Quotient by the quasireflection subgroup: on node slots the scalar exponent
// is multiplied by 4 (tail nodes) or 2 (other disconnecting exceptional
// nodes); everything else is untouched.  Requires level Tau, produces level U.
MonomialAction prill_quotient(const MonomialAction& a,
                              std::shared_ptr<const CoordinateSystem> u_system);
MonomialAction prill_quotient(const MonomialAction& a);

struct MonomialActionHash {
    std::size_t operator()(const MonomialAction& a) const;
};

// BFS closure of the generated group, returned sorted in a canonical order.
// Throws CapExceeded when the closure grows past `cap` elements.
std::vector<MonomialAction> group_closure(const std::vector<MonomialAction>& generators,
                                          long long cap = 1000000);

} // namespace spinstrata
