#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinstrata/monomial_action.hpp"
#include "spinstrata/spin_support.hpp"

namespace spinstrata {

// How an automorphism of the stable curve restricts to each component.  The
// elliptic types are automorphisms of a genus-1 component fixing the marked
// nodes setwise; the j-class of the component limits which orders occur.
enum class ComponentType {
    Identity,
    Elliptic2,
    Elliptic3,
    Elliptic4,
    Elliptic6,
    RationalOrder2,
    RationalOrder4,
    HyperellipticG2,
    HyperellipticG3,
    BiellipticG2,
};

int component_type_order(ComponentType t);
const char* component_type_name(ComponentType t);
std::optional<ComponentType> component_type_from_name(const std::string& name);

// Curve-level automorphism data: permutations of components and nodes,
// a restriction type per component, the derivative scalar on each node
// coordinate (t_i -> scalar * t_{sigma(i)}), and optional explicit eigenvalue
// exponents for the action on each component block (defaults are derived from
// the component type when absent).
struct AutomorphismDatum {
    std::string name;
    std::vector<int> vertex_perm; // by vertex index
    std::vector<int> edge_perm;   // by edge index
    std::vector<ComponentType> component_type;
    std::vector<RootOfUnity> node_scalar_t;
    std::vector<std::optional<std::vector<Rational>>> block_exponents;
    std::optional<bool> liftable;
    std::optional<bool> is_eta2_flag;
};

// Identity datum sized for the graph.
AutomorphismDatum identity_datum(const DualGraph& g, std::string name = "id");

// Structural validation: bijective perms preserving endpoints, genus and
// decorations; component types constant on orbits and consistent with genus /
// j-class / special tags; block overrides sized to the block with exponent
// denominators dividing the type order.  Throws IncompatibleDatum / BadFlag.
void validate_datum(const DualGraph& g, const AutomorphismDatum& d);

// Per-hop block exponents for a vertex (override if present, else type
// defaults).  `deg` counts loops twice.
std::vector<Rational> block_exponents_for(const DualGraph& g, const AutomorphismDatum& d, int vertex_idx);
std::vector<Rational> default_block_exponents(ComponentType t, int genus, int deg);

// An elliptic-tail automorphism of order 2: the involution of a one-marked
// genus-1 tail (smooth tail: Elliptic2 on a degree-1 genus-1 vertex; singular
// tail: RationalOrder2 on a genus-0 vertex carrying one loop and one bridge),
// identity everywhere else, derivative -1 on the tail node.
bool is_eta2_datum(const DualGraph& g, const AutomorphismDatum& d);

// For a pure automorphism of one smooth elliptic tail (identity elsewhere):
// its order (2, 3, 4 or 6); nullopt when the datum has any other shape.
std::optional<int> elliptic_tail_order(const DualGraph& g, const AutomorphismDatum& d);
// vertex index of the nontrivial tail for such data
std::optional<int> elliptic_tail_vertex(const DualGraph& g, const AutomorphismDatum& d);

// Lifting rules that hold unconditionally: order-2 elliptic-tail automorphisms
// always lift to the spin curve; order-3/6 tail automorphisms lift exactly
// when the theta characteristic is trivial on the tail.  Everything else needs
// the caller-supplied flag.
std::optional<bool> auto_lift_rule(const DualGraph& g, const AutomorphismDatum& d,
                                   const SpinStructureLabel& labels);
// rule first, then the datum's own flag; MissingFlag when neither settles it
bool resolve_liftable(const DualGraph& g, const AutomorphismDatum& d, const SpinStructureLabel& labels);

// Number of lifts of the automorphism to the spin curve: 0 when the node
// permutation fails to preserve the exceptional set or the datum does not
// lift; otherwise 2^(number of Delta-components).
long long lifting_count(const SpinSupport& support, const AutomorphismDatum& d, bool liftable);

// A lift of the curve automorphism to the spin bundle: square roots of the
// node scalars over exceptional nodes and an inessential twist, one bit per
// Delta-component.
struct SpinAutomorphismDatum {
    AutomorphismDatum base;
    std::vector<RootOfUnity> node_scalar_tau; // per edge; equals node_scalar_t on Delta
    std::vector<std::uint8_t> gamma;          // per Delta-component
};

// Checks tau^2 = t over N and tau = t over Delta; throws InconsistentSquareRoot.
void validate_spin_datum(const SpinSupport& support, const SpinAutomorphismDatum& d);

// The lift whose tau exponents are half the t exponents (the other lifts
// differ by inessential twists).
SpinAutomorphismDatum canonical_spin_lift(const SpinSupport& support, const AutomorphismDatum& d);

// Pure inessential automorphism for a pattern of bits over Delta-components.
SpinAutomorphismDatum inessential_datum(const SpinSupport& support, std::vector<std::uint8_t> gamma);

// The monomial action on tau-level coordinates: node slot e maps to slot
// sigma(e) with scalar tau_e * (-1)^(gamma_j + gamma_j') where j, j' are the
// Delta-components at e's endpoints (exceptional nodes only); block coordinate
// (v, i) maps to (sigma v, i) with the vertex's i-th block exponent.
MonomialAction tau_action(const SpinSupport& support, const SpinAutomorphismDatum& d,
                          std::shared_ptr<const CoordinateSystem> sys);
MonomialAction tau_action(const SpinSupport& support, const SpinAutomorphismDatum& d);

// Generators of the quasireflection subgroup: tau_e -> -tau_e for each other
// disconnecting exceptional node (order 2), tau_e -> i*tau_e for each tail
// node (order 4); nothing else.
std::vector<MonomialAction> quasireflection_generators(const SpinSupport& support,
                                                       std::shared_ptr<const CoordinateSystem> sys);
std::vector<MonomialAction> quasireflection_generators(const SpinSupport& support);

// All single-bit inessential actions (a generating set of the inessential
// subgroup's image).
std::vector<MonomialAction> inessential_generators(const SpinSupport& support,
                                                   std::shared_ptr<const CoordinateSystem> sys);

} // namespace spinstrata
