#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinstrata/automorphism.hpp"
#include "spinstrata/rst.hpp"

namespace spinstrata {

enum class Verdict { Smooth, CanonicalSingular, NonCanonicalSingular };

const char* verdict_name(Verdict v);

// A declared generator of the subgroup of Aut(C) lifting to the spin curve,
// tagged as elliptic-tail-involution or not.  The tag is redundant data and is
// checked against the structure of the datum.
struct LiftingGenerator {
    AutomorphismDatum datum;
    bool is_eta2 = false;
};

// Throws BadFlag when a tag disagrees with the structural test, and validates
// each datum against the graph.
void validate_lifting_generators(const DualGraph& g, const std::vector<LiftingGenerator>& gens);

struct StratumClassification {
    Verdict verdict = Verdict::CanonicalSingular;
    bool sigma_tree_like = false;
    // first declared generator that is not an elliptic tail involution
    std::optional<std::string> offending_generator;
    // vertex id of the j-invariant-0 tail with trivial theta characteristic
    std::optional<int> tail_witness_vertex;
};

// The boundary stratum is smooth iff the contraction Sigma(X) is tree-like
// and every declared lifting generator is an elliptic tail involution.
bool smoothness_criterion(const SpinSupport& support, const std::vector<LiftingGenerator>& gens);

// Smooth / CanonicalSingular / NonCanonicalSingular; the non-canonical locus
// is exactly the strata with a smooth elliptic tail of j-invariant 0 whose
// theta characteristic restricts trivially.  Throws GenusTooSmall below genus
// 4 and MissingThetaFlag when a j-invariant-0 tail lacks its triviality flag.
StratumClassification classify_stratum(const SpinSupport& support, const SpinStructureLabel& labels,
                                       const std::vector<LiftingGenerator>& gens);

// Whether the stable curve lies under the singular locus of the spin moduli
// space: true iff its dual graph is not tree-like or Aut(C) has a
// non-elliptic-tail generator.
bool pi_sing_image_test(const DualGraph& graph, const std::vector<LiftingGenerator>& aut_generators);

// Minimal contribution w of a component type to the Reid–Shepherd-Barron–Tai
// sum, by type and number of markings.  Throws NotInTable for combinations
// that cannot occur.
Rational component_weight(ComponentType type, int markings);

// tau-level closure of the lifted automorphism group: canonical lifts of the
// declared generators together with all single-bit inessential twists.
std::vector<MonomialAction> lifted_tau_group(const SpinSupport& support,
                                             const std::vector<LiftingGenerator>& gens,
                                             long long cap = 1000000);

// Image of a tau-level group in the Prill quotient (deduplicated, sorted).
std::vector<MonomialAction> prill_image(const std::vector<MonomialAction>& tau_group);

// Brute-force smoothness: the group equals the closure of its own
// quasireflections.
bool smooth_by_closure(const std::vector<MonomialAction>& tau_group);

// Shape of a non-canonical witness: identity permutation and all nontrivial
// scalars confined to the node slot and block of a single smooth elliptic
// tail, with third-root exponents there.
bool witness_shape_ok(const SpinSupport& support, const MonomialAction& u_element);

// Smooths every cycle of non-disconnecting nodes whose scalar product is 1:
// those edges are contracted, their slots re-emerge as block coordinates of
// the merged components, and the action is transported verbatim.  Throws
// NotFromSpinDatum when the action does not have the slot structure of a spin
// automorphism, WrongLevel off tau level.
std::pair<SpinSupport, MonomialAction> singularity_reduce(const SpinSupport& support,
                                                          const MonomialAction& action);

} // namespace spinstrata
