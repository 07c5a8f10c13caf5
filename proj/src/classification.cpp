#include "spinstrata/classification.hpp"

#include <algorithm>
#include <numeric>

namespace spinstrata {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Smooth: return "smooth";
        case Verdict::CanonicalSingular: return "canonical_singular";
        case Verdict::NonCanonicalSingular: return "non_canonical_singular";
    }
    return "?";
}

void validate_lifting_generators(const DualGraph& g, const std::vector<LiftingGenerator>& gens) {
    for (const LiftingGenerator& gen : gens) {
        validate_datum(g, gen.datum);
        bool structural = is_eta2_datum(g, gen.datum);
        if (structural != gen.is_eta2)
            throw SpinError(ErrorCode::BadFlag,
                            "generator '" + gen.datum.name + "' is " +
                                (structural ? "" : "not ") +
                                "an elliptic tail involution, contradicting its tag");
        if (gen.datum.is_eta2_flag && *gen.datum.is_eta2_flag != structural)
            throw SpinError(ErrorCode::BadFlag,
                            "generator '" + gen.datum.name + "' carries an inconsistent is_eta2 flag");
    }
}

namespace {

void require_classifiable_genus(const DualGraph& g) {
    if (g.genus() < 4)
        throw SpinError(ErrorCode::GenusTooSmall,
                        "classification needs genus >= 4, got " + std::to_string(g.genus()));
}

// smooth elliptic tail: genus-1 component meeting the rest in one node
bool is_smooth_tail_vertex(const DualGraph& g, int vi) {
    return g.vertices()[static_cast<std::size_t>(vi)].genus == 1 && g.degree(vi) == 1;
}

} // namespace

bool smoothness_criterion(const SpinSupport& support, const std::vector<LiftingGenerator>& gens) {
    require_classifiable_genus(support.graph());
    validate_lifting_generators(support.graph(), gens);
    if (!support.sigma_graph().is_tree_like()) return false;
    for (const LiftingGenerator& gen : gens)
        if (!gen.is_eta2) return false;
    return true;
}

StratumClassification classify_stratum(const SpinSupport& support, const SpinStructureLabel& labels,
                                       const std::vector<LiftingGenerator>& gens) {
    require_classifiable_genus(support.graph());
    validate_lifting_generators(support.graph(), gens);
    validate_labels(support, labels);
    const DualGraph& g = support.graph();

    StratumClassification out;
    out.sigma_tree_like = support.sigma_graph().is_tree_like();
    for (const LiftingGenerator& gen : gens) {
        if (!gen.is_eta2) {
            out.offending_generator = gen.datum.name;
            break;
        }
    }
    if (out.sigma_tree_like && !out.offending_generator) {
        out.verdict = Verdict::Smooth;
        return out;
    }

    for (std::size_t vi = 0; vi < g.vertices().size(); ++vi) {
        const Vertex& v = g.vertices()[vi];
        if (!is_smooth_tail_vertex(g, static_cast<int>(vi)) || v.dec.j_class != JClass::JZero) continue;
        auto it = labels.by_vertex.find(v.id);
        if (it == labels.by_vertex.end() || !it->second.trivial_on_elliptic)
            throw SpinError(ErrorCode::MissingThetaFlag,
                            "vertex " + std::to_string(v.id) +
                                " is a j-invariant-0 tail but has no theta triviality flag");
        if (*it->second.trivial_on_elliptic) {
            out.verdict = Verdict::NonCanonicalSingular;
            out.tail_witness_vertex = v.id;
            return out;
        }
    }
    out.verdict = Verdict::CanonicalSingular;
    return out;
}

bool pi_sing_image_test(const DualGraph& graph, const std::vector<LiftingGenerator>& aut_generators) {
    require_classifiable_genus(graph);
    validate_lifting_generators(graph, aut_generators);
    if (!graph.is_tree_like()) return true;
    for (const LiftingGenerator& gen : aut_generators)
        if (!gen.is_eta2) return true;
    return false;
}

Rational component_weight(ComponentType type, int markings) {
    switch (type) {
        case ComponentType::Identity:
            if (markings >= 0) return Rational(0);
            break;
        case ComponentType::Elliptic2:
            if (markings == 1) return Rational(0);
            if (markings == 2) return Rational(1, 2);
            break;
        case ComponentType::Elliptic3:
            if (markings == 1) return Rational(1, 3);
            if (markings == 2) return Rational(2, 3);
            break;
        case ComponentType::Elliptic4:
            if (markings == 1) return Rational(1, 2);
            if (markings == 2) return Rational(3, 4);
            break;
        case ComponentType::Elliptic6:
            if (markings == 1) return Rational(1, 3);
            break;
        case ComponentType::HyperellipticG2:
            if (markings == 1) return Rational(1, 2);
            break;
        default:
            break;
    }
    throw SpinError(ErrorCode::NotInTable,
                    std::string(component_type_name(type)) + " with " + std::to_string(markings) +
                        " markings has no table entry");
}

std::vector<MonomialAction> lifted_tau_group(const SpinSupport& support,
                                             const std::vector<LiftingGenerator>& gens,
                                             long long cap) {
    auto sys = CoordinateSystem::for_support(support, Level::Tau);
    std::vector<MonomialAction> seed = inessential_generators(support, sys);
    for (const LiftingGenerator& gen : gens)
        seed.push_back(tau_action(support, canonical_spin_lift(support, gen.datum), sys));
    return group_closure(seed, cap);
}

std::vector<MonomialAction> prill_image(const std::vector<MonomialAction>& tau_group) {
    if (tau_group.empty()) return {};
    auto u_sys = CoordinateSystem::for_support(tau_group.front().system->support(), Level::U);
    std::vector<MonomialAction> out;
    out.reserve(tau_group.size());
    for (const MonomialAction& a : tau_group) out.push_back(prill_quotient(a, u_sys));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool smooth_by_closure(const std::vector<MonomialAction>& tau_group) {
    std::vector<MonomialAction> qrs;
    for (const MonomialAction& a : tau_group)
        if (is_quasireflection(a)) qrs.push_back(a);
    if (qrs.empty()) return tau_group.size() <= 1;
    return group_closure(qrs).size() == tau_group.size();
}

bool witness_shape_ok(const SpinSupport& support, const MonomialAction& u_element) {
    const DualGraph& g = support.graph();
    const CoordinateSystem& sys = *u_element.system;
    for (std::size_t i = 0; i < u_element.perm.size(); ++i)
        if (u_element.perm[i] != static_cast<int>(i)) return false;

    // owner vertex of every nontrivial slot (tail vertex for its node slot)
    int tail = -1;
    for (std::size_t s = 0; s < u_element.scalar.size(); ++s) {
        if (u_element.scalar[s].is_one()) continue;
        if (u_element.scalar[s].order() != 3) return false;
        const Slot& slot = sys.slots()[s];
        int owner;
        if (slot.kind == SlotKind::Node) {
            const Edge& e = g.edges()[static_cast<std::size_t>(slot.owner)];
            if (!(support.exceptional() >> slot.owner & 1)) return false;
            int ui = g.vertex_index(e.u), vi = g.vertex_index(e.v);
            if (is_smooth_tail_vertex(g, ui))
                owner = ui;
            else if (is_smooth_tail_vertex(g, vi))
                owner = vi;
            else
                return false;
        } else {
            owner = slot.owner;
            if (!is_smooth_tail_vertex(g, owner)) return false;
        }
        if (tail == -1) tail = owner;
        if (tail != owner) return false;
    }
    return tail != -1;
}

std::pair<SpinSupport, MonomialAction> singularity_reduce(const SpinSupport& support,
                                                          const MonomialAction& a) {
    const auto& sys = a.system;
    if (!sys || sys->level() != Level::Tau || !(sys->support() == support))
        throw SpinError(ErrorCode::WrongLevel, "singularity_reduce expects a tau-level action on the support");
    const DualGraph& g = support.graph();
    const std::size_t ne = g.edges().size(), nv = g.vertices().size();

    for (std::size_t e = 0; e < ne; ++e)
        if (a.perm[e] < 0 || static_cast<std::size_t>(a.perm[e]) >= ne)
            throw SpinError(ErrorCode::NotFromSpinDatum, "node slots must permute node slots");
    for (std::size_t v = 0; v < nv; ++v) {
        int dim = sys->block_dim(static_cast<int>(v));
        if (dim == 0) continue;
        int src = sys->block_offset(static_cast<int>(v));
        const Slot& image = sys->slots()[static_cast<std::size_t>(a.perm[src])];
        if (image.kind != SlotKind::Block || image.offset != 0 ||
            sys->block_dim(image.owner) != dim)
            throw SpinError(ErrorCode::NotFromSpinDatum, "block images must align with block boundaries");
        for (int i = 0; i < dim; ++i)
            if (a.perm[static_cast<std::size_t>(src + i)] != sys->block_offset(image.owner) + i)
                throw SpinError(ErrorCode::NotFromSpinDatum, "block images must preserve offsets");
    }

    // cycles of non-disconnecting node slots with scalar product 1
    EdgeMask smooth = 0;
    std::vector<char> seen(ne, 0);
    for (std::size_t e0 = 0; e0 < ne; ++e0) {
        if (seen[e0]) continue;
        EdgeMask cycle = 0;
        bool eligible = true;
        Rational product(0);
        std::size_t e = e0;
        do {
            seen[e] = 1;
            cycle |= EdgeMask{1} << e;
            EdgeClass cls = support.edge_class(static_cast<int>(e));
            if (cls != EdgeClass::NonDiscExceptional && cls != EdgeClass::NonExceptional)
                eligible = false;
            product += a.scalar[e].exponent();
            e = static_cast<std::size_t>(a.perm[e]);
        } while (e != e0);
        if (eligible && mod1(product).numerator() == 0) smooth |= cycle;
    }
    if (smooth == 0) return {support, a};

    DualGraph ng = g.contract_edges(smooth);
    std::vector<int> surviving_n_ids;
    for (std::size_t e = 0; e < ne; ++e)
        if ((support.exceptional() >> e & 1) && !(smooth >> e & 1))
            surviving_n_ids.push_back(g.edges()[e].id);
    SpinSupport ns = make_support(ng, surviving_n_ids);
    auto nsys = CoordinateSystem::for_support(ns, Level::Tau);

    // merge classes of the contraction, keyed by the new vertex index
    auto [cls, ncls] = g.subgraph_components(smooth);
    std::vector<int> class_min(static_cast<std::size_t>(ncls), -1);
    for (std::size_t v = 0; v < nv; ++v)
        if (class_min[static_cast<std::size_t>(cls[v])] == -1)
            class_min[static_cast<std::size_t>(cls[v])] = static_cast<int>(v);

    // old slot -> new slot: surviving edges keep their order; each merged block
    // is the members' blocks in vertex order followed by the smoothed internal
    // edges in edge order
    std::vector<int> bij(a.perm.size(), -1);
    int new_edge = 0;
    for (std::size_t e = 0; e < ne; ++e)
        if (!(smooth >> e & 1)) bij[e] = nsys->node_slot(new_edge++);
    std::vector<int> cursor(static_cast<std::size_t>(ncls));
    for (int c = 0; c < ncls; ++c) {
        int rep_id = g.vertices()[static_cast<std::size_t>(class_min[static_cast<std::size_t>(c)])].id;
        cursor[static_cast<std::size_t>(c)] = nsys->block_offset(ng.vertex_index(rep_id));
    }
    for (std::size_t v = 0; v < nv; ++v) {
        int c = cls[v];
        int dim = sys->block_dim(static_cast<int>(v));
        for (int i = 0; i < dim; ++i)
            bij[static_cast<std::size_t>(sys->block_offset(static_cast<int>(v)) + i)] =
                cursor[static_cast<std::size_t>(c)]++;
    }
    for (std::size_t e = 0; e < ne; ++e) {
        if (!(smooth >> e & 1)) continue;
        int c = cls[static_cast<std::size_t>(g.vertex_index(g.edges()[e].u))];
        bij[e] = cursor[static_cast<std::size_t>(c)]++;
    }

    MonomialAction r = MonomialAction::identity(nsys);
    for (std::size_t s = 0; s < bij.size(); ++s) {
        r.perm[static_cast<std::size_t>(bij[s])] = bij[static_cast<std::size_t>(a.perm[s])];
        r.scalar[static_cast<std::size_t>(bij[s])] = a.scalar[s];
    }
    return {ns, r};
}

} // namespace spinstrata
