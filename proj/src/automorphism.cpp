#include "spinstrata/automorphism.hpp"

#include <algorithm>

namespace spinstrata {

int component_type_order(ComponentType t) {
    switch (t) {
        case ComponentType::Identity: return 1;
        case ComponentType::Elliptic2: return 2;
        case ComponentType::Elliptic3: return 3;
        case ComponentType::Elliptic4: return 4;
        case ComponentType::Elliptic6: return 6;
        case ComponentType::RationalOrder2: return 2;
        case ComponentType::RationalOrder4: return 4;
        case ComponentType::HyperellipticG2: return 2;
        case ComponentType::HyperellipticG3: return 2;
        case ComponentType::BiellipticG2: return 2;
    }
    return 1;
}

const char* component_type_name(ComponentType t) {
    switch (t) {
        case ComponentType::Identity: return "identity";
        case ComponentType::Elliptic2: return "elliptic2";
        case ComponentType::Elliptic3: return "elliptic3";
        case ComponentType::Elliptic4: return "elliptic4";
        case ComponentType::Elliptic6: return "elliptic6";
        case ComponentType::RationalOrder2: return "rational_order2";
        case ComponentType::RationalOrder4: return "rational_order4";
        case ComponentType::HyperellipticG2: return "hyperelliptic_g2";
        case ComponentType::HyperellipticG3: return "hyperelliptic_g3";
        case ComponentType::BiellipticG2: return "bielliptic_g2";
    }
    return "?";
}

std::optional<ComponentType> component_type_from_name(const std::string& name) {
    for (ComponentType t :
         {ComponentType::Identity, ComponentType::Elliptic2, ComponentType::Elliptic3,
          ComponentType::Elliptic4, ComponentType::Elliptic6, ComponentType::RationalOrder2,
          ComponentType::RationalOrder4, ComponentType::HyperellipticG2, ComponentType::HyperellipticG3,
          ComponentType::BiellipticG2})
        if (name == component_type_name(t)) return t;
    return std::nullopt;
}

AutomorphismDatum identity_datum(const DualGraph& g, std::string name) {
    AutomorphismDatum d;
    d.name = std::move(name);
    d.vertex_perm.resize(g.vertices().size());
    for (std::size_t i = 0; i < d.vertex_perm.size(); ++i) d.vertex_perm[i] = static_cast<int>(i);
    d.edge_perm.resize(g.edges().size());
    for (std::size_t i = 0; i < d.edge_perm.size(); ++i) d.edge_perm[i] = static_cast<int>(i);
    d.component_type.assign(g.vertices().size(), ComponentType::Identity);
    d.node_scalar_t.assign(g.edges().size(), RootOfUnity::one());
    d.block_exponents.assign(g.vertices().size(), std::nullopt);
    return d;
}

namespace {

bool is_permutation(const std::vector<int>& p, std::size_t n) {
    if (p.size() != n) return false;
    std::vector<char> hit(n, 0);
    for (int x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || hit[static_cast<std::size_t>(x)]) return false;
        hit[static_cast<std::size_t>(x)] = 1;
    }
    return true;
}

void check_type_fits(const Vertex& v, ComponentType t) {
    auto fail = [&](const std::string& why) {
        throw SpinError(ErrorCode::IncompatibleDatum,
                        "component type " + std::string(component_type_name(t)) + " on vertex " +
                            std::to_string(v.id) + ": " + why);
    };
    switch (t) {
        case ComponentType::Identity: return;
        case ComponentType::Elliptic2:
            if (v.genus != 1) fail("needs genus 1");
            return;
        case ComponentType::Elliptic3:
        case ComponentType::Elliptic6:
            if (v.genus != 1) fail("needs genus 1");
            if (v.dec.j_class != JClass::JZero) fail("needs j-invariant 0");
            return;
        case ComponentType::Elliptic4:
            if (v.genus != 1) fail("needs genus 1");
            if (v.dec.j_class != JClass::J1728) fail("needs j-invariant 1728");
            return;
        case ComponentType::RationalOrder2:
        case ComponentType::RationalOrder4:
            if (v.genus != 0) fail("needs genus 0");
            return;
        case ComponentType::HyperellipticG2:
            if (!v.dec.hyperelliptic_g2) fail("needs the hyperelliptic_g2 tag");
            return;
        case ComponentType::HyperellipticG3:
            if (!v.dec.hyperelliptic_g3) fail("needs the hyperelliptic_g3 tag");
            return;
        case ComponentType::BiellipticG2:
            if (!v.dec.bielliptic_g2) fail("needs the bielliptic_g2 tag");
            return;
    }
}

} // namespace

void validate_datum(const DualGraph& g, const AutomorphismDatum& d) {
    const std::size_t nv = g.vertices().size(), ne = g.edges().size();
    if (!is_permutation(d.vertex_perm, nv) || !is_permutation(d.edge_perm, ne))
        throw SpinError(ErrorCode::IncompatibleDatum, "'" + d.name + "': perms must be bijections");
    if (d.component_type.size() != nv || d.node_scalar_t.size() != ne || d.block_exponents.size() != nv)
        throw SpinError(ErrorCode::IncompatibleDatum, "'" + d.name + "': field sizes do not match the graph");

    for (std::size_t ei = 0; ei < ne; ++ei) {
        const Edge& e = g.edges()[ei];
        const Edge& f = g.edges()[static_cast<std::size_t>(d.edge_perm[ei])];
        int su = d.vertex_perm[static_cast<std::size_t>(g.vertex_index(e.u))];
        int sv = d.vertex_perm[static_cast<std::size_t>(g.vertex_index(e.v))];
        int fu = g.vertex_index(f.u), fv = g.vertex_index(f.v);
        bool ok = (su == fu && sv == fv) || (su == fv && sv == fu);
        if (!ok)
            throw SpinError(ErrorCode::IncompatibleDatum,
                            "'" + d.name + "': edge " + std::to_string(e.id) +
                                " does not map onto the endpoints of edge " + std::to_string(f.id));
    }
    for (std::size_t vi = 0; vi < nv; ++vi) {
        const Vertex& v = g.vertices()[vi];
        const Vertex& w = g.vertices()[static_cast<std::size_t>(d.vertex_perm[vi])];
        if (v.genus != w.genus || !(v.dec == w.dec))
            throw SpinError(ErrorCode::IncompatibleDatum,
                            "'" + d.name + "': vertex " + std::to_string(v.id) +
                                " maps to a vertex with different genus or decoration");
        if (d.component_type[vi] != d.component_type[static_cast<std::size_t>(d.vertex_perm[vi])])
            throw SpinError(ErrorCode::IncompatibleDatum,
                            "'" + d.name + "': component type must be constant on orbits");
        check_type_fits(v, d.component_type[vi]);
        if (d.block_exponents[vi]) {
            int dim = 3 * v.genus - 3 + g.degree(static_cast<int>(vi));
            if (static_cast<int>(d.block_exponents[vi]->size()) != dim)
                throw SpinError(ErrorCode::IncompatibleDatum,
                                "'" + d.name + "': block override on vertex " + std::to_string(v.id) +
                                    " must have " + std::to_string(dim) + " entries");
            int ord = component_type_order(d.component_type[vi]);
            for (const Rational& r : *d.block_exponents[vi]) {
                Rational m = mod1(r);
                if (ord % m.denominator() != 0)
                    throw SpinError(ErrorCode::IncompatibleDatum,
                                    "'" + d.name + "': block exponent " + format_rational(m) +
                                        " has order not dividing " + std::to_string(ord));
            }
        }
    }
}

std::vector<Rational> default_block_exponents(ComponentType t, int genus, int deg) {
    int dim = 3 * genus - 3 + deg;
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(std::max(dim, 0)));
    auto fill = [&](Rational head, Rational rest, int head_count) {
        for (int i = 0; i < dim; ++i) out.push_back(i < head_count ? head : rest);
    };
    switch (t) {
        case ComponentType::Identity:
        case ComponentType::RationalOrder2:
        case ComponentType::RationalOrder4:
            fill(Rational(0), Rational(0), dim);
            break;
        case ComponentType::Elliptic2:
            // one marked point deforms with the involution, the others reverse
            fill(Rational(0), Rational(1, 2), 1);
            break;
        case ComponentType::Elliptic3:
            fill(Rational(2, 3), Rational(2, 3), dim);
            break;
        case ComponentType::Elliptic4:
            fill(Rational(1, 2), Rational(1, 4), 1);
            break;
        case ComponentType::Elliptic6:
            // the block eigenvalue is the square of the derivative at the
            // marked point, so an order-6 tail contributes zeta_3 = exp(2pi i/3)
            fill(Rational(1, 3), Rational(5, 6), 1);
            break;
        case ComponentType::HyperellipticG2:
            fill(Rational(0), Rational(1, 2), 3);
            break;
        case ComponentType::HyperellipticG3:
            fill(Rational(0), Rational(1, 2), 5);
            break;
        case ComponentType::BiellipticG2:
            fill(Rational(0), Rational(1, 2), 2);
            break;
    }
    return out;
}

std::vector<Rational> block_exponents_for(const DualGraph& g, const AutomorphismDatum& d, int vertex_idx) {
    if (d.block_exponents[static_cast<std::size_t>(vertex_idx)]) {
        std::vector<Rational> out = *d.block_exponents[static_cast<std::size_t>(vertex_idx)];
        for (Rational& r : out) r = mod1(r);
        return out;
    }
    const Vertex& v = g.vertices()[static_cast<std::size_t>(vertex_idx)];
    return default_block_exponents(d.component_type[static_cast<std::size_t>(vertex_idx)], v.genus,
                                   g.degree(vertex_idx));
}

namespace {

bool perms_are_identity(const AutomorphismDatum& d) {
    for (std::size_t i = 0; i < d.vertex_perm.size(); ++i)
        if (d.vertex_perm[i] != static_cast<int>(i)) return false;
    for (std::size_t i = 0; i < d.edge_perm.size(); ++i)
        if (d.edge_perm[i] != static_cast<int>(i)) return false;
    return true;
}

bool is_identity_automorphism(const AutomorphismDatum& d) {
    if (!perms_are_identity(d)) return false;
    for (ComponentType t : d.component_type)
        if (t != ComponentType::Identity) return false;
    for (const RootOfUnity& s : d.node_scalar_t)
        if (!s.is_one()) return false;
    return true;
}

// index of the unique non-identity vertex, or -1
int sole_nontrivial_vertex(const AutomorphismDatum& d) {
    int found = -1;
    for (std::size_t i = 0; i < d.component_type.size(); ++i) {
        if (d.component_type[i] == ComponentType::Identity) continue;
        if (found != -1) return -1;
        found = static_cast<int>(i);
    }
    return found;
}

// counts (non-loop edges, loops) at a vertex and remembers the sole non-loop edge
struct IncidenceShape {
    int non_loops = 0;
    int loops = 0;
    int bridge_edge = -1;
};

IncidenceShape incidence_shape(const DualGraph& g, int vi) {
    IncidenceShape s;
    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        const Edge& e = g.edges()[ei];
        int ui = g.vertex_index(e.u), wi = g.vertex_index(e.v);
        if (e.is_loop()) {
            if (ui == vi) s.loops += 1;
        } else if (ui == vi || wi == vi) {
            s.non_loops += 1;
            s.bridge_edge = static_cast<int>(ei);
        }
    }
    return s;
}

bool scalars_trivial_except(const AutomorphismDatum& d, int edge_idx, const Rational& want) {
    for (std::size_t ei = 0; ei < d.node_scalar_t.size(); ++ei) {
        if (static_cast<int>(ei) == edge_idx) {
            if (!(d.node_scalar_t[ei].exponent() == want)) return false;
        } else if (!d.node_scalar_t[ei].is_one()) {
            return false;
        }
    }
    return true;
}

bool blocks_defaulted(const DualGraph& g, const AutomorphismDatum& d) {
    for (std::size_t vi = 0; vi < g.vertices().size(); ++vi) {
        if (!d.block_exponents[vi]) continue;
        auto def = default_block_exponents(d.component_type[vi], g.vertices()[vi].genus,
                                           g.degree(static_cast<int>(vi)));
        std::vector<Rational> ov = *d.block_exponents[vi];
        for (Rational& r : ov) r = mod1(r);
        if (ov != def) return false;
    }
    return true;
}

} // namespace

bool is_eta2_datum(const DualGraph& g, const AutomorphismDatum& d) {
    if (!perms_are_identity(d)) return false;
    int vi = sole_nontrivial_vertex(d);
    if (vi < 0) return false;
    const Vertex& v = g.vertices()[static_cast<std::size_t>(vi)];
    IncidenceShape shape = incidence_shape(g, vi);
    if (d.component_type[static_cast<std::size_t>(vi)] == ComponentType::Elliptic2) {
        // smooth elliptic tail
        if (v.genus != 1 || shape.non_loops != 1 || shape.loops != 0) return false;
    } else if (d.component_type[static_cast<std::size_t>(vi)] == ComponentType::RationalOrder2) {
        // singular elliptic tail: rational component with one self-node
        if (v.genus != 0 || shape.non_loops != 1 || shape.loops != 1) return false;
    } else {
        return false;
    }
    if (!scalars_trivial_except(d, shape.bridge_edge, Rational(1, 2))) return false;
    return blocks_defaulted(g, d);
}

std::optional<int> elliptic_tail_order(const DualGraph& g, const AutomorphismDatum& d) {
    if (!perms_are_identity(d)) return std::nullopt;
    int vi = sole_nontrivial_vertex(d);
    if (vi < 0) return std::nullopt;
    const Vertex& v = g.vertices()[static_cast<std::size_t>(vi)];
    ComponentType t = d.component_type[static_cast<std::size_t>(vi)];
    if (v.genus != 1) return std::nullopt;
    IncidenceShape shape = incidence_shape(g, vi);
    if (shape.non_loops != 1 || shape.loops != 0) return std::nullopt;
    int order = 0;
    switch (t) {
        case ComponentType::Elliptic2: order = 2; break;
        case ComponentType::Elliptic3: order = 3; break;
        case ComponentType::Elliptic4: order = 4; break;
        case ComponentType::Elliptic6: order = 6; break;
        default: return std::nullopt;
    }
    // derivative at the tail node must be a primitive root of that order
    const Rational& e = d.node_scalar_t[static_cast<std::size_t>(shape.bridge_edge)].exponent();
    if (e.denominator() != order) return std::nullopt;
    if (!scalars_trivial_except(d, shape.bridge_edge, e)) return std::nullopt;
    return order;
}

std::optional<int> elliptic_tail_vertex(const DualGraph& g, const AutomorphismDatum& d) {
    if (!elliptic_tail_order(g, d) && !is_eta2_datum(g, d)) return std::nullopt;
    int vi = sole_nontrivial_vertex(d);
    return vi >= 0 ? std::optional<int>(vi) : std::nullopt;
}

std::optional<bool> auto_lift_rule(const DualGraph& g, const AutomorphismDatum& d,
                                   const SpinStructureLabel& labels) {
    if (is_identity_automorphism(d)) return true;
    if (is_eta2_datum(g, d)) return true;
    auto order = elliptic_tail_order(g, d);
    if (order && (*order == 3 || *order == 6)) {
        int vi = sole_nontrivial_vertex(d);
        int vid = g.vertices()[static_cast<std::size_t>(vi)].id;
        auto it = labels.by_vertex.find(vid);
        if (it == labels.by_vertex.end() || !it->second.trivial_on_elliptic)
            throw SpinError(ErrorCode::MissingThetaFlag,
                            "liftability of '" + d.name + "' depends on the theta triviality flag of vertex " +
                                std::to_string(vid));
        return *it->second.trivial_on_elliptic;
    }
    return std::nullopt;
}

bool resolve_liftable(const DualGraph& g, const AutomorphismDatum& d, const SpinStructureLabel& labels) {
    if (auto rule = auto_lift_rule(g, d, labels)) return *rule;
    if (d.liftable) return *d.liftable;
    throw SpinError(ErrorCode::MissingFlag,
                    "automorphism '" + d.name + "' needs an explicit liftable flag");
}

long long lifting_count(const SpinSupport& support, const AutomorphismDatum& d, bool liftable) {
    validate_datum(support.graph(), d);
    if (!liftable) return 0;
    EdgeMask n = support.exceptional();
    EdgeMask image = 0;
    for (std::size_t ei = 0; ei < d.edge_perm.size(); ++ei)
        if (n >> ei & 1) image |= EdgeMask{1} << d.edge_perm[ei];
    if (image != n) return 0;
    return 1LL << support.delta_component_count();
}

void validate_spin_datum(const SpinSupport& support, const SpinAutomorphismDatum& d) {
    validate_datum(support.graph(), d.base);
    const std::size_t ne = support.graph().edges().size();
    if (d.node_scalar_tau.size() != ne)
        throw SpinError(ErrorCode::IncompatibleDatum, "tau scalar count does not match the edge count");
    if (static_cast<int>(d.gamma.size()) != support.delta_component_count())
        throw SpinError(ErrorCode::IncompatibleDatum, "inessential bits must match Delta-components");
    for (std::size_t ei = 0; ei < ne; ++ei) {
        bool exceptional = support.exceptional() >> ei & 1;
        bool image_exceptional = support.exceptional() >> d.base.edge_perm[ei] & 1;
        if (exceptional != image_exceptional)
            throw SpinError(ErrorCode::IncompatibleDatum,
                            "a spin automorphism must preserve the exceptional node set");
        if (exceptional) {
            if (!(d.node_scalar_tau[ei].pow(2) == d.base.node_scalar_t[ei]))
                throw SpinError(ErrorCode::InconsistentSquareRoot,
                                "tau scalar on edge " + std::to_string(support.graph().edges()[ei].id) +
                                    " does not square to the t scalar");
        } else if (!(d.node_scalar_tau[ei] == d.base.node_scalar_t[ei])) {
            throw SpinError(ErrorCode::InconsistentSquareRoot,
                            "tau scalar on non-exceptional edge " +
                                std::to_string(support.graph().edges()[ei].id) + " must equal the t scalar");
        }
    }
}

SpinAutomorphismDatum canonical_spin_lift(const SpinSupport& support, const AutomorphismDatum& d) {
    SpinAutomorphismDatum s;
    s.base = d;
    s.node_scalar_tau.resize(support.graph().edges().size());
    for (std::size_t ei = 0; ei < s.node_scalar_tau.size(); ++ei) {
        if (support.exceptional() >> ei & 1)
            s.node_scalar_tau[ei] = RootOfUnity::from_exponent(d.node_scalar_t[ei].exponent() / 2);
        else
            s.node_scalar_tau[ei] = d.node_scalar_t[ei];
    }
    s.gamma.assign(static_cast<std::size_t>(support.delta_component_count()), 0);
    return s;
}

SpinAutomorphismDatum inessential_datum(const SpinSupport& support, std::vector<std::uint8_t> gamma) {
    SpinAutomorphismDatum s;
    s.base = identity_datum(support.graph(), "inessential");
    s.node_scalar_tau.assign(support.graph().edges().size(), RootOfUnity::one());
    s.gamma = std::move(gamma);
    return s;
}

MonomialAction tau_action(const SpinSupport& support, const SpinAutomorphismDatum& d,
                          std::shared_ptr<const CoordinateSystem> sys) {
    validate_spin_datum(support, d);
    if (sys->level() != Level::Tau || !(sys->support() == support))
        throw SpinError(ErrorCode::WrongLevel, "coordinate system does not match the support at tau level");
    const DualGraph& g = support.graph();
    MonomialAction a = MonomialAction::identity(sys);

    for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
        int target = d.base.edge_perm[ei];
        a.perm[ei] = sys->node_slot(target);
        RootOfUnity scalar = d.node_scalar_tau[ei];
        if (support.exceptional() >> ei & 1) {
            const Edge& e = g.edges()[ei];
            int cu = support.delta_component()[static_cast<std::size_t>(g.vertex_index(e.u))];
            int cv = support.delta_component()[static_cast<std::size_t>(g.vertex_index(e.v))];
            if ((d.gamma[static_cast<std::size_t>(cu)] ^ d.gamma[static_cast<std::size_t>(cv)]) & 1)
                scalar = scalar * RootOfUnity::minus_one();
        }
        a.scalar[ei] = scalar;
    }
    for (std::size_t vi = 0; vi < g.vertices().size(); ++vi) {
        int dim = sys->block_dim(static_cast<int>(vi));
        if (dim == 0) continue;
        std::vector<Rational> exps = block_exponents_for(g, d.base, static_cast<int>(vi));
        int src = sys->block_offset(static_cast<int>(vi));
        int dst = sys->block_offset(d.base.vertex_perm[vi]);
        for (int k = 0; k < dim; ++k) {
            a.perm[static_cast<std::size_t>(src + k)] = dst + k;
            a.scalar[static_cast<std::size_t>(src + k)] =
                RootOfUnity::from_exponent(exps[static_cast<std::size_t>(k)]);
        }
    }
    return a;
}

MonomialAction tau_action(const SpinSupport& support, const SpinAutomorphismDatum& d) {
    return tau_action(support, d, CoordinateSystem::for_support(support, Level::Tau));
}

std::vector<MonomialAction> quasireflection_generators(const SpinSupport& support,
                                                       std::shared_ptr<const CoordinateSystem> sys) {
    std::vector<MonomialAction> out;
    for (std::size_t ei = 0; ei < support.graph().edges().size(); ++ei) {
        EdgeClass cls = support.edge_class(static_cast<int>(ei));
        if (cls != EdgeClass::TailNode && cls != EdgeClass::DisconnectingExceptional) continue;
        MonomialAction a = MonomialAction::identity(sys);
        a.scalar[ei] = cls == EdgeClass::TailNode ? RootOfUnity::from_exponent(Rational(1, 4))
                                                  : RootOfUnity::minus_one();
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<MonomialAction> quasireflection_generators(const SpinSupport& support) {
    return quasireflection_generators(support, CoordinateSystem::for_support(support, Level::Tau));
}

std::vector<MonomialAction> inessential_generators(const SpinSupport& support,
                                                   std::shared_ptr<const CoordinateSystem> sys) {
    std::vector<MonomialAction> out;
    for (int c = 0; c < support.delta_component_count(); ++c) {
        std::vector<std::uint8_t> gamma(static_cast<std::size_t>(support.delta_component_count()), 0);
        gamma[static_cast<std::size_t>(c)] = 1;
        out.push_back(tau_action(support, inessential_datum(support, std::move(gamma)), sys));
    }
    return out;
}

} // namespace spinstrata
