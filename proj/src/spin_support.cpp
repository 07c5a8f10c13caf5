#include "spinstrata/spin_support.hpp"

#include <algorithm>
#include <bit>

namespace spinstrata {

const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::TailNode: return "tail_node";
        case EdgeClass::DisconnectingExceptional: return "disconnecting_exceptional";
        case EdgeClass::NonDiscExceptional: return "non_disc_exceptional";
        case EdgeClass::NonExceptional: return "non_exceptional";
    }
    return "?";
}

int SpinSupport::count_class(EdgeClass c) const {
    return static_cast<int>(std::count(classes_.begin(), classes_.end(), c));
}

long long SpinSupport::gluing_count() const {
    EdgeMask delta_mask = delta();
    int nedges = static_cast<int>(std::popcount(delta_mask));
    int rank = nedges - static_cast<int>(graph_.vertices().size()) + delta_component_count_;
    return 1LL << rank;
}

DualGraph SpinSupport::sigma_graph() const {
    return graph_.contract_edges(delta());
}

SpinSupport make_support(const DualGraph& graph, EdgeMask exceptional) {
    exceptional &= graph.full_mask();
    EdgeMask delta = graph.full_mask() & ~exceptional;

    // evenness: every vertex must meet an even number of non-loop Delta edges
    std::vector<int> parity(graph.vertices().size(), 0);
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        if (!(delta >> i & 1)) continue;
        const Edge& e = graph.edges()[i];
        if (e.is_loop()) continue;
        parity[static_cast<std::size_t>(graph.vertex_index(e.u))] ^= 1;
        parity[static_cast<std::size_t>(graph.vertex_index(e.v))] ^= 1;
    }
    for (std::size_t i = 0; i < parity.size(); ++i)
        if (parity[i])
            throw SpinError(ErrorCode::DeltaNotEven,
                            "vertex " + std::to_string(graph.vertices()[i].id) +
                                " meets an odd number of non-exceptional branches");

    SpinSupport s;
    s.graph_ = graph;
    s.exceptional_ = exceptional;
    auto [comp, ncomp] = graph.subgraph_components(delta);
    s.delta_component_ = std::move(comp);
    s.delta_component_count_ = ncomp;

    EdgeMask bridge_mask = graph.bridges();
    s.classes_.resize(graph.edges().size());
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
        if (delta >> i & 1) {
            s.classes_[i] = EdgeClass::NonExceptional;
        } else if (!(bridge_mask >> i & 1)) {
            s.classes_[i] = EdgeClass::NonDiscExceptional;
        } else {
            // which side of the bridge has arithmetic genus 1?
            EdgeMask rest = graph.full_mask() & ~(EdgeMask{1} << i);
            auto [side_comp, nsides] = graph.subgraph_components(rest);
            (void)nsides;
            const Edge& e = graph.edges()[i];
            int cu = side_comp[static_cast<std::size_t>(graph.vertex_index(e.u))];
            bool tail = false;
            for (int which : {cu, 1 - cu}) {
                std::vector<char> side(graph.vertices().size(), 0);
                for (std::size_t k = 0; k < side.size(); ++k) side[k] = side_comp[k] == which;
                if (graph.side_genus(side) == 1) tail = true;
            }
            s.classes_[i] = tail ? EdgeClass::TailNode : EdgeClass::DisconnectingExceptional;
        }
    }
    return s;
}

SpinSupport make_support(const DualGraph& graph, const std::vector<int>& exceptional_edge_ids) {
    return make_support(graph, edge_ids_to_mask(graph, exceptional_edge_ids));
}

std::vector<SpinSupport> enumerate_supports(const DualGraph& graph) {
    std::vector<SpinSupport> out;
    for (EdgeMask delta : graph.even_subsets())
        out.push_back(make_support(graph, graph.full_mask() & ~delta));
    return out;
}

Rational fiber_degree_audit(const DualGraph& graph) {
    int sum_genus2 = 0;
    for (const auto& v : graph.vertices()) sum_genus2 += 2 * v.genus;
    Rational total(0);
    for (const auto& s : enumerate_supports(graph)) {
        int n_exceptional = static_cast<int>(std::popcount(s.exceptional()));
        int c = s.delta_component_count();
        // gluing_count * 2^#N * 2^(1-c) * 2^(2*sum g_v)
        int exponent = n_exceptional + 1 - c + sum_genus2;
        Rational weight(s.gluing_count());
        if (exponent >= 0)
            weight *= Rational(std::int64_t{1} << exponent);
        else
            weight *= Rational(1, std::int64_t{1} << (-exponent));
        total += weight;
    }
    return total;
}

std::optional<SpinSupport> construct_smooth_support(const DualGraph& graph) {
    EdgeMask loops = graph.loop_mask();
    std::optional<EdgeMask> best;
    int best_size = -1;
    for (EdgeMask delta : graph.even_subsets()) {
        if (delta & loops) continue; // loops never help: contracting them cannot kill a cycle
        if (!graph.contract_edges(delta).is_tree_like()) continue;
        int size = static_cast<int>(std::popcount(delta));
        if (size > best_size) {
            best_size = size;
            best = delta;
        }
    }
    if (!best) return std::nullopt;
    return make_support(graph, graph.full_mask() & ~*best);
}

void validate_labels(const SpinSupport& support, const SpinStructureLabel& labels) {
    const DualGraph& g = support.graph();
    for (const auto& [vid, theta] : labels.by_vertex) {
        int vi = g.vertex_index(vid); // throws UnknownId
        bool genus1 = g.vertices()[static_cast<std::size_t>(vi)].genus == 1;
        if (theta.trivial_on_elliptic.has_value() != genus1)
            throw SpinError(ErrorCode::BadFlag,
                            "trivial_on_elliptic must be present exactly on genus-1 vertices (vertex " +
                                std::to_string(vid) + ")");
    }
    if (labels.gluing_class < 0 || labels.gluing_class >= support.gluing_count())
        throw SpinError(ErrorCode::BadGluingClass,
                        "gluing_class " + std::to_string(labels.gluing_class) + " out of range (count " +
                            std::to_string(support.gluing_count()) + ")");
}

} // namespace spinstrata
