#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinstrata/dual_graph.hpp"
#include "spinstrata/rational.hpp"

namespace spinstrata {

// A spin support splits the nodes of a stable curve into exceptional ones (N,
// blown up in the quasi-stable model) and non-exceptional ones (Delta).  Delta
// must be an even subset, i.e. a member of the cycle space.  Exceptional edges
// are further distinguished by how they disconnect the graph:
enum class EdgeClass {
    TailNode,                 // bridge in N cutting off an arithmetic-genus-1 piece
    DisconnectingExceptional, // any other bridge in N
    NonDiscExceptional,       // non-bridge member of N (loops included)
    NonExceptional,           // member of Delta
};

const char* edge_class_name(EdgeClass c);

class SpinSupport {
public:
    const DualGraph& graph() const { return graph_; }
    EdgeMask exceptional() const { return exceptional_; }
    EdgeMask delta() const { return graph_.full_mask() & ~exceptional_; }
    EdgeClass edge_class(int edge_idx) const { return classes_[static_cast<std::size_t>(edge_idx)]; }
    const std::vector<EdgeClass>& edge_classes() const { return classes_; }

    int count_class(EdgeClass c) const;

    // components of the non-exceptional partial normalization: vertices glued
    // along Delta only
    const std::vector<int>& delta_component() const { return delta_component_; }
    int delta_component_count() const { return delta_component_count_; }

    // number of inequivalent gluings of a fixed component-wise spin structure:
    // 2^(cycle rank of the Delta subgraph)
    long long gluing_count() const;

    // contraction of the graph along Delta: one vertex per component of the
    // non-exceptional subcurve, one edge per exceptional node
    DualGraph sigma_graph() const;

    bool operator==(const SpinSupport& o) const {
        return graph_ == o.graph_ && exceptional_ == o.exceptional_;
    }

    friend SpinSupport make_support(const DualGraph&, EdgeMask);

private:
    DualGraph graph_;
    EdgeMask exceptional_ = 0;
    std::vector<EdgeClass> classes_;
    std::vector<int> delta_component_;
    int delta_component_count_ = 1;
};

// Throws DeltaNotEven when the complement of `exceptional` has a vertex of odd
// degree (loops do not affect parity).
SpinSupport make_support(const DualGraph& graph, EdgeMask exceptional);
SpinSupport make_support(const DualGraph& graph, const std::vector<int>& exceptional_edge_ids);

// All supports of a graph, one per even subset, in cycle-space enumeration
// order (index 0 is Delta = empty, i.e. everything exceptional).
std::vector<SpinSupport> enumerate_supports(const DualGraph& graph);

// Degree bookkeeping for the forgetful map to the moduli of curves: summing
//   gluing_count * 2^#N * 2^(1-c) * prod_v 2^(2 g_v)
// over all supports (c = number of Delta-components) must give 2^(2g).
Rational fiber_degree_audit(const DualGraph& graph);

// Looks for an even, loop-free Delta whose contraction is tree-like; among
// those picks the largest (ties: first in enumeration order).  Such a Delta
// need not exist (any 3-edge-connected, non-supereulerian block rules it out),
// in which case nullopt is returned.
std::optional<SpinSupport> construct_smooth_support(const DualGraph& graph);

// Spin-structure labels: an opaque name for the theta characteristic restricted
// to each component, a triviality flag on genus-1 components (the only place
// classification consults it), and a gluing index below gluing_count().
struct ThetaLabel {
    std::string label;
    std::optional<bool> trivial_on_elliptic;

    bool operator==(const ThetaLabel&) const = default;
};

struct SpinStructureLabel {
    std::map<int, ThetaLabel> by_vertex; // keyed by vertex id
    long long gluing_class = 0;

    bool operator==(const SpinStructureLabel&) const = default;
};

// Checks label/vertex consistency: every labelled vertex exists,
// trivial_on_elliptic present exactly on genus-1 vertices, gluing_class within
// range for the support.
void validate_labels(const SpinSupport& support, const SpinStructureLabel& labels);

} // namespace spinstrata
