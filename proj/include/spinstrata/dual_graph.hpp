#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinstrata/errors.hpp"

namespace spinstrata {

// Dual graph of a stable curve: one vertex per irreducible component (with its
// geometric genus and decorations), one edge per node.  Loops are allowed and
// count twice towards vertex degree.

enum class JClass { Generic, JZero, J1728, NotApplicable };

struct VertexDecoration {
    JClass j_class = JClass::NotApplicable;
    bool hyperelliptic_g2 = false;
    bool hyperelliptic_g3 = false;
    bool bielliptic_g2 = false;

    bool operator==(const VertexDecoration&) const = default;
};

struct Vertex {
    int id = 0;
    int genus = 0;
    VertexDecoration dec;

    bool operator==(const Vertex&) const = default;
};

struct Edge {
    int id = 0;
    int u = 0; // vertex ids; u == v for a loop
    int v = 0;

    bool is_loop() const { return u == v; }
    bool operator==(const Edge&) const = default;
};

// Edge subsets as bitmasks over edge *indices* (input order).  The library
// supports up to 64 edges, far beyond the sizes boundary strata calculations
// meet in practice (a stable genus-g curve has at most 3g-3 nodes).
using EdgeMask = std::uint64_t;

struct Violation {
    ErrorCode code;
    int id = -1; // offending vertex/edge id where applicable
    std::string detail;
};

class DualGraph {
public:
    DualGraph() = default;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_index(int id) const;
    int edge_index(int id) const;

    // degree counts loops twice
    int degree(int vertex_idx) const { return degree_[static_cast<std::size_t>(vertex_idx)]; }

    int b1() const { return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1; }

    // arithmetic genus: sum of component genera plus the first Betti number
    int genus() const;

    // true when deleting all loops leaves a tree
    bool is_tree_like() const;

    // the cycle space of the multigraph, enumerated deterministically;
    // element 0 is always the empty subset
    std::vector<EdgeMask> even_subsets() const;
    int cycle_rank() const; // == b1()

    // Edges of `subset` are contracted: non-loop members merge their endpoints,
    // members that are (or become) loops are deleted and add 1 to the genus of
    // their vertex.  The result is connected and has the same genus.  Stability
    // is preserved for the subsets that arise here (cycle-space members and
    // non-disconnecting smoothing sets) but is not re-checked.
    DualGraph contract_edges(EdgeMask subset) const;

    // bridge edges as a mask (never loops, never parallel pairs)
    EdgeMask bridges() const;

    EdgeMask loop_mask() const;
    EdgeMask full_mask() const { return edges_.empty() ? 0 : (~EdgeMask{0} >> (64 - edges_.size())); }

    // connected components of the spanning subgraph (all vertices, edges in
    // `subset`): component index per vertex, numbered in input vertex order
    std::pair<std::vector<int>, int> subgraph_components(EdgeMask subset) const;

    // arithmetic genus of the vertex set `side` together with all edges having
    // both endpoints inside it
    int side_genus(const std::vector<char>& side) const;

    bool operator==(const DualGraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

    friend std::vector<Violation> check_graph(const std::vector<Vertex>&, const std::vector<Edge>&);
    friend DualGraph make_graph(std::vector<Vertex>, std::vector<Edge>);
    friend DualGraph assemble_unchecked(std::vector<Vertex>, std::vector<Edge>);

private:
    void rebuild_index();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<int, int> vertex_index_;
    std::unordered_map<int, int> edge_index_;
    std::vector<int> degree_;
};

// Validation: connectivity, stability (genus-0 vertices need degree >= 3,
// genus-1 vertices degree >= 1), total genus >= 2, decoration sanity
// (j-classes only on genus-1 vertices, special tags on matching genera),
// unique non-negative ids, known endpoints.  Returns an empty list when valid.
std::vector<Violation> check_graph(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges);

// Throws SpinError carrying the first violation when invalid.
DualGraph make_graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

// Internal: build without validation (used for contractions, whose outputs can
// temporarily sidestep the stability re-check).
DualGraph assemble_unchecked(std::vector<Vertex> vertices, std::vector<Edge> edges);

std::vector<int> mask_to_edge_ids(const DualGraph& g, EdgeMask mask);
EdgeMask edge_ids_to_mask(const DualGraph& g, const std::vector<int>& ids);

} // namespace spinstrata
