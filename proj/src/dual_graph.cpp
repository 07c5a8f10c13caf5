#include "spinstrata/dual_graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace spinstrata {

namespace {

// minimal union-find, path halving
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // returns false if already joined
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        // keep the smaller index as root so representatives are deterministic
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

} // namespace

void DualGraph::rebuild_index() {
    vertex_index_.clear();
    edge_index_.clear();
    degree_.assign(vertices_.size(), 0);
    for (std::size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i].id] = static_cast<int>(i);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        edge_index_[edges_[i].id] = static_cast<int>(i);
        degree_[static_cast<std::size_t>(vertex_index_.at(edges_[i].u))] += 1;
        degree_[static_cast<std::size_t>(vertex_index_.at(edges_[i].v))] += 1;
    }
}

int DualGraph::vertex_index(int id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw SpinError(ErrorCode::UnknownId, "vertex id " + std::to_string(id));
    return it->second;
}

int DualGraph::edge_index(int id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw SpinError(ErrorCode::UnknownId, "edge id " + std::to_string(id));
    return it->second;
}

int DualGraph::genus() const {
    int g = b1();
    for (const auto& v : vertices_) g += v.genus;
    return g;
}

EdgeMask DualGraph::loop_mask() const {
    EdgeMask m = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].is_loop()) m |= EdgeMask{1} << i;
    return m;
}

bool DualGraph::is_tree_like() const {
    // connected by construction, so tree-like <=> no non-loop edge lies on a cycle
    std::size_t non_loops = 0;
    for (const auto& e : edges_)
        if (!e.is_loop()) ++non_loops;
    return non_loops + 1 == vertices_.size();
}

std::pair<std::vector<int>, int> DualGraph::subgraph_components(EdgeMask subset) const {
    Dsu dsu(static_cast<int>(vertices_.size()));
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!(subset >> i & 1)) continue;
        dsu.unite(vertex_index_.at(edges_[i].u), vertex_index_.at(edges_[i].v));
    }
    std::vector<int> comp(vertices_.size(), -1);
    int count = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        int root = dsu.find(static_cast<int>(i));
        if (comp[static_cast<std::size_t>(root)] == -1) comp[static_cast<std::size_t>(root)] = count++;
        comp[i] = comp[static_cast<std::size_t>(root)];
    }
    return {comp, count};
}

int DualGraph::side_genus(const std::vector<char>& side) const {
    int total = 0;
    int nvert = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!side[i]) continue;
        total += vertices_[i].genus;
        ++nvert;
    }
    int nedge = 0;
    Dsu dsu(static_cast<int>(vertices_.size()));
    int merges = 0;
    for (const auto& e : edges_) {
        int ui = vertex_index_.at(e.u), vi = vertex_index_.at(e.v);
        if (!side[static_cast<std::size_t>(ui)] || !side[static_cast<std::size_t>(vi)]) continue;
        ++nedge;
        if (dsu.unite(ui, vi)) ++merges;
    }
    int comps = nvert - merges;
    return total + nedge - nvert + comps;
}

std::vector<EdgeMask> DualGraph::even_subsets() const {
    // fundamental-cycle basis over a BFS spanning tree of the non-loop edges;
    // every loop is its own basis element
    const std::size_t nv = vertices_.size();
    std::vector<EdgeMask> path_to_root(nv, 0);
    std::vector<char> seen(nv, 0);
    std::vector<char> edge_in_tree(edges_.size(), 0);

    std::vector<std::vector<std::pair<int, int>>> adj(nv); // (edge idx, other vertex idx)
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].is_loop()) continue;
        int ui = vertex_index_.at(edges_[i].u), vi = vertex_index_.at(edges_[i].v);
        adj[static_cast<std::size_t>(ui)].push_back({static_cast<int>(i), vi});
        adj[static_cast<std::size_t>(vi)].push_back({static_cast<int>(i), ui});
    }
    std::vector<int> queue;
    if (nv > 0) {
        queue.push_back(0);
        seen[0] = 1;
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (auto [ei, w] : adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            edge_in_tree[static_cast<std::size_t>(ei)] = 1;
            path_to_root[static_cast<std::size_t>(w)] =
                path_to_root[static_cast<std::size_t>(u)] ^ (EdgeMask{1} << ei);
            queue.push_back(w);
        }
    }

    std::vector<EdgeMask> basis;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edge_in_tree[i]) continue;
        if (edges_[i].is_loop()) {
            basis.push_back(EdgeMask{1} << i);
        } else {
            int ui = vertex_index_.at(edges_[i].u), vi = vertex_index_.at(edges_[i].v);
            basis.push_back((EdgeMask{1} << i) ^ path_to_root[static_cast<std::size_t>(ui)] ^
                            path_to_root[static_cast<std::size_t>(vi)]);
        }
    }

    if (basis.size() > 30)
        throw SpinError(ErrorCode::Unsupported,
                        "cycle rank " + std::to_string(basis.size()) + " too large to enumerate");
    std::vector<EdgeMask> result(std::size_t{1} << basis.size(), 0);
    for (std::size_t c = 0; c < result.size(); ++c) {
        EdgeMask m = 0;
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (c >> b & 1) m ^= basis[b];
        result[c] = m;
    }
    return result;
}

int DualGraph::cycle_rank() const { return b1(); }

DualGraph DualGraph::contract_edges(EdgeMask subset) const {
    Dsu dsu(static_cast<int>(vertices_.size()));
    std::vector<int> extra_genus(vertices_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (!(subset >> i & 1)) continue;
        int ui = vertex_index_.at(edges_[i].u), vi = vertex_index_.at(edges_[i].v);
        if (!dsu.unite(ui, vi)) {
            // already identified (original loop, or a cycle inside the subset):
            // deleting it raises the genus of the merged vertex
            extra_genus[static_cast<std::size_t>(dsu.find(ui))] += 1;
        }
    }
    // collapse extra genus onto final representatives (unions may have happened
    // after an increment)
    std::vector<int> final_extra(vertices_.size(), 0);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        final_extra[static_cast<std::size_t>(dsu.find(static_cast<int>(i)))] += extra_genus[i];

    std::vector<int> class_size(vertices_.size(), 0);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        class_size[static_cast<std::size_t>(dsu.find(static_cast<int>(i)))] += 1;

    DualGraph out;
    std::vector<int> rep_to_new(vertices_.size(), -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        int rep = dsu.find(static_cast<int>(i));
        if (rep != static_cast<int>(i)) continue;
        Vertex nv;
        nv.id = vertices_[i].id;
        nv.genus = final_extra[i];
        for (std::size_t j = i; j < vertices_.size(); ++j)
            if (dsu.find(static_cast<int>(j)) == rep) nv.genus += vertices_[j].genus;
        if (class_size[i] == 1 && final_extra[i] == 0) {
            nv.dec = vertices_[i].dec;
        } else {
            nv.dec = VertexDecoration{};
            nv.dec.j_class = (nv.genus == 1) ? JClass::Generic : JClass::NotApplicable;
        }
        rep_to_new[i] = static_cast<int>(out.vertices_.size());
        out.vertices_.push_back(nv);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (subset >> i & 1) continue;
        int ui = dsu.find(vertex_index_.at(edges_[i].u));
        int vi = dsu.find(vertex_index_.at(edges_[i].v));
        Edge ne;
        ne.id = edges_[i].id;
        ne.u = out.vertices_[static_cast<std::size_t>(rep_to_new[static_cast<std::size_t>(ui)])].id;
        ne.v = out.vertices_[static_cast<std::size_t>(rep_to_new[static_cast<std::size_t>(vi)])].id;
        out.edges_.push_back(ne);
    }
    out.rebuild_index();
    return out;
}

EdgeMask DualGraph::bridges() const {
    const std::size_t nv = vertices_.size();
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].is_loop()) continue;
        int ui = vertex_index_.at(edges_[i].u), vi = vertex_index_.at(edges_[i].v);
        adj[static_cast<std::size_t>(ui)].push_back({static_cast<int>(i), vi});
        adj[static_cast<std::size_t>(vi)].push_back({static_cast<int>(i), ui});
    }
    std::vector<int> disc(nv, -1), low(nv, 0);
    EdgeMask result = 0;
    int timer = 0;
    // explicit stack; entry edge is skipped by index so parallel edges work
    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        for (auto [ei, w] : adj[static_cast<std::size_t>(u)]) {
            if (ei == parent_edge) continue;
            if (disc[static_cast<std::size_t>(w)] == -1) {
                dfs(w, ei);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] > disc[static_cast<std::size_t>(u)])
                    result |= EdgeMask{1} << ei;
            } else {
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        }
    };
    if (nv > 0) dfs(0, -1);
    return result;
}

std::vector<Violation> check_graph(const std::vector<Vertex>& vertices, const std::vector<Edge>& edges) {
    std::vector<Violation> out;
    if (vertices.empty()) {
        out.push_back({ErrorCode::Disconnected, -1, "graph has no vertices"});
        return out;
    }
    if (edges.size() > 64) {
        out.push_back({ErrorCode::Unsupported, -1, "more than 64 edges"});
        return out;
    }
    std::set<int> vids, eids;
    for (const auto& v : vertices) {
        if (v.id < 0 || !vids.insert(v.id).second) {
            out.push_back({ErrorCode::UnknownId, v.id, "duplicate or negative vertex id"});
            return out;
        }
    }
    for (const auto& e : edges) {
        if (e.id < 0 || !eids.insert(e.id).second) {
            out.push_back({ErrorCode::UnknownId, e.id, "duplicate or negative edge id"});
            return out;
        }
        if (!vids.count(e.u) || !vids.count(e.v)) {
            out.push_back({ErrorCode::UnknownId, e.id, "edge endpoint refers to unknown vertex"});
            return out;
        }
    }

    DualGraph g = assemble_unchecked(vertices, edges);

    auto [comp, ncomp] = g.subgraph_components(g.full_mask());
    (void)comp;
    if (ncomp != 1) out.push_back({ErrorCode::Disconnected, -1, "dual graph must be connected"});

    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Vertex& v = vertices[i];
        int deg = g.degree(static_cast<int>(i));
        if (v.genus < 0) out.push_back({ErrorCode::BadDecoration, v.id, "negative genus"});
        if (v.genus == 0 && deg < 3)
            out.push_back({ErrorCode::UnstableVertex, v.id, "genus-0 component needs at least 3 nodes"});
        if (v.genus == 1 && deg < 1)
            out.push_back({ErrorCode::UnstableVertex, v.id, "genus-1 component needs at least 1 node"});
        if (v.genus == 1 && v.dec.j_class == JClass::NotApplicable)
            out.push_back({ErrorCode::BadDecoration, v.id, "genus-1 component needs a j-class"});
        if (v.genus != 1 && v.dec.j_class != JClass::NotApplicable)
            out.push_back({ErrorCode::BadDecoration, v.id, "j-class only applies to genus-1 components"});
        if (v.dec.hyperelliptic_g2 && v.genus != 2)
            out.push_back({ErrorCode::BadDecoration, v.id, "hyperelliptic_g2 tag needs genus 2"});
        if (v.dec.hyperelliptic_g3 && v.genus != 3)
            out.push_back({ErrorCode::BadDecoration, v.id, "hyperelliptic_g3 tag needs genus 3"});
        if (v.dec.bielliptic_g2 && v.genus != 2)
            out.push_back({ErrorCode::BadDecoration, v.id, "bielliptic_g2 tag needs genus 2"});
    }
    if (g.genus() < 2) out.push_back({ErrorCode::GenusTooSmall, -1, "total genus must be at least 2"});
    return out;
}

DualGraph assemble_unchecked(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    DualGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.rebuild_index();
    return g;
}

DualGraph make_graph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    auto violations = check_graph(vertices, edges);
    if (!violations.empty()) {
        const auto& v = violations.front();
        std::string detail = v.detail;
        if (v.id >= 0) detail += " (id " + std::to_string(v.id) + ")";
        if (violations.size() > 1)
            detail += " [+" + std::to_string(violations.size() - 1) + " more]";
        throw SpinError(v.code, detail);
    }
    return assemble_unchecked(std::move(vertices), std::move(edges));
}

std::vector<int> mask_to_edge_ids(const DualGraph& g, EdgeMask mask) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < g.edges().size(); ++i)
        if (mask >> i & 1) ids.push_back(g.edges()[i].id);
    return ids;
}

EdgeMask edge_ids_to_mask(const DualGraph& g, const std::vector<int>& ids) {
    EdgeMask m = 0;
    for (int id : ids) m |= EdgeMask{1} << g.edge_index(id);
    return m;
}

} // namespace spinstrata
