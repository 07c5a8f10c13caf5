#pragma once

#include <memory>
#include <vector>

#include "spinstrata/spin_support.hpp"

namespace spinstrata {

// Local deformation coordinates of a spin curve, 3g-3 in total:
//  - one slot per node (slot index == edge index), and
//  - one block of dimension 3 g_v - 3 + deg(v) per component,
// at one of three levels:
//  - T:   coordinates of the stable model (t_i per node),
//  - Tau: square roots over exceptional nodes (tau_i^2 = t_i on N, tau = t on Delta),
//  - U:   the quotient by quasireflections (u = tau^4 on tail nodes, tau^2 on
//         other disconnecting exceptional nodes, tau elsewhere).
enum class Level { T, Tau, U };

enum class SlotKind { Node, Block };

struct Slot {
    SlotKind kind;
    int owner;     // edge index for Node, vertex index for Block
    int offset;    // position within the block (0 for node slots)
    EdgeClass cls; // for node slots; NonExceptional for block slots (unused)
};

class CoordinateSystem {
public:
    static std::shared_ptr<const CoordinateSystem> for_support(const SpinSupport& support, Level level);

    Level level() const { return level_; }
    const SpinSupport& support() const { return support_; }
    int dimension() const { return static_cast<int>(slots_.size()); }
    const std::vector<Slot>& slots() const { return slots_; }

    int node_slot(int edge_idx) const { return edge_idx; }
    int block_offset(int vertex_idx) const { return block_offset_[static_cast<std::size_t>(vertex_idx)]; }
    int block_dim(int vertex_idx) const { return block_dim_[static_cast<std::size_t>(vertex_idx)]; }

    // slot layout is determined by the support alone; all three levels share it
    bool same_layout(const CoordinateSystem& o) const { return support_ == o.support_; }

private:
    Level level_ = Level::Tau;
    SpinSupport support_;
    std::vector<Slot> slots_;
    std::vector<int> block_offset_;
    std::vector<int> block_dim_;
};

} // namespace spinstrata
