#include "spinstrata/coordinates.hpp"

namespace spinstrata {

std::shared_ptr<const CoordinateSystem> CoordinateSystem::for_support(const SpinSupport& support, Level level) {
    auto sys = std::make_shared<CoordinateSystem>();
    sys->level_ = level;
    sys->support_ = support;
    const DualGraph& g = support.graph();

    for (std::size_t i = 0; i < g.edges().size(); ++i)
        sys->slots_.push_back({SlotKind::Node, static_cast<int>(i), 0, support.edge_class(static_cast<int>(i))});

    sys->block_offset_.resize(g.vertices().size());
    sys->block_dim_.resize(g.vertices().size());
    for (std::size_t vi = 0; vi < g.vertices().size(); ++vi) {
        int dim = 3 * g.vertices()[vi].genus - 3 + g.degree(static_cast<int>(vi));
        sys->block_offset_[vi] = static_cast<int>(sys->slots_.size());
        sys->block_dim_[vi] = dim;
        for (int k = 0; k < dim; ++k)
            sys->slots_.push_back({SlotKind::Block, static_cast<int>(vi), k, EdgeClass::NonExceptional});
    }

    // sum over v of (3 g_v - 3 + deg v) plus one slot per edge is 3g-3; if this
    // trips, the graph failed validation somewhere upstream
    int expected = 3 * g.genus() - 3;
    if (sys->dimension() != expected)
        throw SpinError(ErrorCode::Unsupported,
                        "coordinate count " + std::to_string(sys->dimension()) + " != 3g-3 = " +
                            std::to_string(expected));
    return sys;
}

} // namespace spinstrata
