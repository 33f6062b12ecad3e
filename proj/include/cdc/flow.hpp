#pragma once

#include <cstdint>
#include <vector>

namespace cdc {

// Directed flow network with real capacities, solved with Dinic's algorithm.
// Arc order is insertion order and the search is breadth-first, so identical
// construction sequences give identical cuts.
class FlowNetwork {
  public:
    explicit FlowNetwork(std::uint32_t node_count);

    // Adds a directed arc plus its zero-capacity reverse. cap must be >= 0.
    void add_edge(std::uint32_t from, std::uint32_t to, double cap);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(arcs_.size()); }

    struct CutResult {
        double value = 0.0;
        // nodes reachable from the source in the final residual network,
        // sorted ascending; this is the unique minimal minimum cut
        std::vector<std::uint32_t> source_side;
    };

    // Runs max-flow and reads off the minimum cut. Consumes the capacities;
    // call at most once per network.
    CutResult min_cut(std::uint32_t source, std::uint32_t sink);

  private:
    struct Arc {
        std::uint32_t to;
        std::uint32_t rev;
        double cap;
    };
    std::vector<std::vector<Arc>> arcs_;
    double cap_scale_ = 1.0;
};

}  // namespace cdc
