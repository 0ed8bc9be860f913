#pragma once

#include "gfh/legfront.hpp"

namespace gfh::detail {

struct Cusp {
    std::size_t event;
    int lo, hi;
};

struct Cross {
    std::size_t event;
    int top, bottom;  ///< arcs entering at level k+1 and k
};

/// Arc bookkeeping obtained by sweeping the front left to right.
struct Simulation {
    int arcs = 0;
    std::vector<Cusp> left, right;
    std::vector<Cross> crossings;
};

Simulation simulate(const FrontDiagram& fd);

}  // namespace gfh::detail
