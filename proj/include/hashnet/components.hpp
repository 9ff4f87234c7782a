#pragma once

#include <cstddef>
#include <vector>

#include "hashnet/graph.hpp"

namespace hashnet {

/// Weakly connected components of a directed graph.
///
/// Components are numbered by size, largest first; equal sizes are ordered by
/// their smallest member id (string order). `component_of[v]` is the number
/// of the component containing node v.
struct ComponentPartition {
    std::vector<std::size_t> component_of;
    std::vector<std::vector<NodeIndex>> components; // members sorted by index

    std::size_t count() const { return components.size(); }
    std::vector<std::size_t> sizes() const;
};

ComponentPartition weakly_connected_components(const DirectedGraph &g);

} // namespace hashnet
