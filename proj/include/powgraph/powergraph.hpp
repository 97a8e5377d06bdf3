#pragma once

#include <utility>
#include <vector>

#include "powgraph/graph.hpp"
#include "powgraph/group.hpp"

namespace powgraph {

// Power graph constructions.  Vertices are the model's enumerated elements;
// adjacency is decided by exact membership, never by window truncation.

DiGraph directed_power_graph(const GroupModel& g);       // arc x->y iff y in <x>
DiGraph zpm_directed_power_graph(const GroupModel& g);   // arc x->y iff y = x^n, n != 0
UGraph power_graph(const GroupModel& g);
UGraph zpm_power_graph(const GroupModel& g);

// Closed neighborhoods and the hat operator S^ = N(N(S)).
std::vector<std::size_t> closed_neighborhood(const UGraph& g, std::size_t x);
Bitset common_closed_neighborhood_bits(const UGraph& g, const Bitset& s);
std::vector<std::size_t> common_closed_neighborhood(const UGraph& g, const std::vector<std::size_t>& s);
std::vector<std::size_t> double_neighborhood(const UGraph& g, const std::vector<std::size_t>& s);
Bitset double_neighborhood_bits(const UGraph& g, const Bitset& s);

// Partition by equal closed neighborhoods (the graph-only relation).
VertexPartition equiv_classes(const UGraph& g);

// Partition by equal generated cyclic subgroups (needs the model).
VertexPartition approx_classes(const GroupModel& g);

// (finite-order vertices, infinite-order vertices)
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_by_order(const GroupModel& g);

}  // namespace powgraph
