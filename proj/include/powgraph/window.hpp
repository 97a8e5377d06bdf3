#pragma once

#include <cstdint>
#include <vector>

#include "powgraph/graph.hpp"
#include "powgraph/group.hpp"

namespace powgraph {

// Predecessor / successor / merged sets of x, inverse excluded:
// I = {y != x, x^-1 : x in <y>}, O = {y != x, x^-1, e : y = x^n, n != 0},
// M = I u O.  All intersected with the enumerated window.
struct IOMSets {
    std::size_t x = 0;
    std::vector<std::size_t> I, O, M;
};

// Throws IdentityArgument for x = e.
IOMSets iom_sets(const GroupModel& g, std::size_t x);

// A complement subgraph together with the model indices of its vertices.
struct InducedComplement {
    UGraph graph;                      // complement of the induced power graph
    std::vector<std::size_t> vertices; // model index of each graph vertex
};

struct ComplementGraphs {
    InducedComplement o_bar;  // on O(x)
    InducedComplement m_bar;  // on M(x)
};

ComplementGraphs complement_graphs(const GroupModel& g, std::size_t x);

// Complement of the induced power graph on O(x) n O(y).
InducedComplement intersect_o_bar(const GroupModel& g, std::size_t x, std::size_t y);

// True when x^5 still falls inside the enumerated window.
bool guarded(const GroupModel& g, std::size_t x);

// Checks that the O-part of the merged complement behaves as one connected
// component: no complement edge from O to I anywhere in the window, and all
// guarded O-vertices lie in a single component of the complement restricted
// to O.  Throws WindowTooSmall when fewer than 5 M-vertices fall in the
// window or x itself is unguarded.
bool lemma4_check(const GroupModel& g, std::size_t x, int guard_factor = 5);

struct AlmostConnectedReport {
    std::vector<std::size_t> isolated;
    std::vector<std::size_t> bulk;
    bool verdict = false;
    bool guard = true;  // window-adequacy flag supplied by the caller's context
};

// verdict true iff the graph is one nonempty connected graph plus exactly
// two isolated vertices.
AlmostConnectedReport almost_connected(const UGraph& gamma);

struct RecoveredDirections {
    DiGraph digraph;                                        // on the component window
    std::vector<std::size_t> vertices;                      // model indices
    std::size_t guarded_edges = 0;
    std::vector<std::pair<std::size_t, std::size_t>> undecided;  // model index pairs
};

// Orients guarded power-graph edges of the component containing x and y by
// the component-intersection count against M(x) n M(y); an edge whose counts
// both fall below tau in either direction is reported as undecided.  Throws
// ThresholdUndecided when any undecided edge remains, StructureError when
// both directions reach tau, and StructureError when the precondition
// (x, y non-adjacent with almost connected merged complement) fails.
RecoveredDirections recover_directions(const GroupModel& g, std::size_t x, std::size_t y,
                                       std::size_t tau = 3);

// Common-predecessor property over non-adjacent window pairs (capped scan):
// true iff every such pair x, y has a window z with x, y in <z>.
bool locally_cyclic_check(const GroupModel& g, std::size_t pair_cap = 4000);

}  // namespace powgraph
