#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powgraph/class_analysis.hpp"
#include "powgraph/graph.hpp"
#include "powgraph/totient.hpp"

namespace powgraph {

// Descriptor of one generated-subgroup block: its size plus a vertex whose
// class-level adjacencies stand in for the block.  Blocks inside a complex
// class are synthetic; any member of the class represents them.
struct ApproxClassDescr {
    std::uint64_t size = 0;
    std::size_t rep = SIZE_MAX;
    std::size_t equiv_class = SIZE_MAX;  // index into the equivalence partition
    bool bottom_of_complex = false;
};

// True when the arcs run A -> B: |B| < |A|, or |B| = |A| and A touches a
// non-universal vertex whose block is a singleton.  Equal blocks orient both
// ways (mutual powers).
bool direction_predicate(const UGraph& gamma, const ApproxClassDescr& a, const ApproxClassDescr& b,
                         const std::vector<ApproxClassDescr>& singleton_candidates);

enum class Direction { AtoB, BtoA };

// Uniform direction between two distinct adjacent equivalence classes.
// Throws StructureError when neither or both orderings hold.
Direction orient_between(const UGraph& gamma, const EquivClassInfo& a, const EquivClassInfo& b,
                         const std::vector<ApproxClassDescr>& singleton_candidates);

// Lays a complex class out as a tower of blocks of sizes phi(p^s)..phi(p^r):
// mutual arcs inside a block, higher blocks dominating lower ones.
void synthesize_class_tower(const EquivClassInfo& info, const std::vector<std::size_t>& vertices, DiGraph& out);

// Tower from explicit ascending block sizes (used for the cyclic center class).
void synthesize_tower_blocks(const std::vector<std::uint64_t>& block_sizes,
                             const std::vector<std::size_t>& vertices, DiGraph& out);

// Directed power graph of the cyclic group on residues 0..n-1.
DiGraph canonical_cyclic_dpg(std::size_t n);

// Per-class record of how the reconstruction oriented the input.
struct OrientationPlan {
    struct ClassRow {
        std::vector<std::size_t> vertices;
        ClassKind kind = ClassKind::Simple;
        std::uint64_t p = 0;
        int s = 0, r = 0;
    };
    CenterCase center_case = CenterCase::TrivialCenter;
    std::vector<ClassRow> classes;

    std::string to_text() const;
};

// From an undirected finite-order component alone, a digraph isomorphic to
// the directed power graph that produced it.  Throws StructureError (or
// NotFiniteOrderComponent) when no group can have produced the input.
DiGraph reconstruct(const UGraph& phi, OrientationPlan* plan = nullptr);

}  // namespace powgraph
