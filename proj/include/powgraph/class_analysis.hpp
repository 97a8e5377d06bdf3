#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powgraph/card.hpp"
#include "powgraph/graph.hpp"

namespace powgraph {

// Five-way outcome of the center analysis of a finite-order component,
// plus the trivial-center case.  PruferLike only arises in symbolic mode.
enum class CenterCase {
    TrivialCenter,
    CyclicPrimePower,
    CyclicPQ,
    CyclicComposite,
    PGroupNoncyclic,
    PruferLike,
};

std::string to_string(CenterCase c);

struct CenterReport {
    CenterCase kind = CenterCase::TrivialCenter;
    Card center_size;
    Card vertex_count;
    std::vector<std::size_t> center;  // empty in symbolic mode
};

enum class ClassKind { Simple, Complex, InfinitelyComplex };

std::string to_string(ClassKind k);

// One equivalence class of equal closed neighborhoods, with what the graph
// alone reveals about it.  For Complex: card = p^r - p^{s-1}, hat = p^r,
// r > s > 0.  p == 0 means "prime not determined".
struct EquivClassInfo {
    std::vector<std::size_t> vertices;  // empty in symbolic mode
    Card card;
    ClassKind kind = ClassKind::Simple;
    std::uint64_t p = 0;
    int s = 0, r = 0;
    Card hat_size;
};

// Symbolic class profile for infinite examples: per-class cardinality and
// hat-delta, plus class-level adjacency (well defined since classes are
// neighborhood-uniform).
struct ClassProfile {
    struct Entry {
        Card card;
        std::uint64_t hat_delta = 0;
    };
    std::vector<Entry> classes;
    std::vector<std::vector<bool>> adjacency;

    std::string to_json_text() const;
    static ClassProfile parse_json_text(const std::string& text);
};

// Universal vertices of the component.  Throws NotFiniteOrderComponent if none.
std::vector<std::size_t> center(const UGraph& phi);

CenterReport classify_center_case(const UGraph& phi);

// Symbolic center case; PruferLike when the universal class is infinite.
CenterCase classify_profile_center(const ClassProfile& profile);

// Graph-only Simple/Complex recognition.  Only valid in the trivial-center
// branch; C must be an equivalence class not containing the universal vertex.
EquivClassInfo classify_class(const UGraph& phi, const std::vector<std::size_t>& cls);

// Symbolic recognition of an infinitely complex class from its hat-delta.
EquivClassInfo classify_profile_class(const ClassProfile& profile, std::size_t index);

// Orders of elements and sizes of the generated-subgroup blocks inside a class.
struct OrderMultiset {
    std::vector<Card> orders;               // ascending; for unbounded, the first few
    std::vector<std::uint64_t> block_sizes; // totients, parallel to finite orders
    bool unbounded = false;
};

// external_order supplies the (single) element order for Simple classes.
OrderMultiset class_order_multiset(const EquivClassInfo& info, std::uint64_t external_order = 0);

}  // namespace powgraph
