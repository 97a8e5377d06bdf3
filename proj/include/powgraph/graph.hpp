#pragma once

#include <string>
#include <utility>
#include <vector>

#include "powgraph/bitset.hpp"

namespace powgraph {

// Simple undirected graph over vertex indices, adjacency kept as bit rows.
class UGraph {
public:
    UGraph() = default;
    explicit UGraph(std::size_t n) : adj_(n, Bitset(n)), labels_(n) {}

    std::size_t order() const { return adj_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) return;  // simple graph: no loops
        adj_[u].set(v);
        adj_[v].set(u);
    }
    bool adjacent(std::size_t u, std::size_t v) const { return u != v && adj_[u].test(v); }

    const Bitset& neighbors(std::size_t u) const { return adj_[u]; }
    Bitset closed_neighborhood_bits(std::size_t u) const {
        Bitset b = adj_[u];
        b.set(u);
        return b;
    }
    std::size_t degree(std::size_t u) const { return adj_[u].count(); }

    // Edges as sorted (min,max) pairs, lexicographic.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    UGraph induced(const std::vector<std::size_t>& vertices) const;
    UGraph complement() const;

    // Connected components; each component sorted, components ordered by minimum vertex.
    std::vector<std::vector<std::size_t>> components() const;

    std::vector<std::string>& labels() { return labels_; }
    const std::vector<std::string>& labels() const { return labels_; }
    void strip_labels();

private:
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

// Simple digraph: no loops, arcs may exist in both directions.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(std::size_t n) : out_(n, Bitset(n)), in_(n, Bitset(n)), labels_(n) {}

    std::size_t order() const { return out_.size(); }

    void add_arc(std::size_t u, std::size_t v) {
        if (u == v) return;
        out_[u].set(v);
        in_[v].set(u);
    }
    bool arc(std::size_t u, std::size_t v) const { return u != v && out_[u].test(v); }

    const Bitset& successors(std::size_t u) const { return out_[u]; }
    const Bitset& predecessors(std::size_t u) const { return in_[u]; }
    std::size_t out_degree(std::size_t u) const { return out_[u].count(); }
    std::size_t in_degree(std::size_t u) const { return in_[u].count(); }

    std::size_t arc_count() const {
        std::size_t c = 0;
        for (const auto& row : out_) c += row.count();
        return c;
    }

    std::vector<std::pair<std::size_t, std::size_t>> arcs() const;

    UGraph underlying() const;

    std::vector<std::string>& labels() { return labels_; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::vector<Bitset> out_;
    std::vector<Bitset> in_;
    std::vector<std::string> labels_;
};

// Disjoint blocks covering 0..n-1, each block sorted, blocks ordered by minimum.
struct VertexPartition {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::string> tags;  // optional, parallel to blocks

    // block index per vertex
    std::vector<std::size_t> block_of(std::size_t n) const;
};

// --- graph file format ------------------------------------------------------
// JSON object: {"directed": bool, "vertices": [labels], "edges"/"arcs": [[i,j],...]}
// Pairs are sorted; writing then reading is the identity.

std::string write_ugraph(const UGraph& g);
std::string write_digraph(const DiGraph& g);

// Parses either form; exactly one of the outputs is filled, per the flag.
struct ParsedGraph {
    bool directed = false;
    UGraph ugraph;
    DiGraph digraph;
};
ParsedGraph read_graph(const std::string& text);

std::string to_dot(const UGraph& g);
std::string to_dot(const DiGraph& g);

}  // namespace powgraph
