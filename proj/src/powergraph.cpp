#include "powgraph/powergraph.hpp"

#include <algorithm>
#include <map>

#include "powgraph/error.hpp"

namespace powgraph {

namespace {

template <typename Pred>
DiGraph build_digraph(const GroupModel& g, Pred member) {
    const std::size_t n = g.size();
    DiGraph d(n);
    for (std::size_t x = 0; x < n; ++x) {
        d.labels()[x] = g.label(x);
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && member(x, y)) d.add_arc(x, y);
    }
    return d;
}

}  // namespace

DiGraph directed_power_graph(const GroupModel& g) {
    return build_digraph(g, [&](std::size_t x, std::size_t y) { return g.is_power_member(x, y); });
}

DiGraph zpm_directed_power_graph(const GroupModel& g) {
    return build_digraph(g, [&](std::size_t x, std::size_t y) { return g.is_nonzero_power(x, y); });
}

UGraph power_graph(const GroupModel& g) { return directed_power_graph(g).underlying(); }

UGraph zpm_power_graph(const GroupModel& g) { return zpm_directed_power_graph(g).underlying(); }

std::vector<std::size_t> closed_neighborhood(const UGraph& g, std::size_t x) {
    return g.closed_neighborhood_bits(x).to_indices();
}

Bitset common_closed_neighborhood_bits(const UGraph& g, const Bitset& s) {
    if (!s.any()) throw Error(errc::empty_set, "common closed neighborhood of the empty set");
    bool first = true;
    Bitset acc(g.order());
    s.for_each([&](std::size_t x) {
        Bitset nb = g.closed_neighborhood_bits(x);
        if (first) {
            acc = nb;
            first = false;
        } else {
            acc &= nb;
        }
    });
    return acc;
}

std::vector<std::size_t> common_closed_neighborhood(const UGraph& g, const std::vector<std::size_t>& s) {
    Bitset b(g.order());
    for (std::size_t x : s) b.set(x);
    return common_closed_neighborhood_bits(g, b).to_indices();
}

Bitset double_neighborhood_bits(const UGraph& g, const Bitset& s) {
    return common_closed_neighborhood_bits(g, common_closed_neighborhood_bits(g, s));
}

std::vector<std::size_t> double_neighborhood(const UGraph& g, const std::vector<std::size_t>& s) {
    Bitset b(g.order());
    for (std::size_t x : s) b.set(x);
    return double_neighborhood_bits(g, b).to_indices();
}

VertexPartition equiv_classes(const UGraph& g) {
    std::map<Bitset, std::vector<std::size_t>> by_row;
    for (std::size_t v = 0; v < g.order(); ++v) by_row[g.closed_neighborhood_bits(v)].push_back(v);
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& [row, verts] : by_row) blocks.push_back(std::move(verts));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    VertexPartition p;
    p.blocks = std::move(blocks);
    p.tags.assign(p.blocks.size(), "equiv");
    return p;
}

VertexPartition approx_classes(const GroupModel& g) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_subgroup;
    for (std::size_t v = 0; v < g.size(); ++v) {
        // Window truncation cannot merge distinct cyclic subgroups here: the
        // windowed intersections of <x> and <y> coincide only if the subgroups do.
        bool trunc = false;
        auto key = g.cyclic_subgroup(v, &trunc);
        by_subgroup[std::move(key)].push_back(v);
    }
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& [k, verts] : by_subgroup) blocks.push_back(std::move(verts));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    VertexPartition p;
    p.blocks = std::move(blocks);
    p.tags.assign(p.blocks.size(), "approx");
    return p;
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split_by_order(const GroupModel& g) {
    std::vector<std::size_t> fin, inf;
    for (std::size_t v = 0; v < g.size(); ++v)
        (g.element_order(v).is_finite() ? fin : inf).push_back(v);
    return {fin, inf};
}

}  // namespace powgraph
