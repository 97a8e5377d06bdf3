#include "powgraph/window.hpp"

#include <algorithm>
#include <string>

#include "powgraph/error.hpp"
#include "powgraph/powergraph.hpp"

namespace powgraph {

namespace {

bool pg_adjacent(const GroupModel& g, std::size_t u, std::size_t v) {
    return u != v && (g.is_nonzero_power(u, v) || g.is_nonzero_power(v, u));
}

// Complement of the induced power graph on the given model vertices.
InducedComplement complement_on(const GroupModel& g, std::vector<std::size_t> verts) {
    InducedComplement out;
    out.vertices = std::move(verts);
    const std::size_t n = out.vertices.size();
    out.graph = UGraph(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.graph.labels()[i] = g.label(out.vertices[i]);
        for (std::size_t j = i + 1; j < n; ++j)
            if (!pg_adjacent(g, out.vertices[i], out.vertices[j])) out.graph.add_edge(i, j);
    }
    return out;
}

}  // namespace

IOMSets iom_sets(const GroupModel& g, std::size_t x) {
    if (x == 0)
        throw Error(errc::identity_argument, "I/O/M sets are undefined for the identity");
    IOMSets s;
    s.x = x;
    const std::size_t inv = g.inverse(x);
    for (std::size_t y = 0; y < g.size(); ++y) {
        if (y == x || y == inv) continue;
        const bool in_i = g.is_nonzero_power(y, x);
        const bool in_o = g.is_nonzero_power(x, y);
        if (in_i) s.I.push_back(y);
        if (in_o) s.O.push_back(y);
        if (in_i || in_o) s.M.push_back(y);
    }
    return s;
}

ComplementGraphs complement_graphs(const GroupModel& g, std::size_t x) {
    const IOMSets s = iom_sets(g, x);
    ComplementGraphs out;
    out.o_bar = complement_on(g, s.O);
    out.m_bar = complement_on(g, s.M);
    return out;
}

InducedComplement intersect_o_bar(const GroupModel& g, std::size_t x, std::size_t y) {
    const IOMSets sx = iom_sets(g, x), sy = iom_sets(g, y);
    std::vector<std::size_t> common;
    std::set_intersection(sx.O.begin(), sx.O.end(), sy.O.begin(), sy.O.end(),
                          std::back_inserter(common));
    return complement_on(g, common);
}

bool guarded(const GroupModel& g, std::size_t x) { return g.power(x, 5).has_value(); }

bool lemma4_check(const GroupModel& g, std::size_t x, int guard_factor) {
    const IOMSets s = iom_sets(g, x);

    // The in-window M set is the guarded sub-window; x itself must keep its
    // fifth power inside the window for the check to mean anything.
    if (s.M.size() < 5 || !g.power(x, guard_factor).has_value())
        throw Error(errc::window_too_small,
                    "guarded sub-window has " + std::to_string(s.M.size()) + " vertices");

    // No complement edge from O to I anywhere in the window.
    for (std::size_t o : s.O)
        for (std::size_t i : s.I)
            if (!pg_adjacent(g, o, i)) return false;

    // Every guarded O-vertex sits in one component of the complement on O.
    const InducedComplement ob = complement_on(g, s.O);
    const auto comps = ob.graph.components();
    std::vector<std::size_t> comp_of(ob.vertices.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (std::size_t v : comps[c]) comp_of[v] = c;
    std::size_t seen = SIZE_MAX;
    for (std::size_t i = 0; i < ob.vertices.size(); ++i) {
        if (!g.power(ob.vertices[i], guard_factor).has_value()) continue;
        if (seen == SIZE_MAX)
            seen = comp_of[i];
        else if (comp_of[i] != seen)
            return false;
    }
    return true;
}

AlmostConnectedReport almost_connected(const UGraph& gamma) {
    AlmostConnectedReport rep;
    for (std::size_t v = 0; v < gamma.order(); ++v)
        (gamma.degree(v) == 0 ? rep.isolated : rep.bulk).push_back(v);
    rep.verdict = rep.isolated.size() == 2 && !rep.bulk.empty() &&
                  gamma.induced(rep.bulk).components().size() == 1;
    return rep;
}

namespace {

// Component of the complement on M(u) containing target, as model indices.
std::vector<std::size_t> mbar_component_of(const GroupModel& g, std::size_t u, std::size_t target) {
    const IOMSets s = iom_sets(g, u);
    const InducedComplement mb = complement_on(g, s.M);
    const auto it = std::find(mb.vertices.begin(), mb.vertices.end(), target);
    if (it == mb.vertices.end())
        throw Error(errc::structure_error, "edge endpoint missing from the merged set");
    const std::size_t local = static_cast<std::size_t>(it - mb.vertices.begin());
    for (const auto& comp : mb.graph.components())
        if (std::find(comp.begin(), comp.end(), local) != comp.end()) {
            std::vector<std::size_t> out;
            for (std::size_t v : comp) out.push_back(mb.vertices[v]);
            return out;
        }
    return {};
}

}  // namespace

RecoveredDirections recover_directions(const GroupModel& g, std::size_t x, std::size_t y,
                                       std::size_t tau) {
    if (x == 0 || y == 0)
        throw Error(errc::identity_argument, "witnesses must not be the identity");
    if (pg_adjacent(g, x, y))
        throw Error(errc::structure_error, "witnesses must be non-adjacent");

    const IOMSets sx = iom_sets(g, x), sy = iom_sets(g, y);
    std::vector<std::size_t> mxy;
    std::set_intersection(sx.M.begin(), sx.M.end(), sy.M.begin(), sy.M.end(),
                          std::back_inserter(mxy));
    const InducedComplement merged = complement_on(g, mxy);
    if (!almost_connected(merged.graph).verdict)
        throw Error(errc::structure_error, "merged complement of the witnesses is not almost connected");
    std::vector<bool> in_mxy(g.size(), false);
    for (std::size_t v : mxy) in_mxy[v] = true;

    // Component of the window power graph containing the witnesses.
    const UGraph pg = zpm_power_graph(g);
    std::vector<std::size_t> comp;
    for (const auto& c : pg.components())
        if (std::find(c.begin(), c.end(), x) != c.end()) comp = c;
    if (std::find(comp.begin(), comp.end(), y) == comp.end())
        throw Error(errc::structure_error, "witnesses lie in different components");

    RecoveredDirections out;
    out.vertices = comp;
    out.digraph = DiGraph(comp.size());
    std::vector<std::size_t> local(g.size(), SIZE_MAX);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        local[comp[i]] = i;
        out.digraph.labels()[i] = g.label(comp[i]);
    }

    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = i + 1; j < comp.size(); ++j) {
            const std::size_t u = comp[i], v = comp[j];
            if (!pg_adjacent(g, u, v)) continue;
            if (g.inverse(u) == v) {
                out.digraph.add_arc(local[u], local[v]);
                out.digraph.add_arc(local[v], local[u]);
                continue;
            }
            if (!guarded(g, u) || !guarded(g, v)) continue;
            ++out.guarded_edges;
            auto count = [&](std::size_t a, std::size_t b) {
                std::size_t n = 0;
                for (std::size_t w : mbar_component_of(g, a, b))
                    if (in_mxy[w]) ++n;
                return n;
            };
            const std::size_t cu = count(u, v), cv = count(v, u);
            if (cu >= tau && cv >= tau)
                throw Error(errc::structure_error, "both directions pass the threshold for edge " +
                                                       g.label(u) + " -- " + g.label(v));
            if (cu >= tau)
                out.digraph.add_arc(local[u], local[v]);
            else if (cv >= tau)
                out.digraph.add_arc(local[v], local[u]);
            else
                out.undecided.emplace_back(u, v);
        }
    if (!out.undecided.empty()) {
        const auto& [u, v] = out.undecided.front();
        throw Error(errc::threshold_undecided,
                    std::to_string(out.undecided.size()) + " edge(s) below threshold, first " +
                        g.label(u) + " -- " + g.label(v));
    }
    return out;
}

bool locally_cyclic_check(const GroupModel& g, std::size_t pair_cap) {
    std::size_t examined = 0;
    for (std::size_t u = 1; u < g.size() && examined < pair_cap; ++u)
        for (std::size_t v = u + 1; v < g.size() && examined < pair_cap; ++v) {
            if (pg_adjacent(g, u, v)) continue;
            ++examined;
            bool found = false;
            for (std::size_t z = 1; z < g.size() && !found; ++z)
                if (g.is_power_member(z, u) && g.is_power_member(z, v)) found = true;
            if (!found) return false;
        }
    return true;
}

}  // namespace powgraph
