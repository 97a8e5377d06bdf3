#include "powgraph/class_analysis.hpp"

#include <algorithm>

#include "json.hpp"
#include "powgraph/error.hpp"
#include "powgraph/powergraph.hpp"
#include "powgraph/totient.hpp"

namespace powgraph {

using json = nlohmann::ordered_json;

std::string to_string(CenterCase c) {
    switch (c) {
        case CenterCase::TrivialCenter: return "TrivialCenter";
        case CenterCase::CyclicPrimePower: return "CyclicPrimePower";
        case CenterCase::CyclicPQ: return "CyclicPQ";
        case CenterCase::CyclicComposite: return "CyclicComposite";
        case CenterCase::PGroupNoncyclic: return "PGroupNoncyclic";
        case CenterCase::PruferLike: return "PruferLike";
    }
    return "?";
}

std::string to_string(ClassKind k) {
    switch (k) {
        case ClassKind::Simple: return "Simple";
        case ClassKind::Complex: return "Complex";
        case ClassKind::InfinitelyComplex: return "InfinitelyComplex";
    }
    return "?";
}

std::vector<std::size_t> center(const UGraph& phi) {
    const std::size_t n = phi.order();
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v)
        if (phi.degree(v) + 1 == n) out.push_back(v);
    if (out.empty())
        throw Error(errc::not_finite_order_component, "graph has no universal vertex");
    return out;
}

CenterReport classify_center_case(const UGraph& phi) {
    CenterReport rep;
    rep.center = center(phi);
    rep.center_size = Card::fin(rep.center.size());
    rep.vertex_count = Card::fin(phi.order());

    const std::size_t s = rep.center.size(), n = phi.order();
    if (s == 1) {
        rep.kind = CenterCase::TrivialCenter;
        return rep;
    }
    if (s == n) {
        rep.kind = CenterCase::CyclicPrimePower;
        return rep;
    }
    std::vector<std::size_t> rest;
    std::vector<bool> in_center(n, false);
    for (std::size_t v : rep.center) in_center[v] = true;
    for (std::size_t v = 0; v < n; ++v)
        if (!in_center[v]) rest.push_back(v);
    const bool connected = phi.induced(rest).components().size() == 1;
    if (connected)
        rep.kind = CenterCase::CyclicComposite;
    else
        rep.kind = (2 * s >= n) ? CenterCase::CyclicPQ : CenterCase::PGroupNoncyclic;
    return rep;
}

CenterCase classify_profile_center(const ClassProfile& profile) {
    // The universal class is the one adjacent to every other class.
    for (std::size_t i = 0; i < profile.classes.size(); ++i) {
        bool universal = true;
        for (std::size_t j = 0; j < profile.classes.size(); ++j)
            if (j != i && !profile.adjacency[i][j]) universal = false;
        if (universal && !profile.classes[i].card.is_finite()) return CenterCase::PruferLike;
    }
    throw Error(errc::profile_inconsistent, "profile has no infinite universal class");
}

namespace {

bool classes_adjacent(const UGraph& g, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    // Adjacency between distinct equivalence classes is class-uniform, so one
    // representative pair decides it.
    return g.adjacent(a.front(), b.front());
}

}  // namespace

EquivClassInfo classify_class(const UGraph& phi, const std::vector<std::size_t>& cls) {
    const auto cen = center(phi);
    if (cen.size() != 1)
        throw Error(errc::structure_error, "classify_class requires a trivial center");

    const VertexPartition part = equiv_classes(phi);
    std::vector<std::size_t> sorted = cls;
    std::sort(sorted.begin(), sorted.end());
    const auto block_it = std::find(part.blocks.begin(), part.blocks.end(), sorted);
    if (block_it == part.blocks.end())
        throw Error(errc::not_an_equiv_class, "input set is not a class of equal closed neighborhoods");
    if (std::find(sorted.begin(), sorted.end(), cen.front()) != sorted.end())
        throw Error(errc::structure_error, "class contains the universal vertex");

    EquivClassInfo info;
    info.vertices = sorted;
    info.card = Card::fin(sorted.size());

    const auto hat = double_neighborhood(phi, sorted);
    info.hat_size = Card::fin(hat.size());

    // Condition 1: |C^| = p^r with r >= 2 and |C^| - |C| = p^{s-1}, r > s > 0.
    bool cond1 = false;
    std::uint64_t p = 0;
    int s = 0, r = 0;
    if (auto pp = prime_power_parse(hat.size()); pp && pp->second >= 2) {
        p = pp->first;
        r = pp->second;
        const std::uint64_t delta = hat.size() - sorted.size();
        if (delta == 1) {
            s = 1;
            cond1 = true;
        } else if (auto dp = prime_power_parse(delta); dp && dp->first == p && dp->second + 1 < r + 1) {
            // delta = p^{s-1} with s - 1 >= 1 and r > s
            s = dp->second + 1;
            cond1 = r > s;
        }
    }

    // Condition 2: no two distinct mutually non-adjacent classes D, E, both
    // adjacent to C, with |D|, |E| <= |C|.
    bool cond2 = true;
    if (cond1) {
        std::vector<const std::vector<std::size_t>*> small_adjacent;
        for (const auto& block : part.blocks) {
            if (block == sorted) continue;
            if (block.size() > sorted.size()) continue;
            if (classes_adjacent(phi, block, sorted)) small_adjacent.push_back(&block);
        }
        for (std::size_t i = 0; cond2 && i < small_adjacent.size(); ++i)
            for (std::size_t j = i + 1; cond2 && j < small_adjacent.size(); ++j)
                if (!classes_adjacent(phi, *small_adjacent[i], *small_adjacent[j])) cond2 = false;
    }

    if (cond1 && cond2) {
        info.kind = ClassKind::Complex;
        info.p = p;
        info.s = s;
        info.r = r;
        info.hat_size = Card::fin(ipow(p, r));
    } else {
        info.kind = ClassKind::Simple;
    }
    return info;
}

EquivClassInfo classify_profile_class(const ClassProfile& profile, std::size_t index) {
    if (index >= profile.classes.size())
        throw Error(errc::profile_inconsistent, "class index out of range");
    const auto& entry = profile.classes[index];
    if (entry.card.is_finite())
        throw Error(errc::profile_inconsistent, "classify_profile_class needs an infinite class");

    EquivClassInfo info;
    info.card = Card::aleph0();
    info.hat_size = Card::aleph0();
    info.kind = ClassKind::InfinitelyComplex;
    if (entry.hat_delta == 1) {
        info.p = 0;  // p^0 = 1 for every prime; p stays unknown
        info.s = 1;
    } else {
        auto pp = prime_power_parse(entry.hat_delta);
        if (!pp)
            throw Error(errc::profile_inconsistent,
                        "hat-delta " + std::to_string(entry.hat_delta) + " is not a prime power");
        info.p = pp->first;
        info.s = pp->second + 1;
    }
    return info;
}

OrderMultiset class_order_multiset(const EquivClassInfo& info, std::uint64_t external_order) {
    OrderMultiset out;
    switch (info.kind) {
        case ClassKind::Complex:
            for (int k = info.s; k <= info.r; ++k) {
                out.orders.push_back(Card::fin(ipow(info.p, k)));
                out.block_sizes.push_back(totient(ipow(info.p, k)));
            }
            break;
        case ClassKind::InfinitelyComplex: {
            out.unbounded = true;
            const std::uint64_t p = info.p ? info.p : 0;
            if (p)
                for (int k = info.s; k < info.s + 3; ++k) out.orders.push_back(Card::fin(ipow(p, k)));
            break;
        }
        case ClassKind::Simple:
            if (external_order == 0)
                throw Error(errc::structure_error, "simple class needs an externally supplied order");
            out.orders.push_back(Card::fin(external_order));
            out.block_sizes.push_back(info.card.value());
            break;
    }
    return out;
}

std::string ClassProfile::to_json_text() const {
    json j;
    json cls = json::array();
    for (const auto& c : classes) {
        json e;
        if (c.card.is_finite())
            e["card"] = c.card.value();
        else
            e["card"] = "aleph0";
        e["hat_delta"] = c.hat_delta;
        cls.push_back(e);
    }
    j["classes"] = cls;
    json adj = json::array();
    for (const auto& row : adjacency) adj.push_back(row);
    j["adjacency"] = adj;
    return j.dump() + "\n";
}

ClassProfile ClassProfile::parse_json_text(const std::string& text) {
    ClassProfile p;
    try {
        json j = json::parse(text);
        for (const auto& e : j.at("classes")) {
            Entry entry;
            if (e.at("card").is_string()) {
                if (e.at("card").get<std::string>() != "aleph0")
                    throw Error(errc::profile_inconsistent, "card must be an integer or \"aleph0\"");
                entry.card = Card::aleph0();
            } else {
                entry.card = Card::fin(e.at("card").get<std::uint64_t>());
            }
            entry.hat_delta = e.at("hat_delta").get<std::uint64_t>();
            p.classes.push_back(entry);
        }
        p.adjacency = j.at("adjacency").get<std::vector<std::vector<bool>>>();
    } catch (const json::exception& e) {
        throw Error(errc::bad_spec, std::string("malformed class profile: ") + e.what());
    }
    const std::size_t n = p.classes.size();
    if (p.adjacency.size() != n)
        throw Error(errc::profile_inconsistent, "adjacency size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (p.adjacency[i].size() != n)
            throw Error(errc::profile_inconsistent, "adjacency row size mismatch");
        for (std::size_t k = 0; k < n; ++k)
            if (p.adjacency[i][k] != p.adjacency[k][i])
                throw Error(errc::profile_inconsistent, "adjacency must be symmetric");
    }
    return p;
}

}  // namespace powgraph
