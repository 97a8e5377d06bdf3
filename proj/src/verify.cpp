#include "powgraph/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "powgraph/class_analysis.hpp"
#include "powgraph/error.hpp"
#include "powgraph/powergraph.hpp"
#include "powgraph/reconstruct.hpp"

namespace powgraph {

using json = nlohmann::ordered_json;

DiGraph oracle_digraph(const GroupModel& g) { return zpm_directed_power_graph(g); }

namespace {

// One round of color refinement on a digraph: new color = (old color,
// multiset of successor colors, multiset of predecessor colors).
std::vector<std::size_t> refine_colors(const DiGraph& d, std::vector<std::size_t> colors) {
    const std::size_t n = d.order();
    for (std::size_t round = 0; round < n; ++round) {
        std::map<std::tuple<std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> next;
        std::vector<std::size_t> out(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> succ, pred;
            d.successors(v).for_each([&](std::size_t u) { succ.push_back(colors[u]); });
            d.predecessors(v).for_each([&](std::size_t u) { pred.push_back(colors[u]); });
            std::sort(succ.begin(), succ.end());
            std::sort(pred.begin(), pred.end());
            auto key = std::make_tuple(colors[v], std::move(succ), std::move(pred));
            auto [it, inserted] = next.emplace(std::move(key), next.size());
            out[v] = it->second;
        }
        const std::size_t before = *std::max_element(colors.begin(), colors.end()) + 1;
        const std::size_t after = *std::max_element(out.begin(), out.end()) + 1;
        colors = std::move(out);
        if (after == before) break;
    }
    return colors;
}

std::vector<std::size_t> stable_colors(const DiGraph& d) {
    return refine_colors(d, std::vector<std::size_t>(d.order(), 0));
}

// Multiset signature of a color vector: sorted (color, count) list.
std::vector<std::pair<std::size_t, std::size_t>> color_histogram(const std::vector<std::size_t>& colors) {
    std::map<std::size_t, std::size_t> h;
    for (std::size_t c : colors) ++h[c];
    return {h.begin(), h.end()};
}

bool extend_map(const DiGraph& d1, const DiGraph& d2, const std::vector<std::size_t>& c1,
                const std::vector<std::size_t>& c2, std::vector<std::size_t>& map12,
                std::vector<bool>& used2, const std::vector<std::size_t>& order, std::size_t at) {
    if (at == order.size()) return true;
    const std::size_t v = order[at];
    for (std::size_t w = 0; w < d2.order(); ++w) {
        if (used2[w] || c2[w] != c1[v]) continue;
        bool ok = true;
        for (std::size_t k = 0; ok && k < at; ++k) {
            const std::size_t u = order[k];
            if (d1.arc(v, u) != d2.arc(w, map12[u])) ok = false;
            if (ok && d1.arc(u, v) != d2.arc(map12[u], w)) ok = false;
        }
        if (!ok) continue;
        map12[v] = w;
        used2[w] = true;
        if (extend_map(d1, d2, c1, c2, map12, used2, order, at + 1)) return true;
        used2[w] = false;
    }
    return false;
}

}  // namespace

IsoResult digraph_isomorphic(const DiGraph& d1, const DiGraph& d2) {
    IsoResult res;
    if (d1.order() > 512 || d2.order() > 512)
        throw Error(errc::size_limit, "isomorphism search capped at 512 vertices");
    if (d1.order() != d2.order()) {
        res.failure = "vertex counts differ: " + std::to_string(d1.order()) + " vs " +
                      std::to_string(d2.order());
        return res;
    }
    if (d1.arc_count() != d2.arc_count()) {
        res.failure = "arc counts differ: " + std::to_string(d1.arc_count()) + " vs " +
                      std::to_string(d2.arc_count());
        return res;
    }
    if (d1.order() == 0) {
        res.isomorphic = true;
        return res;
    }

    // Degree-pair multisets, a cheap certificate before refinement.
    auto degree_pairs = [](const DiGraph& d) {
        std::vector<std::pair<std::size_t, std::size_t>> ps;
        for (std::size_t v = 0; v < d.order(); ++v) ps.emplace_back(d.out_degree(v), d.in_degree(v));
        std::sort(ps.begin(), ps.end());
        return ps;
    };
    if (degree_pairs(d1) != degree_pairs(d2)) {
        res.failure = "in/out degree multisets differ";
        return res;
    }

    auto c1 = stable_colors(d1), c2raw = stable_colors(d2);
    // Recolor d2 through the refinement of the disjoint union so color ids agree.
    {
        DiGraph both(d1.order() + d2.order());
        for (auto [u, v] : d1.arcs()) both.add_arc(u, v);
        for (auto [u, v] : d2.arcs()) both.add_arc(d1.order() + u, d1.order() + v);
        const auto cb = stable_colors(both);
        c1.assign(cb.begin(), cb.begin() + d1.order());
        c2raw.assign(cb.begin() + d1.order(), cb.end());
    }
    if (color_histogram(c1) != color_histogram(c2raw)) {
        res.failure = "color refinement signatures differ";
        return res;
    }

    // Match rarest colors first to prune early.
    std::map<std::size_t, std::size_t> class_size;
    for (std::size_t c : c1) ++class_size[c];
    std::vector<std::size_t> order(d1.order());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto ka = std::make_pair(class_size[c1[a]], a), kb = std::make_pair(class_size[c1[b]], b);
        return ka < kb;
    });

    std::vector<std::size_t> map12(d1.order(), SIZE_MAX);
    std::vector<bool> used2(d2.order(), false);
    if (extend_map(d1, d2, c1, c2raw, map12, used2, order, 0)) {
        res.isomorphic = true;
        res.witness = std::move(map12);
    } else {
        res.failure = "backtracking search exhausted";
    }
    return res;
}

std::optional<std::vector<std::size_t>> graph_isomorphism(const UGraph& g1, const UGraph& g2) {
    auto lift = [](const UGraph& g) {
        DiGraph d(g.order());
        for (auto [u, v] : g.edges()) {
            d.add_arc(u, v);
            d.add_arc(v, u);
        }
        return d;
    };
    IsoResult r = digraph_isomorphic(lift(g1), lift(g2));
    if (!r.isomorphic) return std::nullopt;
    return r.witness;
}

VerifyReport verify_group(const GroupSpec& spec, const std::string& id) {
    VerifyReport rep;
    rep.id = id;
    rep.name = spec.display_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto g = build_group(spec);
        if (!g->finite_model())
            throw Error(errc::bad_spec, "verification needs a finite model");
        rep.vertex_count = g->size();

        const DiGraph oracle = oracle_digraph(*g);
        UGraph phi = oracle.underlying();
        phi.strip_labels();

        OrientationPlan plan;
        const DiGraph rebuilt = reconstruct(phi, &plan);
        rep.center_case = to_string(plan.center_case);
        {
            std::ostringstream os;
            for (const auto& row : plan.classes) {
                os << to_string(row.kind) << " size=" << row.vertices.size();
                if (row.p) os << " p=" << row.p << " s=" << row.s << " r=" << row.r;
                os << "\n";
            }
            rep.class_table = os.str();
        }

        const IsoResult iso = digraph_isomorphic(rebuilt, oracle);
        rep.isomorphic = iso.isomorphic;
        rep.detail = iso.isomorphic ? "witness found" : iso.failure;
    } catch (const Error& e) {
        rep.error = e.what();  // already prefixed with the error code
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<VerifyReport> run_corpus(const std::vector<ManifestEntry>& manifest) {
    std::size_t threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("POWGRAPH_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) threads = static_cast<std::size_t>(v);
    }
    threads = std::max<std::size_t>(1, std::min(threads, manifest.size()));

    std::vector<VerifyReport> reports(manifest.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= manifest.size()) return;
            reports[i] = verify_group(manifest[i].spec, manifest[i].id);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return reports;
}

namespace {

void add(std::vector<ManifestEntry>& out, std::string id, GroupSpec spec) {
    out.push_back({std::move(id), std::move(spec)});
}

// All multisets of prime powers multiplying to at most `limit`, one manifest
// entry per abelian isomorphism class.
void abelian_entries(std::vector<ManifestEntry>& out, std::int64_t limit) {
    std::vector<std::int64_t> pps;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
        for (std::int64_t pk = p; pk <= limit; pk *= p) pps.push_back(pk);
    std::sort(pps.begin(), pps.end());

    std::vector<std::int64_t> current;
    auto emit = [&]() {
        std::int64_t order = 1;
        for (std::int64_t v : current) order *= v;
        std::string id = "abelian";
        for (std::int64_t v : current) id += "_" + std::to_string(v);
        if (current.empty()) id = "abelian_trivial";
        add(out, id, GroupSpec::abelian(current));
    };
    // Depth-first over nondecreasing prime-power lists.
    auto rec = [&](auto&& self, std::size_t from, std::int64_t budget) -> void {
        emit();
        for (std::size_t i = from; i < pps.size(); ++i) {
            if (pps[i] > budget) break;
            current.push_back(pps[i]);
            self(self, i, budget / pps[i]);
            current.pop_back();
        }
    };
    rec(rec, 0, limit);
}

// Deterministic random finite groups: closures of two random permutations,
// converted to bare multiplication tables.
void table_entries(std::vector<ManifestEntry>& out, int count, unsigned seed) {
    std::mt19937 rng(seed);
    int made = 0;
    while (made < count) {
        const int degree = 4 + static_cast<int>(rng() % 3);  // 4..6
        std::vector<int> g1(degree), g2(degree);
        std::iota(g1.begin(), g1.end(), 0);
        std::iota(g2.begin(), g2.end(), 0);
        std::shuffle(g1.begin(), g1.end(), rng);
        std::shuffle(g2.begin(), g2.end(), rng);

        std::set<std::vector<int>> closure;
        std::vector<int> identity(degree);
        std::iota(identity.begin(), identity.end(), 0);
        closure.insert(identity);
        std::vector<std::vector<int>> frontier{g1, g2};
        bool too_big = false;
        while (!frontier.empty() && !too_big) {
            std::vector<std::vector<int>> next_frontier;
            for (const auto& f : frontier) {
                if (!closure.insert(f).second) continue;
                for (const auto& gen : {g1, g2}) {
                    std::vector<int> prod(degree);
                    for (int i = 0; i < degree; ++i) prod[i] = f[gen[i]];
                    if (closure.count(prod) == 0) next_frontier.push_back(prod);
                }
                if (closure.size() > 64) {
                    too_big = true;
                    break;
                }
            }
            frontier = std::move(next_frontier);
        }
        if (too_big || closure.size() < 2) continue;

        const std::vector<std::vector<int>> elems(closure.begin(), closure.end());
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> table(elems.size(), std::vector<int>(elems.size()));
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = 0; b < elems.size(); ++b) {
                std::vector<int> prod(degree);
                for (int i = 0; i < degree; ++i) prod[i] = elems[a][elems[b][i]];
                table[a][b] = index.at(prod);
            }
        add(out, "table_sample_" + std::to_string(made), GroupSpec::from_table(table));
        ++made;
    }
}

}  // namespace

std::vector<ManifestEntry> default_corpus() {
    std::vector<ManifestEntry> out;
    for (std::int64_t n = 1; n <= 100; ++n) add(out, "cyclic_" + std::to_string(n), GroupSpec::cyclic(n));
    for (std::int64_t n = 2; n <= 50; ++n) add(out, "dihedral_" + std::to_string(n), GroupSpec::dihedral(n));
    for (std::int64_t k = 2; k <= 25; ++k) add(out, "dicyclic_" + std::to_string(k), GroupSpec::dicyclic(k));
    abelian_entries(out, 64);
    add(out, "perm_s3", GroupSpec::permutation(3, {{1, 0, 2}, {1, 2, 0}}));
    add(out, "perm_s4", GroupSpec::permutation(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}));
    add(out, "perm_a4", GroupSpec::permutation(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}));
    add(out, "perm_a5", GroupSpec::permutation(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}));
    add(out, "perm_d4", GroupSpec::permutation(4, {{1, 2, 3, 0}, {3, 2, 1, 0}}));
    add(out, "perm_q8",
        GroupSpec::permutation(8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}));
    table_entries(out, 10, 2024);
    return out;
}

std::string manifest_to_json_text(const std::vector<ManifestEntry>& manifest) {
    json arr = json::array();
    for (const auto& e : manifest) {
        json item;
        item["id"] = e.id;
        item["spec"] = json::parse(e.spec.to_json_text());
        arr.push_back(item);
    }
    json j;
    j["groups"] = arr;
    return j.dump(2) + "\n";
}

std::vector<ManifestEntry> manifest_from_json_text(const std::string& text) {
    std::vector<ManifestEntry> out;
    try {
        json j = json::parse(text);
        for (const auto& item : j.at("groups")) {
            ManifestEntry e;
            e.id = item.at("id").get<std::string>();
            e.spec = GroupSpec::parse_json_text(item.at("spec").dump());
            out.push_back(std::move(e));
        }
    } catch (const json::exception& e) {
        throw Error(errc::bad_spec, std::string("malformed manifest: ") + e.what());
    }
    return out;
}

std::string report_to_text(const VerifyReport& r) {
    std::ostringstream os;
    os << (r.error.empty() ? (r.isomorphic ? "PASS" : "FAIL") : "ERROR") << " " << r.id;
    if (!r.name.empty()) os << " (" << r.name << ")";
    os << " n=" << r.vertex_count;
    if (!r.center_case.empty()) os << " center=" << r.center_case;
    if (!r.error.empty())
        os << " error=" << r.error;
    else if (!r.isomorphic)
        os << " detail=" << r.detail;
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3fs", r.wall_seconds);
    os << buf;
    return os.str();
}

}  // namespace powgraph
