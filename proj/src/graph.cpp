#include "powgraph/graph.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "powgraph/error.hpp"

namespace powgraph {

using json = nlohmann::ordered_json;

std::vector<std::pair<std::size_t, std::size_t>> UGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
        adj_[u].for_each([&](std::size_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

UGraph UGraph::induced(const std::vector<std::size_t>& vertices) const {
    UGraph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.labels_[i] = labels_[vertices[i]];
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j])) g.add_edge(i, j);
    }
    return g;
}

UGraph UGraph::complement() const {
    UGraph g(order());
    g.labels_ = labels_;
    for (std::size_t u = 0; u < order(); ++u)
        for (std::size_t v = u + 1; v < order(); ++v)
            if (!adjacent(u, v)) g.add_edge(u, v);
    return g;
}

std::vector<std::vector<std::size_t>> UGraph::components() const {
    const std::size_t n = order();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] != SIZE_MAX) continue;
        const std::size_t id = out.size();
        out.emplace_back();
        std::vector<std::size_t> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            adj_[u].for_each([&](std::size_t v) {
                if (comp[v] == SIZE_MAX) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            });
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

void UGraph::strip_labels() {
    for (auto& l : labels_) l.clear();
}

std::vector<std::pair<std::size_t, std::size_t>> DiGraph::arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
        out_[u].for_each([&](std::size_t v) { out.emplace_back(u, v); });
    return out;
}

UGraph DiGraph::underlying() const {
    UGraph g(order());
    g.labels() = labels_;
    for (std::size_t u = 0; u < order(); ++u)
        out_[u].for_each([&](std::size_t v) { g.add_edge(u, v); });
    return g;
}

std::vector<std::size_t> VertexPartition::block_of(std::size_t n) const {
    std::vector<std::size_t> of(n, SIZE_MAX);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t v : blocks[b]) of[v] = b;
    return of;
}

namespace {

json pairs_to_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    json a = json::array();
    for (auto [u, v] : pairs) a.push_back(json::array({u, v}));
    return a;
}

}  // namespace

std::string write_ugraph(const UGraph& g) {
    json j;
    j["directed"] = false;
    j["vertices"] = g.labels();
    j["edges"] = pairs_to_json(g.edges());
    return j.dump() + "\n";
}

std::string write_digraph(const DiGraph& g) {
    json j;
    j["directed"] = true;
    j["vertices"] = g.labels();
    j["arcs"] = pairs_to_json(g.arcs());
    return j.dump() + "\n";
}

ParsedGraph read_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(errc::bad_spec, std::string("invalid graph file: ") + e.what());
    }
    ParsedGraph out;
    try {
        out.directed = j.at("directed").get<bool>();
        const auto labels = j.at("vertices").get<std::vector<std::string>>();
        const std::size_t n = labels.size();
        auto pairs = j.at(out.directed ? "arcs" : "edges").get<std::vector<std::pair<std::size_t, std::size_t>>>();
        for (auto [u, v] : pairs)
            if (u >= n || v >= n || u == v) throw Error(errc::bad_spec, "graph file: bad vertex pair");
        if (out.directed) {
            out.digraph = DiGraph(n);
            out.digraph.labels() = labels;
            for (auto [u, v] : pairs) out.digraph.add_arc(u, v);
        } else {
            out.ugraph = UGraph(n);
            out.ugraph.labels() = labels;
            for (auto [u, v] : pairs) out.ugraph.add_edge(u, v);
        }
    } catch (const json::exception& e) {
        throw Error(errc::bad_spec, std::string("malformed graph file: ") + e.what());
    }
    return out;
}

namespace {

std::string dot_name(const std::vector<std::string>& labels, std::size_t v) {
    std::ostringstream os;
    os << "v" << v;
    if (!labels[v].empty()) {
        std::string esc;
        for (char c : labels[v]) {
            if (c == '"' || c == '\\') esc += '\\';
            esc += c;
        }
        os << " [label=\"" << esc << "\"]";
    }
    return os.str();
}

}  // namespace

std::string to_dot(const UGraph& g) {
    std::ostringstream os;
    os << "graph powgraph {\n";
    for (std::size_t v = 0; v < g.order(); ++v) os << "  " << dot_name(g.labels(), v) << ";\n";
    for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const DiGraph& g) {
    std::ostringstream os;
    os << "digraph powgraph {\n";
    for (std::size_t v = 0; v < g.order(); ++v) os << "  " << dot_name(g.labels(), v) << ";\n";
    for (auto [u, v] : g.arcs()) os << "  v" << u << " -> v" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace powgraph
