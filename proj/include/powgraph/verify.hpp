#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powgraph/graph.hpp"
#include "powgraph/group.hpp"

namespace powgraph {

// Ground-truth directed power graph by direct power enumeration.
DiGraph oracle_digraph(const GroupModel& g);

struct IsoResult {
    bool isomorphic = false;
    std::vector<std::size_t> witness;  // vertex map D1 -> D2 when isomorphic
    std::string failure;               // invariant mismatch or exhausted search
};

// Backtracking isomorphism search with invariant pruning (degree pairs,
// class-size multisets, double-neighborhood sizes).  Caps at 512 vertices.
IsoResult digraph_isomorphic(const DiGraph& d1, const DiGraph& d2);

// Undirected variant (graphs modeled as mutual-arc digraphs).
std::optional<std::vector<std::size_t>> graph_isomorphism(const UGraph& g1, const UGraph& g2);

struct VerifyReport {
    std::string id;
    std::string name;
    std::size_t vertex_count = 0;
    std::string center_case;
    std::string class_table;  // one line per class: kind and (p,s,r) when known
    bool isomorphic = false;
    std::string error;   // nonempty when the pipeline failed for this entry
    std::string detail;  // witness summary or failure certificate
    double wall_seconds = 0.0;
};

// End-to-end check of one finite group: build the undirected power graph,
// strip labels, reconstruct, and match against the oracle digraph.
VerifyReport verify_group(const GroupSpec& spec, const std::string& id = "");

struct ManifestEntry {
    std::string id;
    GroupSpec spec;
};

// Reads POWGRAPH_THREADS for parallelism; reports come back in manifest order.
std::vector<VerifyReport> run_corpus(const std::vector<ManifestEntry>& manifest);

// The default desk-scale corpus: cyclic 1..100, dihedral 2..50, dicyclic
// 2..25, abelian groups of order <= 64, a few permutation groups, and 10
// seeded random multiplication-table samples.
std::vector<ManifestEntry> default_corpus();

std::string manifest_to_json_text(const std::vector<ManifestEntry>& manifest);
std::vector<ManifestEntry> manifest_from_json_text(const std::string& text);

std::string report_to_text(const VerifyReport& r);

}  // namespace powgraph
