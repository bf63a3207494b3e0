#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace alontarsi {

/// One step of the certifying recursion, recorded with vertex labels so it
/// stays meaningful across subgraph reindexing.
struct TraceStep {
    std::string op;  // triangulate | chord_split | base_triangle | base3 | case1 | case2 | restrict
    std::vector<std::pair<std::string, std::string>> edges;
    std::string vn;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Self-contained witness that a graph has Alon-Tarsi number at most 5: an
/// orientation of all of G whose out-degrees stay below 5 and whose Eulerian
/// sub-digraph difference is nonzero. Embeds the graph so verification needs
/// no other input.
struct Certificate {
    int format_version = 1;
    std::string graph_id;
    uint64_t graph_hash = 0;
    std::vector<std::string> vertices;  // in vertex order
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, std::string>> arcs;  // tail -> head
    std::map<std::string, int> out_degree;
    int max_out_degree = 0;
    int64_t even_count = 0;
    int64_t odd_count = 0;
    int64_t diff = 0;         // even_count - odd_count, nonzero
    int64_t signed_diff = 0;  // (-1)^r * diff = c_{G, out_degree}
    std::vector<TraceStep> trace;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace alontarsi
