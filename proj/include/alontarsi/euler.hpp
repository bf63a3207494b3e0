#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "alontarsi/graph.hpp"
#include "alontarsi/poly.hpp"

namespace alontarsi {

struct Arc {
    Vertex tail = -1;
    Vertex head = -1;
    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Orientation of a graph: one direction per edge. Immutable; carries its
/// underlying graph by value and caches out-degrees.
class Orientation {
public:
    Orientation() = default;
    /// Throws EdgeSetMismatch unless arcs are exactly the graph's edges.
    Orientation(Graph g, std::vector<Arc> arcs);

    const Graph& graph() const { return graph_; }
    const std::vector<Arc>& arcs() const { return arcs_; }  // sorted by (tail, head)
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    int out_degree(Vertex v) const { return outdeg_[static_cast<size_t>(v)]; }
    const IndexFunction& out_degrees() const { return outdeg_; }

    /// New orientation with one arc reversed.
    Orientation reversed(const Arc& a) const;

private:
    Graph graph_;
    std::vector<Arc> arcs_;
    IndexFunction outdeg_;
};

struct EulerCounts {
    int64_t even_count = 0;  // includes the empty sub-digraph
    int64_t odd_count = 0;
};

inline constexpr int kEulerEdgeCap = 30;

/// Some orientation of g with out-degrees exactly eta, or nullopt when none
/// exists. Augmenting-path assignment; deterministic.
std::optional<Orientation> orientation_from_index(const Graph& g, const IndexFunction& eta);

/// Counts of spanning Eulerian sub-digraphs (arc subsets with out-degree equal
/// to in-degree at every vertex; connectivity not required) with an even and
/// an odd number of arcs.
EulerCounts eulerian_counts(const Orientation& d, int max_edges = kEulerEdgeCap);

/// |EE(D)| - |OE(D)|.
int64_t at_diff(const Orientation& d, int max_edges = kEulerEdgeCap);

/// Number of arcs directed from the smaller endpoint to the larger one under
/// the vertex order. The frozen sign rule: c_{G, d+} = (-1)^sign_exponent(D)
/// * (|EE(D)| - |OE(D)|), validated exhaustively in the test suite.
int sign_exponent(const Orientation& d);

/// (-1)^sign_exponent(d) * at_diff(d); equals graph_coefficient(g, d+).
int64_t signed_diff(const Orientation& d, int max_edges = kEulerEdgeCap);

/// All Eulerian arc subsets as bitmasks over d.arcs() order, even/odd split is
/// by popcount. For audit-scale instances only.
std::vector<uint64_t> eulerian_subsets(const Orientation& d, int max_edges = 26);

}  // namespace alontarsi
