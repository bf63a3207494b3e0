#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alontarsi/errors.hpp"

namespace alontarsi {

/// Vertex handle: position in the graph's vertex order.
using Vertex = int;

/// Undirected edge, stored with lo() < vertex-order < hi().
struct Edge {
    Vertex a = -1;
    Vertex b = -1;

    Edge() = default;
    Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

    Vertex lo() const { return a; }
    Vertex hi() const { return b; }
    bool touches(Vertex v) const { return a == v || b == v; }
    Vertex other(Vertex v) const { return v == a ? b : a; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple graph. Vertex labels are opaque strings; internally every
/// vertex is the index of its label in the (explicit, serialized) vertex
/// order, so comparing Vertex values compares order positions.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges);

    /// Construct over the same label universe from vertex indices.
    static Graph from_indices(std::vector<std::string> labels, const std::vector<Edge>& edges);

    int num_vertices() const { return static_cast<int>(labels_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(static_cast<size_t>(v)); }
    std::optional<Vertex> find_vertex(const std::string& label) const;
    Vertex vertex(const std::string& label) const;  // throws ParseError if absent

    const std::vector<Edge>& edges() const { return edges_; }  // sorted
    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<size_t>(v)]; }

    bool connected() const;

    /// New graph without one edge; labels and vertex order are preserved.
    Graph without_edge(Edge e) const;
    /// New graph with an extra edge.
    Graph with_edge(Edge e) const;
    /// Induced subgraph on the given vertices. Labels keep their relative
    /// order, so the restriction of the vertex order is inherited.
    Graph induced(const std::vector<Vertex>& keep) const;
    /// New graph with one vertex removed (induced on the rest).
    Graph without_vertex(Vertex v) const;

    /// Stable content hash over labels, order and edge set (FNV-1a).
    uint64_t content_hash() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;             // sorted, unique
    std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists

    void build_adjacency();
};

}  // namespace alontarsi
