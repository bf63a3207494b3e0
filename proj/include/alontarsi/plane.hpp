#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "alontarsi/graph.hpp"

namespace alontarsi {

/// Connected and free of cut vertices (trivially true below 3 vertices only
/// for K2, which we do not treat as biconnected here).
bool is_biconnected(const Graph& g);

/// Neighbors of a deleted boundary vertex v_n, read in rotation order:
/// (v1, u_1, ..., u_k, v_prev) with every u_i interior.
struct NeighborFan {
    Vertex v1 = -1;
    std::vector<Vertex> interior_neighbors;
    Vertex v_prev = -1;
};

/// Plane embedding of a labeled graph: per-vertex cyclic neighbor order plus
/// a distinguished outer face and boundary edge. Validation traces all faces
/// from the rotation system and requires V - E + F = 2; the stored outer face
/// is normalized to start with the boundary edge as (v1, v2, ...).
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// boundary_edge is an ordered pair: first element plays the v1 role.
    static PlaneGraph build(Graph g, std::vector<std::vector<Vertex>> rotations,
                            std::vector<Vertex> outer_face,
                            std::pair<Vertex, Vertex> boundary_edge);

    const Graph& graph() const { return graph_; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }
    const std::vector<Vertex>& outer_face() const { return outer_; }
    Vertex v1() const { return outer_[0]; }
    Vertex v2() const { return outer_[1]; }
    Edge boundary_edge() const { return Edge(outer_[0], outer_[1]); }

    /// All faces as vertex cycles in trace order; faces()[outer_face_index()]
    /// is the outer face.
    const std::vector<std::vector<Vertex>>& faces() const { return faces_; }
    size_t outer_face_index() const { return outer_index_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    bool is_boundary(Vertex v) const { return boundary_[static_cast<size_t>(v)]; }
    bool is_interior(Vertex v) const { return !boundary_[static_cast<size_t>(v)]; }

private:
    Graph graph_;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<Vertex> outer_;
    std::vector<std::vector<Vertex>> faces_;
    size_t outer_index_ = 0;
    std::vector<bool> boundary_;
};

/// B(G) = (v1, v2, ..., vn) starting at the boundary edge.
std::vector<Vertex> boundary_cycle(const PlaneGraph& pg);

/// Lexicographically least edge joining two non-consecutive boundary
/// vertices, or nullopt.
std::optional<Edge> find_chord(const PlaneGraph& pg);

/// The two chord components: G1 contains the boundary edge e and keeps it;
/// G2 gets the chord as its designated boundary edge. Both inherit the
/// embedding by restriction; they share exactly the chord and its endpoints.
std::pair<PlaneGraph, PlaneGraph> split_on_chord(const PlaneGraph& pg, Edge chord);

/// Removes v_n (the boundary vertex preceding v1). Requires a chordless
/// boundary and a near-triangulated interior; rejects when the result would
/// drop below 3 vertices.
std::pair<PlaneGraph, NeighborFan> delete_boundary_vertex(const PlaneGraph& pg);

/// True iff every face except the outer one is a triangle.
bool is_near_triangulation(const PlaneGraph& pg);

/// Adds interior diagonals until every interior face is a triangle, keeping
/// the outer face intact. Diagonals fan out from the least vertex of each
/// face when possible, falling back to the first insertable diagonal.
std::pair<PlaneGraph, std::vector<Edge>> triangulate_interior(const PlaneGraph& pg);

}  // namespace alontarsi
