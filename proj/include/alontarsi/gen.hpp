#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alontarsi/plane.hpp"

namespace alontarsi {
namespace gen {

/// Builds a plane graph from consistently oriented face walks (every edge
/// appears exactly once in each direction across all faces). The rotation
/// system is reconstructed from the face corners.
PlaneGraph from_faces(const std::vector<std::string>& labels,
                      const std::vector<std::vector<int>>& faces, size_t outer_index,
                      std::pair<int, int> boundary_edge);

PlaneGraph triangle();
PlaneGraph embedded_k4();  // outer triangle plus a hub
PlaneGraph cycle_plane(int n);
PlaneGraph wheel(int rim);  // rim >= 3; hub is the last vertex
PlaneGraph octahedron();
PlaneGraph icosahedron();
PlaneGraph prism(int n);      // n >= 3; cube is prism(4)
PlaneGraph antiprism(int n);  // n >= 3
PlaneGraph grid(int rows, int cols);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Canonical form of a small graph (n <= 8): the minimum adjacency bit code
/// over all vertex permutations, searched within degree classes.
uint64_t canonical_code(const Graph& g);

/// Every connected graph on exactly n labeled vertices, one per isomorphism
/// class (n <= 6).
std::vector<Graph> connected_graph_classes(int n);

/// Every connected labeled graph on n vertices with at most max_edges edges.
std::vector<Graph> all_connected_labeled(int n, int max_edges);

/// One plane embedding per isomorphism class of sphere triangulation on n
/// vertices (4 <= n <= 8), generated by diagonal-flip search from a stacked
/// triangulation. Counts match 1, 1, 2, 5, 14 for n = 4..8.
std::vector<PlaneGraph> plane_triangulations(int n);

struct CorpusEntry {
    std::string name;
    PlaneGraph pg;
};

/// The 2-connected plane corpus driven through certification: all
/// triangulations on up to 8 vertices plus wheels, cycles, prisms,
/// antiprisms, grids and the icosahedron, all within 12 vertices and the
/// 30-edge counting cap.
std::vector<CorpusEntry> certification_corpus();

}  // namespace gen
}  // namespace alontarsi
