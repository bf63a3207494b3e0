#include "alontarsi/gen.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace alontarsi {
namespace gen {

namespace {

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
    return labels;
}

}  // namespace

PlaneGraph from_faces(const std::vector<std::string>& labels,
                      const std::vector<std::vector<int>>& faces, size_t outer_index,
                      std::pair<int, int> boundary_edge) {
    int n = static_cast<int>(labels.size());
    std::set<std::pair<int, int>> darts;
    std::vector<std::map<int, int>> corner(static_cast<size_t>(n));  // at v: prev -> next
    std::vector<Edge> edges;
    for (const auto& face : faces) {
        size_t l = face.size();
        for (size_t i = 0; i < l; ++i) {
            int a = face[i], v = face[(i + 1) % l], b = face[(i + 2) % l];
            if (!darts.insert({a, v}).second)
                throw Error("face list repeats dart " + std::to_string(a) + "->" +
                            std::to_string(v));
            corner[static_cast<size_t>(v)][a] = b;
            if (a < v) edges.emplace_back(a, v);
        }
    }
    for (const Edge& e : edges)
        if (!darts.count({e.hi(), e.lo()}))
            throw Error("face list misses the reverse dart of an edge");

    std::vector<std::vector<Vertex>> rot(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& next = corner[static_cast<size_t>(v)];
        if (next.empty()) throw Error("isolated vertex in face list");
        int start = next.begin()->first;
        int cur = start;
        do {
            rot[static_cast<size_t>(v)].push_back(cur);
            cur = next.at(cur);
        } while (cur != start);
        if (rot[static_cast<size_t>(v)].size() != next.size())
            throw Error("face corners at a vertex do not close a single cycle");
    }
    Graph g = Graph::from_indices(labels, edges);
    return PlaneGraph::build(std::move(g), std::move(rot), faces.at(outer_index),
                             boundary_edge);
}

PlaneGraph triangle() {
    return from_faces(default_labels(3), {{0, 1, 2}, {2, 1, 0}}, 0, {0, 1});
}

PlaneGraph embedded_k4() {
    // outer v1 v2 v3, hub v4
    return from_faces(default_labels(4),
                      {{0, 1, 2}, {1, 0, 3}, {2, 1, 3}, {0, 2, 3}}, 0, {0, 1});
}

PlaneGraph cycle_plane(int n) {
    std::vector<int> face(static_cast<size_t>(n));
    std::iota(face.begin(), face.end(), 0);
    std::vector<int> rev(face.rbegin(), face.rend());
    return from_faces(default_labels(n), {face, rev}, 0, {0, 1});
}

PlaneGraph wheel(int rim) {
    int h = rim;  // hub index
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < rim; ++i) faces.push_back({i, (i + 1) % rim, h});
    std::vector<int> outer;
    for (int i = rim - 1; i >= 0; --i) outer.push_back(i);
    faces.push_back(outer);
    std::vector<std::string> labels = default_labels(rim);
    labels.push_back("h");
    return from_faces(labels, faces, faces.size() - 1, {0, 1});
}

PlaneGraph octahedron() {
    std::vector<std::vector<int>> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                           {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
    return from_faces(default_labels(6), faces, 0, {0, 1});
}

PlaneGraph icosahedron() {
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    auto u = [](int i) { return 1 + (i % 5); };
    auto w = [](int i) { return 6 + (i % 5); };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < 5; ++i) faces.push_back({0, u(i), u(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({u(i), w(i), u(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({w(i), w(i + 1), u(i + 1)});
    for (int i = 0; i < 5; ++i) faces.push_back({11, w(i + 1), w(i)});
    return from_faces(default_labels(12), faces, 0, {0, 1});
}

PlaneGraph prism(int n) {
    auto u = [n](int i) { return i % n; };
    auto w = [n](int i) { return n + (i % n); };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i) faces.push_back({u(i), w(i), w(i + 1), u(i + 1)});
    std::vector<int> top, bottom;
    for (int i = 0; i < n; ++i) top.push_back(u(i));
    for (int i = n - 1; i >= 0; --i) bottom.push_back(w(i));
    faces.push_back(top);
    faces.push_back(bottom);
    return from_faces(default_labels(2 * n), faces, faces.size() - 2, {0, 1});
}

PlaneGraph antiprism(int n) {
    auto u = [n](int i) { return i % n; };
    auto w = [n](int i) { return n + (i % n); };
    std::vector<std::vector<int>> faces;
    for (int i = 0; i < n; ++i) faces.push_back({u(i), w(i), u(i + 1)});
    for (int i = 0; i < n; ++i) faces.push_back({w(i), w(i + 1), u(i + 1)});
    std::vector<int> top, bottom;
    for (int i = 0; i < n; ++i) top.push_back(u(i));
    for (int i = n - 1; i >= 0; --i) bottom.push_back(w(i));
    faces.push_back(top);
    faces.push_back(bottom);
    return from_faces(default_labels(2 * n), faces, faces.size() - 2, {0, 1});
}

PlaneGraph grid(int rows, int cols) {
    auto at = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::vector<int>> faces;
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c)
            faces.push_back({at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)});
    std::vector<int> outer;
    for (int r = 0; r + 1 < rows; ++r) outer.push_back(at(r, 0));
    for (int c = 0; c + 1 < cols; ++c) outer.push_back(at(rows - 1, c));
    for (int r = rows - 1; r > 0; --r) outer.push_back(at(r, cols - 1));
    for (int c = cols - 1; c > 0; --c) outer.push_back(at(0, c));
    faces.push_back(outer);
    return from_faces(default_labels(rows * cols), faces, faces.size() - 1, {0, 1});
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_indices(default_labels(n), edges);
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_indices(default_labels(n), edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_indices(default_labels(n), edges);
}

namespace {

uint64_t adjacency_code(const Graph& g, const std::vector<int>& perm) {
    // perm[i] = new position of vertex i; n <= 8, row-major upper bits first
    uint64_t code = 0;
    int n = g.num_vertices();
    for (const Edge& e : g.edges()) {
        int a = perm[static_cast<size_t>(e.lo())], b = perm[static_cast<size_t>(e.hi())];
        code |= uint64_t{1} << (a * n + b);
        code |= uint64_t{1} << (b * n + a);
    }
    return code;
}

void permute_within_classes(const std::vector<std::vector<int>>& classes, size_t ci,
                            std::vector<int>& perm, const std::vector<int>& slots,
                            const Graph& g, uint64_t& best) {
    if (ci == classes.size()) {
        best = std::min(best, adjacency_code(g, perm));
        return;
    }
    const std::vector<int>& cls = classes[ci];
    std::vector<int> order(cls.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        for (size_t i = 0; i < cls.size(); ++i)
            perm[static_cast<size_t>(cls[i])] = slots[ci] + order[i];
        permute_within_classes(classes, ci + 1, perm, slots, g, best);
    } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
    int n = g.num_vertices();
    if (n > 8) throw TooLarge("canonical_code is limited to 8 vertices");
    // vertices of equal degree may permute among themselves only
    std::vector<std::pair<int, int>> keyed;  // (degree, vertex)
    for (Vertex v = 0; v < n; ++v) keyed.emplace_back(g.degree(v), v);
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::vector<int>> classes;
    std::vector<int> slots;
    int slot = 0;
    for (size_t i = 0; i < keyed.size();) {
        size_t j = i;
        classes.emplace_back();
        slots.push_back(slot);
        while (j < keyed.size() && keyed[j].first == keyed[i].first) {
            classes.back().push_back(keyed[j].second);
            ++slot;
            ++j;
        }
        i = j;
    }
    std::vector<int> perm(static_cast<size_t>(n), 0);
    uint64_t best = ~uint64_t{0};
    int base = 0;
    permute_within_classes(classes, 0, perm, base, slots, g, best);
    return best;
}

std::vector<Graph> all_connected_labeled(int n, int max_edges) {
    std::vector<Edge> all_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
    size_t total = all_edges.size();
    std::vector<Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << total); ++mask) {
        if (std::popcount(mask) > max_edges) continue;
        std::vector<Edge> edges;
        for (size_t i = 0; i < total; ++i)
            if (mask & (uint64_t{1} << i)) edges.push_back(all_edges[i]);
        Graph g = Graph::from_indices(default_labels(n), edges);
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> connected_graph_classes(int n) {
    std::set<uint64_t> seen;
    std::vector<Graph> out;
    for (Graph& g : all_connected_labeled(n, n * (n - 1) / 2)) {
        if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

namespace {

// A sphere triangulation as a consistently oriented triangle list.
using FaceList = std::vector<std::array<int, 3>>;

Graph face_list_graph(int n, const FaceList& faces) {
    std::set<Edge> edges;
    for (const auto& f : faces)
        for (int i = 0; i < 3; ++i) edges.insert(Edge(f[static_cast<size_t>(i)],
                                                      f[static_cast<size_t>((i + 1) % 3)]));
    return Graph::from_indices(default_labels(n),
                               std::vector<Edge>(edges.begin(), edges.end()));
}

FaceList stacked_triangulation(int n) {
    FaceList faces = {{0, 1, 2}, {1, 0, 3}, {2, 1, 3}, {0, 2, 3}};
    for (int v = 4; v < n; ++v) {
        auto [a, b, c] = faces.back();
        faces.pop_back();
        faces.push_back({a, b, v});
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    return faces;
}

// Diagonal flip of the edge shared by the faces holding darts (u,v), (v,u).
std::optional<FaceList> flip(const FaceList& faces, int n, int u, int v) {
    int f1 = -1, f2 = -1, x = -1, y = -1;
    for (size_t f = 0; f < faces.size(); ++f)
        for (int i = 0; i < 3; ++i) {
            int a = faces[f][static_cast<size_t>(i)];
            int b = faces[f][static_cast<size_t>((i + 1) % 3)];
            int c = faces[f][static_cast<size_t>((i + 2) % 3)];
            if (a == u && b == v) {
                f1 = static_cast<int>(f);
                x = c;
            }
            if (a == v && b == u) {
                f2 = static_cast<int>(f);
                y = c;
            }
        }
    if (f1 < 0 || f2 < 0 || x == y) return std::nullopt;
    // would the new diagonal duplicate an existing edge?
    Graph g = face_list_graph(n, faces);
    if (g.has_edge(x, y)) return std::nullopt;
    FaceList out;
    for (size_t f = 0; f < faces.size(); ++f)
        if (static_cast<int>(f) != f1 && static_cast<int>(f) != f2) out.push_back(faces[f]);
    out.push_back({x, u, y});
    out.push_back({y, v, x});
    return out;
}

}  // namespace

std::vector<PlaneGraph> plane_triangulations(int n) {
    if (n < 4 || n > 8) throw TooLarge("plane_triangulations supports 4..8 vertices");
    FaceList start = stacked_triangulation(n);
    std::map<uint64_t, FaceList> seen;
    seen.emplace(canonical_code(face_list_graph(n, start)), start);
    std::vector<FaceList> queue = {start};
    while (!queue.empty()) {
        FaceList cur = queue.back();
        queue.pop_back();
        Graph g = face_list_graph(n, cur);
        for (const Edge& e : g.edges()) {
            if (auto flipped = flip(cur, n, e.lo(), e.hi())) {
                uint64_t code = canonical_code(face_list_graph(n, *flipped));
                if (seen.emplace(code, *flipped).second) queue.push_back(*flipped);
            }
        }
    }
    std::vector<PlaneGraph> out;
    for (const auto& [code, faces] : seen) {
        std::vector<std::vector<int>> face_vectors;
        for (const auto& f : faces) face_vectors.push_back({f[0], f[1], f[2]});
        out.push_back(from_faces(default_labels(n), face_vectors, 0,
                                 {face_vectors[0][0], face_vectors[0][1]}));
    }
    return out;
}

std::vector<CorpusEntry> certification_corpus() {
    std::vector<CorpusEntry> corpus;
    for (int n = 4; n <= 8; ++n) {
        auto tris = plane_triangulations(n);
        for (size_t i = 0; i < tris.size(); ++i)
            corpus.push_back({"triangulation-n" + std::to_string(n) + "-" + std::to_string(i),
                              std::move(tris[i])});
    }
    for (int rim = 3; rim <= 10; ++rim)
        corpus.push_back({"wheel-" + std::to_string(rim), wheel(rim)});
    for (int n = 4; n <= 12; ++n)
        corpus.push_back({"cycle-" + std::to_string(n), cycle_plane(n)});
    for (int n = 3; n <= 6; ++n)
        corpus.push_back({"prism-" + std::to_string(n), prism(n)});
    for (int n = 3; n <= 5; ++n)
        corpus.push_back({"antiprism-" + std::to_string(n), antiprism(n)});
    corpus.push_back({"octahedron", octahedron()});
    corpus.push_back({"icosahedron", icosahedron()});
    corpus.push_back({"grid-2x3", grid(2, 3)});
    corpus.push_back({"grid-2x4", grid(2, 4)});
    corpus.push_back({"grid-2x5", grid(2, 5)});
    corpus.push_back({"grid-2x6", grid(2, 6)});
    corpus.push_back({"grid-3x3", grid(3, 3)});
    corpus.push_back({"grid-3x4", grid(3, 4)});
    return corpus;
}

}  // namespace gen
}  // namespace alontarsi
