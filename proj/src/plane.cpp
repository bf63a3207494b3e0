#include "alontarsi/plane.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace alontarsi {

namespace {

void articulation_dfs(const Graph& g, Vertex v, Vertex parent, int& timer,
                      std::vector<int>& tin, std::vector<int>& low, bool& found) {
    tin[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(v)) {
        if (w == parent) continue;
        if (tin[static_cast<size_t>(w)] != -1) {
            low[static_cast<size_t>(v)] =
                std::min(low[static_cast<size_t>(v)], tin[static_cast<size_t>(w)]);
        } else {
            articulation_dfs(g, w, v, timer, tin, low, found);
            low[static_cast<size_t>(v)] =
                std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(w)]);
            if (parent != -1 && low[static_cast<size_t>(w)] >= tin[static_cast<size_t>(v)])
                found = true;
            ++children;
        }
    }
    if (parent == -1 && children > 1) found = true;
}

// Faces as orbits of the dart permutation (u,v) -> (v, successor of u in the
// rotation at v).
std::vector<std::vector<Vertex>> trace_faces(const Graph& g,
                                             const std::vector<std::vector<Vertex>>& rot) {
    int n = g.num_vertices();
    std::vector<std::map<Vertex, int>> pos(static_cast<size_t>(n));
    std::vector<int> base(static_cast<size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto& r = rot[static_cast<size_t>(v)];
        for (size_t i = 0; i < r.size(); ++i) pos[static_cast<size_t>(v)][r[i]] = static_cast<int>(i);
        base[static_cast<size_t>(v) + 1] = base[static_cast<size_t>(v)] + static_cast<int>(r.size());
    }
    auto dart_id = [&](Vertex u, Vertex v) {
        return base[static_cast<size_t>(u)] + pos[static_cast<size_t>(u)].at(v);
    };
    int ndarts = base[static_cast<size_t>(n)];
    std::vector<bool> seen(static_cast<size_t>(ndarts), false);
    std::vector<std::vector<Vertex>> faces;
    for (Vertex u0 = 0; u0 < n; ++u0) {
        for (Vertex w0 : rot[static_cast<size_t>(u0)]) {
            if (seen[static_cast<size_t>(dart_id(u0, w0))]) continue;
            std::vector<Vertex> cycle;
            Vertex u = u0, w = w0;
            while (!seen[static_cast<size_t>(dart_id(u, w))]) {
                seen[static_cast<size_t>(dart_id(u, w))] = true;
                cycle.push_back(u);
                const auto& rw = rot[static_cast<size_t>(w)];
                int p = pos[static_cast<size_t>(w)].at(u);
                Vertex next = rw[(static_cast<size_t>(p) + 1) % rw.size()];
                u = w;
                w = next;
            }
            faces.push_back(std::move(cycle));
        }
    }
    return faces;
}

// Does the face cycle equal the walk (as a directed cyclic sequence)?
bool same_dart_cycle(const std::vector<Vertex>& face, const std::vector<Vertex>& walk) {
    size_t L = face.size();
    if (walk.size() != L) return false;
    for (size_t shift = 0; shift < L; ++shift) {
        bool match = true;
        for (size_t i = 0; i < L && match; ++i)
            if (face[(shift + i) % L] != walk[i]) match = false;
        if (match) return true;
    }
    return false;
}

std::vector<Edge> face_edges(const std::vector<Vertex>& face) {
    std::vector<Edge> out;
    out.reserve(face.size());
    for (size_t i = 0; i < face.size(); ++i)
        out.emplace_back(face[i], face[(i + 1) % face.size()]);
    return out;
}

}  // namespace

bool is_biconnected(const Graph& g) {
    if (g.num_vertices() < 3 || !g.connected()) return false;
    std::vector<int> tin(static_cast<size_t>(g.num_vertices()), -1);
    std::vector<int> low(static_cast<size_t>(g.num_vertices()), -1);
    int timer = 0;
    bool found = false;
    articulation_dfs(g, 0, -1, timer, tin, low, found);
    return !found;
}

PlaneGraph PlaneGraph::build(Graph g, std::vector<std::vector<Vertex>> rotations,
                             std::vector<Vertex> outer_face,
                             std::pair<Vertex, Vertex> boundary_edge) {
    PlaneGraph pg;
    pg.graph_ = std::move(g);
    pg.rot_ = std::move(rotations);
    const Graph& gr = pg.graph_;
    int n = gr.num_vertices();

    if (static_cast<int>(pg.rot_.size()) != n)
        throw ParseError("rotation table size does not match vertex count");
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> sorted = pg.rot_[static_cast<size_t>(v)];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != gr.neighbors(v))
            throw ParseError("rotation at " + gr.label(v) + " is not a permutation of its neighbors");
    }
    if (!gr.connected()) throw ParseError("plane graph must be connected");

    pg.faces_ = trace_faces(gr, pg.rot_);
    int F = static_cast<int>(pg.faces_.size());
    if (n - gr.num_edges() + F != 2)
        throw NonPlanarEmbedding("rotation system is not planar: V-E+F = " +
                                 std::to_string(n - gr.num_edges() + F));

    // outer face: a simple cycle that is an actual face, in either direction
    size_t L = outer_face.size();
    if (L < 3) throw BoundaryNotCycle("outer face must have at least 3 vertices");
    {
        std::vector<Vertex> s = outer_face;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw BoundaryNotCycle("outer face repeats a vertex");
    }
    for (size_t i = 0; i < L; ++i) {
        Vertex a = outer_face[i], b = outer_face[(i + 1) % L];
        if (a < 0 || a >= n || b < 0 || b >= n || !gr.has_edge(a, b))
            throw BoundaryNotCycle("outer face is not a cycle of the graph");
    }
    size_t match = pg.faces_.size();
    for (size_t f = 0; f < pg.faces_.size() && match == pg.faces_.size(); ++f) {
        std::vector<Vertex> rev(outer_face.rbegin(), outer_face.rend());
        if (same_dart_cycle(pg.faces_[f], outer_face) || same_dart_cycle(pg.faces_[f], rev))
            match = f;
    }
    if (match == pg.faces_.size())
        throw BoundaryNotCycle("outer face is not a face of the embedding");
    pg.outer_index_ = match;

    // normalize to start (v1, v2, ...)
    auto [a, b] = boundary_edge;
    size_t ia = L, ib = L;
    for (size_t i = 0; i < L; ++i) {
        if (outer_face[i] == a) ia = i;
        if (outer_face[i] == b) ib = i;
    }
    if (ia == L || ib == L) throw EdgeNotOnBoundary("boundary edge endpoint not on outer face");
    std::vector<Vertex> norm(L);
    if (outer_face[(ia + 1) % L] == b) {
        for (size_t i = 0; i < L; ++i) norm[i] = outer_face[(ia + i) % L];
    } else if (outer_face[(ib + 1) % L] == a) {
        // reverse the cycle so that a comes immediately before b
        for (size_t i = 0; i < L; ++i) norm[i] = outer_face[(ia + L - i) % L];
    } else {
        throw EdgeNotOnBoundary("boundary edge is not an edge of the outer face");
    }
    pg.outer_ = std::move(norm);

    pg.boundary_.assign(static_cast<size_t>(n), false);
    for (Vertex v : pg.outer_) pg.boundary_[static_cast<size_t>(v)] = true;
    return pg;
}

std::vector<Vertex> boundary_cycle(const PlaneGraph& pg) { return pg.outer_face(); }

std::optional<Edge> find_chord(const PlaneGraph& pg) {
    const auto& outer = pg.outer_face();
    size_t L = outer.size();
    std::vector<int> pos(static_cast<size_t>(pg.graph().num_vertices()), -1);
    for (size_t i = 0; i < L; ++i) pos[static_cast<size_t>(outer[i])] = static_cast<int>(i);
    for (const Edge& e : pg.graph().edges()) {
        int pa = pos[static_cast<size_t>(e.lo())], pb = pos[static_cast<size_t>(e.hi())];
        if (pa < 0 || pb < 0) continue;
        size_t gap = static_cast<size_t>(std::abs(pa - pb));
        if (gap != 1 && gap != L - 1) return e;
    }
    return std::nullopt;
}

namespace {

struct Region {
    std::vector<Vertex> vertices;  // sorted
    std::set<Edge> edges;
};

Region collect_region(const PlaneGraph& pg, const std::map<Edge, std::vector<int>>& edge_faces,
                      int start_face, Edge barrier) {
    std::set<int> seen{start_face};
    std::queue<int> q;
    q.push(start_face);
    Region region;
    std::set<Vertex> verts;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        for (Vertex v : pg.faces()[static_cast<size_t>(f)]) verts.insert(v);
        for (const Edge& e : face_edges(pg.faces()[static_cast<size_t>(f)])) {
            region.edges.insert(e);
            if (e == barrier) continue;
            for (int g : edge_faces.at(e)) {
                if (g == static_cast<int>(pg.outer_face_index())) continue;
                if (seen.insert(g).second) q.push(g);
            }
        }
    }
    region.vertices.assign(verts.begin(), verts.end());
    return region;
}

PlaneGraph restrict_to_region(const PlaneGraph& pg, const Region& region,
                              const std::vector<Vertex>& outer_walk,
                              std::pair<Vertex, Vertex> boundary_edge) {
    Graph sub = pg.graph().induced(region.vertices);
    std::vector<Vertex> remap(static_cast<size_t>(pg.graph().num_vertices()), -1);
    for (size_t i = 0; i < region.vertices.size(); ++i)
        remap[static_cast<size_t>(region.vertices[i])] = static_cast<Vertex>(i);
    if (static_cast<size_t>(sub.num_edges()) != region.edges.size())
        throw Error("chord split produced an inconsistent region");
    std::vector<std::vector<Vertex>> rot(region.vertices.size());
    for (Vertex v : region.vertices) {
        for (Vertex w : pg.rotations()[static_cast<size_t>(v)])
            if (region.edges.count(Edge(v, w)))
                rot[static_cast<size_t>(remap[static_cast<size_t>(v)])].push_back(
                    remap[static_cast<size_t>(w)]);
    }
    std::vector<Vertex> outer;
    outer.reserve(outer_walk.size());
    for (Vertex v : outer_walk) outer.push_back(remap[static_cast<size_t>(v)]);
    return PlaneGraph::build(std::move(sub), std::move(rot), std::move(outer),
                             {remap[static_cast<size_t>(boundary_edge.first)],
                              remap[static_cast<size_t>(boundary_edge.second)]});
}

}  // namespace

std::pair<PlaneGraph, PlaneGraph> split_on_chord(const PlaneGraph& pg, Edge chord) {
    const auto& outer = pg.outer_face();
    size_t L = outer.size();
    std::vector<int> pos(static_cast<size_t>(pg.graph().num_vertices()), -1);
    for (size_t i = 0; i < L; ++i) pos[static_cast<size_t>(outer[i])] = static_cast<int>(i);
    if (!pg.graph().has_edge(chord.lo(), chord.hi())) throw NotAChord("chord is not an edge");
    int pa = pos[static_cast<size_t>(chord.lo())], pb = pos[static_cast<size_t>(chord.hi())];
    if (pa < 0 || pb < 0) throw NotAChord("chord endpoint is not a boundary vertex");
    size_t gap = static_cast<size_t>(std::abs(pa - pb));
    if (gap == 1 || gap == L - 1) throw NotAChord("chord endpoints are consecutive on the boundary");

    std::map<Edge, std::vector<int>> edge_faces;
    for (size_t f = 0; f < pg.faces().size(); ++f)
        for (const Edge& e : face_edges(pg.faces()[f]))
            edge_faces[e].push_back(static_cast<int>(f));
    const auto& chord_sides = edge_faces.at(chord);
    if (chord_sides.size() != 2) throw Error("edge is not on exactly two faces");

    Region ra = collect_region(pg, edge_faces, chord_sides[0], chord);
    Region rb = collect_region(pg, edge_faces, chord_sides[1], chord);

    // the boundary arcs between the chord endpoints
    size_t i = static_cast<size_t>(std::min(pa, pb)), j = static_cast<size_t>(std::max(pa, pb));
    std::vector<Vertex> arc_low(outer.begin() + static_cast<long>(i),
                                outer.begin() + static_cast<long>(j) + 1);
    std::vector<Vertex> arc_high(outer.begin() + static_cast<long>(j), outer.end());
    arc_high.insert(arc_high.end(), outer.begin(), outer.begin() + static_cast<long>(i) + 1);
    std::vector<Vertex> e_arc = (i == 0) ? arc_low : arc_high;
    std::vector<Vertex> other_arc = (i == 0) ? arc_high : arc_low;

    // the region holding the interior face at e keeps the boundary edge
    Edge e = pg.boundary_edge();
    int fe = -1;
    for (int f : edge_faces.at(e))
        if (f != static_cast<int>(pg.outer_face_index())) fe = f;
    const Region* reg1 = nullptr;
    const Region* reg2 = nullptr;
    auto region_has_face = [&](const Region& r, int face) {
        for (const Edge& fe2 : face_edges(pg.faces()[static_cast<size_t>(face)]))
            if (!r.edges.count(fe2)) return false;
        return true;
    };
    if (region_has_face(ra, fe)) {
        reg1 = &ra;
        reg2 = &rb;
    } else if (region_has_face(rb, fe)) {
        reg1 = &rb;
        reg2 = &ra;
    } else {
        throw Error("chord split could not locate the boundary edge side");
    }

    PlaneGraph g1 = restrict_to_region(pg, *reg1, e_arc, {pg.v1(), pg.v2()});
    PlaneGraph g2 = restrict_to_region(pg, *reg2, other_arc, {chord.lo(), chord.hi()});

    if (g1.graph().num_vertices() + g2.graph().num_vertices() != pg.graph().num_vertices() + 2)
        throw Error("chord split vertex bookkeeping failed");
    if (g1.graph().num_edges() + g2.graph().num_edges() != pg.graph().num_edges() + 1)
        throw Error("chord split edge bookkeeping failed");
    return {std::move(g1), std::move(g2)};
}

std::pair<PlaneGraph, NeighborFan> delete_boundary_vertex(const PlaneGraph& pg) {
    if (find_chord(pg)) throw HasChord("boundary has a chord");
    if (!is_near_triangulation(pg)) throw NotNearTriangulation("interior faces must be triangles");
    const auto& outer = pg.outer_face();
    if (pg.graph().num_vertices() <= 3)
        throw PreconditionViolated("deleting a boundary vertex would leave fewer than 3 vertices");

    Vertex vn = outer.back();
    Vertex v1 = outer[0];
    Vertex vprev = outer[outer.size() - 2];

    const auto& rot_vn = pg.rotations()[static_cast<size_t>(vn)];
    size_t deg = rot_vn.size();
    size_t p1 = deg, pp = deg;
    for (size_t i = 0; i < deg; ++i) {
        if (rot_vn[i] == v1) p1 = i;
        if (rot_vn[i] == vprev) pp = i;
    }
    if (p1 == deg || pp == deg) throw Error("boundary neighbors missing from rotation");
    auto walk = [&](long step) {
        std::vector<Vertex> out;
        long d = static_cast<long>(deg);
        long i = (static_cast<long>(p1) + step + d) % d;
        for (long guard = 0; rot_vn[static_cast<size_t>(i)] != vprev; ++guard) {
            if (guard > d) throw Error("rotation at deleted vertex is inconsistent");
            out.push_back(rot_vn[static_cast<size_t>(i)]);
            i = (i + step + d) % d;
        }
        return out;
    };
    std::vector<Vertex> plus = walk(+1), minus = walk(-1);
    std::vector<Vertex> fan_list;
    if (plus.size() + 2 == deg)
        fan_list = plus;
    else if (minus.size() + 2 == deg)
        fan_list = minus;
    else
        throw Error("rotation at deleted vertex is inconsistent");
    for (Vertex u : fan_list)
        if (pg.is_boundary(u)) throw HasChord("fan neighbor on boundary implies a chord");

    NeighborFan fan{v1, fan_list, vprev};

    // new boundary: (v1, v2, ..., v_{n-1}, u_k, ..., u_1)
    std::vector<Vertex> new_outer(outer.begin(), outer.end() - 1);
    new_outer.insert(new_outer.end(), fan_list.rbegin(), fan_list.rend());

    Graph sub = pg.graph().without_vertex(vn);
    auto remap = [vn](Vertex v) { return v < vn ? v : v - 1; };
    std::vector<std::vector<Vertex>> rot(static_cast<size_t>(sub.num_vertices()));
    for (Vertex v = 0; v < pg.graph().num_vertices(); ++v) {
        if (v == vn) continue;
        for (Vertex w : pg.rotations()[static_cast<size_t>(v)])
            if (w != vn) rot[static_cast<size_t>(remap(v))].push_back(remap(w));
    }
    std::vector<Vertex> outer2;
    outer2.reserve(new_outer.size());
    for (Vertex v : new_outer) outer2.push_back(remap(v));
    PlaneGraph result = PlaneGraph::build(std::move(sub), std::move(rot), std::move(outer2),
                                          {remap(outer[0]), remap(outer[1])});
    return {std::move(result), std::move(fan)};
}

bool is_near_triangulation(const PlaneGraph& pg) {
    for (size_t f = 0; f < pg.faces().size(); ++f)
        if (f != pg.outer_face_index() && pg.faces()[f].size() != 3) return false;
    return true;
}

std::pair<PlaneGraph, std::vector<Edge>> triangulate_interior(const PlaneGraph& pg) {
    if (!is_biconnected(pg.graph()))
        throw PreconditionViolated("triangulate_interior requires a 2-connected graph");
    PlaneGraph cur = pg;
    std::vector<Edge> added;
    for (;;) {
        size_t target = cur.faces().size();
        for (size_t f = 0; f < cur.faces().size(); ++f) {
            if (f == cur.outer_face_index()) continue;
            if (cur.faces()[f].size() > 3) {
                target = f;
                break;
            }
        }
        if (target == cur.faces().size()) break;

        std::vector<Vertex> cycle = cur.faces()[target];
        size_t l = cycle.size();
        size_t least = 0;
        for (size_t i = 1; i < l; ++i)
            if (cycle[i] < cycle[least]) least = i;
        std::rotate(cycle.begin(), cycle.begin() + static_cast<long>(least), cycle.end());

        size_t p = l, q = l;
        for (size_t j = 2; j + 1 < l; ++j) {
            if (!cur.graph().has_edge(cycle[0], cycle[j])) {
                p = 0;
                q = j;
                break;
            }
        }
        if (p == l) {
            // every fan apex is blocked: fall back to the first insertable diagonal
            for (size_t i = 0; i < l && p == l; ++i)
                for (size_t j = i + 2; j < l && p == l; ++j) {
                    if (i == 0 && j == l - 1) continue;
                    if (!cur.graph().has_edge(cycle[i], cycle[j])) {
                        p = i;
                        q = j;
                    }
                }
        }
        if (p == l)
            throw CannotTriangulate("no insertable diagonal in a face of length " +
                                    std::to_string(l));

        Vertex a = cycle[p], b = cycle[q];
        Vertex a_prev = cycle[(p + l - 1) % l], b_prev = cycle[(q + l - 1) % l];
        Graph bigger = cur.graph().with_edge(Edge(a, b));
        std::vector<std::vector<Vertex>> rot = cur.rotations();
        auto insert_after = [](std::vector<Vertex>& r, Vertex anchor, Vertex nv) {
            auto it = std::find(r.begin(), r.end(), anchor);
            r.insert(it + 1, nv);
        };
        insert_after(rot[static_cast<size_t>(a)], a_prev, b);
        insert_after(rot[static_cast<size_t>(b)], b_prev, a);
        cur = PlaneGraph::build(std::move(bigger), std::move(rot), cur.outer_face(),
                                {cur.v1(), cur.v2()});
        added.push_back(Edge(a, b));
    }
    return {std::move(cur), std::move(added)};
}

}  // namespace alontarsi
