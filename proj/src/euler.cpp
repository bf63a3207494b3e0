#include "alontarsi/euler.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace alontarsi {

Orientation::Orientation(Graph g, std::vector<Arc> arcs)
    : graph_(std::move(g)), arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
    std::vector<Edge> covered;
    covered.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        if (a.tail < 0 || a.head < 0 || a.tail >= graph_.num_vertices() ||
            a.head >= graph_.num_vertices())
            throw EdgeSetMismatch("arc endpoint out of range");
        covered.emplace_back(a.tail, a.head);
    }
    std::sort(covered.begin(), covered.end());
    if (covered != graph_.edges())
        throw EdgeSetMismatch("arcs do not cover the edge set exactly once");
    outdeg_.assign(static_cast<size_t>(graph_.num_vertices()), 0);
    for (const Arc& a : arcs_) ++outdeg_[static_cast<size_t>(a.tail)];
}

Orientation Orientation::reversed(const Arc& a) const {
    std::vector<Arc> arcs = arcs_;
    auto it = std::find(arcs.begin(), arcs.end(), a);
    if (it == arcs.end()) throw EdgeSetMismatch("arc to reverse is not present");
    *it = Arc{a.head, a.tail};
    return Orientation(graph_, std::move(arcs));
}

namespace {

// Kuhn-style augmenting assignment of each edge to one endpoint, with vertex
// v accepting at most eta(v) edges.
struct Assigner {
    const Graph& g;
    const std::vector<int>& cap;
    std::vector<int> used;
    std::vector<Vertex> tail_of;            // per edge index
    std::vector<std::vector<int>> taken_by;  // vertex -> edge indices assigned to it
    std::vector<bool> visited;

    Assigner(const Graph& graph, const std::vector<int>& capacity)
        : g(graph),
          cap(capacity),
          used(static_cast<size_t>(graph.num_vertices()), 0),
          tail_of(static_cast<size_t>(graph.num_edges()), -1),
          taken_by(static_cast<size_t>(graph.num_vertices())),
          visited(static_cast<size_t>(graph.num_edges()), false) {}

    void place(int e, Vertex v) {
        tail_of[static_cast<size_t>(e)] = v;
        taken_by[static_cast<size_t>(v)].push_back(e);
        ++used[static_cast<size_t>(v)];
    }

    void displace(int e, Vertex v) {
        auto& lst = taken_by[static_cast<size_t>(v)];
        lst.erase(std::find(lst.begin(), lst.end(), e));
        --used[static_cast<size_t>(v)];
    }

    bool augment(int e) {
        const Edge& ed = g.edges()[static_cast<size_t>(e)];
        for (Vertex v : {ed.lo(), ed.hi()}) {
            if (used[static_cast<size_t>(v)] < cap[static_cast<size_t>(v)]) {
                place(e, v);
                return true;
            }
        }
        for (Vertex v : {ed.lo(), ed.hi()}) {
            // Try to push one of v's edges to its other endpoint.
            auto taken = taken_by[static_cast<size_t>(v)];  // copy: mutated below
            for (int e2 : taken) {
                if (visited[static_cast<size_t>(e2)]) continue;
                visited[static_cast<size_t>(e2)] = true;
                displace(e2, v);
                if (augment(e2)) {
                    place(e, v);
                    return true;
                }
                place(e2, v);
            }
        }
        return false;
    }
};

}  // namespace

std::optional<Orientation> orientation_from_index(const Graph& g, const IndexFunction& eta) {
    std::vector<int> cap(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < eta.size(); ++i) {
        if (eta[i] < 0) return std::nullopt;
        if (eta[i] != 0 && i >= cap.size()) return std::nullopt;
        if (i < cap.size()) cap[i] = eta[i];
    }
    int total = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (cap[static_cast<size_t>(v)] > g.degree(v)) return std::nullopt;
        total += cap[static_cast<size_t>(v)];
    }
    if (total != g.num_edges()) return std::nullopt;

    Assigner as(g, cap);
    for (int e = 0; e < g.num_edges(); ++e) {
        std::fill(as.visited.begin(), as.visited.end(), false);
        if (!as.augment(e)) return std::nullopt;
    }
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edges()[static_cast<size_t>(e)];
        Vertex tail = as.tail_of[static_cast<size_t>(e)];
        arcs.push_back(Arc{tail, ed.other(tail)});
    }
    return Orientation(g, std::move(arcs));
}

namespace {

// Arcs relabeled to a BFS vertex order and sorted so that low vertices finish
// early; balance can then be forced back to zero as soon as a vertex's last
// incident arc is decided.
struct CountState {
    std::vector<std::pair<Vertex, Vertex>> arcs;  // internal ids (tail, head)
    std::vector<int> bal;
    std::vector<int> rem;
    int64_t counts[2] = {0, 0};
    std::vector<uint64_t>* masks = nullptr;
    std::vector<int> original_pos;  // arc index in the Orientation's arc order

    bool ok(Vertex v) const {
        int b = bal[static_cast<size_t>(v)];
        int r = rem[static_cast<size_t>(v)];
        return r == 0 ? b == 0 : std::abs(b) <= r;
    }

    void descend(size_t i, int parity, uint64_t mask) {
        if (i == arcs.size()) {
            ++counts[parity];
            if (masks) masks->push_back(mask);
            return;
        }
        auto [t, h] = arcs[i];
        --rem[static_cast<size_t>(t)];
        --rem[static_cast<size_t>(h)];
        if (ok(t) && ok(h)) descend(i + 1, parity, mask);
        ++bal[static_cast<size_t>(t)];
        --bal[static_cast<size_t>(h)];
        if (ok(t) && ok(h))
            descend(i + 1, parity ^ 1, mask | (uint64_t{1} << original_pos[i]));
        --bal[static_cast<size_t>(t)];
        ++bal[static_cast<size_t>(h)];
        ++rem[static_cast<size_t>(t)];
        ++rem[static_cast<size_t>(h)];
    }
};

CountState make_state(const Orientation& d) {
    const Graph& g = d.graph();
    int n = g.num_vertices();
    std::vector<int> id(static_cast<size_t>(n), -1);
    int next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (id[static_cast<size_t>(s)] != -1) continue;
        std::queue<Vertex> q;
        q.push(s);
        id[static_cast<size_t>(s)] = next++;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : g.neighbors(v))
                if (id[static_cast<size_t>(w)] == -1) {
                    id[static_cast<size_t>(w)] = next++;
                    q.push(w);
                }
        }
    }
    CountState st;
    std::vector<std::pair<std::pair<Vertex, Vertex>, int>> keyed;
    keyed.reserve(d.arcs().size());
    for (size_t i = 0; i < d.arcs().size(); ++i) {
        const Arc& a = d.arcs()[i];
        Vertex t = id[static_cast<size_t>(a.tail)], h = id[static_cast<size_t>(a.head)];
        keyed.push_back({{std::max(t, h), std::min(t, h)}, static_cast<int>(i)});
    }
    std::sort(keyed.begin(), keyed.end());
    st.bal.assign(static_cast<size_t>(n), 0);
    st.rem.assign(static_cast<size_t>(n), 0);
    for (const auto& [key, pos] : keyed) {
        const Arc& a = d.arcs()[static_cast<size_t>(pos)];
        Vertex t = id[static_cast<size_t>(a.tail)], h = id[static_cast<size_t>(a.head)];
        st.arcs.push_back({t, h});
        st.original_pos.push_back(pos);
        ++st.rem[static_cast<size_t>(t)];
        ++st.rem[static_cast<size_t>(h)];
    }
    return st;
}

}  // namespace

EulerCounts eulerian_counts(const Orientation& d, int max_edges) {
    if (d.num_arcs() > max_edges)
        throw TooManyEdges("eulerian_counts: " + std::to_string(d.num_arcs()) +
                           " arcs exceeds cap " + std::to_string(max_edges));
    CountState st = make_state(d);
    st.descend(0, 0, 0);
    return EulerCounts{st.counts[0], st.counts[1]};
}

int64_t at_diff(const Orientation& d, int max_edges) {
    EulerCounts c = eulerian_counts(d, max_edges);
    return c.even_count - c.odd_count;
}

int sign_exponent(const Orientation& d) {
    int r = 0;
    for (const Arc& a : d.arcs())
        if (a.tail < a.head) ++r;
    return r;
}

int64_t signed_diff(const Orientation& d, int max_edges) {
    int64_t diff = at_diff(d, max_edges);
    return sign_exponent(d) % 2 == 0 ? diff : -diff;
}

std::vector<uint64_t> eulerian_subsets(const Orientation& d, int max_edges) {
    if (d.num_arcs() > max_edges)
        throw TooManyEdges("eulerian_subsets: " + std::to_string(d.num_arcs()) +
                           " arcs exceeds cap " + std::to_string(max_edges));
    std::vector<uint64_t> out;
    CountState st = make_state(d);
    st.masks = &out;
    st.descend(0, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace alontarsi
