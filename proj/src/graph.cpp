#include "alontarsi/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace alontarsi {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, Vertex> index;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (index.count(labels[i]))
            throw ParseError("duplicate vertex label: " + labels[i]);
        index[labels[i]] = static_cast<Vertex>(i);
    }
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        auto iu = index.find(u), iv = index.find(v);
        if (iu == index.end()) throw ParseError("edge endpoint not a vertex: " + u);
        if (iv == index.end()) throw ParseError("edge endpoint not a vertex: " + v);
        if (iu->second == iv->second) throw ParseError("loop at vertex: " + u);
        es.emplace_back(iu->second, iv->second);
    }
    *this = from_indices(std::move(labels), es);
}

Graph Graph::from_indices(std::vector<std::string> labels, const std::vector<Edge>& edges) {
    Graph g;
    g.labels_ = std::move(labels);
    g.edges_ = edges;
    std::sort(g.edges_.begin(), g.edges_.end());
    auto last = std::unique(g.edges_.begin(), g.edges_.end());
    if (last != g.edges_.end()) throw ParseError("parallel edge in input");
    for (const Edge& e : g.edges_) {
        if (e.lo() < 0 || e.hi() >= g.num_vertices())
            throw ParseError("edge endpoint out of range");
        if (e.lo() == e.hi()) throw ParseError("loop edge");
    }
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    adj_.assign(labels_.size(), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<size_t>(e.lo())].push_back(e.hi());
        adj_[static_cast<size_t>(e.hi())].push_back(e.lo());
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

std::optional<Vertex> Graph::find_vertex(const std::string& label) const {
    for (size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<Vertex>(i);
    return std::nullopt;
}

Vertex Graph::vertex(const std::string& label) const {
    auto v = find_vertex(label);
    if (!v) throw ParseError("unknown vertex: " + label);
    return *v;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::connected() const {
    if (num_vertices() == 0) return true;
    std::vector<bool> seen(labels_.size(), false);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = true;
                ++reached;
                q.push(w);
            }
    }
    return reached == num_vertices();
}

Graph Graph::without_edge(Edge e) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (f != e) es.push_back(f);
    if (es.size() == edges_.size()) throw ParseError("edge not in graph");
    return from_indices(labels_, es);
}

Graph Graph::with_edge(Edge e) const {
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return from_indices(labels_, es);
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Vertex> remap(labels_.size(), -1);
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (Vertex v : sorted) {
        remap[static_cast<size_t>(v)] = static_cast<Vertex>(labels.size());
        labels.push_back(labels_[static_cast<size_t>(v)]);
    }
    std::vector<Edge> es;
    for (const Edge& e : edges_) {
        Vertex a = remap[static_cast<size_t>(e.lo())];
        Vertex b = remap[static_cast<size_t>(e.hi())];
        if (a >= 0 && b >= 0) es.emplace_back(a, b);
    }
    return from_indices(std::move(labels), es);
}

Graph Graph::without_vertex(Vertex v) const {
    std::vector<Vertex> keep;
    keep.reserve(labels_.size() - 1);
    for (Vertex u = 0; u < num_vertices(); ++u)
        if (u != v) keep.push_back(u);
    return induced(keep);
}

uint64_t Graph::content_hash() const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const void* data, size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (size_t i = 0; i < len; ++i) {
            h ^= p[i];
            h *= 1099511628211ULL;
        }
    };
    for (const auto& s : labels_) {
        mix(s.data(), s.size());
        mix("\n", 1);
    }
    for (const Edge& e : edges_) {
        int32_t ab[2] = {e.lo(), e.hi()};
        mix(ab, sizeof ab);
    }
    return h;
}

}  // namespace alontarsi
