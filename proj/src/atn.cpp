#include "alontarsi/atn.hpp"

#include <algorithm>
#include <functional>

#include "alontarsi/euler.hpp"

namespace alontarsi {

namespace {

bool enumerate_capped(const std::vector<int>& caps, IndexFunction& eta, size_t pos, int remaining,
                      const std::vector<int>& suffix_cap,
                      const std::function<bool(const IndexFunction&)>& visit) {
    if (pos == caps.size()) return remaining == 0 && visit(eta);
    int hi = std::min(caps[pos], remaining);
    for (int val = 0; val <= hi; ++val) {
        if (remaining - val > suffix_cap[pos + 1]) continue;  // cannot place the rest
        eta[pos] = val;
        if (enumerate_capped(caps, eta, pos + 1, remaining - val, suffix_cap, visit)) return true;
    }
    eta[pos] = 0;
    return false;
}

}  // namespace

bool visit_index_functions(const std::vector<int>& caps, int total,
                           const std::function<bool(const IndexFunction&)>& visit) {
    std::vector<int> suffix_cap(caps.size() + 1, 0);
    for (size_t v = caps.size(); v-- > 0;) suffix_cap[v] = suffix_cap[v + 1] + caps[v];
    if (total < 0 || total > suffix_cap[0]) return false;
    IndexFunction eta(caps.size(), 0);
    return enumerate_capped(caps, eta, 0, total, suffix_cap, visit);
}

ATResult alon_tarsi_number(const Graph& g, int k_max, int max_edges, int jobs) {
    if (k_max < 1) throw ExceedsKMax("k_max must be at least 1");
    int m = g.num_edges();
    if (m > max_edges)
        throw TooManyEdges("alon_tarsi_number: " + std::to_string(m) + " edges exceeds cap " +
                           std::to_string(max_edges));
    if (m == 0)
        return ATResult{1, IndexFunction(static_cast<size_t>(g.num_vertices()), 0), 1};

    int n = g.num_vertices();
    int k_lo = std::max(1, (m + n - 1) / n + 1);
    if (k_lo > k_max)
        throw ExceedsKMax("no index function fits below k_max = " + std::to_string(k_max));

    for (int k = k_lo; k <= k_max; ++k) {
        std::vector<int> caps(static_cast<size_t>(n));
        for (Vertex v = 0; v < n; ++v) caps[static_cast<size_t>(v)] = std::min(k - 1, g.degree(v));
        ATResult found;
        auto visit = [&](const IndexFunction& candidate) {
            if (!orientation_from_index(g, candidate)) return false;  // coefficient must vanish
            BigInt c = graph_coefficient(g, candidate, jobs);
            if (c == 0) return false;
            found = ATResult{k, candidate, c};
            return true;
        };
        if (visit_index_functions(caps, m, visit)) return found;
    }
    throw ExceedsKMax("Alon-Tarsi number exceeds k_max = " + std::to_string(k_max));
}

std::pair<IndexFunction, BigInt> restrict_index(const Graph& g, const IndexFunction& eta, Edge e,
                                                int jobs) {
    Graph rest = g.without_edge(e);
    IndexFunction padded(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < eta.size() && i < padded.size(); ++i) padded[i] = eta[i];

    std::vector<IndexFunction> candidates;
    for (Vertex v : {e.lo(), e.hi()}) {  // lower position first = lexicographically least
        if (padded[static_cast<size_t>(v)] >= 1) {
            IndexFunction cand = padded;
            --cand[static_cast<size_t>(v)];
            candidates.push_back(std::move(cand));
        }
    }
    for (const IndexFunction& cand : candidates) {
        BigInt c = graph_coefficient(rest, cand, jobs);
        if (c != 0) return {cand, c};
    }
    throw NoWitness("restrict_index: no endpoint decrement keeps the coefficient nonzero");
}

std::pair<IndexFunction, BigInt> strip_added_edges(const Graph& g_tri, const IndexFunction& eta,
                                                   const std::vector<Edge>& added_edges,
                                                   int jobs) {
    Graph cur = g_tri;
    IndexFunction cur_eta(static_cast<size_t>(g_tri.num_vertices()), 0);
    for (size_t i = 0; i < eta.size() && i < cur_eta.size(); ++i) cur_eta[i] = eta[i];
    BigInt coeff;
    if (added_edges.empty()) {
        coeff = graph_coefficient(cur, cur_eta, jobs);
        if (coeff == 0) throw NoWitness("strip_added_edges: coefficient is already zero");
        return {cur_eta, coeff};
    }
    for (auto it = added_edges.rbegin(); it != added_edges.rend(); ++it) {
        auto [next_eta, c] = restrict_index(cur, cur_eta, *it, jobs);
        cur = cur.without_edge(*it);
        cur_eta = std::move(next_eta);
        coeff = c;
    }
    return {cur_eta, coeff};
}

}  // namespace alontarsi
