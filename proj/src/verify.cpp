#include "alontarsi/verify.hpp"

#include <algorithm>

#include "alontarsi/euler.hpp"

namespace alontarsi {

namespace {

VerifyResult check(const Certificate& cert, const Graph& g) {
    VerifyResult res;
    auto fail = [&res](const std::string& why) { res.failures.push_back(why); };

    if (cert.format_version != 1)
        fail("unsupported format_version " + std::to_string(cert.format_version));
    if (cert.graph_hash != g.content_hash()) fail("graph hash mismatch");

    std::vector<Arc> arcs;
    bool arcs_ok = true;
    for (const auto& [t, h] : cert.arcs) {
        auto vt = g.find_vertex(t), vh = g.find_vertex(h);
        if (!vt || !vh) {
            fail("arc endpoint is not a vertex: " + t + " -> " + h);
            arcs_ok = false;
            break;
        }
        arcs.push_back(Arc{*vt, *vh});
    }
    if (!arcs_ok) return res;

    Orientation d;
    try {
        d = Orientation(g, std::move(arcs));
    } catch (const EdgeSetMismatch& e) {
        fail(std::string("arc set: ") + e.what());
        return res;
    }

    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto it = cert.out_degree.find(g.label(v));
        int claimed = it == cert.out_degree.end() ? 0 : it->second;
        if (claimed != d.out_degree(v)) {
            fail("stored out-degree of " + g.label(v) + " is " + std::to_string(claimed) +
                 ", arcs give " + std::to_string(d.out_degree(v)));
        }
    }
    res.max_out_degree = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        res.max_out_degree = std::max(res.max_out_degree, d.out_degree(v));
    if (res.max_out_degree != cert.max_out_degree)
        fail("stored max_out_degree " + std::to_string(cert.max_out_degree) + " is wrong");
    if (res.max_out_degree > 4)
        fail("out-degree " + std::to_string(res.max_out_degree) + " exceeds 4");

    EulerCounts counts = eulerian_counts(d);
    res.even_count = counts.even_count;
    res.odd_count = counts.odd_count;
    res.diff = counts.even_count - counts.odd_count;
    if (res.even_count != cert.even_count || res.odd_count != cert.odd_count)
        fail("stored Eulerian counts do not match the recount");
    if (res.diff != cert.diff) fail("stored difference does not match the recount");
    if (res.diff == 0) fail("Eulerian difference is zero");
    int64_t signed_recount = sign_exponent(d) % 2 == 0 ? res.diff : -res.diff;
    if (signed_recount != cert.signed_diff) fail("stored signed difference is wrong");

    res.pass = res.failures.empty();
    return res;
}

}  // namespace

VerifyResult verify_certificate(const Certificate& cert) {
    std::vector<std::pair<std::string, std::string>> edges = cert.edges;
    Graph g;
    try {
        g = Graph(cert.vertices, edges);
    } catch (const Error& e) {
        VerifyResult res;
        res.failures.push_back(std::string("embedded graph: ") + e.what());
        return res;
    }
    return check(cert, g);
}

VerifyResult verify_certificate(const Certificate& cert, const Graph& g) {
    VerifyResult res;
    if (cert.vertices != g.labels()) {
        res.failures.push_back("certificate vertices do not match the graph");
        return res;
    }
    std::vector<std::pair<std::string, std::string>> expect;
    for (const Edge& e : g.edges()) expect.emplace_back(g.label(e.lo()), g.label(e.hi()));
    std::vector<std::pair<std::string, std::string>> got = cert.edges;
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    if (got != expect) {
        res.failures.push_back("certificate edges do not match the graph");
        return res;
    }
    return check(cert, g);
}

}  // namespace alontarsi
