#include "alontarsi/cert.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "alontarsi/atn.hpp"

namespace alontarsi {

namespace {

std::vector<Arc> lift_arcs(const Orientation& child, const Graph& parent) {
    std::map<std::string, Vertex> index;
    for (Vertex v = 0; v < parent.num_vertices(); ++v) index[parent.label(v)] = v;
    std::vector<Arc> out;
    out.reserve(child.arcs().size());
    for (const Arc& a : child.arcs())
        out.push_back(Arc{index.at(child.graph().label(a.tail)),
                          index.at(child.graph().label(a.head))});
    return out;
}

Vertex map_by_label(const Graph& from, Vertex v, const Graph& to) {
    return to.vertex(from.label(v));
}

NeighborFan map_fan(const NeighborFan& fan, const Graph& from, const Graph& to) {
    NeighborFan out;
    out.v1 = map_by_label(from, fan.v1, to);
    out.v_prev = map_by_label(from, fan.v_prev, to);
    for (Vertex u : fan.interior_neighbors)
        out.interior_neighbors.push_back(map_by_label(from, u, to));
    return out;
}

std::vector<int> special_caps(const PlaneGraph& pgp, const NeighborFan& fan) {
    const Graph& g = pgp.graph();
    std::vector<int> caps(static_cast<size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        caps[static_cast<size_t>(v)] = pgp.is_boundary(v) ? 2 : 4;
    for (Vertex u : fan.interior_neighbors) caps[static_cast<size_t>(u)] = 3;
    caps[static_cast<size_t>(fan.v_prev)] = 1;
    caps[static_cast<size_t>(pgp.v1())] = 0;
    caps[static_cast<size_t>(pgp.v2())] = 0;
    return caps;
}

bool special_caps_ok(const PlaneGraph& pgp, const NeighborFan& fan, const Orientation& d) {
    std::vector<int> caps = special_caps(pgp, fan);
    for (Vertex v = 0; v < pgp.graph().num_vertices(); ++v)
        if (d.out_degree(map_by_label(pgp.graph(), v, d.graph())) > caps[static_cast<size_t>(v)])
            return false;
    return true;
}

}  // namespace

std::optional<Orientation> special_search(const PlaneGraph& pg_prime, const NeighborFan& fan,
                                          int jobs) {
    const Graph& g = pg_prime.graph();
    Graph ge = g.without_edge(pg_prime.boundary_edge());
    std::vector<int> caps = special_caps(pg_prime, fan);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        caps[static_cast<size_t>(v)] = std::min(caps[static_cast<size_t>(v)], ge.degree(v));

    std::optional<Orientation> found;
    visit_index_functions(caps, ge.num_edges(), [&](const IndexFunction& eta) {
        auto oriented = orientation_from_index(ge, eta);
        if (!oriented) return false;
        if (graph_coefficient(ge, eta, jobs) == 0) return false;
        found = std::move(oriented);
        return true;
    });
    return found;
}

NiceOrientation nice_orientation(const PlaneGraph& pg, RecursionLog* log, int jobs) {
    const Graph& g = pg.graph();
    if (!is_biconnected(g))
        throw PreconditionViolated("nice_orientation requires a 2-connected graph");
    if (!is_near_triangulation(pg))
        throw PreconditionViolated("nice_orientation requires a near-triangulated interior");

    Graph g_minus_e = g.without_edge(pg.boundary_edge());

    if (auto chord = find_chord(pg)) {
        auto [g1, g2] = split_on_chord(pg, *chord);
        NiceOrientation n1 = nice_orientation(g1, log, jobs);
        NiceOrientation n2 = nice_orientation(g2, log, jobs);
        std::vector<Arc> arcs = lift_arcs(n1.orientation, g);
        std::vector<Arc> more = lift_arcs(n2.orientation, g);
        arcs.insert(arcs.end(), more.begin(), more.end());
        Orientation d(g_minus_e, std::move(arcs));
        int64_t diff = n1.diff * n2.diff;
        if (log) {
            CertEvent ev;
            ev.kind = CertEvent::Kind::ChordSplit;
            ev.instance = pg;
            ev.chord = *chord;
            ev.child_with_e = n1.orientation;
            ev.child_with_chord = n2.orientation;
            ev.result = d;
            ev.diff = diff;
            log->push_back(std::move(ev));
        }
        return {std::move(d), diff};
    }

    const auto& outer = pg.outer_face();
    Vertex v1 = outer[0], v2 = outer[1];

    if (g.num_vertices() == 3) {
        Vertex v3 = outer[2];
        Orientation d(g_minus_e, {Arc{v3, v1}, Arc{v3, v2}});
        if (log) {
            CertEvent ev;
            ev.kind = CertEvent::Kind::BaseTriangle;
            ev.instance = pg;
            ev.result = d;
            ev.diff = 1;
            log->push_back(std::move(ev));
        }
        return {std::move(d), 1};  // acyclic: only the empty sub-digraph balances
    }

    auto [gp, fan] = delete_boundary_vertex(pg);
    Vertex vn = outer.back();

    if (outer.size() == 3) {
        NiceOrientation np = nice_orientation(gp, log, jobs);
        std::vector<Arc> arcs = lift_arcs(np.orientation, g);
        arcs.push_back(Arc{vn, v1});
        arcs.push_back(Arc{vn, v2});
        for (Vertex u : fan.interior_neighbors) arcs.push_back(Arc{u, vn});
        Orientation d(g_minus_e, std::move(arcs));
        // v1, v2 stay sinks, so no arc at vn lies on a directed cycle and the
        // Eulerian counts carry over unchanged.
        if (log) {
            CertEvent ev;
            ev.kind = CertEvent::Kind::Base3;
            ev.instance = pg;
            ev.reduced = gp;
            ev.fan = fan;
            ev.child = np.orientation;
            ev.result = d;
            ev.diff = np.diff;
            log->push_back(std::move(ev));
        }
        return {std::move(d), np.diff};
    }

    Vertex vprev = outer[outer.size() - 2];
    NiceOrientation np = nice_orientation(gp, log, jobs);
    {
        std::vector<Arc> arcs = lift_arcs(np.orientation, g);
        arcs.push_back(Arc{vn, v1});
        arcs.push_back(Arc{vn, vprev});
        for (Vertex u : fan.interior_neighbors) arcs.push_back(Arc{u, vn});
        Orientation d(g_minus_e, std::move(arcs));
        int64_t diff = at_diff(d);
        if (diff != 0) {
            if (log) {
                CertEvent ev;
                ev.kind = CertEvent::Kind::Case2;
                ev.instance = pg;
                ev.reduced = gp;
                ev.fan = fan;
                ev.child = np.orientation;
                ev.result = d;
                ev.diff = diff;
                log->push_back(std::move(ev));
            }
            return {std::move(d), diff};
        }
    }

    NeighborFan fan_p = map_fan(fan, g, gp.graph());
    std::optional<Orientation> special = special_search(gp, fan_p, jobs);
    if (!special)
        throw InternalProofViolation(
            "no special orientation exists although the cheap reduction vanished");
    std::vector<Arc> arcs = lift_arcs(*special, g);
    arcs.push_back(Arc{vn, v1});
    arcs.push_back(Arc{vprev, vn});
    for (Vertex u : fan.interior_neighbors) arcs.push_back(Arc{u, vn});
    Orientation d(g_minus_e, std::move(arcs));
    int64_t diff = at_diff(d);
    if (diff == 0)
        throw InternalProofViolation("special extension lost its nonzero difference");
    if (log) {
        CertEvent ev;
        ev.kind = CertEvent::Kind::Case1;
        ev.instance = pg;
        ev.reduced = gp;
        ev.fan = fan;
        ev.child = *special;
        ev.result = d;
        ev.diff = diff;
        log->push_back(std::move(ev));
    }
    return {std::move(d), diff};
}

NiceCheck verify_nice(const PlaneGraph& pg, const Orientation& d) {
    NiceCheck check;
    if (d.graph().labels() != pg.graph().labels())
        throw EdgeSetMismatch("orientation is over a different vertex set");
    Graph expected = pg.graph().without_edge(pg.boundary_edge());
    if (d.graph().edges() != expected.edges())
        throw EdgeSetMismatch("orientation does not cover exactly E(G) - e");
    check.edge_set_ok = true;

    Vertex v1 = pg.v1(), v2 = pg.v2();
    check.sinks_ok = d.out_degree(v1) == 0 && d.out_degree(v2) == 0;
    if (!check.sinks_ok) check.failures.push_back("v1 or v2 is not a sink");
    check.boundary_caps_ok = true;
    check.interior_caps_ok = true;
    for (Vertex v = 0; v < pg.graph().num_vertices(); ++v) {
        if (v == v1 || v == v2) continue;
        if (pg.is_boundary(v) && d.out_degree(v) > 2) {
            check.boundary_caps_ok = false;
            check.failures.push_back("boundary vertex " + pg.graph().label(v) +
                                     " has out-degree " + std::to_string(d.out_degree(v)));
        }
        if (pg.is_interior(v) && d.out_degree(v) > 4) {
            check.interior_caps_ok = false;
            check.failures.push_back("interior vertex " + pg.graph().label(v) +
                                     " has out-degree " + std::to_string(d.out_degree(v)));
        }
    }
    check.diff = at_diff(d);
    check.diff_nonzero = check.diff != 0;
    if (!check.diff_nonzero) check.failures.push_back("Eulerian difference is zero");
    return check;
}

Certificate certify_at5(const PlaneGraph& pg, const CertifyOptions& opts, RecursionLog* log_out) {
    const Graph& g0 = pg.graph();
    if (!is_biconnected(g0))
        throw PreconditionViolated("certify_at5 requires a 2-connected plane graph");
    if (g0.num_vertices() > opts.max_vertices)
        throw TooManyEdges("certify_at5: " + std::to_string(g0.num_vertices()) +
                           " vertices exceeds cap " + std::to_string(opts.max_vertices));

    auto [tri, added] = triangulate_interior(pg);
    if (tri.graph().num_edges() > opts.max_edges)
        throw TooManyEdges("certify_at5: " + std::to_string(tri.graph().num_edges()) +
                           " edges after triangulation exceeds cap " +
                           std::to_string(opts.max_edges));

    RecursionLog local_log;
    RecursionLog* log = log_out ? log_out : &local_log;
    NiceOrientation nice = nice_orientation(tri, log, opts.jobs);

    // re-add e as (v1 -> v2); v2 stays a sink, so the counts are untouched
    std::vector<Arc> full_arcs = nice.orientation.arcs();
    full_arcs.push_back(Arc{tri.v1(), tri.v2()});
    Orientation full(tri.graph(), std::move(full_arcs));

    Certificate cert;
    cert.graph_id = opts.graph_id;
    cert.graph_hash = g0.content_hash();
    cert.vertices = g0.labels();
    for (const Edge& e : g0.edges())
        cert.edges.emplace_back(g0.label(e.lo()), g0.label(e.hi()));

    if (opts.with_trace) {
        if (!added.empty()) {
            TraceStep ts;
            ts.op = "triangulate";
            for (const Edge& e : added)
                ts.edges.emplace_back(tri.graph().label(e.lo()), tri.graph().label(e.hi()));
            cert.trace.push_back(std::move(ts));
        }
        for (const CertEvent& ev : *log) {
            TraceStep ts;
            const Graph& eg = ev.instance.graph();
            switch (ev.kind) {
                case CertEvent::Kind::ChordSplit:
                    ts.op = "chord_split";
                    ts.edges.emplace_back(eg.label(ev.chord.lo()), eg.label(ev.chord.hi()));
                    break;
                case CertEvent::Kind::BaseTriangle:
                    ts.op = "base_triangle";
                    ts.vn = eg.label(ev.instance.outer_face()[2]);
                    break;
                case CertEvent::Kind::Base3:
                    ts.op = "base3";
                    ts.vn = eg.label(ev.instance.outer_face().back());
                    break;
                case CertEvent::Kind::Case1:
                    ts.op = "case1";
                    ts.vn = eg.label(ev.instance.outer_face().back());
                    break;
                case CertEvent::Kind::Case2:
                    ts.op = "case2";
                    ts.vn = eg.label(ev.instance.outer_face().back());
                    break;
            }
            cert.trace.push_back(std::move(ts));
        }
    }

    Orientation final_orientation;
    BigInt coeff;
    if (added.empty()) {
        final_orientation = std::move(full);
        coeff = 0;  // filled from the signed count below
    } else {
        IndexFunction eta = full.out_degrees();
        Graph cur = tri.graph();
        for (auto it = added.rbegin(); it != added.rend(); ++it) {
            auto [next_eta, c] = restrict_index(cur, eta, *it, opts.jobs);
            cur = cur.without_edge(*it);
            eta = std::move(next_eta);
            coeff = c;
            if (opts.with_trace) {
                TraceStep ts;
                ts.op = "restrict";
                ts.edges.emplace_back(cur.label(it->lo()), cur.label(it->hi()));
                cert.trace.push_back(std::move(ts));
            }
        }
        auto realized = orientation_from_index(g0, eta);
        if (!realized)
            throw InternalProofViolation("nonzero coefficient with unrealizable out-degrees");
        final_orientation = std::move(*realized);
    }

    EulerCounts counts = eulerian_counts(final_orientation, opts.max_edges);
    cert.even_count = counts.even_count;
    cert.odd_count = counts.odd_count;
    cert.diff = counts.even_count - counts.odd_count;
    cert.signed_diff =
        sign_exponent(final_orientation) % 2 == 0 ? cert.diff : -cert.diff;
    if (cert.diff == 0)
        throw InternalProofViolation("final orientation has zero Eulerian difference");
    if (!added.empty() && BigInt(cert.signed_diff) != coeff)
        throw InternalProofViolation("signed Eulerian difference disagrees with the coefficient");

    for (const Arc& a : final_orientation.arcs())
        cert.arcs.emplace_back(g0.label(a.tail), g0.label(a.head));
    cert.max_out_degree = 0;
    for (Vertex v = 0; v < g0.num_vertices(); ++v) {
        cert.out_degree[g0.label(v)] = final_orientation.out_degree(v);
        cert.max_out_degree = std::max(cert.max_out_degree, final_orientation.out_degree(v));
    }
    if (cert.max_out_degree > 4)
        throw InternalProofViolation("final orientation exceeds out-degree 4");
    return cert;
}

namespace {

using LabeledArc = std::pair<std::string, std::string>;

LabeledArc labeled(const Graph& g, const Arc& a) {
    return {g.label(a.tail), g.label(a.head)};
}

// Directed path from -> to by BFS, neighbors in arc order.
std::optional<std::vector<Arc>> directed_path(const Orientation& d, Vertex from, Vertex to) {
    int n = d.graph().num_vertices();
    std::vector<std::vector<Vertex>> out_adj(static_cast<size_t>(n));
    for (const Arc& a : d.arcs()) out_adj[static_cast<size_t>(a.tail)].push_back(a.head);
    std::vector<Vertex> parent(static_cast<size_t>(n), -2);
    std::queue<Vertex> q;
    q.push(from);
    parent[static_cast<size_t>(from)] = -1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        if (v == to) break;
        for (Vertex w : out_adj[static_cast<size_t>(v)])
            if (parent[static_cast<size_t>(w)] == -2) {
                parent[static_cast<size_t>(w)] = v;
                q.push(w);
            }
    }
    if (parent[static_cast<size_t>(to)] == -2) return std::nullopt;
    std::vector<Arc> path;
    for (Vertex v = to; parent[static_cast<size_t>(v)] != -1; v = parent[static_cast<size_t>(v)])
        path.push_back(Arc{parent[static_cast<size_t>(v)], v});
    std::reverse(path.begin(), path.end());
    return path;
}

Case2Audit audit_case2_event(const CertEvent& ev) {
    Case2Audit audit;
    const PlaneGraph& pg = ev.instance;
    const Graph& g = pg.graph();
    const auto& outer = pg.outer_face();
    Vertex vn = outer.back();
    Vertex vprev = outer[outer.size() - 2];
    audit.vn = g.label(vn);

    const Orientation& d = ev.result;
    std::map<LabeledArc, int> arc_pos;
    for (size_t i = 0; i < d.arcs().size(); ++i)
        arc_pos[labeled(g, d.arcs()[i])] = static_cast<int>(i);

    std::vector<uint64_t> all = eulerian_subsets(d, kEulerEdgeCap);

    // fan arcs (u_i -> vn) and the two arcs out of vn
    std::vector<int> fan_bits;
    for (Vertex u : ev.fan.interior_neighbors)
        fan_bits.push_back(arc_pos.at(labeled(g, Arc{u, vn})));
    uint64_t vn_out_mask = (uint64_t{1} << arc_pos.at(labeled(g, Arc{vn, pg.v1()}))) |
                           (uint64_t{1} << arc_pos.at(labeled(g, Arc{vn, vprev})));

    std::vector<std::vector<uint64_t>> buckets(fan_bits.size());
    std::vector<uint64_t> main_bucket;
    bool disjoint = true;
    for (uint64_t h : all) {
        int hits = 0;
        size_t which = fan_bits.size();
        for (size_t i = 0; i < fan_bits.size(); ++i)
            if (h & (uint64_t{1} << fan_bits[i])) {
                ++hits;
                which = i;
            }
        if (hits == 0) {
            if (h & vn_out_mask) disjoint = false;  // vn cannot balance without an in-arc
            main_bucket.push_back(h);
        } else if (hits == 1) {
            buckets[which].push_back(h);
        } else {
            disjoint = false;  // vn has at most one usable out-arc, so at most one in-arc
        }
    }

    // the fan-free part must be exactly the Eulerian sub-digraphs of D''
    const Orientation& dpp = ev.child;
    std::vector<uint64_t> dpp_masks = eulerian_subsets(dpp, kEulerEdgeCap);
    std::vector<int> dpp_bit_in_d(dpp.arcs().size());
    for (size_t i = 0; i < dpp.arcs().size(); ++i)
        dpp_bit_in_d[i] = arc_pos.at(labeled(dpp.graph(), dpp.arcs()[i]));
    std::vector<uint64_t> dpp_in_d;
    dpp_in_d.reserve(dpp_masks.size());
    for (uint64_t m : dpp_masks) {
        uint64_t mapped = 0;
        for (size_t i = 0; i < dpp_bit_in_d.size(); ++i)
            if (m & (uint64_t{1} << i)) mapped |= uint64_t{1} << dpp_bit_in_d[i];
        dpp_in_d.push_back(mapped);
    }
    std::sort(dpp_in_d.begin(), dpp_in_d.end());
    std::sort(main_bucket.begin(), main_bucket.end());
    audit.disjoint_union_ok = disjoint && dpp_in_d == main_bucket;

    NeighborFan fan_p = map_fan(ev.fan, g, ev.reduced.graph());

    for (size_t i = 0; i < fan_bits.size(); ++i) {
        if (buckets[i].empty()) continue;
        CycleAudit ca;
        Vertex u = ev.fan.interior_neighbors[i];
        ca.fan_vertex = g.label(u);

        auto path = directed_path(d, vn, u);
        if (!path) {
            audit.cycles.push_back(ca);  // all flags false: fails
            continue;
        }
        std::vector<Arc> cycle = *path;
        cycle.push_back(Arc{u, vn});
        ca.cycle_length = cycle.size();
        ca.contains_return_arc =
            std::find(cycle.begin(), cycle.end(), Arc{vn, vprev}) != cycle.end();

        // D'_i: reverse the cycle arcs that lie in D'' (everything not at vn)
        std::vector<Arc> reversed_arcs = dpp.arcs();
        std::map<std::string, Vertex> to_dpp;
        for (Vertex v = 0; v < dpp.graph().num_vertices(); ++v)
            to_dpp[dpp.graph().label(v)] = v;
        std::set<LabeledArc> cycle_set;
        for (const Arc& a : cycle) cycle_set.insert(labeled(g, a));
        for (Arc& a : reversed_arcs) {
            if (cycle_set.count(labeled(dpp.graph(), a))) std::swap(a.tail, a.head);
        }
        Orientation dprime(dpp.graph(), std::move(reversed_arcs));
        ca.reversal_special = special_caps_ok(ev.reduced, fan_p, dprime);

        EulerCounts pc = eulerian_counts(dprime, kEulerEdgeCap);
        ca.reversal_balanced = pc.even_count == pc.odd_count;

        int64_t even_i = 0, odd_i = 0;
        for (uint64_t h : buckets[i]) (std::popcount(h) % 2 == 0 ? even_i : odd_i) += 1;
        ca.part_balanced = even_i == odd_i;

        // the symmetric difference with the reversed cycle, digons deleted,
        // maps this bucket onto the Eulerian sub-digraphs of D'_i
        std::map<LabeledArc, int> dprime_pos;
        for (size_t j = 0; j < dprime.arcs().size(); ++j)
            dprime_pos[labeled(dprime.graph(), dprime.arcs()[j])] = static_cast<int>(j);
        std::vector<uint64_t> image;
        bool parity_ok = true;
        bool mapped_ok = true;
        for (uint64_t h : buckets[i]) {
            std::set<LabeledArc> result;
            for (size_t b = 0; b < d.arcs().size(); ++b)
                if (h & (uint64_t{1} << b)) result.insert(labeled(g, d.arcs()[b]));
            size_t before = result.size();
            size_t dropped = 0;
            for (const Arc& a : cycle) {
                LabeledArc fwd = labeled(g, a);
                LabeledArc rev{fwd.second, fwd.first};
                if (result.count(fwd)) {
                    result.erase(fwd);  // digon with the reversed copy
                    ++dropped;
                } else {
                    result.insert(rev);
                }
            }
            if ((before + cycle.size()) % 2 != result.size() % 2) parity_ok = false;
            uint64_t mask = 0;
            bool in_dprime = true;
            for (const LabeledArc& a : result) {
                auto it = dprime_pos.find(a);
                if (it == dprime_pos.end()) {
                    in_dprime = false;
                    break;
                }
                mask |= uint64_t{1} << it->second;
            }
            if (!in_dprime) {
                mapped_ok = false;
                break;
            }
            image.push_back(mask);
        }
        std::vector<uint64_t> dprime_masks = eulerian_subsets(dprime, kEulerEdgeCap);
        std::sort(image.begin(), image.end());
        bool distinct = std::adjacent_find(image.begin(), image.end()) == image.end();
        ca.bijection_ok = mapped_ok && distinct && image == dprime_masks;

        // aggregate parity bookkeeping: even cycles preserve the split,
        // odd cycles swap it
        bool counts_match = (cycle.size() % 2 == 0)
                                ? (even_i == pc.even_count && odd_i == pc.odd_count)
                                : (even_i == pc.odd_count && odd_i == pc.even_count);
        ca.parity_ok = parity_ok && counts_match;

        audit.cycles.push_back(std::move(ca));
    }
    return audit;
}

}  // namespace

AuditReport case2_audit(const RecursionLog& log) {
    AuditReport report;
    for (const CertEvent& ev : log) {
        if (ev.kind != CertEvent::Kind::Case2) continue;
        report.applicable = true;
        report.audits.push_back(audit_case2_event(ev));
    }
    return report;
}

AuditReport case2_audit(const PlaneGraph& pg, int jobs) {
    auto [tri, added] = triangulate_interior(pg);
    (void)added;
    RecursionLog log;
    nice_orientation(tri, &log, jobs);
    return case2_audit(log);
}

}  // namespace alontarsi
