#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alontarsi/certificate.hpp"
#include "alontarsi/euler.hpp"
#include "alontarsi/plane.hpp"

namespace alontarsi {

/// Orientation of G - e with nonzero Eulerian difference and out-degrees
/// 0 at v1, v2, at most 2 on other boundary vertices, at most 4 inside.
struct NiceOrientation {
    Orientation orientation;
    int64_t diff = 0;
};

/// Full description of one node of the certifying recursion, kept for audits
/// and the chord product-law checks.
struct CertEvent {
    enum class Kind { BaseTriangle, Base3, Case1, Case2, ChordSplit };
    Kind kind;
    PlaneGraph instance;
    // chord split
    Edge chord{};
    Orientation child_with_e;     // D1, orientation of G1 - e
    Orientation child_with_chord;  // D2, orientation of G2 - e'
    // vertex deletion (base3 / case1 / case2)
    PlaneGraph reduced;  // G'
    NeighborFan fan;     // in the instance's vertex indices
    Orientation child;   // D'' (base3, case2) or the special D' (case1)
    // every node
    Orientation result;  // this node's orientation of G - e
    int64_t diff = 0;
};
using RecursionLog = std::vector<CertEvent>;

/// Constructs a nice orientation for (G, e) by the certifying recursion:
/// chord split, triangle base, n = 3 reduction, and for n >= 4 the cheap
/// reduction (arcs v_n -> v1, v_n -> v_{n-1}, u_i -> v_n on top of a nice
/// orientation of (G', e)) with the capped-orientation search as fallback.
/// Requires a 2-connected near-triangulation.
NiceOrientation nice_orientation(const PlaneGraph& pg, RecursionLog* log = nullptr, int jobs = 1);

/// Searches G' - e for an orientation within the tightened caps (v1, v2 at 0,
/// v_prev at 1, fan vertices at 3, other boundary at 2, interior at 4) whose
/// Eulerian difference is nonzero. The fan is given in pg_prime's indices.
std::optional<Orientation> special_search(const PlaneGraph& pg_prime, const NeighborFan& fan,
                                          int jobs = 1);

/// Independent re-check of the nice-orientation conditions.
struct NiceCheck {
    bool edge_set_ok = false;
    bool sinks_ok = false;       // d+(v1) = d+(v2) = 0
    bool boundary_caps_ok = false;
    bool interior_caps_ok = false;
    bool diff_nonzero = false;
    int64_t diff = 0;
    std::vector<std::string> failures;
    bool pass() const {
        return edge_set_ok && sinks_ok && boundary_caps_ok && interior_caps_ok && diff_nonzero;
    }
};
NiceCheck verify_nice(const PlaneGraph& pg, const Orientation& d);

struct CertifyOptions {
    int max_vertices = 12;
    int max_edges = 30;
    int jobs = 1;
    std::string graph_id = "graph";
    bool with_trace = true;
};

/// Triangulates the interior, runs the recursion, re-adds the boundary edge
/// as v1 -> v2, strips the triangulation fill-ins, and re-verifies the final
/// orientation by a direct Eulerian count.
Certificate certify_at5(const PlaneGraph& pg, const CertifyOptions& opts = {},
                        RecursionLog* log = nullptr);

/// Replay of the cycle-reversal bookkeeping behind every Case 2 step.
struct CycleAudit {
    std::string fan_vertex;         // u_i
    size_t cycle_length = 0;
    bool contains_return_arc = false;  // (v_n, v_prev) lies on C_i
    bool reversal_special = false;     // D'_i satisfies the tightened caps
    bool reversal_balanced = false;    // |EE(D'_i)| = |OE(D'_i)|
    bool part_balanced = false;        // |EE_i(D)| = |OE_i(D)| by direct count
    bool bijection_ok = false;         // H <-> H xor C_i^{-1} is one-to-one and onto
    bool parity_ok = false;            // arc-count parity shifts by |C_i|
    bool pass() const {
        return contains_return_arc && reversal_special && reversal_balanced && part_balanced &&
               bijection_ok && parity_ok;
    }
};

struct Case2Audit {
    std::string vn;
    bool disjoint_union_ok = false;  // EE(D) = EE(D'') with all EE_i(D) pieces, disjointly
    std::vector<CycleAudit> cycles;
    bool pass() const {
        if (!disjoint_union_ok) return false;
        for (const auto& c : cycles)
            if (!c.pass()) return false;
        return true;
    }
};

struct AuditReport {
    bool applicable = false;  // at least one Case 2 step occurred
    std::vector<Case2Audit> audits;
    std::vector<std::string> failures;
    bool pass() const {
        for (const auto& a : audits)
            if (!a.pass()) return false;
        return failures.empty();
    }
};

/// Runs the recursion on pg (triangulating first if needed) and audits every
/// Case 2 step. Reports not-applicable when the recursion never took Case 2.
AuditReport case2_audit(const PlaneGraph& pg, int jobs = 1);

/// Audits the Case 2 steps of an existing recursion log.
AuditReport case2_audit(const RecursionLog& log);

}  // namespace alontarsi
