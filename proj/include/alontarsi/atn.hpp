#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "alontarsi/graph.hpp"
#include "alontarsi/poly.hpp"

namespace alontarsi {

/// Visits every index function with eta(v) <= caps[v] and sum eta = total in
/// lexicographic order until the visitor returns true; reports whether any
/// visit did.
bool visit_index_functions(const std::vector<int>& caps, int total,
                           const std::function<bool(const IndexFunction&)>& visit);

struct ATResult {
    int at_number = 0;
    IndexFunction witness_index;  // lexicographically least witness at at_number
    BigInt witness_coefficient;   // graph_coefficient(G, witness_index), nonzero
};

inline constexpr int kAtnEdgeCap = 30;

/// Least k <= k_max with an index function eta, eta(v) < k, sum eta = |E| and
/// c_{G,eta} != 0. Candidates are enumerated in lexicographic order under the
/// vertex order, pre-filtered by degree feasibility and by realizability as
/// an out-degree sequence. Throws ExceedsKMax when no k <= k_max works.
ATResult alon_tarsi_number(const Graph& g, int k_max, int max_edges = kAtnEdgeCap, int jobs = 1);

/// Moves a nonzero-coefficient index function across one edge removal:
/// c_{G,eta} = c_{G-e, eta-1_hi} - c_{G-e, eta-1_lo}, so one of the two
/// candidates must keep a nonzero coefficient. Returns the lexicographically
/// least qualifying one with its coefficient on G-e. Throws NoWitness when
/// the caller's nonzero-coefficient precondition did not hold.
std::pair<IndexFunction, BigInt> restrict_index(const Graph& g, const IndexFunction& eta, Edge e,
                                                int jobs = 1);

/// Iterates restrict_index over the added edges (last added first), carrying
/// a nonzero-coefficient witness from the triangulated graph down to the
/// original one. The result is pointwise <= eta.
std::pair<IndexFunction, BigInt> strip_added_edges(const Graph& g_tri, const IndexFunction& eta,
                                                   const std::vector<Edge>& added_edges,
                                                   int jobs = 1);

}  // namespace alontarsi
