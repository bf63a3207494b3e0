#pragma once

#include <optional>
#include <vector>

#include "alontarsi/graph.hpp"

namespace alontarsi {

using ColorList = std::vector<int>;            // distinct colors, kept sorted
using ListAssignment = std::vector<ColorList>;  // one list per vertex
using Coloring = std::vector<int>;              // chosen color per vertex

/// Proper coloring drawing each vertex's color from its list, found by
/// backtracking over the vertex with the fewest remaining colors. Returns
/// nullopt when the lists genuinely admit no proper coloring.
std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists);

/// True iff the coloring is proper and respects the lists.
bool coloring_ok(const Graph& g, const ListAssignment& lists, const Coloring& coloring);

int degeneracy(const Graph& g);

/// A k-uniform list assignment admitting no proper coloring, or nullopt when
/// every one is colorable. Exhausts assignments over the {0, ..., k|V|-1}
/// universe up to color renaming: lists are generated vertex by vertex, fresh
/// colors always taking the next unused values.
std::optional<ListAssignment> uncolorable_assignment(const Graph& g, int k);

inline constexpr int kChoiceVertexCap = 6;

/// Least k such that every k-uniform list assignment admits a proper
/// coloring. k at or above degeneracy+1 needs no enumeration (greedy coloring
/// along a degeneracy order always succeeds); below that the search is
/// exhaustive up to color renaming.
int choice_number(const Graph& g, int k_max);

}  // namespace alontarsi
