#include "alontarsi/color.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "alontarsi/errors.hpp"

namespace alontarsi {

namespace {

// Backtracking over bitmask lists (colors already densified to < 64).
bool solve_masks(const Graph& g, std::vector<uint64_t>& avail, std::vector<int>& pick,
                 uint64_t done) {
    int best = -1;
    int best_count = 65;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (done & (uint64_t{1} << v)) continue;
        int c = std::popcount(avail[static_cast<size_t>(v)]);
        if (c == 0) return false;
        if (c < best_count) {
            best_count = c;
            best = v;
        }
    }
    if (best == -1) return true;
    uint64_t options = avail[static_cast<size_t>(best)];
    while (options) {
        int color = std::countr_zero(options);
        options &= options - 1;
        std::vector<std::pair<Vertex, uint64_t>> undo;
        bool dead = false;
        for (Vertex w : g.neighbors(best)) {
            if (done & (uint64_t{1} << w)) continue;
            uint64_t& aw = avail[static_cast<size_t>(w)];
            if (aw & (uint64_t{1} << color)) {
                undo.emplace_back(w, aw);
                aw &= ~(uint64_t{1} << color);
                if (aw == 0) dead = true;
            }
        }
        if (!dead) {
            pick[static_cast<size_t>(best)] = color;
            if (solve_masks(g, avail, pick, done | (uint64_t{1} << best))) return true;
        }
        for (auto& [w, saved] : undo) avail[static_cast<size_t>(w)] = saved;
    }
    return false;
}

}  // namespace

std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.num_vertices())
        throw Error("list assignment size does not match vertex count");
    // densify colors
    std::map<int, int> dense;
    for (const ColorList& l : lists) {
        if (l.empty()) throw Error("empty color list");
        for (int c : l) dense.emplace(c, 0);
    }
    if (dense.size() > 63) throw TooLarge("more than 63 distinct colors");
    int next = 0;
    std::vector<int> back(dense.size());
    for (auto& [color, id] : dense) {
        id = next;
        back[static_cast<size_t>(next)] = color;
        ++next;
    }
    std::vector<uint64_t> avail(static_cast<size_t>(g.num_vertices()), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        for (int c : lists[static_cast<size_t>(v)])
            avail[static_cast<size_t>(v)] |= uint64_t{1} << dense.at(c);
    std::vector<int> pick(static_cast<size_t>(g.num_vertices()), -1);
    if (!solve_masks(g, avail, pick, 0)) return std::nullopt;
    Coloring out(static_cast<size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        out[static_cast<size_t>(v)] = back[static_cast<size_t>(pick[static_cast<size_t>(v)])];
    return out;
}

bool coloring_ok(const Graph& g, const ListAssignment& lists, const Coloring& coloring) {
    if (static_cast<int>(coloring.size()) != g.num_vertices()) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const ColorList& l = lists[static_cast<size_t>(v)];
        if (std::find(l.begin(), l.end(), coloring[static_cast<size_t>(v)]) == l.end())
            return false;
    }
    for (const Edge& e : g.edges())
        if (coloring[static_cast<size_t>(e.lo())] == coloring[static_cast<size_t>(e.hi())])
            return false;
    return true;
}

int degeneracy(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<bool> gone(static_cast<size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
    int degen = 0;
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[static_cast<size_t>(v)] &&
                (best == -1 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
                best = v;
        degen = std::max(degen, deg[static_cast<size_t>(best)]);
        gone[static_cast<size_t>(best)] = true;
        for (Vertex w : g.neighbors(best))
            if (!gone[static_cast<size_t>(w)]) --deg[static_cast<size_t>(w)];
    }
    return degen;
}

namespace {

struct ChoiceSearch {
    const Graph& g;
    int k;
    ListAssignment lists;
    std::optional<ListAssignment> counterexample;

    // Assign lists vertex by vertex; a list reuses any subset of the colors
    // seen so far and takes fresh colors (the next unused ones) in order.
    // Maximal reuse is tried first so clashing assignments come early.
    bool descend(size_t v, int used) {
        if (v == static_cast<size_t>(g.num_vertices())) {
            ListAssignment trial = lists;
            if (!find_list_coloring(g, trial)) {
                counterexample = std::move(trial);
                return true;
            }
            return false;
        }
        for (int reuse = std::min(k, used); reuse >= 0; --reuse) {
            int fresh = k - reuse;
            std::vector<int> subset(static_cast<size_t>(reuse));
            if (pick_subset(subset, 0, 0, used, v, fresh)) return true;
        }
        return false;
    }

    bool pick_subset(std::vector<int>& subset, size_t pos, int from, int used, size_t v,
                     int fresh) {
        if (pos == subset.size()) {
            ColorList& list = lists[v];
            list = subset;
            for (int f = 0; f < fresh; ++f) list.push_back(used + f);
            bool found = descend(v + 1, used + fresh);
            list.clear();
            return found;
        }
        for (int c = from; c < used; ++c) {
            subset[pos] = c;
            if (pick_subset(subset, pos + 1, c + 1, used, v, fresh)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<ListAssignment> uncolorable_assignment(const Graph& g, int k) {
    ChoiceSearch search{g, k, ListAssignment(static_cast<size_t>(g.num_vertices())), {}};
    search.descend(0, 0);
    return search.counterexample;
}

int choice_number(const Graph& g, int k_max) {
    if (g.num_vertices() > kChoiceVertexCap)
        throw TooLarge("choice_number is capped at " + std::to_string(kChoiceVertexCap) +
                       " vertices");
    if (g.num_edges() == 0) return 1;
    int degen = degeneracy(g);
    for (int k = 1; k <= k_max; ++k) {
        if (k >= degen + 1) return k;  // greedy along a degeneracy order always colors
        if (!uncolorable_assignment(g, k)) return k;
    }
    throw ExceedsKMax("choice number exceeds k_max = " + std::to_string(k_max));
}

}  // namespace alontarsi
