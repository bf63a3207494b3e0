#include "alontarsi/poly.hpp"

#include <algorithm>
#include <future>

namespace alontarsi {

int index_sum(const IndexFunction& eta) {
    int s = 0;
    for (int e : eta) s += e;
    return s;
}

bool index_leq(const IndexFunction& lhs, const IndexFunction& rhs) {
    size_t n = std::max(lhs.size(), rhs.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < lhs.size() ? lhs[i] : 0;
        int b = i < rhs.size() ? rhs[i] : 0;
        if (a > b) return false;
    }
    return true;
}

IndexFunction index_sub(const IndexFunction& lhs, const IndexFunction& rhs) {
    size_t n = std::max(lhs.size(), rhs.size());
    IndexFunction out(n, 0);
    for (size_t i = 0; i < n; ++i) {
        int a = i < lhs.size() ? lhs[i] : 0;
        int b = i < rhs.size() ? rhs[i] : 0;
        out[i] = a - b;
    }
    return out;
}

IndexFunction index_add(const IndexFunction& lhs, const IndexFunction& rhs) {
    size_t n = std::max(lhs.size(), rhs.size());
    IndexFunction out(n, 0);
    for (size_t i = 0; i < n; ++i) {
        int a = i < lhs.size() ? lhs[i] : 0;
        int b = i < rhs.size() ? rhs[i] : 0;
        out[i] = a + b;
    }
    return out;
}

IndexFunction SparsePolynomial::key(const IndexFunction& eta) const {
    IndexFunction k(static_cast<size_t>(nvars_), 0);
    for (size_t i = 0; i < eta.size(); ++i) {
        if (eta[i] == 0) continue;
        if (i >= static_cast<size_t>(nvars_)) return {};  // sentinel: out of range
        k[i] = eta[i];
    }
    return k;
}

SparsePolynomial SparsePolynomial::constant(int nvars, const BigInt& c) {
    SparsePolynomial p(nvars);
    if (c != 0) p.terms_[IndexFunction(static_cast<size_t>(nvars), 0)] = c;
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int var) {
    SparsePolynomial p(nvars);
    IndexFunction eta(static_cast<size_t>(nvars), 0);
    eta[static_cast<size_t>(var)] = 1;
    p.terms_[eta] = 1;
    return p;
}

SparsePolynomial SparsePolynomial::monomial(const IndexFunction& eta, const BigInt& c) {
    SparsePolynomial p(static_cast<int>(eta.size()));
    if (c != 0) p.terms_[eta] = c;
    return p;
}

BigInt SparsePolynomial::coefficient(const IndexFunction& eta) const {
    for (size_t i = static_cast<size_t>(nvars_); i < eta.size(); ++i)
        if (eta[i] != 0) return 0;  // exponent on a variable we do not carry
    IndexFunction k(static_cast<size_t>(nvars_), 0);
    for (size_t i = 0; i < std::min(eta.size(), static_cast<size_t>(nvars_)); ++i) k[i] = eta[i];
    auto it = terms_.find(k);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int SparsePolynomial::total_degree() const {
    int deg = -1;
    for (const auto& [eta, c] : terms_) deg = std::max(deg, index_sum(eta));
    return deg;
}

BigInt SparsePolynomial::evaluate(const std::vector<BigInt>& point) const {
    BigInt out = 0;
    for (const auto& [eta, c] : terms_) {
        BigInt t = c;
        for (size_t i = 0; i < eta.size(); ++i)
            for (int k = 0; k < eta[i]; ++k) t *= point.at(i);
        out += t;
    }
    return out;
}

void SparsePolynomial::add_term(const IndexFunction& eta, const BigInt& c) {
    if (c == 0) return;
    IndexFunction k(static_cast<size_t>(nvars_), 0);
    for (size_t i = 0; i < eta.size(); ++i) {
        if (eta[i] == 0) continue;
        if (i >= static_cast<size_t>(nvars_)) throw Error("monomial exponent out of range");
        k[i] = eta[i];
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePolynomial aligned(const SparsePolynomial& p, int nvars) {
    if (p.nvars_ == nvars) return p;
    SparsePolynomial out(nvars);
    for (const auto& [eta, c] : p.terms_) out.add_term(eta, c);
    return out;
}

bool operator==(const SparsePolynomial& p, const SparsePolynomial& q) {
    int n = std::max(p.nvars_, q.nvars_);
    return aligned(p, n).terms_ == aligned(q, n).terms_;
}

SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q) {
    int n = std::max(p.num_vars(), q.num_vars());
    SparsePolynomial out = aligned(p, n);
    for (const auto& [eta, c] : q.terms()) out.add_term(eta, c);
    return out;
}

SparsePolynomial sub(const SparsePolynomial& p, const SparsePolynomial& q) {
    return add(p, scale(-1, q));
}

SparsePolynomial scale(const BigInt& alpha, const SparsePolynomial& p) {
    SparsePolynomial out(p.num_vars());
    if (alpha == 0) return out;
    for (const auto& [eta, c] : p.terms()) out.add_term(eta, alpha * c);
    return out;
}

SparsePolynomial mul(const SparsePolynomial& p, const SparsePolynomial& q) {
    int n = std::max(p.num_vars(), q.num_vars());
    SparsePolynomial a = aligned(p, n), b = aligned(q, n);
    SparsePolynomial out(n);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) out.add_term(index_add(ea, eb), ca * cb);
    return out;
}

SparsePolynomial mul_monomial(const IndexFunction& shift, const SparsePolynomial& p) {
    int n = std::max(p.num_vars(), static_cast<int>(shift.size()));
    SparsePolynomial out(n);
    for (const auto& [eta, c] : p.terms()) out.add_term(index_add(eta, shift), c);
    return out;
}

SparsePolynomial graph_polynomial(const Graph& g, int max_edges) {
    if (g.num_edges() > max_edges)
        throw TooManyEdges("graph_polynomial: " + std::to_string(g.num_edges()) +
                           " edges exceeds expansion cap " + std::to_string(max_edges));
    SparsePolynomial p = SparsePolynomial::constant(g.num_vertices(), 1);
    for (const Edge& e : g.edges()) {
        // factor x_hi - x_lo, lo < hi in the vertex order
        SparsePolynomial factor =
            sub(SparsePolynomial::variable(g.num_vertices(), e.hi()),
                SparsePolynomial::variable(g.num_vertices(), e.lo()));
        p = mul(p, factor);
    }
    return p;
}

namespace {

// One branch-and-prune descent over the remaining factors. `need[v]` is the
// exponent still owed to v, `remaining[v]` the number of undecided edges at v.
int64_t coeff_descend(const std::vector<Edge>& edges, size_t i, std::vector<int>& need,
                      std::vector<int>& remaining, int sign) {
    if (i == edges.size()) return sign;
    Vertex lo = edges[i].lo(), hi = edges[i].hi();
    --remaining[static_cast<size_t>(lo)];
    --remaining[static_cast<size_t>(hi)];
    int64_t total = 0;
    for (Vertex pick : {hi, lo}) {
        Vertex skip = edges[i].other(pick);
        int& n = need[static_cast<size_t>(pick)];
        if (n > 0 && need[static_cast<size_t>(skip)] <= remaining[static_cast<size_t>(skip)]) {
            --n;
            if (n <= remaining[static_cast<size_t>(pick)])
                total += coeff_descend(edges, i + 1, need, remaining,
                                       pick == hi ? sign : -sign);
            ++n;
        }
    }
    ++remaining[static_cast<size_t>(lo)];
    ++remaining[static_cast<size_t>(hi)];
    return total;
}

struct CoeffTask {
    std::vector<int> need;
    int sign;
};

void coeff_split(const std::vector<Edge>& edges, size_t i, size_t depth, std::vector<int>& need,
                 std::vector<int>& remaining, int sign, std::vector<CoeffTask>& out) {
    if (i == depth || i == edges.size()) {
        out.push_back({need, sign});
        return;
    }
    Vertex lo = edges[i].lo(), hi = edges[i].hi();
    --remaining[static_cast<size_t>(lo)];
    --remaining[static_cast<size_t>(hi)];
    for (Vertex pick : {hi, lo}) {
        Vertex skip = edges[i].other(pick);
        int& n = need[static_cast<size_t>(pick)];
        if (n > 0 && need[static_cast<size_t>(skip)] <= remaining[static_cast<size_t>(skip)]) {
            --n;
            if (n <= remaining[static_cast<size_t>(pick)])
                coeff_split(edges, i + 1, depth, need, remaining, pick == hi ? sign : -sign, out);
            ++n;
        }
    }
    ++remaining[static_cast<size_t>(lo)];
    ++remaining[static_cast<size_t>(hi)];
}

}  // namespace

BigInt graph_coefficient(const Graph& g, const IndexFunction& eta, int jobs, int max_edges) {
    if (g.num_edges() > max_edges)
        throw TooManyEdges("graph_coefficient: " + std::to_string(g.num_edges()) +
                           " edges exceeds cap " + std::to_string(max_edges));
    std::vector<int> need(static_cast<size_t>(g.num_vertices()), 0);
    for (size_t i = 0; i < eta.size(); ++i) {
        if (eta[i] < 0) return 0;
        if (eta[i] != 0 && i >= need.size()) return 0;
        if (i < need.size()) need[i] = eta[i];
    }
    if (index_sum(need) != g.num_edges()) return 0;
    std::vector<int> remaining(static_cast<size_t>(g.num_vertices()), 0);
    for (const Edge& e : g.edges()) {
        ++remaining[static_cast<size_t>(e.lo())];
        ++remaining[static_cast<size_t>(e.hi())];
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (need[static_cast<size_t>(v)] > remaining[static_cast<size_t>(v)]) return 0;

    const std::vector<Edge>& edges = g.edges();
    if (jobs <= 1 || g.num_edges() < 8) {
        std::vector<int> nd = need, rem = remaining;
        return coeff_descend(edges, 0, nd, rem, +1);
    }

    // Split the first few sign choices into independent tasks; the exact sum
    // is the same no matter how the tree is partitioned.
    size_t depth = 1;
    while ((size_t{1} << depth) < static_cast<size_t>(jobs) * 4 && depth + 4 < edges.size())
        ++depth;
    std::vector<CoeffTask> tasks;
    {
        std::vector<int> nd = need, rem = remaining;
        coeff_split(edges, 0, depth, nd, rem, +1, tasks);
    }
    std::vector<int> rem_at_depth = remaining;
    for (size_t i = 0; i < std::min(depth, edges.size()); ++i) {
        --rem_at_depth[static_cast<size_t>(edges[i].lo())];
        --rem_at_depth[static_cast<size_t>(edges[i].hi())];
    }
    size_t start = std::min(depth, edges.size());
    std::vector<std::future<int64_t>> futures;
    futures.reserve(tasks.size());
    for (const CoeffTask& t : tasks)
        futures.push_back(std::async(std::launch::async, [&edges, start, t, &rem_at_depth]() {
            std::vector<int> nd = t.need, rem = rem_at_depth;
            return coeff_descend(edges, start, nd, rem, t.sign);
        }));
    int64_t total = 0;
    for (auto& f : futures) total += f.get();
    return total;
}

}  // namespace alontarsi
