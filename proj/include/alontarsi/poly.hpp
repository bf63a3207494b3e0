#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "alontarsi/graph.hpp"

namespace alontarsi {

/// Coefficients are exact and unbounded; they grow with graph size and must
/// never wrap silently.
using BigInt = boost::multiprecision::cpp_int;

/// Index function: one non-negative exponent per variable, dense under the
/// vertex order. Entries past the end of the vector are zero.
using IndexFunction = std::vector<int>;

int index_sum(const IndexFunction& eta);
bool index_leq(const IndexFunction& lhs, const IndexFunction& rhs);  // pointwise <=
IndexFunction index_sub(const IndexFunction& lhs, const IndexFunction& rhs);
IndexFunction index_add(const IndexFunction& lhs, const IndexFunction& rhs);

/// Exact sparse multivariate polynomial: monomial -> nonzero coefficient.
/// Monomial keys are dense exponent vectors of length num_vars(); a variable
/// that never occurs is a dummy variable carried implicitly as zeros.
class SparsePolynomial {
public:
    SparsePolynomial() = default;
    explicit SparsePolynomial(int nvars) : nvars_(nvars) {}

    static SparsePolynomial constant(int nvars, const BigInt& c);
    static SparsePolynomial variable(int nvars, int var);
    static SparsePolynomial monomial(const IndexFunction& eta, const BigInt& c);

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t num_terms() const { return terms_.size(); }
    const std::map<IndexFunction, BigInt>& terms() const { return terms_; }

    BigInt coefficient(const IndexFunction& eta) const;
    int total_degree() const;  // max over terms; -1 for the zero polynomial
    BigInt evaluate(const std::vector<BigInt>& point) const;

    /// In-place: add c * x^eta, erasing the term if it cancels.
    void add_term(const IndexFunction& eta, const BigInt& c);

    friend bool operator==(const SparsePolynomial& p, const SparsePolynomial& q);

private:
    int nvars_ = 0;
    std::map<IndexFunction, BigInt> terms_;

    IndexFunction key(const IndexFunction& eta) const;
    friend SparsePolynomial aligned(const SparsePolynomial& p, int nvars);
};

SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial sub(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial scale(const BigInt& alpha, const SparsePolynomial& p);
SparsePolynomial mul(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial mul_monomial(const IndexFunction& shift, const SparsePolynomial& p);

inline constexpr int kExpandEdgeCap = 25;  // full 2^|E| expansion
inline constexpr int kPruneEdgeCap = 32;   // branch-and-prune coefficient

/// Full expansion of P_G = prod_{uv in E, u<v} (x_v - x_u) under the graph's
/// vertex order. Throws TooManyEdges above the cap.
SparsePolynomial graph_polynomial(const Graph& g, int max_edges = kExpandEdgeCap);

/// Single coefficient c_{G,eta} without expanding P_G: branch over the sign
/// choice of every factor, cutting off as soon as a partial vertex degree
/// exceeds eta or the remaining incident edges cannot reach it. jobs > 1
/// splits the top of the branch tree; the result does not depend on the split.
BigInt graph_coefficient(const Graph& g, const IndexFunction& eta, int jobs = 1,
                         int max_edges = kPruneEdgeCap);

}  // namespace alontarsi
